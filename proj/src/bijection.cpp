#include "rhombic/bijection.hpp"

#include "rhombic/error.hpp"

#include <algorithm>

namespace rhombic {

std::string to_string(const EdgeLabel& label) {
    if (label.empty())
        return "()";
    if (label.lo() == label.hi())
        return "(" + std::to_string(label.lo()) + ")";
    return "(" + std::to_string(label.lo()) + ".." + std::to_string(label.hi()) + ")";
}

namespace {

bool vertical_east(TileKind k) { return k != TileKind::Short; }
bool horizontal_south(TileKind k) { return k != TileKind::Tall; }

EdgeLabel join(const EdgeLabel& low, const EdgeLabel& high) { return EdgeLabel::range(low.lo(), high.hi()); }

std::vector<Edge> path_edges(std::span<const Step> steps) {
    std::vector<Edge> out;
    Point p;
    for (Step s : steps) {
        out.push_back({p, s});
        p = p + offset(s);
    }
    return out;
}

} // namespace

LabeledTableau fusion_exchange(const Assemblee& a, std::shared_ptr<const Tiling> tiling) {
    std::span<const Crossing> order = tiling->sweep();
    return fusion_exchange(a, tiling, order);
}

LabeledTableau fusion_exchange(const Assemblee& a, std::shared_ptr<const Tiling> tiling,
                               std::span<const Crossing> order) {
    const StateWord word = word_of_assemblee(a);
    if (word != tiling->word())
        throw ShapeError("tiling is of " + tiling->word().to_string() + " but the assemblée has shape " +
                         word.to_string());
    if (order.size() != tiling->size())
        throw ValidityError("processing order does not cover the tiling");

    const std::vector<int> reading = a.flattened();
    const std::size_t n = reading.size() - 1;
    const RhombicDiagram& d = tiling->diagram();

    LabeledTableau out;
    out.final_block_end = reading.back();
    out.tableau.tiling = tiling;
    out.tableau.filling.assign(tiling->size(), Fill::Empty);

    std::vector<EdgeLabel> path(n);
    const std::vector<Edge> se = path_edges(d.se_path);
    for (std::size_t j = 0; j < n; ++j) {
        path[j] = EdgeLabel::single(reading[j]);
        out.labels[se[j]] = path[j];
        out.strip_of[se[j]] = j;
    }

    for (const Crossing& c : order) {
        const Tile& tile = tiling->tiles()[c.tile];
        const EdgeLabel east = path[c.position];
        const EdgeLabel south = path[c.position + 1];
        EdgeLabel west;
        EdgeLabel north;
        Fill fill = Fill::Empty;
        if (succeeds(east, south) && horizontal_south(tile.kind)) {
            west = join(south, east);
            fill = Fill::Alpha;
        } else if (succeeds(south, east) && vertical_east(tile.kind)) {
            north = join(east, south);
            fill = Fill::Beta;
        } else {
            west = east;
            north = south;
            fill = (!east.empty() && !south.empty()) ? Fill::Q : Fill::Empty;
        }
        out.tableau.filling[c.tile] = fill;
        path[c.position] = north;
        path[c.position + 1] = west;

        Edge north_edge{c.origin, tile.south_step()};
        Edge west_edge{north_edge.to(), tile.east_step()};
        out.labels[north_edge] = north;
        out.labels[west_edge] = west;
        out.strip_of[north_edge] = c.south_strip;
        out.strip_of[west_edge] = c.east_strip;
    }
    out.termination = std::move(path);
    return out;
}

std::vector<int> label_maxima(std::span<const EdgeLabel> labels) {
    std::vector<int> out;
    for (const EdgeLabel& l : labels)
        if (!l.empty())
            out.push_back(l.hi());
    std::sort(out.rbegin(), out.rend());
    return out;
}

TerminationReport termination_report(const LabeledTableau& lt) {
    const StateWord& word = lt.tableau.tiling->word();
    const std::size_t holes = static_cast<std::size_t>(word.holes());
    const std::size_t lights = static_cast<std::size_t>(word.light());
    const int size = word.size() + 1;

    TerminationReport rep;
    rep.final_block_end = lt.final_block_end;
    for (std::size_t i = 0; i < lt.termination.size(); ++i) {
        if (i < holes)
            rep.horizontal.push_back(lt.termination[i]);
        else if (i < holes + lights)
            rep.diagonal.push_back(lt.termination[i]);
        else
            rep.vertical.push_back(lt.termination[i]);
    }

    for (std::size_t j = 0; j < rep.diagonal.size(); ++j)
        if (rep.diagonal[j].empty())
            rep.violations.push_back("diagonal termination label " + std::to_string(j) + " is empty");

    const int bottom = lt.final_block_end;
    const int top = rep.diagonal.empty() || rep.diagonal.front().empty() ? bottom : rep.diagonal.front().hi();
    auto check_union = [&](const std::vector<EdgeLabel>& labels, int lo, int hi, const char* name) {
        std::vector<bool> hit(static_cast<std::size_t>(size) + 2, false);
        int count = 0;
        for (const EdgeLabel& l : labels) {
            for (int x = l.lo(); x <= l.hi(); ++x) {
                if (x < lo || x > hi || hit[static_cast<std::size_t>(x)]) {
                    rep.violations.push_back(std::string(name) + " labels contain unexpected " + std::to_string(x));
                    return;
                }
                hit[static_cast<std::size_t>(x)] = true;
                ++count;
            }
        }
        if (count != std::max(0, hi - lo + 1))
            rep.violations.push_back(std::string(name) + " labels do not cover " + std::to_string(lo) + ".." +
                                     std::to_string(hi));
    };
    check_union(rep.horizontal, top + 1, size, "horizontal");
    check_union(rep.vertical, 1, bottom - 1, "vertical");
    check_union(rep.diagonal, bottom + 1, top, "diagonal");

    // Chain from the smallest label upward.
    std::vector<EdgeLabel> chain;
    for (const EdgeLabel& l : rep.vertical)
        if (!l.empty())
            chain.push_back(l);
    chain.push_back(EdgeLabel::single(bottom));
    for (auto it = rep.diagonal.rbegin(); it != rep.diagonal.rend(); ++it)
        if (!it->empty())
            chain.push_back(*it);
    for (auto it = rep.horizontal.rbegin(); it != rep.horizontal.rend(); ++it)
        if (!it->empty())
            chain.push_back(*it);
    if (chain.front().lo() != 1)
        rep.violations.push_back("smallest termination label does not start at 1");
    for (std::size_t i = 1; i < chain.size(); ++i)
        if (!succeeds(chain[i], chain[i - 1]))
            rep.violations.push_back("termination chain breaks between " + to_string(chain[i - 1]) + " and " +
                                     to_string(chain[i]));
    if (chain.back().hi() != size)
        rep.violations.push_back("largest termination label does not end at " + std::to_string(size));
    return rep;
}

const char* root_class_name(RootClass c) {
    switch (c) {
    case RootClass::West: return "west";
    case RootClass::Northwest: return "northwest";
    case RootClass::North: return "north";
    }
    return "?";
}

namespace {

struct LeafCounts {
    std::vector<std::pair<int, int>> per_crossing; // (east, south) leaves for each sweep step
    std::vector<int> termination;                  // leaves on each NW boundary edge
};

LeafCounts count_leaves(const Tableau& t, Forest* forest) {
    const Tiling& tiling = *t.tiling;
    const RhombicDiagram& d = tiling.diagram();
    std::vector<int> path(d.se_path.size(), 1);
    LeafCounts out;
    if (forest) {
        forest->external = path_edges(d.se_path);
        for (const Edge& e : forest->external)
            forest->branch_leaves[e] = 1;
    }
    for (const Crossing& c : tiling.sweep()) {
        const Tile& tile = tiling.tiles()[c.tile];
        int east = path[c.position];
        int south = path[c.position + 1];
        out.per_crossing.emplace_back(east, south);
        int west = east;
        int north = south;
        Fill f = t.filling[c.tile];
        if (f == Fill::Alpha) {
            west = east + south;
            north = 0;
        } else if (f == Fill::Beta) {
            north = east + south;
            west = 0;
        }
        path[c.position] = north;
        path[c.position + 1] = west;
        if (forest) {
            if (f == Fill::Alpha || f == Fill::Beta)
                forest->vertices.push_back({c.tile, f, tile.kind != TileKind::Square});
            Edge north_edge{c.origin, tile.south_step()};
            Edge west_edge{north_edge.to(), tile.east_step()};
            if (north > 0)
                forest->branch_leaves[north_edge] = north;
            if (west > 0)
                forest->branch_leaves[west_edge] = west;
        }
    }
    out.termination = std::move(path);
    return out;
}

// Root positions on the NW boundary in increasing root order; -1 stands for the trivial root.
std::vector<long> root_order(const StateWord& word, std::span<const int> leaves) {
    const long holes = word.holes();
    const long lights = word.light();
    const long n = word.size();
    std::vector<long> order;
    for (long i = holes + lights; i < n; ++i) // west roots, top to bottom
        if (leaves[static_cast<std::size_t>(i)] > 0)
            order.push_back(i);
    order.push_back(-1);
    for (long i = holes + lights - 1; i >= holes; --i) // northwest roots, SW to NE
        if (leaves[static_cast<std::size_t>(i)] > 0)
            order.push_back(i);
    for (long i = holes - 1; i >= 0; --i) // north roots, left to right
        if (leaves[static_cast<std::size_t>(i)] > 0)
            order.push_back(i);
    return order;
}

} // namespace

Forest build_forest(const Tableau& t) {
    if (!validate_filling(t))
        throw ValidityError("not a rhombic alternative tableau");
    Forest forest;
    LeafCounts counts = count_leaves(t, &forest);
    const StateWord& word = t.tiling->word();
    const std::vector<Edge> nw = path_edges(t.tiling->diagram().nw_path);
    for (long pos : root_order(word, counts.termination)) {
        if (pos < 0) {
            forest.roots.push_back({RootClass::Northwest, std::nullopt, 1});
            continue;
        }
        auto p = static_cast<std::size_t>(pos);
        RootClass cls = pos < word.holes() ? RootClass::North
                        : pos < word.holes() + word.light() ? RootClass::Northwest
                                                            : RootClass::West;
        forest.roots.push_back({cls, nw[p], counts.termination[p]});
    }
    return forest;
}

Assemblee label_passing(const Tableau& t) {
    if (!validate_filling(t))
        throw ValidityError("not a rhombic alternative tableau");
    const Tiling& tiling = *t.tiling;
    const StateWord& word = tiling.word();
    LeafCounts counts = count_leaves(t, nullptr);

    // Root labels are consecutive intervals along the root order.
    std::vector<EdgeLabel> path(counts.termination.size());
    int next = 1;
    int final_block_end = 0;
    for (long pos : root_order(word, counts.termination)) {
        if (pos < 0) {
            final_block_end = next++;
            continue;
        }
        int size = counts.termination[static_cast<std::size_t>(pos)];
        path[static_cast<std::size_t>(pos)] = EdgeLabel::range(next, next + size - 1);
        next += size;
    }

    std::span<const Crossing> sweep = tiling.sweep();
    for (std::size_t k = sweep.size(); k-- > 0;) {
        const Crossing& c = sweep[k];
        const auto [east_leaves, south_leaves] = counts.per_crossing[k];
        const EdgeLabel north = path[c.position];
        const EdgeLabel west = path[c.position + 1];
        EdgeLabel east = west;
        EdgeLabel south = north;
        // The larger part goes east at an alpha and south at a beta. At a green-line vertex (alpha in a
        // short tile, beta in a tall tile) the green branch is exactly that edge, so the green-line
        // rule agrees and needs no separate case.
        switch (t.filling[c.tile]) {
        case Fill::Alpha:
            east = west.highest(east_leaves);
            south = west.lowest(south_leaves);
            break;
        case Fill::Beta:
            south = north.highest(south_leaves);
            east = north.lowest(east_leaves);
            break;
        default: break;
        }
        path[c.position] = east;
        path[c.position + 1] = south;
    }

    Assemblee::Blocks blocks(1);
    for (std::size_t j = 0; j < path.size(); ++j) {
        if (path[j].size() != 1)
            throw ValidityError("label passing left a non-singleton on the SE boundary");
        blocks.back().push_back(path[j].lo());
        if (word[j] == Site::Light)
            blocks.emplace_back();
    }
    blocks.back().push_back(final_block_end);
    return canonicalize(std::move(blocks));
}

} // namespace rhombic
