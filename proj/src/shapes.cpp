#include "rhombic/shapes.hpp"

#include "rhombic/error.hpp"

#include <algorithm>
#include <map>

namespace rhombic {

char site_char(Site s) {
    switch (s) {
    case Site::Heavy: return 'D';
    case Site::Light: return 'A';
    case Site::Hole: return 'E';
    }
    return '?';
}

StateWord::StateWord(std::vector<Site> sites) : sites_(std::move(sites)) {
    for (Site s : sites_) {
        heavy_ += s == Site::Heavy;
        light_ += s == Site::Light;
        holes_ += s == Site::Hole;
    }
}

std::string StateWord::to_string() const {
    std::string out;
    out.reserve(sites_.size());
    for (Site s : sites_)
        out.push_back(site_char(s));
    return out;
}

StateWord parse_word(std::string_view text) {
    if (text.empty())
        throw ParseError("empty state word", 0);
    std::vector<Site> sites;
    sites.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        switch (text[i]) {
        case 'D': sites.push_back(Site::Heavy); break;
        case 'A': sites.push_back(Site::Light); break;
        case 'E': sites.push_back(Site::Hole); break;
        default: throw ParseError(std::string("illegal symbol '") + text[i] + "'", i);
        }
    }
    return StateWord(std::move(sites));
}

Point offset(Step s) {
    switch (s) {
    case Step::W: return {-1, 0};
    case Step::SW: return {-1, -1};
    case Step::S: return {0, -1};
    }
    return {};
}

Step step_of(Site s) {
    switch (s) {
    case Site::Heavy: return Step::S;
    case Site::Light: return Step::SW;
    case Site::Hole: return Step::W;
    }
    return Step::W;
}

Point RhombicDiagram::sw_corner() const {
    return {-(word.holes() + word.light()), -(word.light() + word.heavy())};
}

RhombicDiagram build_diagram(const StateWord& word) {
    RhombicDiagram d;
    d.word = word;
    d.nw_path.insert(d.nw_path.end(), word.holes(), Step::W);
    d.nw_path.insert(d.nw_path.end(), word.light(), Step::SW);
    d.nw_path.insert(d.nw_path.end(), word.heavy(), Step::S);
    for (Site s : word.sites())
        d.se_path.push_back(step_of(s));
    // Hole < Light < Heavy matches W < SW < S.
    for (std::size_t i = 0; i < d.se_path.size(); ++i)
        for (std::size_t j = i + 1; j < d.se_path.size(); ++j)
            d.area += d.se_path[i] > d.se_path[j];
    return d;
}

const char* kind_name(TileKind k) {
    switch (k) {
    case TileKind::Square: return "square";
    case TileKind::Tall: return "tall";
    case TileKind::Short: return "short";
    }
    return "?";
}

Step Tile::east_step() const {
    return kind == TileKind::Short ? Step::SW : Step::S;
}

Step Tile::south_step() const {
    return kind == TileKind::Tall ? Step::SW : Step::W;
}

std::array<Point, 4> Tile::vertices() const {
    Point e = offset(east_step());
    Point s = offset(south_step());
    return {anchor, anchor + e, anchor + e + s, anchor + s};
}

bool json_order(const Tile& a, const Tile& b) {
    if (a.anchor.y != b.anchor.y)
        return a.anchor.y > b.anchor.y;
    if (a.anchor.x != b.anchor.x)
        return a.anchor.x > b.anchor.x;
    return a.kind < b.kind;
}

std::optional<TileKind> crossing_kind(Step first, Step second) {
    if (first == Step::S && second == Step::W)
        return TileKind::Square;
    if (first == Step::S && second == Step::SW)
        return TileKind::Tall;
    if (first == Step::SW && second == Step::W)
        return TileKind::Short;
    return std::nullopt;
}

namespace {

struct PathState {
    std::vector<Step> steps;
    std::vector<std::size_t> letters;
    std::vector<Point> prefix; // prefix[i] is the point before steps[i]

    explicit PathState(const RhombicDiagram& d) : steps(d.se_path) {
        letters.resize(steps.size());
        prefix.resize(steps.size());
        Point p;
        for (std::size_t i = 0; i < steps.size(); ++i) {
            letters[i] = i;
            prefix[i] = p;
            p = p + offset(steps[i]);
        }
    }

    void cross(std::size_t i) {
        std::swap(steps[i], steps[i + 1]);
        std::swap(letters[i], letters[i + 1]);
        prefix[i + 1] = prefix[i] + offset(steps[i]);
    }
};

std::optional<std::size_t> lookup(std::span<const Tile> sorted, const Tile& t) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), t, json_order);
    if (it == sorted.end() || *it != t)
        return std::nullopt;
    return static_cast<std::size_t>(it - sorted.begin());
}

// Crosses tiles until the path reaches the NW boundary. Returns nullopt if the tiles are not an
// exact cover (the sweep gets stuck or tiles are left over).
std::optional<std::vector<Crossing>> run_sweep(const RhombicDiagram& d, std::span<const Tile> tiles,
                                               const SweepChooser* choose) {
    PathState path(d);
    std::vector<bool> used(tiles.size(), false);
    std::vector<Crossing> order;
    order.reserve(tiles.size());
    std::vector<std::size_t> candidates;
    std::vector<std::size_t> candidate_tiles;
    while (order.size() < tiles.size()) {
        candidates.clear();
        candidate_tiles.clear();
        for (std::size_t i = 0; i + 1 < path.steps.size(); ++i) {
            auto kind = crossing_kind(path.steps[i], path.steps[i + 1]);
            if (!kind)
                continue;
            auto idx = lookup(tiles, Tile{*kind, path.prefix[i]});
            if (idx && !used[*idx]) {
                candidates.push_back(i);
                candidate_tiles.push_back(*idx);
            }
        }
        if (candidates.empty())
            return std::nullopt;
        std::size_t pick = choose ? (*choose)(candidates) : 0;
        if (pick >= candidates.size())
            throw Error("sweep chooser returned an out-of-range index");
        std::size_t i = candidates[pick];
        used[candidate_tiles[pick]] = true;
        order.push_back({candidate_tiles[pick], i, path.letters[i], path.letters[i + 1], path.prefix[i]});
        path.cross(i);
    }
    if (path.steps != d.nw_path)
        return std::nullopt;
    return order;
}

} // namespace

Tiling::Tiling(RhombicDiagram diagram, std::vector<Tile> tiles)
    : diagram_(std::move(diagram)), tiles_(std::move(tiles)) {
    std::sort(tiles_.begin(), tiles_.end(), json_order);
    if (std::adjacent_find(tiles_.begin(), tiles_.end()) != tiles_.end())
        throw ValidityError("tiling contains a repeated tile");
    if (static_cast<int>(tiles_.size()) != diagram_.area)
        throw ValidityError("tiling of " + diagram_.word.to_string() + " needs " +
                            std::to_string(diagram_.area) + " tiles, got " + std::to_string(tiles_.size()));
    auto order = run_sweep(diagram_, tiles_, nullptr);
    if (!order)
        throw ValidityError("tiles do not cover the rhombic diagram of " + diagram_.word.to_string());
    sweep_ = std::move(*order);
}

std::optional<std::size_t> Tiling::find(const Tile& t) const {
    return lookup(tiles_, t);
}

std::vector<Crossing> sweep_tiling(const Tiling& tiling, const SweepChooser& choose) {
    auto order = run_sweep(tiling.diagram(), tiling.tiles(), &choose);
    if (!order)
        throw ValidityError("sweep failed on a validated tiling");
    return std::move(*order);
}

Tiling canonical_tiling(const RhombicDiagram& diagram) {
    PathState path(diagram);
    std::vector<Tile> tiles;
    tiles.reserve(static_cast<std::size_t>(diagram.area));
    for (bool swapped = true; swapped;) {
        swapped = false;
        for (std::size_t i = 0; i + 1 < path.steps.size(); ++i) {
            if (path.steps[i] > path.steps[i + 1]) {
                tiles.push_back({*crossing_kind(path.steps[i], path.steps[i + 1]), path.prefix[i]});
                path.cross(i);
                swapped = true;
                break;
            }
        }
    }
    return Tiling(diagram, std::move(tiles));
}

namespace {

using TileSet = std::vector<Tile>; // sorted by operator<

const std::vector<TileSet>& tilings_from(std::vector<Step>& steps, const std::vector<Step>& target,
                                         std::map<std::vector<Step>, std::vector<TileSet>>& memo) {
    if (auto it = memo.find(steps); it != memo.end())
        return it->second;
    std::vector<TileSet> result;
    if (steps == target) {
        result.emplace_back();
    } else {
        Point p;
        for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
            if (auto kind = crossing_kind(steps[i], steps[i + 1])) {
                Tile t{*kind, p};
                std::swap(steps[i], steps[i + 1]);
                for (const TileSet& rest : tilings_from(steps, target, memo)) {
                    TileSet set = rest;
                    set.insert(std::upper_bound(set.begin(), set.end(), t), t);
                    result.push_back(std::move(set));
                }
                std::swap(steps[i], steps[i + 1]);
            }
            p = p + offset(steps[i]);
        }
        std::sort(result.begin(), result.end());
        result.erase(std::unique(result.begin(), result.end()), result.end());
    }
    return memo.emplace(steps, std::move(result)).first->second;
}

} // namespace

std::vector<Tiling> enumerate_tilings(const RhombicDiagram& diagram, int max_area) {
    if (diagram.area > max_area)
        throw CapacityError("area " + std::to_string(diagram.area) + " exceeds tiling enumeration guard " +
                            std::to_string(max_area));
    std::map<std::vector<Step>, std::vector<TileSet>> memo;
    std::vector<Step> start = diagram.se_path;
    std::vector<TileSet> sets = tilings_from(start, diagram.nw_path, memo);
    for (TileSet& s : sets)
        std::sort(s.begin(), s.end(), json_order);
    std::sort(sets.begin(), sets.end(), [](const TileSet& a, const TileSet& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), json_order);
    });
    std::vector<Tiling> out;
    out.reserve(sets.size());
    for (TileSet& s : sets)
        out.emplace_back(diagram, std::move(s));
    return out;
}

namespace {

const Point kSouth = offset(Step::S);
const Point kWest = offset(Step::W);
const Point kSouthWest = offset(Step::SW);

// The two rotations of the hexagon with NE corner c.
std::array<Tile, 3> rotation_a(Point c) {
    return {Tile{TileKind::Square, c}, Tile{TileKind::Short, c + kSouth}, Tile{TileKind::Tall, c + kWest}};
}
std::array<Tile, 3> rotation_b(Point c) {
    return {Tile{TileKind::Tall, c}, Tile{TileKind::Short, c}, Tile{TileKind::Square, c + kSouthWest}};
}

bool contains_all(const Tiling& t, const std::array<Tile, 3>& tiles) {
    return std::all_of(tiles.begin(), tiles.end(), [&](const Tile& x) { return t.find(x).has_value(); });
}

} // namespace

Tiling apply_flip(const Tiling& tiling, Point center) {
    Point corner = center - kSouthWest;
    auto a = rotation_a(corner);
    auto b = rotation_b(corner);
    const std::array<Tile, 3>* from = nullptr;
    const std::array<Tile, 3>* to = nullptr;
    if (contains_all(tiling, a)) {
        from = &a;
        to = &b;
    } else if (contains_all(tiling, b)) {
        from = &b;
        to = &a;
    } else {
        throw InvalidFlip("no flippable hexagon around (" + std::to_string(center.x) + ", " +
                          std::to_string(center.y) + ")");
    }
    std::vector<Tile> tiles;
    tiles.reserve(tiling.size());
    for (const Tile& t : tiling.tiles())
        if (std::find(from->begin(), from->end(), t) == from->end())
            tiles.push_back(t);
    tiles.insert(tiles.end(), to->begin(), to->end());
    return Tiling(tiling.diagram(), std::move(tiles));
}

std::vector<Point> flippable_hexagons(const Tiling& tiling) {
    std::vector<Point> centers;
    for (const Tile& t : tiling.tiles()) {
        if (t.kind == TileKind::Square && contains_all(tiling, rotation_a(t.anchor)))
            centers.push_back(t.anchor + kSouthWest);
        if (t.kind == TileKind::Tall && contains_all(tiling, rotation_b(t.anchor)))
            centers.push_back(t.anchor + kSouthWest);
    }
    std::sort(centers.begin(), centers.end());
    return centers;
}

StripDecomposition compute_strips(const Tiling& tiling) {
    const RhombicDiagram& d = tiling.diagram();
    const std::size_t n = d.se_path.size();
    std::vector<Strip> by_letter(n);
    Point p;
    for (std::size_t i = 0; i < n; ++i) {
        by_letter[i].letter = i;
        by_letter[i].se_edge = {p, d.se_path[i]};
        p = p + offset(d.se_path[i]);
    }
    std::vector<std::size_t> letters(n);
    for (std::size_t i = 0; i < n; ++i)
        letters[i] = i;
    for (const Crossing& c : tiling.sweep()) {
        by_letter[c.east_strip].tiles.push_back(c.tile);
        by_letter[c.south_strip].tiles.push_back(c.tile);
        std::swap(letters[c.position], letters[c.position + 1]);
    }
    p = {};
    for (std::size_t i = 0; i < n; ++i) {
        by_letter[letters[i]].nw_edge = {p, d.nw_path[i]};
        p = p + offset(d.nw_path[i]);
    }
    StripDecomposition out;
    for (std::size_t i = 0; i < n; ++i) {
        switch (d.word[i]) {
        case Site::Heavy: out.west.push_back(std::move(by_letter[i])); break;
        case Site::Hole: out.north.push_back(std::move(by_letter[i])); break;
        case Site::Light: out.northwest.push_back(std::move(by_letter[i])); break;
        }
    }
    return out;
}

} // namespace rhombic
