#include "rhombic/io.hpp"

#include "rhombic/error.hpp"

#include <algorithm>

namespace rhombic {

namespace {

template <typename F>
auto guarded(const char* what, F&& f) {
    try {
        return f();
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("malformed ") + what + " JSON: " + e.what());
    }
}

Json point_to_json(Point p) { return Json::array({p.x, p.y}); }

Point point_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2)
        throw FormatError("point must be [x, y]");
    return {j.at(0).get<int>(), j.at(1).get<int>()};
}

std::optional<TileKind> kind_from_name(const std::string& s) {
    for (TileKind k : {TileKind::Square, TileKind::Tall, TileKind::Short})
        if (s == kind_name(k))
            return k;
    return std::nullopt;
}

Fill fill_from_char(const std::string& s) {
    if (s == "a") return Fill::Alpha;
    if (s == "b") return Fill::Beta;
    if (s == "q") return Fill::Q;
    if (s == ".") return Fill::Empty;
    throw FormatError("unknown filling symbol '" + s + "'");
}

} // namespace

Json polynomial_to_json(const LaurentPolynomial& p) {
    Json out = Json::array();
    for (const auto& [e, c] : p.terms())
        out.push_back({{"ea", e.alpha}, {"eb", e.beta}, {"eq", e.q}, {"c", format_rational(c)}});
    return out;
}

LaurentPolynomial polynomial_from_json(const Json& j) {
    return guarded("polynomial", [&] {
        if (!j.is_array())
            throw FormatError("polynomial must be an array of terms");
        LaurentPolynomial p;
        for (const Json& term : j) {
            Exponent e{term.at("ea").get<int>(), term.at("eb").get<int>(), term.at("eq").get<int>()};
            p.add_term(e, parse_rational(term.at("c").get<std::string>()));
        }
        return p;
    });
}

Json tile_to_json(const Tile& t) {
    return {{"kind", kind_name(t.kind)}, {"anchor", point_to_json(t.anchor)}};
}

Tile tile_from_json(const Json& j) {
    return guarded("tile", [&] {
        auto kind = kind_from_name(j.at("kind").get<std::string>());
        if (!kind)
            throw FormatError("unknown tile kind " + j.at("kind").dump());
        return Tile{*kind, point_from_json(j.at("anchor"))};
    });
}

Json tiling_to_json(const Tiling& t) {
    Json tiles = Json::array();
    for (const Tile& tile : t.tiles())
        tiles.push_back(tile_to_json(tile));
    return {{"word", t.word().to_string()}, {"tiles", std::move(tiles)}};
}

Tiling tiling_from_json(const Json& j) {
    return guarded("tiling", [&] {
        const std::string word = j.at("word").get<std::string>();
        RhombicDiagram d = word.empty() ? build_diagram(StateWord()) : build_diagram(parse_word(word));
        std::vector<Tile> tiles;
        for (const Json& t : j.at("tiles"))
            tiles.push_back(tile_from_json(t));
        return Tiling(std::move(d), std::move(tiles));
    });
}

Json tableau_to_json(const Tableau& t) {
    Json out = tiling_to_json(*t.tiling);
    Json filling = Json::array();
    for (Fill f : t.filling)
        filling.push_back(std::string(1, fill_char(f)));
    out["filling"] = std::move(filling);
    return out;
}

Tableau tableau_from_json(const Json& j) {
    return guarded("tableau", [&] {
        // Tiles may arrive in any order; the filling follows the order given in the document.
        std::vector<Tile> given;
        for (const Json& t : j.at("tiles"))
            given.push_back(tile_from_json(t));
        const Json& filling = j.at("filling");
        if (!filling.is_array() || filling.size() != given.size())
            throw FormatError("filling must have one symbol per tile");
        auto tiling = std::make_shared<const Tiling>(tiling_from_json(j));
        Tableau tab{tiling, std::vector<Fill>(tiling->size(), Fill::Empty)};
        for (std::size_t i = 0; i < given.size(); ++i)
            tab.filling[*tiling->find(given[i])] = fill_from_char(filling[i].get<std::string>());
        return tab;
    });
}

Json assemblee_to_json(const Assemblee& a) {
    Json out = Json::array();
    for (const auto& block : a.blocks())
        out.push_back(block);
    return out;
}

Assemblee assemblee_from_json(const Json& j) {
    return guarded("assemblée", [&] {
        if (!j.is_array())
            throw FormatError("assemblée must be an array of blocks");
        return canonicalize(j.get<Assemblee::Blocks>());
    });
}

Json trace_to_json(const LabeledTableau& lt) {
    Json edges = Json::array();
    for (const auto& [edge, label] : lt.labels) {
        Json l = label.empty() ? Json(nullptr) : Json::array({label.lo(), label.hi()});
        edges.push_back({{"edge", Json::array({point_to_json(edge.from), point_to_json(edge.to())})},
                         {"label", std::move(l)}});
    }
    return {{"tableau", tableau_to_json(lt.tableau)},
            {"final_block_end", lt.final_block_end},
            {"edges", std::move(edges)}};
}

LabeledTableau trace_from_json(const Json& j) {
    return guarded("trace", [&] {
        LabeledTableau lt;
        lt.tableau = tableau_from_json(j.at("tableau"));
        lt.final_block_end = j.at("final_block_end").get<int>();
        for (const Json& rec : j.at("edges")) {
            Point from = point_from_json(rec.at("edge").at(0));
            Point to = point_from_json(rec.at("edge").at(1));
            std::optional<Step> step;
            for (Step s : {Step::W, Step::SW, Step::S})
                if (from + offset(s) == to)
                    step = s;
            if (!step)
                throw FormatError("edge is not a unit W, SW or S step");
            const Json& l = rec.at("label");
            lt.labels[{from, *step}] =
                l.is_null() ? EdgeLabel() : EdgeLabel::range(l.at(0).get<int>(), l.at(1).get<int>());
        }
        Point p;
        for (Step s : lt.tableau.tiling->diagram().nw_path) {
            auto it = lt.labels.find({p, s});
            if (it == lt.labels.end())
                throw FormatError("trace is missing a NW boundary edge");
            lt.termination.push_back(it->second);
            p = p + offset(s);
        }
        return lt;
    });
}

Json report_to_json(const StationarityReport& r) {
    Json states = Json::array();
    for (const auto& row : r.states)
        states.push_back({{"word", row.word.to_string()},
                          {"pi", format_rational(row.pi)},
                          {"tableau_ratio", format_rational(row.tableau_ratio)},
                          {"match", row.match}});
    return {{"n", r.n},
            {"r", r.r},
            {"params",
             {{"alpha", format_rational(r.alpha)}, {"beta", format_rational(r.beta)}, {"q", format_rational(r.q)}}},
            {"states", std::move(states)},
            {"pass", r.pass}};
}

StationarityReport report_from_json(const Json& j) {
    return guarded("report", [&] {
        StationarityReport r;
        r.n = j.at("n").get<int>();
        r.r = j.at("r").get<int>();
        const Json& params = j.at("params");
        r.alpha = parse_rational(params.at("alpha").get<std::string>());
        r.beta = parse_rational(params.at("beta").get<std::string>());
        r.q = parse_rational(params.at("q").get<std::string>());
        for (const Json& row : j.at("states")) {
            const std::string w = row.at("word").get<std::string>();
            r.states.push_back({w.empty() ? StateWord() : parse_word(w), parse_rational(row.at("pi").get<std::string>()),
                                parse_rational(row.at("tableau_ratio").get<std::string>()),
                                row.at("match").get<bool>()});
        }
        r.pass = j.at("pass").get<bool>();
        return r;
    });
}

std::pair<TruncatedSubexceedant, GreenPointChoice> insertion_input_from_json(const Json& j) {
    return guarded("insertion", [&] {
        TruncatedSubexceedant f{j.at("r").get<int>(), j.at("f").get<std::vector<int>>()};
        GreenPointChoice g{j.at("g").get<std::vector<int>>()};
        return std::pair{std::move(f), std::move(g)};
    });
}

Json insertion_to_json(const Insertion& ins) {
    return {{"assemblee", assemblee_to_json(ins.assemblee)},
            {"rho", assemblee_to_json(rho(ins.assemblee))},
            {"weight", polynomial_to_json(ins.weight)}};
}

} // namespace rhombic
