#include "rhombic/tableau.hpp"

#include "rhombic/error.hpp"

#include <algorithm>
#include <future>
#include <map>

namespace rhombic {

char fill_char(Fill f) {
    switch (f) {
    case Fill::Alpha: return 'a';
    case Fill::Beta: return 'b';
    case Fill::Q: return 'q';
    case Fill::Empty: return '.';
    }
    return '?';
}

namespace {

bool has_horizontal_edge(TileKind k) { return k != TileKind::Tall; }
bool has_vertical_edge(TileKind k) { return k != TileKind::Short; }

} // namespace

bool validate_filling(const Tableau& t) {
    if (!t.tiling)
        throw ValidityError("tableau without a tiling");
    const Tiling& tiling = *t.tiling;
    if (t.filling.size() != tiling.size())
        throw ValidityError("filling has " + std::to_string(t.filling.size()) + " entries for " +
                            std::to_string(tiling.size()) + " tiles");
    // cut[s] is set once strip s has met a beta (west-strip) or an alpha (north-strip).
    std::vector<bool> cut(static_cast<std::size_t>(tiling.word().size()), false);
    for (const Crossing& c : tiling.sweep()) {
        TileKind kind = tiling.tiles()[c.tile].kind;
        Fill f = t.filling[c.tile];
        bool forced = cut[c.east_strip] || cut[c.south_strip];
        if (forced) {
            if (f != Fill::Empty)
                return false;
            continue;
        }
        switch (f) {
        case Fill::Empty: return false;
        case Fill::Alpha:
            if (!has_horizontal_edge(kind))
                return false;
            cut[c.south_strip] = true;
            break;
        case Fill::Beta:
            if (!has_vertical_edge(kind))
                return false;
            cut[c.east_strip] = true;
            break;
        case Fill::Q: break;
        }
    }
    return true;
}

void for_each_filling(const Tiling& tiling, const std::function<void(std::span<const Fill>)>& visit) {
    std::span<const Crossing> sweep = tiling.sweep();
    std::vector<Fill> filling(tiling.size(), Fill::Empty);
    std::vector<bool> cut(static_cast<std::size_t>(tiling.word().size()), false);

    auto recurse = [&](auto&& self, std::size_t k) -> void {
        if (k == sweep.size()) {
            visit(filling);
            return;
        }
        const Crossing& c = sweep[k];
        if (cut[c.east_strip] || cut[c.south_strip]) {
            filling[c.tile] = Fill::Empty;
            self(self, k + 1);
            return;
        }
        TileKind kind = tiling.tiles()[c.tile].kind;
        if (has_horizontal_edge(kind)) {
            filling[c.tile] = Fill::Alpha;
            cut[c.south_strip] = true;
            self(self, k + 1);
            cut[c.south_strip] = false;
        }
        if (has_vertical_edge(kind)) {
            filling[c.tile] = Fill::Beta;
            cut[c.east_strip] = true;
            self(self, k + 1);
            cut[c.east_strip] = false;
        }
        filling[c.tile] = Fill::Q;
        self(self, k + 1);
    };
    recurse(recurse, 0);
}

std::size_t count_fillings(const Tiling& tiling) {
    std::size_t count = 0;
    for_each_filling(tiling, [&](std::span<const Fill>) { ++count; });
    return count;
}

std::vector<Tableau> enumerate_fillings(std::shared_ptr<const Tiling> tiling, std::size_t max_results) {
    std::vector<std::vector<Fill>> fillings;
    for_each_filling(*tiling, [&](std::span<const Fill> f) {
        if (fillings.size() == max_results)
            throw CapacityError("more than " + std::to_string(max_results) + " tableaux on " +
                                tiling->word().to_string());
        fillings.emplace_back(f.begin(), f.end());
    });
    std::sort(fillings.begin(), fillings.end());
    std::vector<Tableau> out;
    out.reserve(fillings.size());
    for (auto& f : fillings)
        out.push_back({tiling, std::move(f)});
    return out;
}

namespace {

Exponent weight_exponent(const StateWord& word, std::span<const Fill> filling) {
    Exponent e{word.heavy(), word.holes(), 0};
    for (Fill f : filling) {
        e.alpha += f == Fill::Alpha;
        e.beta += f == Fill::Beta;
        e.q += f == Fill::Q;
    }
    return e;
}

} // namespace

LaurentPolynomial tableau_weight(const Tableau& t) {
    if (!validate_filling(t))
        throw ValidityError("not a rhombic alternative tableau");
    return LaurentPolynomial::monomial(weight_exponent(t.tiling->word(), t.filling));
}

LaurentPolynomial tiling_weight(const Tiling& tiling) {
    std::map<Exponent, std::uint64_t> counts;
    for_each_filling(tiling, [&](std::span<const Fill> f) { ++counts[weight_exponent(tiling.word(), f)]; });
    LaurentPolynomial p;
    for (const auto& [e, c] : counts)
        p.add_term(e, Rational(c));
    return p;
}

LaurentPolynomial state_weight(const StateWord& word) {
    return tiling_weight(canonical_tiling(build_diagram(word)));
}

std::vector<StateWord> enumerate_states(int n, int r) {
    if (r < 0 || r > n)
        throw ParameterError("need 0 <= r <= n");
    std::vector<StateWord> out;
    std::vector<Site> sites;
    auto recurse = [&](auto&& self, int lights) -> void {
        int pos = static_cast<int>(sites.size());
        if (pos == n) {
            out.emplace_back(sites);
            return;
        }
        for (Site s : {Site::Heavy, Site::Light, Site::Hole}) {
            int next = lights + (s == Site::Light);
            if (next > r || r - next > n - pos - 1)
                continue;
            sites.push_back(s);
            self(self, next);
            sites.pop_back();
        }
    };
    recurse(recurse, 0);
    return out;
}

LaurentPolynomial partition_function(int n, int r, int jobs) {
    std::vector<StateWord> states = enumerate_states(n, r);
    if (jobs <= 1 || states.size() < 2) {
        LaurentPolynomial z;
        for (const StateWord& w : states)
            z += state_weight(w);
        return z;
    }
    std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), states.size());
    std::vector<std::future<LaurentPolynomial>> parts;
    for (std::size_t w = 0; w < workers; ++w) {
        parts.push_back(std::async(std::launch::async, [&states, w, workers] {
            LaurentPolynomial part;
            for (std::size_t i = w; i < states.size(); i += workers)
                part += state_weight(states[i]);
            return part;
        }));
    }
    LaurentPolynomial z;
    for (auto& p : parts)
        z += p.get();
    return z;
}

LaurentPolynomial closed_form_partition(int n, int r) { return closed_form_partition(n, r, r); }

LaurentPolynomial closed_form_partition(int n, int r, int first_index) {
    if (r < 0 || r > n)
        throw ParameterError("need 0 <= r <= n");
    LaurentPolynomial z = LaurentPolynomial::monomial({n - r, n - r, 0}, Rational(binomial(n, r)));
    for (int i = first_index; i <= n - 1; ++i)
        z *= LaurentPolynomial::alpha(-1) + LaurentPolynomial::beta(-1) + LaurentPolynomial(i);
    return z;
}

} // namespace rhombic
