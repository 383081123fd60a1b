#include "rhombic/asep.hpp"

#include "rhombic/error.hpp"
#include "rhombic/tableau.hpp"

#include <algorithm>

namespace rhombic {

Rational MarkovGenerator::rate(std::size_t from, std::size_t to) const {
    auto it = rows[from].find(to);
    return it == rows[from].end() ? Rational(0) : it->second;
}

namespace {

int mass(Site s) {
    switch (s) {
    case Site::Heavy: return 2;
    case Site::Light: return 1;
    case Site::Hole: return 0;
    }
    return 0;
}

} // namespace

MarkovGenerator build_generator(int n, int r, const Rational& alpha, const Rational& beta, const Rational& q) {
    if (alpha <= 0 || beta <= 0)
        throw ParameterError("alpha and beta must be positive");
    if (q < 0)
        throw ParameterError("q must be non-negative");
    MarkovGenerator g;
    g.states = enumerate_states(n, r);
    std::map<StateWord, std::size_t> index;
    for (std::size_t i = 0; i < g.states.size(); ++i)
        index.emplace(g.states[i], i);
    g.rows.resize(g.states.size());

    for (std::size_t i = 0; i < g.states.size(); ++i) {
        const StateWord& w = g.states[i];
        std::vector<Site> sites(w.sites().begin(), w.sites().end());
        auto add = [&](std::vector<Site> target, const Rational& rate) {
            if (rate == 0)
                return;
            std::size_t j = index.at(StateWord(std::move(target)));
            g.rows[i][j] += rate;
        };
        for (std::size_t k = 0; k + 1 < sites.size(); ++k) {
            int left = mass(sites[k]);
            int right = mass(sites[k + 1]);
            if (left == right)
                continue;
            std::vector<Site> swapped = sites;
            std::swap(swapped[k], swapped[k + 1]);
            add(std::move(swapped), left > right ? Rational(1) : q);
        }
        if (!sites.empty() && sites.front() == Site::Hole) {
            std::vector<Site> t = sites;
            t.front() = Site::Heavy;
            add(std::move(t), alpha);
        }
        if (!sites.empty() && sites.back() == Site::Heavy) {
            std::vector<Site> t = sites;
            t.back() = Site::Hole;
            add(std::move(t), beta);
        }
        Rational out = 0;
        for (const auto& [j, rate] : g.rows[i])
            out += rate;
        if (out != 0)
            g.rows[i][i] = -out;
    }
    return g;
}

std::vector<Rational> stationary_distribution(const MarkovGenerator& g) {
    const std::size_t size = g.size();
    if (size == 0)
        return {};

    // Rows of G^T are the balance equations; the last one is redundant and becomes sum(pi) = 1.
    std::vector<std::vector<Rational>> system(size, std::vector<Rational>(size + 1, 0));
    for (std::size_t i = 0; i < size; ++i)
        for (const auto& [j, rate] : g.rows[i])
            system[j][i] = rate;
    std::fill(system[size - 1].begin(), system[size - 1].end(), Rational(1));

    // Clear denominators row by row so elimination runs on integers.
    std::vector<std::vector<Integer>> m(size, std::vector<Integer>(size + 1));
    for (std::size_t i = 0; i < size; ++i) {
        Integer scale = 1;
        for (const Rational& x : system[i])
            scale = boost::multiprecision::lcm(scale, Integer(denominator(x)));
        for (std::size_t j = 0; j <= size; ++j)
            m[i][j] = numerator(system[i][j]) * (scale / denominator(system[i][j]));
    }

    // Bareiss elimination: every division below is exact.
    Integer previous = 1;
    for (std::size_t k = 0; k < size; ++k) {
        std::size_t pivot = k;
        while (pivot < size && m[pivot][k] == 0)
            ++pivot;
        if (pivot == size)
            throw StructureError("generator has more than one stationary vector (reducible chain)");
        std::swap(m[k], m[pivot]);
        for (std::size_t i = k + 1; i < size; ++i) {
            for (std::size_t j = k + 1; j <= size; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / previous;
            m[i][k] = 0;
        }
        previous = m[k][k];
    }

    std::vector<Rational> pi(size);
    for (std::size_t i = size; i-- > 0;) {
        Rational acc(m[i][size]);
        for (std::size_t j = i + 1; j < size; ++j)
            acc -= Rational(m[i][j]) * pi[j];
        pi[i] = acc / Rational(m[i][i]);
    }
    return pi;
}

StationarityReport verify_stationarity(int n, int r, const Rational& alpha, const Rational& beta,
                                       const Rational& q) {
    StationarityReport rep;
    rep.n = n;
    rep.r = r;
    rep.alpha = alpha;
    rep.beta = beta;
    rep.q = q;
    MarkovGenerator g = build_generator(n, r, alpha, beta, q);
    std::vector<Rational> pi = stationary_distribution(g);

    std::vector<Rational> weights;
    Rational z = 0;
    for (const StateWord& w : g.states) {
        weights.push_back(state_weight(w).evaluate(alpha, beta, q));
        z += weights.back();
    }
    rep.pass = true;
    for (std::size_t i = 0; i < g.size(); ++i) {
        StationarityReport::Row row{g.states[i], pi[i], weights[i] / z, false};
        row.match = row.pi == row.tableau_ratio;
        rep.pass = rep.pass && row.match;
        rep.states.push_back(std::move(row));
    }
    return rep;
}

} // namespace rhombic
