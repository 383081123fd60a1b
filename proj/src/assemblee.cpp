#include "rhombic/assemblee.hpp"

#include "rhombic/error.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

namespace rhombic {

Assemblee::Assemblee(Blocks blocks) : blocks_(std::move(blocks)) {
    for (const auto& b : blocks_)
        size_ += static_cast<int>(b.size());
}

std::vector<int> Assemblee::flattened() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size_));
    for (const auto& b : blocks_)
        out.insert(out.end(), b.begin(), b.end());
    return out;
}

std::vector<int> Assemblee::block_ends() const {
    std::vector<int> out;
    out.reserve(blocks_.size());
    for (const auto& b : blocks_)
        out.push_back(b.back());
    return out;
}

Assemblee canonicalize(Assemblee::Blocks blocks) {
    if (blocks.empty())
        throw ValidityError("assemblée needs at least one block");
    std::size_t total = 0;
    for (const auto& b : blocks) {
        if (b.empty())
            throw ValidityError("assemblée blocks must be nonempty");
        total += b.size();
    }
    std::vector<bool> seen(total + 1, false);
    for (const auto& b : blocks) {
        for (int x : b) {
            if (x < 1 || static_cast<std::size_t>(x) > total)
                throw ValidityError("element " + std::to_string(x) + " outside 1.." + std::to_string(total));
            if (seen[static_cast<std::size_t>(x)])
                throw ValidityError("element " + std::to_string(x) + " appears twice");
            seen[static_cast<std::size_t>(x)] = true;
        }
    }
    std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) { return a.back() > b.back(); });
    return Assemblee(std::move(blocks));
}

AssembleeStatistics statistics(const Assemblee& a) {
    AssembleeStatistics st;
    const std::vector<int> reading = a.flattened();
    const std::vector<int> ends = a.block_ends();
    const int top = ends.front();
    const int bottom = ends.back();
    const int size = a.size();

    int larger_to_right = 0;
    for (auto it = reading.rbegin(); it != reading.rend(); ++it) {
        if (*it > top && *it > larger_to_right)
            st.lrs.push_back(*it);
        larger_to_right = std::max(larger_to_right, *it);
    }
    std::reverse(st.lrs.begin(), st.lrs.end());

    int small_max_to_left = 0;
    for (int x : reading) {
        if (x < bottom) {
            if (x > small_max_to_left)
                st.rls.push_back(x);
            small_max_to_left = std::max(small_max_to_left, x);
        }
    }
    std::reverse(st.rls.begin(), st.rls.end());

    std::vector<int> position(static_cast<std::size_t>(size) + 2, 0);
    for (std::size_t i = 0; i < reading.size(); ++i)
        position[static_cast<std::size_t>(reading[i])] = static_cast<int>(i);
    std::vector<bool> is_end(static_cast<std::size_t>(size) + 1, false);
    for (int e : ends)
        is_end[static_cast<std::size_t>(e)] = true;
    for (int x : reading) {
        if (is_end[static_cast<std::size_t>(x)])
            continue;
        bool increase = x != size && position[static_cast<std::size_t>(x + 1)] > position[static_cast<std::size_t>(x)];
        (increase ? st.increases : st.decreases).push_back(x);
    }
    return st;
}

StateWord word_of_assemblee(const Assemblee& a) {
    const std::vector<int> reading = a.flattened();
    const int size = a.size();
    std::vector<int> position(static_cast<std::size_t>(size) + 2, 0);
    for (std::size_t i = 0; i < reading.size(); ++i)
        position[static_cast<std::size_t>(reading[i])] = static_cast<int>(i);

    std::vector<Site> sites;
    sites.reserve(reading.size());
    for (const auto& block : a.blocks()) {
        for (std::size_t i = 0; i < block.size(); ++i) {
            int x = block[i];
            if (i + 1 == block.size()) {
                sites.push_back(Site::Light);
                continue;
            }
            bool increase = x != size && position[static_cast<std::size_t>(x + 1)] > position[static_cast<std::size_t>(x)];
            sites.push_back(increase ? Site::Heavy : Site::Hole);
        }
    }
    sites.pop_back(); // the last block-end has no site
    return StateWord(std::move(sites));
}

std::vector<Assemblee> enumerate_assemblees(int size, int block_count, std::size_t max_results) {
    if (block_count < 1 || block_count > size)
        throw ParameterError("need 1 <= blocks <= size");
    Integer expected = lah_number(size - 1, block_count - 1);
    if (expected > max_results)
        throw CapacityError(expected.str() + " assemblées exceed the guard " + std::to_string(max_results));

    std::vector<Assemblee> out;
    std::vector<int> perm(static_cast<std::size_t>(size));
    std::iota(perm.begin(), perm.end(), 1);
    // Choose block boundaries by a bitmask over the size-1 gaps; keep cuts whose block-ends decrease.
    std::vector<std::vector<int>> cut_sets;
    for (unsigned mask = 0; mask < (1U << (size - 1)); ++mask) {
        if (std::popcount(mask) != block_count - 1)
            continue;
        std::vector<int> ends; // indices of block-ends in the reading
        for (int i = 0; i < size - 1; ++i)
            if (mask & (1U << i))
                ends.push_back(i);
        ends.push_back(size - 1);
        cut_sets.push_back(std::move(ends));
    }
    do {
        for (const auto& ends : cut_sets) {
            bool decreasing = true;
            for (std::size_t j = 1; j < ends.size() && decreasing; ++j)
                decreasing = perm[static_cast<std::size_t>(ends[j - 1])] > perm[static_cast<std::size_t>(ends[j])];
            if (!decreasing)
                continue;
            Assemblee::Blocks blocks;
            int start = 0;
            for (int e : ends) {
                blocks.emplace_back(perm.begin() + start, perm.begin() + e + 1);
                start = e + 1;
            }
            out.push_back(canonicalize(std::move(blocks)));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(out.begin(), out.end());
    return out;
}

Insertion insert(const TruncatedSubexceedant& f, const GreenPointChoice& g) {
    const int r = f.r;
    const int m = static_cast<int>(f.values.size());
    if (r < 0)
        throw ValidityError("negative r");
    for (int i = 1; i <= m; ++i) {
        int v = f.values[static_cast<std::size_t>(i - 1)];
        if (v < 1 || v > i + r + 1)
            throw ValidityError("f(" + std::to_string(i) + ") = " + std::to_string(v) + " outside 1.." +
                                std::to_string(i + r + 1));
    }
    if (static_cast<int>(g.gaps.size()) != r)
        throw ValidityError("need one green point per upper green line");
    for (std::size_t j = 0; j < g.gaps.size(); ++j) {
        if (g.gaps[j] < 0 || g.gaps[j] > m || (j > 0 && g.gaps[j] < g.gaps[j - 1]))
            throw ValidityError("green points must be weakly increasing gap indices in 0.." + std::to_string(m));
    }

    // Stack from bottom to top; element i is encoded as i >= 0, green line j (1 = top) as -j.
    std::vector<int> stack;
    for (int j = r + 1; j >= 1; --j)
        stack.push_back(-j);
    Insertion result{canonicalize({{1}}), LaurentPolynomial(1), 0, 0};
    for (int i = 1; i <= m; ++i) {
        int v = f.values[static_cast<std::size_t>(i - 1)];
        stack.insert(stack.begin() + (v - 1), i - 1);
        if (v == 1)
            ++result.beta_marks;
        else if (v == i + r + 1)
            ++result.alpha_marks;
    }
    std::vector<int> element_height(static_cast<std::size_t>(m));
    std::vector<int> line_height(static_cast<std::size_t>(r) + 1);
    for (std::size_t h = 0; h < stack.size(); ++h) {
        int item = stack[h];
        if (item >= 0)
            element_height[static_cast<std::size_t>(item)] = static_cast<int>(h) + 1;
        else
            line_height[static_cast<std::size_t>(-item - 1)] = static_cast<int>(h) + 1;
    }

    Assemblee::Blocks blocks;
    int start = 0;
    for (int j = 0; j <= r; ++j) {
        int gap = j < r ? g.gaps[static_cast<std::size_t>(j)] : m;
        std::vector<int> block(element_height.begin() + start, element_height.begin() + gap);
        block.push_back(line_height[static_cast<std::size_t>(j)]);
        blocks.push_back(std::move(block));
        start = gap;
    }
    result.assemblee = canonicalize(std::move(blocks));
    result.weight = LaurentPolynomial::monomial({-result.alpha_marks, -result.beta_marks, 0});
    return result;
}

void for_each_subexceedant(int m, int r, const std::function<void(const TruncatedSubexceedant&)>& visit) {
    TruncatedSubexceedant f{r, std::vector<int>(static_cast<std::size_t>(m), 1)};
    auto recurse = [&](auto&& self, int i) -> void {
        if (i > m) {
            visit(f);
            return;
        }
        for (int v = 1; v <= i + r + 1; ++v) {
            f.values[static_cast<std::size_t>(i - 1)] = v;
            self(self, i + 1);
        }
    };
    recurse(recurse, 1);
}

void for_each_green_choice(int m, int r, const std::function<void(const GreenPointChoice&)>& visit) {
    GreenPointChoice g{std::vector<int>(static_cast<std::size_t>(r), 0)};
    auto recurse = [&](auto&& self, int j, int low) -> void {
        if (j == r) {
            visit(g);
            return;
        }
        for (int v = low; v <= m; ++v) {
            g.gaps[static_cast<std::size_t>(j)] = v;
            self(self, j + 1, v);
        }
    };
    recurse(recurse, 0, 0);
}

Assemblee rho(const Assemblee& a) {
    const std::vector<int> ends = a.block_ends();
    const int top = ends.front();
    const int bottom = ends.back();
    Assemblee::Blocks blocks = a.blocks();

    std::vector<int*> large;
    for (auto& b : blocks)
        for (int& x : b)
            if (x > top)
                large.push_back(&x);
    std::vector<int> values;
    for (int* p : large)
        values.push_back(*p);
    for (std::size_t i = 0; i < large.size(); ++i)
        *large[i] = values[values.size() - 1 - i];

    for (auto& b : blocks)
        for (int& x : b)
            if (x < bottom)
                x = bottom - x;
    return canonicalize(std::move(blocks));
}

LaurentPolynomial assemblee_weight_sum(int size, int block_count) {
    std::map<Exponent, std::uint64_t> counts;
    for (const Assemblee& a : enumerate_assemblees(size, block_count)) {
        AssembleeStatistics st = statistics(a);
        ++counts[{-static_cast<int>(st.lrs.size()), -static_cast<int>(st.rls.size()), 0}];
    }
    LaurentPolynomial p;
    for (const auto& [e, c] : counts)
        p.add_term(e, Rational(c));
    return p;
}

} // namespace rhombic
