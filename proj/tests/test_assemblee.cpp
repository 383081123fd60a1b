#include "rhombic/assemblee.hpp"
#include "rhombic/error.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace rhombic;

namespace {

const Assemblee example = canonicalize({{2, 10, 12, 7}, {5, 9, 1, 8, 6}, {3, 11, 4}});

} // namespace

TEST_CASE("canonical form") {
    CHECK(canonicalize({{5, 9, 1, 8, 6}, {3, 11, 4}, {2, 10, 12, 7}}) == example);
    CHECK(example.block_ends() == std::vector<int>{7, 6, 4});
    CHECK(example.size() == 12);
    CHECK(canonicalize({{1}}).blocks() == Assemblee::Blocks{{1}});
    CHECK_THROWS_AS(canonicalize({{1, 2}, {2, 3}}), ValidityError);
    CHECK_THROWS_AS(canonicalize({{1}, {}}), ValidityError);
    CHECK_THROWS_AS(canonicalize({{1, 3}}), ValidityError);
}

TEST_CASE("statistics") {
    const AssembleeStatistics st = statistics(example);
    CHECK(st.lrs == std::vector<int>{12, 11});
    CHECK(st.rls == std::vector<int>{3, 2});
    CHECK(st.increases == std::vector<int>{2, 10, 5, 3});
    CHECK(st.decreases == std::vector<int>{12, 9, 1, 8, 11});

    CHECK(statistics(canonicalize({{1, 2}})).lrs.empty());
    CHECK(statistics(canonicalize({{1, 2}})).rls == std::vector<int>{1});
    CHECK(statistics(canonicalize({{2, 1}})).lrs == std::vector<int>{2});
    CHECK(statistics(canonicalize({{2, 1}})).rls.empty());

    for (int size = 1; size <= 6; ++size)
        for (int k = 1; k <= size; ++k)
            for (const Assemblee& x : enumerate_assemblees(size, k)) {
                CHECK(statistics(x).lrs == oracle::lrs(x));
                CHECK(statistics(x).rls == oracle::rls(x));
            }
}

TEST_CASE("induced word") {
    CHECK(word_of_assemblee(example).to_string() == "DDEADEEEADE");
    CHECK(word_of_assemblee(canonicalize({{1, 2}})).to_string() == "D");
    CHECK(word_of_assemblee(canonicalize({{2, 1}})).to_string() == "E");
    CHECK(word_of_assemblee(canonicalize({{1}})).size() == 0);
}

TEST_CASE("enumeration against the ordered-partition oracle") {
    CHECK(enumerate_assemblees(3, 2).size() == 6);
    CHECK(enumerate_assemblees(2, 1).size() == 2);
    REQUIRE(enumerate_assemblees(3, 3).size() == 1);
    CHECK(enumerate_assemblees(3, 3)[0].blocks() == Assemblee::Blocks{{3}, {2}, {1}});
    for (int size = 1; size <= 6; ++size)
        for (int k = 1; k <= size; ++k) {
            std::set<Assemblee::Blocks> mine;
            for (const Assemblee& x : enumerate_assemblees(size, k))
                mine.insert(x.blocks());
            CHECK(mine == oracle::all_assemblees(size, k));
            CHECK(Integer(mine.size()) == lah_number(size - 1, k - 1));
        }
    CHECK_THROWS_AS(enumerate_assemblees(6, 2, 10), CapacityError);
}

TEST_CASE("insertion example") {
    const Insertion ins = insert({2, {3, 5, 2, 6, 1, 9, 2, 1}}, {{3, 6}});
    CHECK(ins.assemblee == canonicalize({{7, 10, 5, 8}, {9, 2, 11, 6}, {3, 1, 4}}));
    CHECK(ins.weight == LaurentPolynomial::monomial({-2, -2, 0}));
    const Assemblee r = rho(ins.assemblee);
    CHECK(r == canonicalize({{7, 11, 5, 8}, {9, 2, 10, 6}, {1, 3, 4}}));
    CHECK(rho(r) == ins.assemblee);
    CHECK(statistics(r).lrs.size() == 2);
    CHECK(statistics(r).rls.size() == 2);
}

TEST_CASE("single insertions") {
    const Insertion below = insert({0, {1}}, {{}});
    // Below the only green line: the element gets value 1 and the line 2.
    CHECK(below.assemblee.blocks() == Assemblee::Blocks{{1, 2}});
    CHECK(below.weight == LaurentPolynomial::beta(-1));
    const Insertion above = insert({0, {2}}, {{}});
    CHECK(above.assemblee.blocks() == Assemblee::Blocks{{2, 1}});
    CHECK(above.weight == LaurentPolynomial::alpha(-1));

    CHECK_THROWS_AS(insert({0, {3}}, {{}}), ValidityError);
    CHECK_THROWS_AS(insert({1, {1}}, {{}}), ValidityError);
    CHECK_THROWS_AS(insert({2, {1}}, {{1, 0}}), ValidityError);
}

TEST_CASE("rho") {
    CHECK(rho(canonicalize({{3}, {2}, {1}})).blocks() == Assemblee::Blocks{{3}, {2}, {1}});
    for (int size = 1; size <= 6; ++size)
        for (int k = 1; k <= size; ++k)
            for (const Assemblee& x : enumerate_assemblees(size, k))
                CHECK(rho(rho(x)) == x);
}

TEST_CASE("input counts") {
    std::size_t fs = 0, gs = 0;
    for_each_subexceedant(3, 2, [&](const TruncatedSubexceedant&) { ++fs; });
    for_each_green_choice(3, 2, [&](const GreenPointChoice&) { ++gs; });
    CHECK(fs == 4 * 5 * 6);
    CHECK(gs == 10);
}

TEST_CASE("weighted sums") {
    const auto ia = LaurentPolynomial::alpha(-1), ib = LaurentPolynomial::beta(-1);
    CHECK(assemblee_weight_sum(3, 2) == 2 * ia + 2 * ib + 2);
    CHECK(assemblee_weight_sum(2, 1) == ia + ib);
    for (int s = 1; s <= 6; ++s)
        CHECK(assemblee_weight_sum(s, s) == LaurentPolynomial(1));
}
