#include "rhombic/error.hpp"
#include "rhombic/io.hpp"
#include "rhombic/verify.hpp"

#include <doctest.h>

#include <fstream>

using namespace rhombic;

namespace {

Json load(const std::string& name) {
    std::ifstream f(std::string(RHOMBIC_DATA_DIR) + "/" + name);
    REQUIRE(f);
    return Json::parse(f);
}

} // namespace

TEST_CASE("polynomial round trip") {
    const LaurentPolynomial p = LaurentPolynomial::monomial({-1, 2, 0}, Rational(-3, 4)) + LaurentPolynomial::q(5);
    const Json j = polynomial_to_json(p);
    CHECK(j.dump() == R"([{"ea":-1,"eb":2,"eq":0,"c":"-3/4"},{"ea":0,"eb":0,"eq":5,"c":"1/1"}])");
    CHECK(polynomial_from_json(j) == p);
    CHECK(polynomial_from_json(Json::array()).is_zero());
    CHECK_THROWS_AS(polynomial_from_json(Json::parse(R"([{"ea":1}])")), FormatError);
    CHECK_THROWS_AS(polynomial_from_json(Json::parse(R"({"ea":1})")), FormatError);
    CHECK_THROWS_AS(polynomial_from_json(Json::parse(R"([{"ea":0,"eb":0,"eq":0,"c":"1/0"}])")), ParseError);
}

TEST_CASE("tableau round trip") {
    const auto tiling = running_example_tiling();
    const LabeledTableau lt = fusion_exchange(running_example_assemblee(), tiling);
    const Json j = tableau_to_json(lt.tableau);
    CHECK(j["word"] == "DDEADEEEADE");
    CHECK(j["tiles"].size() == 25);
    CHECK(tableau_from_json(j) == lt.tableau);
    CHECK(tableau_from_json(load("running_example_tableau.json")) == lt.tableau);

    // Tile order in the document does not matter as long as the filling follows it.
    Json shuffled = j;
    std::swap(shuffled["tiles"][0], shuffled["tiles"][24]);
    std::swap(shuffled["filling"][0], shuffled["filling"][24]);
    CHECK(tableau_from_json(shuffled) == lt.tableau);

    Json bad = j;
    bad["filling"].erase(0);
    CHECK_THROWS_AS(tableau_from_json(bad), FormatError);
    bad = j;
    bad["filling"][0] = "z";
    CHECK_THROWS_AS(tableau_from_json(bad), FormatError);
    bad = j;
    bad["tiles"][0]["kind"] = "kite";
    CHECK_THROWS_AS(tableau_from_json(bad), FormatError);
    bad = j;
    bad["tiles"].erase(3);
    bad["filling"].erase(3);
    CHECK_THROWS_AS(tableau_from_json(bad), ValidityError);
}

TEST_CASE("assemblee round trip") {
    const Assemblee a = running_example_assemblee();
    CHECK(assemblee_to_json(a).dump() == "[[2,10,12,7],[5,9,1,8,6],[3,11,4]]");
    CHECK(assemblee_from_json(load("running_example_assemblee.json")) == a);
    CHECK(assemblee_from_json(Json::parse("[[3,11,4],[2,10,12,7],[5,9,1,8,6]]")) == a);
    CHECK_THROWS_AS(assemblee_from_json(Json::parse("[[1,2],[2]]")), ValidityError);
    CHECK_THROWS_AS(assemblee_from_json(Json::parse(R"({"a":1})")), FormatError);
    CHECK_THROWS_AS(assemblee_from_json(Json::parse(R"([["x"]])")), FormatError);
}

TEST_CASE("trace round trip") {
    const LabeledTableau lt = fusion_exchange(running_example_assemblee(), running_example_tiling());
    const LabeledTableau back = trace_from_json(trace_to_json(lt));
    CHECK(back.tableau == lt.tableau);
    CHECK(back.labels == lt.labels);
    CHECK(back.termination == lt.termination);
    CHECK(back.final_block_end == 4);
    CHECK(trace_to_json(back) == trace_to_json(lt));
    CHECK(trace_to_json(trace_from_json(load("running_example_trace.json"))) == trace_to_json(lt));
}

TEST_CASE("report round trip") {
    const StationarityReport r = verify_stationarity(2, 1, Rational(1, 2), Rational(1, 3), Rational(2, 5));
    const Json j = report_to_json(r);
    CHECK(j["params"]["q"] == "2/5");
    const StationarityReport back = report_from_json(j);
    CHECK(report_to_json(back) == j);
    CHECK(back.states.size() == 4);
    CHECK_THROWS_AS(report_from_json(Json::parse(R"({"n":1})")), FormatError);
}

TEST_CASE("insertion documents") {
    const auto [f, g] = insertion_input_from_json(load("insertion_example.json"));
    CHECK(f.r == 2);
    CHECK(f.values == std::vector<int>{3, 5, 2, 6, 1, 9, 2, 1});
    CHECK(g.gaps == std::vector<int>{3, 6});
    const Json out = insertion_to_json(insert(f, g));
    CHECK(out["assemblee"].dump() == "[[7,10,5,8],[9,2,11,6],[3,1,4]]");
    CHECK(out["rho"].dump() == "[[7,11,5,8],[9,2,10,6],[1,3,4]]");
    CHECK(polynomial_from_json(out["weight"]) == LaurentPolynomial::monomial({-2, -2, 0}));
    CHECK_THROWS_AS(insertion_input_from_json(Json::parse(R"({"r":2})")), FormatError);
}
