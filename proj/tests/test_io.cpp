#include "char1/errors.hpp"
#include "char1/io.hpp"
#include "doctest.h"

using namespace char1;

TEST_CASE("scheme json") {
    auto x = io::parse_scheme_json(R"({"points":[{"rank":1,"torsion":[]},{"rank":0,"torsion":[2,3]},{"rank":0}]})");
    REQUIRE(x.points.size() == 3);
    CHECK(x.points[0] == FinAbGroup{1, {}});
    CHECK(x.points[1] == FinAbGroup{0, {6}});
    CHECK(x.points[2] == FinAbGroup{0, {}});
    CHECK(io::parse_scheme_json(io::scheme_to_json(x)).points == x.points);
    CHECK_THROWS_AS(io::parse_scheme_json("{"), ValidationError);
    CHECK_THROWS_AS(io::parse_scheme_json(R"({"pts":[]})"), ValidationError);
    CHECK_THROWS_AS(io::parse_scheme_json(R"({"points":[{"rank":-1}]})"), ValidationError);
    CHECK_THROWS_AS(io::parse_scheme_json(R"({"points":[{"rank":0,"torsion":[0]}]})"), ValidationError);
    CHECK_THROWS_AS(io::parse_scheme_json(R"({"points":[{"rank":"one"}]})"), ValidationError);
}

TEST_CASE("curve json") {
    auto e = io::parse_curve_json(R"({"a":[0,-1,1,-10,-20]})");
    CHECK(e.discriminant() == -161051);
    auto big = io::parse_curve_json(R"({"a":[0,0,0,"0","1267650600228229401496703205376"]})");
    CHECK(big.a6() == mpz_class("1267650600228229401496703205376"));
    CHECK(big.bad_primes() == std::vector<std::int64_t>{2, 3});
    CHECK_THROWS_AS(io::parse_curve_json(R"({"a":[0,0,0,0]})"), ValidationError);
    CHECK_THROWS_AS(io::parse_curve_json(R"({"a":[0,0,0,0,0]})"), ValidationError);
    CHECK_THROWS_AS(io::parse_curve_json(R"({"a":[0,0,0,1.5,0]})"), ValidationError);
    CHECK_THROWS_AS(io::read_curve_json("/nonexistent/curve.json"), ValidationError);
}

TEST_CASE("monoid corpus") {
    auto corpus = io::read_monoid_corpus(std::string(CHAR1_TEST_DATA) + "/monoids.json");
    CHECK(corpus.size() >= 10);
    for (auto& [name, m] : corpus) CHECK(io::parse_monoid_json(io::monoid_to_json(m)).table() == m.table());
    CHECK_THROWS_AS(io::parse_monoid_json(R"({"size":2,"zero":0,"one":1,"table":[0,0,0,0]})"), ValidationError);
}

TEST_CASE("shipped data files") {
    auto e = io::read_curve_json(std::string(CHAR1_TEST_DATA) + "/../../data/11a.json");
    CHECK(e.bad_primes() == std::vector<std::int64_t>{11});
    auto p1 = io::read_scheme_json(std::string(CHAR1_TEST_DATA) + "/../../data/p1.json");
    CHECK(p1.points.size() == 3);
}
