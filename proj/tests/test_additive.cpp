#include <algorithm>
#include <set>
#include <sstream>

#include <gmpxx.h>

#include "char1/additive.hpp"
#include "char1/errors.hpp"
#include "char1/finite_field.hpp"
#include "char1/numtheory.hpp"
#include "doctest.h"

using namespace char1;

namespace {

// phi(p^l - 1) / l for n + 1 = p^l, 0 otherwise; 2 at n = 1
std::size_t expected_count(int n) {
    if (n == 1) return 2;
    auto [p, l] = nt::prime_power(n + 1);
    if (p == 0) return 0;
    return static_cast<std::size_t>(nt::euler_phi(n) / l);
}

}  // namespace

TEST_CASE("K index arithmetic") {
    CHECK(k_mul(5, 0, 3) == 0);
    CHECK(k_mul(5, 1, 4) == 4);
    CHECK(k_mul(5, 3, 4) == 1 + (2 + 3) % 5);
    for (int a = 1; a <= 7; ++a) CHECK(k_mul(7, a, k_inv(7, a)) == 1);
    CHECK_THROWS_AS(k_inv(7, 0), DomainError);
}

TEST_CASE("finite fields") {
    CHECK(least_irreducible(2, 2) == std::vector<int>{1, 1});
    CHECK(least_irreducible(2, 3) == std::vector<int>{1, 1, 0});
    CHECK(least_irreducible(2, 4) == std::vector<int>{1, 1, 0, 0});
    CHECK(least_irreducible(3, 2) == std::vector<int>{1, 0});
    for (auto [p, l] : std::vector<std::pair<int, int>>{{2, 1}, {2, 4}, {3, 2}, {5, 2}, {7, 1}}) {
        FiniteField f(p, l);
        const int q = f.order();
        for (int a = 1; a < q; ++a) {
            int inverses = 0;
            for (int b = 1; b < q; ++b) inverses += f.mul(a, b) == 1;
            REQUIRE(inverses == 1);
            REQUIRE(f.add(a, f.neg(a)) == 0);
        }
        CHECK(f.primitive_elements().size() == static_cast<std::size_t>(nt::euler_phi(q - 1)));
    }
    CHECK_THROWS_AS(FiniteField(4, 1), DomainError);
    CHECK_THROWS_AS(FiniteField(2, 17), DomainError);
}

TEST_CASE("search_A counts") {
    for (int n = 1; n <= 10; ++n) {
        auto brute = search_A(n, SearchMode::Brute);
        auto cons = search_A(n, SearchMode::Constructive);
        CHECK(brute.size() == expected_count(n));
        CHECK(brute == cons);
        for (auto& s : brute) CHECK(s(0) == 1);
    }
    CHECK(search_A(5, SearchMode::Brute).empty());
    CHECK(search_A(8, SearchMode::Brute).size() == 2);
    CHECK(search_A(1, SearchMode::Brute).size() == 2);
    CHECK_THROWS_AS(search_A(11, SearchMode::Brute), ResourceError);
    CHECK(search_A(15, SearchMode::Constructive).size() == 2);
    CHECK(search_A(26, SearchMode::Constructive).size() == 4);
    CHECK(search_A(14, SearchMode::Constructive).empty());
}

TEST_CASE("field laws from every element of A") {
    for (int n = 2; n <= 10; ++n)
        for (auto& s : search_A(n, SearchMode::Brute)) {
            CHECK(s.is_bijective());
            auto add = addition_from_symmetry(s);
            CHECK(add.kind == DerivedAddition::Kind::Field);
            CHECK(check_field_axioms(add));
            for (int x = 0; x <= n; ++x) CHECK(add.plus(x, add.negate(x)) == 0);
        }
    auto a1 = search_A(1, SearchMode::Brute);
    REQUIRE(a1.size() == 2);
    auto f2 = addition_from_symmetry(a1[0]);
    auto b = addition_from_symmetry(a1[1]);
    CHECK(f2.kind == DerivedAddition::Kind::Field);
    CHECK(f2.plus(1, 1) == 0);
    CHECK(b.kind == DerivedAddition::Kind::Semifield);
    CHECK(b.plus(1, 1) == 1);
}

TEST_CASE("conjugacy of elements of A") {
    for (int n = 2; n <= 10; ++n) {
        auto all = search_A(n, SearchMode::Brute);
        for (auto& s : all)
            for (auto& t : all) {
                auto c = find_conjugator(s, t);
                REQUIRE(c.has_value());
                CHECK(nt::gcd(c->k, n) == 1);
            }
        // the multiplicative conjugates of any member recover the whole set
        if (all.empty()) continue;
        std::set<SymmetryMap> orbit;
        for (int k = 1; k <= n; ++k) {
            if (nt::gcd(k, n) != 1) continue;
            SymmetryMap t{n, std::vector<int>(static_cast<std::size_t>(n) + 1)};
            auto T = [&](int x) { return x == 0 ? 0 : k_pow_gen(n, static_cast<long long>(k) * (x - 1)); };
            for (int x = 0; x <= n; ++x) t.s[static_cast<std::size_t>(T(x))] = T(all[0](x));
            orbit.insert(t);
        }
        CHECK(std::vector<SymmetryMap>(orbit.begin(), orbit.end()) == all);
    }
}

TEST_CASE("field symmetry construction") {
    auto s16 = build_field_symmetry(2, 4);
    CHECK(s16.n == 15);
    CHECK(s16.is_involution());
    CHECK(s16(1) == 0);
    CHECK(s16(0) == 1);
    auto s3 = build_field_symmetry(3, 1);
    // F_3 with generator 2: j(1) = zeta^0, j(2) = zeta^1, so s: 0 -> 1 -> 2 -> 0
    CHECK(s3.s == std::vector<int>{1, 2, 0});
    for (auto [p, l] : std::vector<std::pair<int, int>>{{3, 1}, {3, 2}, {5, 1}, {5, 2}, {7, 1}, {2, 3}}) {
        auto s = build_field_symmetry(p, l);
        std::vector<int> it(s.s.size());
        for (std::size_t x = 0; x < it.size(); ++x) {
            int v = static_cast<int>(x);
            for (int k = 0; k < p; ++k) v = s(v);
            it[x] = v;
        }
        for (std::size_t x = 0; x < it.size(); ++x) CHECK(it[x] == static_cast<int>(x));
    }
    CHECK_THROWS_AS(build_field_symmetry(4, 1), DomainError);
    CHECK_THROWS_AS(build_field_symmetry(2, 2, 5), DomainError);
}

TEST_CASE("F_4 addition from the symmetry") {
    FiniteField f(2, 2);
    const int g = f.primitive_elements().at(0);
    auto add = addition_from_symmetry(build_field_symmetry(2, 2));
    // index -> field element via the same generator
    auto elem = [&](int idx) { return idx == 0 ? 0 : f.pow(g, idx - 1); };
    for (int x = 0; x <= 3; ++x)
        for (int y = 0; y <= 3; ++y) CHECK(elem(add.plus(x, y)) == f.add(elem(x), elem(y)));
}

TEST_CASE("retraction of the positive rationals onto [1, oo) gives max") {
    std::vector<mpq_class> grid;
    for (int a = 1; a <= 12; ++a)
        for (int b = 1; b <= 12; ++b) grid.emplace_back(a, b);
    for (auto& q : grid) q.canonicalize();
    auto mul = [](const mpq_class& a, const mpq_class& b) { return mpq_class(a * b); };
    auto inv = [](const mpq_class& a) { return mpq_class(1 / a); };
    auto s = [](const mpq_class& t) { return t < 1 ? mpq_class(1) : t; };
    const mpq_class zero = 0;
    for (auto& x : grid)
        for (auto& y : grid) REQUIRE(derived_sum(x, y, zero, mul, inv, s) == std::max(x, y));
    CHECK(derived_sum(zero, grid[3], zero, mul, inv, s) == grid[3]);
}

TEST_CASE("rejections") {
    SymmetryMap id{3, {0, 1, 2, 3}};
    CHECK_THROWS_AS(addition_from_symmetry(id), PreconditionError);
    SymmetryMap bad{3, {1, 2, 3, 0}};
    REQUIRE(commutation_witness(bad).has_value());
    try {
        addition_from_symmetry(bad);
        FAIL("expected rejection");
    } catch (const PreconditionError& e) {
        CHECK(std::string(e.what()).find("x=") != std::string::npos);
    }
}

TEST_CASE("quadrilaterals") {
    auto s4 = build_field_symmetry(2, 2);
    for (int r = 1; r <= 3; ++r) {
        auto rep = quadrilateral_check(s4, r);
        CHECK(rep.all_at_most_four);
    }
    auto s16 = build_field_symmetry(2, 4);
    for (int r = 2; r <= 15; ++r) {
        auto rep = quadrilateral_check(s16, r);
        CHECK(rep.all_at_most_four);
        REQUIRE(rep.cycle_lengths.size() == 1);
        CHECK(rep.cycle_lengths.begin()->first == 4);
        CHECK(rep.cycle_lengths.begin()->second == 4);
    }
    auto ident = quadrilateral_check(s16, 1);
    CHECK(ident.cycle_lengths == std::map<int, int>{{2, 8}});
    CHECK(rotations_commute(s16));
    CHECK(rotations_commute(s4));
    CHECK_THROWS_AS(quadrilateral_check(build_field_symmetry(3, 1), 1), PreconditionError);
}

TEST_CASE("edge list export") {
    std::ostringstream out;
    write_edge_csv(build_field_symmetry(2, 2), out);
    auto s = build_field_symmetry(2, 2);
    std::ostringstream want;
    for (int x = 0; x <= 3; ++x) want << x << ',' << s(x) << '\n';
    CHECK(out.str() == want.str());
    CHECK(out.str().substr(0, 4) == "0,1\n");
}
