#include <random>
#include <set>

#include "char1/errors.hpp"
#include "char1/numtheory.hpp"
#include "char1/zeta.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace char1;

namespace {

constexpr double pi = std::numbers::pi;

// gamma(H, d) by enumerating the elements and the subgroups they generate.
std::map<std::int64_t, std::int64_t> subgroups_by_enumeration(const std::vector<std::int64_t>& m) {
    std::int64_t size = 1;
    for (auto x : m) size *= x;
    auto decode = [&](std::int64_t idx) {
        std::vector<std::int64_t> v;
        for (auto x : m) v.push_back(idx % x), idx /= x;
        return v;
    };
    std::set<std::set<std::vector<std::int64_t>>> subgroups;
    for (std::int64_t i = 0; i < size; ++i) {
        auto g = decode(i);
        std::set<std::vector<std::int64_t>> sub;
        auto cur = std::vector<std::int64_t>(m.size(), 0);
        do {
            sub.insert(cur);
            for (std::size_t j = 0; j < m.size(); ++j) cur[j] = (cur[j] + g[j]) % m[j];
        } while (!sub.count(cur));
        subgroups.insert(sub);
    }
    std::map<std::int64_t, std::int64_t> out;
    for (auto& s : subgroups) ++out[static_cast<std::int64_t>(s.size())];
    return out;
}

}  // namespace

TEST_CASE("cyclic subgroup counts") {
    using M = std::map<std::int64_t, std::int64_t>;
    CHECK(cyclic_subgroup_counts(FinAbGroup{0, {4}}) == M{{1, 1}, {2, 1}, {4, 1}});
    CHECK(cyclic_subgroup_counts(FinAbGroup{0, {2, 2}}) == M{{1, 1}, {2, 3}});
    CHECK(cyclic_subgroup_counts(FinAbGroup{0, {6}}) == M{{1, 1}, {2, 1}, {3, 1}, {6, 1}});
    CHECK(cyclic_subgroup_counts(FinAbGroup{0, {}}) == M{{1, 1}});
    for (auto m : std::vector<std::vector<std::int64_t>>{{2, 4}, {3, 9}, {2, 2, 2}, {6, 12}, {5}, {4, 8}, {2, 6, 6}})
        CHECK(cyclic_subgroup_counts(FinAbGroup::from_cyclic_orders(0, m)) == subgroups_by_enumeration(m));
}

TEST_CASE("canonical extension at integers equals the point count") {
    std::vector<SchemeData> data = {
        {{FinAbGroup{0, {5}}}},
        {{FinAbGroup{1, {}}}},
        {{FinAbGroup{0, {}}, FinAbGroup{0, {}}, FinAbGroup{1, {}}}},
        {{FinAbGroup{0, {2, 6}}, FinAbGroup{1, {4}}}},
        {{FinAbGroup{0, {12}}}},
    };
    for (auto& x : data)
        for (int n = 1; n <= 500; ++n) {
            const cplx v = canonical_extension_eval(x, static_cast<double>(n) + 1);
            const double exact = count_points_f1n(x, n).get_d();
            REQUIRE(std::abs(v - exact) < 1e-9 * std::max(1.0, exact));
        }
    SchemeData f5{{FinAbGroup{0, {5}}}};
    CHECK(std::abs(canonical_extension_eval(f5, 6.0) - 5.0) < 1e-12);
    CHECK(std::abs(canonical_extension_eval(f5, 2.0) - 1.0) < 1e-12);
    // between the integers the interpolation is real and bounded by sum phi(d)/d * d
    const cplx mid = canonical_extension_eval(f5, 3.5);
    CHECK(std::abs(mid.imag()) < 1e-12);
    CHECK(std::abs(mid) <= 5.0);
    // growth: all frequencies are below 1/2, so |N(iy)| <= C e^(pi |y|)
    for (double y : {5.0, 10.0, 20.0})
        CHECK(std::abs(canonical_extension_eval(f5, cplx(1, y))) <= 6 * std::exp(pi * y));
}

TEST_CASE("f(s, a) recursion and known values") {
    for (int d = 1; d <= 12; ++d)
        for (int k = 1; 2 * k <= d; ++k) {
            const double a = 2 * pi * k / d;
            for (double re = 0.5; re <= 3.0; re += 0.5)
                for (double im = -2; im <= 2; im += 1) {
                    const cplx s(re, im);
                    const cplx r = a * f_entire(s, a) + cplx(0, 1) * (s + 1.0) * f_entire(s + 1.0, a) -
                                   cplx(0, 1) * std::exp(cplx(0, a));
                    REQUIRE(std::abs(r) < 1e-8);
                }
        }
    // integer and near-integer arguments go through the circle mean
    for (double s : {0.0, 1.0, 2.0, 1.0005, 2.9999}) {
        const double a = 2.0;
        const cplx r = a * f_entire(s, a) + cplx(0, 1) * (s + 1.0) * f_entire(s + 1.0, a) - cplx(0, 1) * std::exp(cplx(0, a));
        CHECK(std::abs(r) < 1e-8);
    }
    CHECK(std::abs(f_entire(1.0, 2.0) - f_entire(1.0 + 2e-3, 2.0)) < 1e-2);
    CHECK(std::abs(f_entire(1.0, pi) - oracle::oscillatory_integral(pi, 2.0)) < 1e-6);
    for (double re : {1.5, 2.0, 2.5, 3.0})
        for (double im : {-1.0, 0.0, 0.7}) {
            const cplx s(re, im);
            CHECK(std::abs(f_entire(s, pi) - oracle::oscillatory_integral(pi, s + 1.0)) < 1e-6);
        }
    const cplx big = f_entire(50.0, 1.3), approx = std::exp(cplx(0, 1.3)) / 50.0;
    CHECK(std::abs(big - approx) < 0.05 * std::abs(approx));
    CHECK_THROWS_AS(f_entire(1.5, 0.0), DomainError);
    CHECK_THROWS_AS(f_entire(1.5, -1.0), DomainError);
    CHECK_THROWS_AS(f_entire(cplx(0.5, 0.1), 30.0, 20), AccuracyError);
}

TEST_CASE("gamma and Hurwitz zeta") {
    CHECK(std::abs(char1::gamma(5.0) - 24.0) < 1e-12);
    CHECK(std::abs(char1::gamma(0.5) - std::sqrt(pi)) < 1e-13);
    CHECK(std::abs(char1::gamma(-0.5) + 2 * std::sqrt(pi)) < 1e-12);
    CHECK(std::abs(char1::gamma(cplx(1, 1)) - cplx(0.498015668118356, -0.154949828301811)) < 1e-12);
    CHECK_THROWS_AS(char1::gamma(cplx(-2.0)), DomainError);
    CHECK(std::abs(hurwitz_zeta(2.0, 1.0) - pi * pi / 6) < 1e-13);
    CHECK(std::abs(hurwitz_zeta(2.0, 0.5) - pi * pi / 2) < 1e-12);
    CHECK(std::abs(hurwitz_zeta(0.0, 0.25) - 0.25) < 1e-12);  // 1/2 - alpha
    CHECK(std::abs(hurwitz_zeta(-1.0, 1.0) + 1.0 / 12) < 1e-12);
    CHECK(std::abs(hurwitz_zeta(cplx(1.001, 0), 1.0) - 1000.5772884760116) < 1e-8);
    CHECK_THROWS_AS(hurwitz_zeta(1.0, 0.5), DomainError);
}

TEST_CASE("xi log-derivatives against quadrature") {
    CHECK(xi_logderiv(1, cplx(2, 1)) == -1.0 / cplx(2, 1));
    CHECK(std::abs(xi_logderiv(3, 2.0) - oracle::xi_quadrature(3, 2.0)) < 1e-6);
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> re(1.5, 4), im(-3, 3);
    for (int d = 1; d <= 24; ++d)
        for (int t = 0; t < 20; ++t) {
            const cplx s(re(rng), im(rng));
            REQUIRE(std::abs(xi_logderiv(d, s) - oracle::xi_quadrature(d, s)) < 1e-6);
        }
    CHECK_THROWS_AS(xi_logderiv(3, 0.0), DomainError);
}

TEST_CASE("exponents") {
    SchemeData p1{{FinAbGroup{0, {}}, FinAbGroup{0, {}}, FinAbGroup{1, {}}}};
    CHECK(alpha_exponents(p1) == std::vector<mpq_class>{-1, -1});
    SchemeData f5{{FinAbGroup{0, {5}}}};
    CHECK(alpha_exponents(f5) == std::vector<mpq_class>{mpq_class(-9, 5)});
    CHECK(epsilon_H(FinAbGroup{0, {5}}) == mpq_class(9, 5));
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> coef(0, 5), deg(0, 4);
    for (int t = 0; t < 20; ++t) {
        std::vector<std::int64_t> a(static_cast<std::size_t>(deg(rng)) + 1);
        for (auto& c : a) c = coef(rng);
        a.back() = std::max<std::int64_t>(a.back(), 1);
        auto x = scheme_from_polynomial_count(a);
        // the count really is the polynomial
        for (int n = 1; n <= 6; ++n) {
            mpz_class q = 0, qn = 1;
            for (auto c : a) q += qn * c, qn *= n + 1;
            CHECK(count_points_f1n(x, n) == q);
        }
        auto alpha = alpha_exponents(x);
        REQUIRE(alpha.size() == a.size());
        for (std::size_t k = 0; k < a.size(); ++k) CHECK(alpha[k] == -a[k]);
    }
    // additivity over disjoint unions and the rank shift
    std::uniform_int_distribution<int> rk(0, 3), tor(1, 6);
    for (int t = 0; t < 20; ++t) {
        SchemeData x, y;
        for (int i = 0; i < 3; ++i) x.points.push_back(FinAbGroup::from_cyclic_orders(rk(rng), {tor(rng), tor(rng)}));
        for (int i = 0; i < 2; ++i) y.points.push_back(FinAbGroup::from_cyclic_orders(rk(rng), {tor(rng)}));
        SchemeData u = x;
        u.points.insert(u.points.end(), y.points.begin(), y.points.end());
        auto ax = alpha_exponents(x), ay = alpha_exponents(y), au = alpha_exponents(u);
        for (std::size_t j = 0; j < au.size(); ++j) {
            mpq_class s = (j < ax.size() ? ax[j] : mpq_class(0)) + (j < ay.size() ? ay[j] : mpq_class(0));
            CHECK(au[j] == s);
        }
        SchemeData shifted = x;
        for (auto& p : shifted.points) ++p.rank;
        auto as = alpha_exponents(shifted);
        for (std::size_t j = 0; j < as.size(); ++j) {
            mpq_class want = (j < ax.size() ? mpq_class(-ax[j]) : mpq_class(0)) + (j >= 1 && j - 1 < ax.size() ? ax[j - 1] : mpq_class(0));
            CHECK(as[j] == want);
        }
    }
}

TEST_CASE("log-derivatives in both modes") {
    auto one = LogDerivEvaluator::from_sampler([](double) { return cplx(1); }, 0, 1);
    CHECK(std::abs(zeta_logderiv(one, 2.0, ZetaMode::Integral).value + 0.5) < 1e-12);
    CHECK(std::abs(zeta_logderiv(one, cplx(1.5, 2), ZetaMode::Integral).value + 1.0 / cplx(1.5, 2)) < 1e-10);
    auto lin = LogDerivEvaluator::from_sampler([](double u) { return cplx(u + 1); }, 1, 2);
    CHECK(std::abs(zeta_logderiv(lin, 3.0, ZetaMode::Integral).value + 5.0 / 6) < 1e-10);
    CHECK_THROWS_AS(zeta_logderiv(lin, 0.5, ZetaMode::Integral), DomainError);

    SchemeData p1{{FinAbGroup{0, {}}, FinAbGroup{0, {}}, FinAbGroup{1, {}}}};
    auto ev = LogDerivEvaluator::from_scheme(p1);
    CHECK(std::abs(zeta_logderiv(ev, 3.0, ZetaMode::Integral).value + 5.0 / 6) < 1e-12);
    // discrete P^1: -(zeta(s) + zeta(s+1))
    double z3, dz3, z4, dz4;
    oracle::zeta_and_derivative(3, z3, dz3);
    oracle::zeta_and_derivative(4, z4, dz4);
    CHECK(std::abs(zeta_logderiv(ev, 3.0, ZetaMode::Discrete).value + (z3 + z4)) < 1e-10);
    CHECK(std::abs(zeta_ratio(ev, 3.0, ZetaMode::Integral) - 15.0) < 1e-9);

    // discrete mode of scheme data vs the truncated Dirichlet series of its point counts
    SchemeData x{{FinAbGroup{0, {6}}, FinAbGroup{1, {2}}, FinAbGroup{0, {2, 2}}}};
    auto seq = LogDerivEvaluator::from_sequence(
        [&](std::int64_t n) { return n == 1 ? canonical_extension_eval(x, 1.0).real() : count_points_f1n(x, n - 1).get_d(); },
        1, 4, 200000);
    auto evx = LogDerivEvaluator::from_scheme(x);
    for (cplx s : {cplx(2.5, 0), cplx(3, 1.5)}) {
        auto a = zeta_logderiv(evx, s, ZetaMode::Discrete);
        auto b = zeta_logderiv(seq, s, ZetaMode::Discrete);
        CHECK(std::abs(a.value - b.value) <= b.error_bound + 1e-10);
    }
    CHECK_THROWS_AS(zeta_logderiv(seq, 3.0, ZetaMode::Integral), DomainError);
    CHECK_THROWS_AS(zeta_logderiv(seq, 0.5, ZetaMode::Discrete), DomainError);
}

TEST_CASE("residues and mode differences near s = 0") {
    for (int d = 1; d <= 12; ++d) {
        auto ev = LogDerivEvaluator::from_constituent(d);
        const double want = static_cast<double>(nt::euler_phi(d)) / d;
        CHECK(std::abs(-logderiv_residue(ev, 0.0, ZetaMode::Integral) - want) < 1e-9);
        CHECK(std::abs(-logderiv_residue(ev, 0.0, ZetaMode::Discrete) - want) < 1e-9);
    }
    for (int m = 1; m <= 12; ++m) {
        SchemeData x{{FinAbGroup::from_cyclic_orders(0, {m})}};
        auto ev = LogDerivEvaluator::from_scheme(x);
        const double eps = epsilon_H(x.points[0]).get_d();
        double sum = 0;
        for (auto d : nt::divisors(m)) sum += static_cast<double>(nt::euler_phi(d)) / static_cast<double>(d);
        CHECK(std::abs(eps - sum) < 1e-14);
        CHECK(std::abs(-logderiv_residue(ev, 0.0, ZetaMode::Integral) - eps) < 1e-9);
        CHECK(std::abs(-logderiv_residue(ev, 0.0, ZetaMode::Discrete) - eps) < 1e-9);
        double worst = 0;
        for (int j = 0; j < 64; ++j) {
            const cplx s = std::polar(0.1, 2 * pi * (j + 0.5) / 64);
            worst = std::max(worst, std::abs(zeta_logderiv(ev, s, ZetaMode::Integral).value -
                                             zeta_logderiv(ev, s, ZetaMode::Discrete).value));
        }
        CHECK(worst < 10);
    }
}

TEST_CASE("von Mangoldt profile") {
    auto prof = mangoldt_profile(20);
    CHECK(prof[7].n == 8);
    CHECK(prof[7].p == 2);
    CHECK(prof[7].value() == doctest::Approx(8 * std::log(2.0)));
    CHECK(prof[5].p == 0);
    CHECK(prof[5].value() == 0);
    CHECK(prof[0].p == 0);
    auto pts = mangoldt_point_counts(10);
    CHECK(pts[6].n == 7);
    CHECK(pts[6].value() == doctest::Approx(8 * std::log(2.0)));
    CHECK(pts[4].value() == 0);  // 6 is not a prime power
    double z, dz;
    oracle::zeta_and_derivative(2, z, dz);
    CHECK(std::abs(z - pi * pi / 6) < 1e-12);
    CHECK(std::abs(dz + 0.93754825431584375) < 1e-11);
    CHECK(std::abs(mangoldt_dirichlet(2, 100000) + dz / z) < 1e-4);
    CHECK_THROWS_AS(mangoldt_profile(0), DomainError);
}
