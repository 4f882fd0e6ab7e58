#include "char1/zeta.hpp"

#include <cmath>
#include <numbers>

#include "char1/errors.hpp"
#include "char1/numtheory.hpp"

namespace char1 {

namespace {

constexpr double pi = std::numbers::pi;

std::int64_t order_dividing(const FinAbGroup& h, std::int64_t e) {
    std::int64_t r = 1;
    for (auto m : h.invariant_factors) r *= nt::gcd(e, m);
    return r;
}

std::int64_t exponent(const FinAbGroup& h) {
    std::int64_t l = 1;
    for (auto m : h.invariant_factors) l = nt::lcm(l, m);
    return l;
}

mpz_class binom(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

cplx ipow(cplx z, int k) {
    cplx r = 1;
    for (int i = 0; i < k; ++i) r *= z;
    return r;
}

// N_d(z) = (phi(d)/d) (sum_{|k|<d/2} e^(2 pi i (z-1) k/d) + eps_d cos(pi (z-1)))
cplx constituent_count(std::int64_t d, cplx z) {
    const cplx u = z - 1.0;
    cplx sum = 0;
    for (std::int64_t k = -(d - 1) / 2; 2 * k < d; ++k)
        if (2 * std::abs(k) < d) sum += std::exp(cplx(0, 2 * pi * static_cast<double>(k) / static_cast<double>(d)) * u);
    if (d % 2 == 0) sum += std::cos(pi * u);
    return static_cast<double>(nt::euler_phi(d)) / static_cast<double>(d) * sum;
}

void check_scheme(const SchemeData& x) {
    for (auto& pt : x.points) {
        if (pt.rank < 0) throw ValidationError("scheme: negative rank");
        for (auto m : pt.invariant_factors)
            if (m < 1) throw ValidationError("scheme: torsion orders must be positive");
    }
}

// -sum_n N(n) n^(-s-1) for one point, continued through Hurwitz zeta
cplx discrete_point(const FinAbGroup& pt, cplx s) {
    const std::int64_t L = exponent(pt);
    cplx total = 0;
    for (int i = 0; i <= pt.rank; ++i) {
        const double c = binom(static_cast<unsigned long>(pt.rank), static_cast<unsigned long>(i)).get_d() *
                         ((pt.rank - i) % 2 ? -1.0 : 1.0);
        const cplx w = s + 1.0 - static_cast<double>(i);
        const cplx scale = std::exp(-w * std::log(static_cast<double>(L)));
        cplx inner = 0;
        for (std::int64_t a = 1; a <= L; ++a)
            inner += static_cast<double>(order_dividing(pt, a - 1)) *
                     hurwitz_zeta(w, static_cast<double>(a) / static_cast<double>(L));
        total += c * scale * inner;
    }
    return -total;
}

cplx integral_point(const FinAbGroup& pt, cplx s) {
    const auto gam = cyclic_subgroup_counts(pt);
    cplx total = 0;
    for (int i = 0; i <= pt.rank; ++i) {
        const double c = binom(static_cast<unsigned long>(pt.rank), static_cast<unsigned long>(i)).get_d() *
                         ((pt.rank - i) % 2 ? -1.0 : 1.0);
        cplx inner = 0;
        for (auto [d, g] : gam) inner += static_cast<double>(g) * xi_logderiv(static_cast<int>(d), s - static_cast<double>(i));
        total += c * inner;
    }
    return total;
}

}  // namespace

std::map<std::int64_t, std::int64_t> cyclic_subgroup_counts(const FinAbGroup& h) {
    if (h.torsion_order() > 1000000) throw ResourceError("cyclic_subgroup_counts: |H| above 1e6");
    for (auto m : h.invariant_factors)
        if (m < 1) throw ValidationError("cyclic_subgroup_counts: bad invariant factor");
    std::map<std::int64_t, std::int64_t> out;
    for (auto d : nt::divisors(exponent(h))) {
        std::int64_t exact = 0;
        for (auto e : nt::divisors(d)) exact += nt::mobius(d / e) * order_dividing(h, e);
        const std::int64_t phi = nt::euler_phi(d);
        if (exact % phi != 0) throw InternalError("cyclic_subgroup_counts: non-integral count");
        if (exact > 0) out[d] = exact / phi;
    }
    return out;
}

mpq_class epsilon_H(const FinAbGroup& h) {
    mpq_class e = 0;
    for (auto [d, g] : cyclic_subgroup_counts(h))
        e += mpq_class(mpz_class(static_cast<long>(nt::euler_phi(d) * g)), mpz_class(static_cast<long>(d)));
    e.canonicalize();
    return e;
}

cplx canonical_extension_eval(const FinAbGroup& point, cplx z) {
    cplx sum = 0;
    for (auto [d, g] : cyclic_subgroup_counts(point)) sum += static_cast<double>(g) * constituent_count(d, z);
    return ipow(z - 1.0, point.rank) * sum;
}

cplx canonical_extension_eval(const SchemeData& x, cplx z) {
    check_scheme(x);
    cplx sum = 0;
    for (auto& pt : x.points) sum += canonical_extension_eval(pt, z);
    return sum;
}

cplx xi_logderiv(int d, cplx s) {
    if (d < 1) throw DomainError("xi_logderiv: d must be positive");
    if (s == cplx(0, 0)) throw DomainError("xi_logderiv: pole at s = 0");
    cplx sum = 1.0 / s;
    for (int k = 1; 2 * k <= d; ++k) {
        const double a = 2 * pi * k / d;
        const double weight = 2 * k == d ? 0.5 : 1.0;
        // k and -k; f(s, -a) = conj(f(conj(s), a))
        const cplx fp = f_entire(s, a);
        const cplx fm = std::conj(f_entire(std::conj(s), a));
        sum += weight * (std::exp(cplx(0, -a)) * fp + std::exp(cplx(0, a)) * fm);
    }
    return -static_cast<double>(nt::euler_phi(d)) / d * sum;
}

std::vector<mpq_class> alpha_exponents(const SchemeData& x) {
    check_scheme(x);
    int max_rank = 0;
    for (auto& pt : x.points) max_rank = std::max(max_rank, pt.rank);
    std::vector<mpq_class> alpha(static_cast<std::size_t>(max_rank) + 1, 0);
    for (auto& pt : x.points) {
        const mpq_class eps = epsilon_H(pt);
        for (int j = 0; j <= pt.rank; ++j) {
            mpq_class term = eps * binom(static_cast<unsigned long>(pt.rank), static_cast<unsigned long>(j));
            // (-1)^(j+1) (-1)^n(x)
            if ((j + 1 + pt.rank) % 2) term = -term;
            alpha[static_cast<std::size_t>(j)] += term;
        }
    }
    for (auto& a : alpha) a.canonicalize();
    return alpha;
}

SchemeData scheme_from_polynomial_count(const std::vector<std::int64_t>& a) {
    SchemeData x;
    for (std::size_t n = 0; n < a.size(); ++n) {
        mpz_class c = 0;
        for (std::size_t k = n; k < a.size(); ++k) c += binom(k, n) * mpz_class(static_cast<long>(a[k]));
        if (c < 0) throw ValidationError("scheme_from_polynomial_count: negative number of points");
        if (c > 100000) throw ResourceError("scheme_from_polynomial_count: too many points");
        for (long i = 0; i < c.get_si(); ++i) x.points.push_back(FinAbGroup{static_cast<int>(n), {}});
    }
    return x;
}

LogDerivEvaluator LogDerivEvaluator::from_scheme(SchemeData x) {
    check_scheme(x);
    return LogDerivEvaluator(Scheme{std::move(x)});
}

LogDerivEvaluator LogDerivEvaluator::from_constituent(int d) {
    if (d < 1) throw DomainError("constituent: d must be positive");
    return LogDerivEvaluator(Constituent{d});
}

LogDerivEvaluator LogDerivEvaluator::from_sampler(std::function<cplx(double)> n, double growth, double bound) {
    if (!(bound > 0)) throw DomainError("sampler: bound must be positive");
    return LogDerivEvaluator(Sampler{std::move(n), growth, bound});
}

LogDerivEvaluator LogDerivEvaluator::from_sequence(std::function<double(std::int64_t)> n, double growth, double bound,
                                                   std::int64_t n_max) {
    if (!(bound > 0)) throw DomainError("sequence: bound must be positive");
    if (n_max < 1) throw DomainError("sequence: n_max must be positive");
    return LogDerivEvaluator(Sequence{std::move(n), growth, bound, n_max});
}

namespace {

template <class F>
Evaluation truncated_dirichlet(F&& n_of, double growth, double bound, std::int64_t n_max, cplx s) {
    const double gap = s.real() - growth;
    if (!(gap > 0)) throw DomainError("discrete log-derivative: Re(s) must exceed the growth exponent");
    cplx sum = 0;
    for (std::int64_t n = 1; n <= n_max; ++n)
        sum += n_of(n) * std::exp(-(s + 1.0) * std::log(static_cast<double>(n)));
    // sum_{n > n_max} bound n^(growth - Re s - 1) <= bound n_max^(-gap) / gap
    return {-sum, bound * std::pow(static_cast<double>(n_max), -gap) / gap};
}

}  // namespace

Evaluation LogDerivEvaluator::evaluate(cplx s, ZetaMode mode) const {
    if (auto* sc = std::get_if<Scheme>(&source_)) {
        int top = 0;
        for (auto& pt : sc->x.points) top = std::max(top, pt.rank);
        for (int i = 0; i <= top; ++i)
            if (s == cplx(i, 0)) throw DomainError("log-derivative: pole at s = " + std::to_string(i));
        cplx v = 0;
        for (auto& pt : sc->x.points) v += mode == ZetaMode::Integral ? integral_point(pt, s) : discrete_point(pt, s);
        return {v, 1e-12 * std::max(1.0, std::abs(v))};
    }
    if (auto* c = std::get_if<Constituent>(&source_)) {
        if (mode == ZetaMode::Integral) {
            cplx v = xi_logderiv(c->d, s);
            return {v, 1e-12 * std::max(1.0, std::abs(v))};
        }
        const cplx w = s + 1.0;
        const double d = c->d;
        cplx v = -static_cast<double>(nt::euler_phi(c->d)) * std::exp(-w * std::log(d)) * hurwitz_zeta(w, 1.0 / d);
        return {v, 1e-12 * std::max(1.0, std::abs(v))};
    }
    if (auto* sm = std::get_if<Sampler>(&source_)) {
        if (mode == ZetaMode::Discrete)
            return truncated_dirichlet([&](std::int64_t n) { return sm->n(static_cast<double>(n)); }, sm->growth,
                                       sm->bound, 100000, s);
        const double gap = s.real() - sm->growth;
        if (!(gap > 0)) throw DomainError("integral log-derivative: Re(s) must exceed the growth exponent");
        // -int_0^oo N(e^t) e^(-s t) dt, cut where the tail bound drops below 1e-13
        double T = std::log(sm->bound / (gap * 1e-13)) / gap;
        T = std::min(T, 400.0);
        const auto& rule = gauss_legendre(16);
        const double width = 0.25;
        const int panels = static_cast<int>(std::ceil(T / width));
        cplx sum = 0;
        for (int p = 0; p < panels; ++p) {
            const double a = p * width, mid = a + width / 2;
            for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
                const double t = mid + width / 2 * rule.nodes[i];
                sum += rule.weights[i] * width / 2 * sm->n(std::exp(t)) * std::exp(-s * t);
            }
        }
        return {-sum, sm->bound * std::exp(-gap * panels * width) / gap};
    }
    const auto& sq = std::get<Sequence>(source_);
    if (mode == ZetaMode::Integral)
        throw DomainError("integral log-derivative needs an interpolating counting function, not a bare sequence");
    return truncated_dirichlet([&](std::int64_t n) { return cplx(sq.n(n)); }, sq.growth, sq.bound, sq.n_max, s);
}

Evaluation zeta_logderiv(const LogDerivEvaluator& ev, cplx s, ZetaMode mode) { return ev.evaluate(s, mode); }

cplx zeta_ratio(const LogDerivEvaluator& ev, cplx s, ZetaMode mode, cplx s0) {
    const auto& rule = gauss_legendre(16);
    const int panels = 64;
    const cplx ds = s - s0;
    cplx sum = 0;
    for (int p = 0; p < panels; ++p) {
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const double u = (p + 0.5 + 0.5 * rule.nodes[i]) / panels;
            sum += rule.weights[i] * 0.5 / panels * ev.evaluate(s0 + u * ds, mode).value;
        }
    }
    return std::exp(sum * ds);
}

cplx logderiv_residue(const LogDerivEvaluator& ev, cplx center, ZetaMode mode, double radius) {
    if (!(radius > 0)) throw DomainError("logderiv_residue: radius must be positive");
    constexpr int points = 64;
    cplx sum = 0;
    for (int j = 0; j < points; ++j) {
        const cplx h = std::polar(radius, 2 * pi * (j + 0.5) / points);
        sum += h * ev.evaluate(center + h, mode).value;
    }
    return sum / static_cast<double>(points);
}

double MangoldtEntry::value() const { return p == 0 ? 0.0 : static_cast<double>(factor) * std::log(static_cast<double>(p)); }

namespace {

std::int64_t prime_of_power(const std::vector<std::int32_t>& spf, std::int64_t n) {
    if (n < 2) return 0;
    const std::int64_t p = spf[static_cast<std::size_t>(n)];
    while (n % p == 0) n /= p;
    return n == 1 ? p : 0;
}

}  // namespace

std::vector<MangoldtEntry> mangoldt_profile(std::int64_t n_max) {
    if (n_max < 1 || n_max > 10000000) throw DomainError("mangoldt_profile: n_max must lie in 1..1e7");
    const auto spf = nt::spf_sieve(n_max);
    std::vector<MangoldtEntry> out;
    out.reserve(static_cast<std::size_t>(n_max));
    for (std::int64_t n = 1; n <= n_max; ++n) out.push_back({n, prime_of_power(spf, n), n});
    return out;
}

std::vector<MangoldtEntry> mangoldt_point_counts(std::int64_t n_max) {
    if (n_max < 1 || n_max >= 10000000) throw DomainError("mangoldt_point_counts: n_max must lie in 1..1e7-1");
    const auto spf = nt::spf_sieve(n_max + 1);
    std::vector<MangoldtEntry> out;
    for (std::int64_t n = 1; n <= n_max; ++n) out.push_back({n, prime_of_power(spf, n + 1), n + 1});
    return out;
}

double mangoldt_dirichlet(double s, std::int64_t n_max) {
    if (n_max < 1 || n_max > 10000000) throw DomainError("mangoldt_dirichlet: n_max must lie in 1..1e7");
    const auto spf = nt::spf_sieve(n_max);
    long double sum = 0;
    for (std::int64_t n = n_max; n >= 2; --n) {
        const std::int64_t p = prime_of_power(spf, n);
        if (p) sum += std::log(static_cast<long double>(p)) * std::pow(static_cast<long double>(n), -static_cast<long double>(s));
    }
    return static_cast<double>(sum);
}

}  // namespace char1
