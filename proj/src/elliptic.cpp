#include "char1/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "char1/errors.hpp"
#include "char1/numtheory.hpp"

namespace char1 {

namespace {

constexpr std::int64_t kMaxPrime = 1'000'000;

std::int64_t mod_mpz(const mpz_class& v, std::int64_t p) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(p));
    return r.get_si();
}

int valuation(mpz_class v, std::int64_t p) {
    if (v == 0) return 1 << 20;
    int k = 0;
    while (mpz_divisible_ui_p(v.get_mpz_t(), static_cast<unsigned long>(p))) {
        mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(p));
        ++k;
    }
    return k;
}

mpz_class pollard_rho(const mpz_class& n) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    constexpr long kMaxSteps = 5'000'000;
    for (unsigned long c = 1; c < 20; ++c) {
        mpz_class x = 2, y = 2, d = 1;
        long steps = 0;
        auto step = [&](mpz_class& v) {
            v = v * v + c;
            v %= n;
        };
        while (d == 1) {
            if (++steps > kMaxSteps) throw ResourceError("cannot factor discriminant cofactor " + n.get_str());
            step(x);
            step(y);
            step(y);
            mpz_class diff = abs(x - y);
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != n) return d;
    }
    throw ResourceError("cannot factor discriminant cofactor " + n.get_str());
}

void collect_primes(mpz_class n, std::vector<std::int64_t>& out) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 40)) {
        if (!n.fits_slong_p()) throw DomainError("bad prime too large: " + n.get_str());
        out.push_back(n.get_si());
        return;
    }
    for (unsigned long k = 2; mpz_sizeinbase(n.get_mpz_t(), 2) >= k; ++k) {
        mpz_class r;
        if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), k)) {
            collect_primes(r, out);
            return;
        }
    }
    mpz_class d = pollard_rho(n);
    collect_primes(d, out);
    collect_primes(n / d, out);
}

std::vector<std::int64_t> prime_divisors(mpz_class n) {
    n = abs(n);
    std::vector<std::int64_t> out;
    for (std::int64_t p = 2; p < 100000 && n > 1; ++p) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p))) {
            out.push_back(p);
            while (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p)))
                mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(p));
        }
    }
    collect_primes(n, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void check_prime(std::int64_t p) {
    if (p < 2 || p > kMaxPrime || !nt::is_prime(p))
        throw DomainError("expected a prime <= 10^6, got " + std::to_string(p));
}

// Affine points of the general Weierstrass equation over F_p, by enumeration.
std::int64_t enumerate_affine(const CurveModel& e, std::int64_t p) {
    std::int64_t a[5];
    for (int i = 0; i < 5; ++i) a[i] = mod_mpz(e.coefficients()[static_cast<std::size_t>(i)], p);
    std::int64_t n = 0;
    for (std::int64_t x = 0; x < p; ++x)
        for (std::int64_t y = 0; y < p; ++y) {
            const std::int64_t lhs = y * y + a[0] * x * y + a[2] * y;
            const std::int64_t rhs = x * x * x + a[1] * x * x + a[3] * x + a[4];
            n += nt::mod(lhs - rhs, p) == 0;
        }
    return n;
}

ReductionType bad_type(const CurveModel& e, std::int64_t p) {
    if (p == 2) {
        std::int64_t a[5];
        for (int i = 0; i < 5; ++i) a[i] = mod_mpz(e.coefficients()[static_cast<std::size_t>(i)], 2);
        for (std::int64_t x = 0; x < 2; ++x)
            for (std::int64_t y = 0; y < 2; ++y) {
                const std::int64_t f = y * y + a[0] * x * y + a[2] * y - x * x * x - a[1] * x * x - a[3] * x - a[4];
                const std::int64_t fx = a[0] * y - 3 * x * x - 2 * a[1] * x - a[3];
                const std::int64_t fy = 2 * y + a[0] * x + a[2];
                if (nt::mod(f, 2) || nt::mod(fx, 2) || nt::mod(fy, 2)) continue;
                // tangent cone at the singular point: Y^2 + a1 XY - (a2 + 3x) X^2
                if (a[0] == 0) return ReductionType::Additive;
                return nt::mod(a[1] + 3 * x, 2) == 0 ? ReductionType::SplitMult : ReductionType::NonSplitMult;
            }
        throw InternalError("no singular point mod 2");
    }
    // (2y + a1 x + a3)^2 = f(x) = 4x^3 + b2 x^2 + 2 b4 x + b6
    const std::int64_t b2 = mod_mpz(e.b2(), p), b4 = mod_mpz(e.b4(), p), b6 = mod_mpz(e.b6(), p);
    for (std::int64_t x = 0; x < p; ++x) {
        const std::int64_t f = nt::mod(((4 * x % p + b2) * x % p + 2 * b4) % p * x + b6, p);
        if (f) continue;
        const std::int64_t df = nt::mod((12 * x % p + 2 * b2) * x + 2 * b4, p);
        if (df) continue;
        // f(x0 + X) = X^2 (4X + c)
        const std::int64_t c = nt::mod(12 * x + b2, p);
        if (c == 0) return ReductionType::Additive;
        return nt::legendre(c, p) == 1 ? ReductionType::SplitMult : ReductionType::NonSplitMult;
    }
    throw InternalError("no singular point mod " + std::to_string(p));
}

std::int64_t bad_t(ReductionType type, int l) {
    switch (type) {
        case ReductionType::SplitMult: return 1;
        case ReductionType::NonSplitMult: return l % 2 ? -1 : 1;
        case ReductionType::Additive: return 0;
        case ReductionType::Good: break;
    }
    throw InternalError("bad_t on a good prime");
}

// Multiplicative extension of prime-power values given by pp(p, l, p^l).
template <class F>
DirichletCoeffs multiplicative(std::int64_t N, F&& pp) {
    DirichletCoeffs out;
    out.c.assign(static_cast<std::size_t>(N) + 1, 0);
    out.multiplicative = true;
    if (N >= 1) out.c[1] = 1;
    const auto spf = nt::spf_sieve(N);
    for (std::int64_t n = 2; n <= N; ++n) {
        const std::int64_t p = spf[static_cast<std::size_t>(n)];
        std::int64_t m = n / p;
        if (m % p == 0) {
            // n = p^l * r with l >= 2
            std::int64_t q = p, l = 1;
            while (m % p == 0) m /= p, q *= p, ++l;
            out.c[static_cast<std::size_t>(n)] =
                (m == 1 ? pp(p, static_cast<int>(l), q) : out.c[static_cast<std::size_t>(q)] * out.c[static_cast<std::size_t>(m)]);
        } else {
            out.c[static_cast<std::size_t>(n)] = m == 1 ? pp(p, 1, p) : out.c[static_cast<std::size_t>(p)] * out.c[static_cast<std::size_t>(m)];
        }
    }
    return out;
}

}  // namespace

CurveModel::CurveModel(mpz_class a1, mpz_class a2, mpz_class a3, mpz_class a4, mpz_class a6)
    : a_{std::move(a1), std::move(a2), std::move(a3), std::move(a4), std::move(a6)} {
    const mpz_class B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
    disc_ = -B2 * B2 * B8 - 8 * B4 * B4 * B4 - 27 * B6 * B6 + 9 * B2 * B4 * B6;
    if (disc_ == 0) throw ValidationError("singular Weierstrass model (discriminant 0)");
    bad_ = prime_divisors(disc_);
}

CurveModel CurveModel::from_coefficients(const std::vector<mpz_class>& a) {
    if (a.size() != 5) throw ValidationError("expected 5 Weierstrass coefficients, got " + std::to_string(a.size()));
    return CurveModel(a[0], a[1], a[2], a[3], a[4]);
}

mpz_class CurveModel::b2() const { return a1() * a1() + 4 * a2(); }
mpz_class CurveModel::b4() const { return 2 * a4() + a1() * a3(); }
mpz_class CurveModel::b6() const { return a3() * a3() + 4 * a6(); }
mpz_class CurveModel::b8() const {
    return a1() * a1() * a6() + 4 * a2() * a6() - a1() * a3() * a4() + a2() * a3() * a3() - a4() * a4();
}
mpz_class CurveModel::c4() const { return b2() * b2() - 24 * b4(); }

const char* to_string(ReductionType t) {
    switch (t) {
        case ReductionType::Good: return "good";
        case ReductionType::SplitMult: return "split multiplicative";
        case ReductionType::NonSplitMult: return "non-split multiplicative";
        case ReductionType::Additive: return "additive";
    }
    return "?";
}

std::int64_t count_points_modp(const CurveModel& e, std::int64_t p) {
    check_prime(p);
    if (p <= 3) return enumerate_affine(e, p) + 1;
    std::vector<signed char> chi(static_cast<std::size_t>(p), -1);
    chi[0] = 0;
    for (std::int64_t y = 1; 2 * y < p; ++y) chi[static_cast<std::size_t>(y * y % p)] = 1;
    const std::int64_t b2 = mod_mpz(e.b2(), p), b4 = mod_mpz(2 * e.b4(), p), b6 = mod_mpz(e.b6(), p);
    std::int64_t sum = 0;
    for (std::int64_t x = 0; x < p; ++x) {
        const std::int64_t f = (((4 * x + b2) % p * x + b4) % p * x + b6) % p;
        sum += chi[static_cast<std::size_t>(f)];
    }
    return p + 1 + sum;
}

ReductionType reduction_type(const CurveModel& e, std::int64_t p) { return reduction_report(e, p).type; }

ReductionReport reduction_report(const CurveModel& e, std::int64_t p) {
    check_prime(p);
    ReductionReport r{ReductionType::Good, {}};
    if (!mpz_divisible_ui_p(e.discriminant().get_mpz_t(), static_cast<unsigned long>(p))) return r;
    r.type = bad_type(e, p);
    if (valuation(e.discriminant(), p) >= 12 && valuation(e.c4(), p) >= 4)
        r.warning = "model may not be minimal at p=" + std::to_string(p) + " (v(disc) >= 12, v(c4) >= 4)";
    return r;
}

std::map<std::int64_t, ReductionType> bad_reduction_types(const CurveModel& e) {
    std::map<std::int64_t, ReductionType> out;
    for (auto p : e.bad_primes()) out[p] = p <= kMaxPrime ? reduction_type(e, p) : bad_type(e, p);
    return out;
}

DirichletCoeffs eta_coeffs(std::int64_t N) {
    if (N < 0 || N > 100000) throw DomainError("eta_coeffs: N must be in [0, 10^5]");
    DirichletCoeffs out;
    out.c.assign(static_cast<std::size_t>(N) + 1, 0);
    out.multiplicative = true;
    if (N == 0) return out;
    const std::int64_t M = N - 1;  // degree bound of prod (1-q^n)^2 (1-q^11n)^2
    // Euler: prod (1 - q^n) = sum_k (-1)^k q^(k(3k-1)/2), k over all integers
    std::vector<std::pair<std::int64_t, int>> pent{{0, 1}};
    for (std::int64_t k = 1; k * (3 * k - 1) / 2 <= M; ++k) {
        const int sign = k % 2 ? -1 : 1;
        pent.emplace_back(k * (3 * k - 1) / 2, sign);
        if (k * (3 * k + 1) / 2 <= M) pent.emplace_back(k * (3 * k + 1) / 2, sign);
    }
    std::vector<std::int64_t> g(static_cast<std::size_t>(M) + 1, 0);
    for (auto [e, s] : pent) g[static_cast<std::size_t>(e)] += s;
    auto times_sparse = [&](std::int64_t stride) {
        std::vector<std::int64_t> h(g.size(), 0);
        for (auto [e, s] : pent) {
            const std::int64_t shift = e * stride;
            if (shift > M) continue;
            for (std::int64_t i = shift; i <= M; ++i)
                h[static_cast<std::size_t>(i)] += s * g[static_cast<std::size_t>(i - shift)];
        }
        g.swap(h);
    };
    times_sparse(1);
    times_sparse(11);
    times_sparse(11);
    for (std::int64_t n = 1; n <= N; ++n) out.c[static_cast<std::size_t>(n)] = g[static_cast<std::size_t>(n - 1)];
    return out;
}

DirichletCoeffs l_coeffs_from_curve(const CurveModel& e, std::int64_t N) {
    if (N < 1 || N > 100000) throw DomainError("l_coeffs_from_curve: N must be in [1, 10^5]");
    std::map<std::int64_t, std::int64_t> ap;
    return multiplicative(N, [&](std::int64_t p, int l, std::int64_t) {
        auto it = ap.find(p);
        if (it == ap.end()) {
            const ReductionType type = reduction_type(e, p);
            const std::int64_t v = type == ReductionType::Good ? p + 1 - count_points_modp(e, p) : bad_t(type, 1);
            it = ap.emplace(p, v).first;
        }
        const std::int64_t a = it->second;
        if (!mpz_divisible_ui_p(e.discriminant().get_mpz_t(), static_cast<unsigned long>(p))) {
            std::int64_t prev = 1, cur = a;
            for (int i = 1; i < l; ++i) {
                const std::int64_t next = a * cur - p * prev;
                prev = cur;
                cur = next;
            }
            return cur;
        }
        return nt::ipow(a, l);
    });
}

DirichletCoeffs t_coeffs(const DirichletCoeffs& a, const std::map<std::int64_t, ReductionType>& bad, std::int64_t N) {
    if (N < 1) throw DomainError("t_coeffs: N must be >= 1");
    if (a.size() < N) {
        std::int64_t p = a.size() + 1;
        while (!nt::is_prime(p)) ++p;
        if (p <= N) throw ValidationError("t_coeffs: missing a(p) for p=" + std::to_string(p));
    }
    return multiplicative(N, [&](std::int64_t p, int l, std::int64_t) {
        auto it = bad.find(p);
        if (it != bad.end() && it->second != ReductionType::Good) return bad_t(it->second, l);
        // power sums of the Frobenius roots: s_0 = 2, s_1 = a(p)
        const std::int64_t ap = a[p];
        std::int64_t prev = 2, cur = ap;
        for (int i = 1; i < l; ++i) {
            const std::int64_t next = ap * cur - p * prev;
            prev = cur;
            cur = next;
        }
        return cur;
    });
}

DirichletCoeffs t_coeffs(const CurveModel& e, std::int64_t N) {
    return t_coeffs(l_coeffs_from_curve(e, N), bad_reduction_types(e), N);
}

mpz_class count_points_prime_power(const CurveModel& e, std::int64_t p, int l) {
    check_prime(p);
    if (l < 1) throw DomainError("count_points_prime_power: l must be >= 1");
    mpz_class q;
    mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(l));
    const ReductionType type = reduction_type(e, p);
    if (type != ReductionType::Good) return q + 1 - bad_t(type, l);
    const mpz_class a = p + 1 - count_points_modp(e, p);
    mpz_class prev = 2, cur = a;
    for (int i = 1; i < l; ++i) {
        mpz_class next = a * cur - p * prev;
        prev = cur;
        cur = next;
    }
    return q + 1 - cur;
}

std::vector<std::int64_t> counting_function(const DirichletCoeffs& t) {
    std::vector<std::int64_t> n(t.c.size(), 0);
    for (std::int64_t i = 1; i <= t.size(); ++i) n[static_cast<std::size_t>(i)] = i + 1 - t[i];
    return n;
}

IdentityReport dirichlet_identity_check(const DirichletCoeffs& a, const std::map<std::int64_t, ReductionType>& bad,
                                        std::int64_t N, std::int64_t order_primes) {
    const DirichletCoeffs t = t_coeffs(a, bad, N);
    IdentityReport rep;
    rep.checked_through = N;
    std::vector<std::int64_t> S;
    for (auto& [p, type] : bad)
        if (type != ReductionType::Good) S.push_back(p);
    // w(k^2) = sum_{d | k} mu(d) d * v((k/d)^2), v(m^2) = m when m is supported on S
    auto s_unit = [&](std::int64_t m) {
        for (auto p : S)
            while (m % p == 0) m /= p;
        return m == 1;
    };
    std::vector<std::int64_t> rhs(static_cast<std::size_t>(N) + 1, 0);
    for (std::int64_t k = 1; k * k <= N; ++k) {
        std::int64_t w = 0;
        for (auto d : nt::divisors(k))
            if (s_unit(k / d)) w += nt::mobius(d) * d * (k / d);
        if (w == 0) continue;
        for (std::int64_t j = 1; j * k * k <= N; ++j) rhs[static_cast<std::size_t>(j * k * k)] += w * a[j];
    }
    for (std::int64_t n = 1; n <= N; ++n)
        if (rhs[static_cast<std::size_t>(n)] != t[n]) {
            rep.holds = false;
            rep.first_failure = n;
            rep.expected = t[n];
            rep.actual = rhs[static_cast<std::size_t>(n)];
            break;
        }
    // local power series at each prime
    std::vector<std::int64_t> primes;
    for (std::int64_t p = 2; p <= std::min(order_primes, N); ++p)
        if (nt::is_prime(p)) primes.push_back(p);
    for (auto p : S)
        if (p <= N && std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
    for (auto p : primes) {
        LocalCheck lc{p, std::find(S.begin(), S.end(), p) == S.end(), 0, true};
        std::vector<std::int64_t> ser{1}, ts{1};
        for (std::int64_t q = p; q <= N && lc.order < 8; q *= p) {
            ser.push_back(a[q]);
            ts.push_back(t[q]);
            ++lc.order;
        }
        for (int i = 0; i <= lc.order; ++i) {
            const std::int64_t lhs = lc.good ? ser[static_cast<std::size_t>(i)] - (i >= 2 ? p * ser[static_cast<std::size_t>(i - 2)] : 0)
                                             : ser[static_cast<std::size_t>(i)];
            if (lhs != ts[static_cast<std::size_t>(i)]) lc.holds = false;
        }
        if (!lc.holds) rep.holds = false;
        rep.local.push_back(lc);
    }
    std::ostringstream msg;
    if (rep.first_failure)
        msg << "identity fails at n=" << rep.first_failure << ": t(n)=" << rep.expected << ", convolution=" << rep.actual;
    else if (!rep.holds) {
        msg << "local identity fails at p=";
        for (auto& lc : rep.local)
            if (!lc.holds) {
                msg << lc.p;
                break;
            }
    } else
        msg << "identity holds through n=" << N;
    rep.message = msg.str();
    return rep;
}

IdentityReport dirichlet_identity_check(const CurveModel& e, std::int64_t N) {
    return dirichlet_identity_check(l_coeffs_from_curve(e, N), bad_reduction_types(e), N);
}

std::vector<Singularity> singularity_catalog(const std::vector<std::int64_t>& bad_primes, const Window& w) {
    for (double v : {w.re_min, w.re_max, w.im_min, w.im_max})
        if (!std::isfinite(v)) throw DomainError("singularity_catalog: window must be bounded");
    if (w.re_min > w.re_max || w.im_min > w.im_max) throw DomainError("singularity_catalog: empty window");
    std::vector<Singularity> out;
    auto add = [&](std::complex<double> z, std::string src, int order) {
        if (w.contains(z)) out.push_back({z, std::move(src), order, false, false});
    };
    add(0.0, "pole of zeta(s+1)", 1);
    add(1.0, "pole of zeta(s)", 1);
    for (int n = 1; -n - 0.5 >= w.re_min; ++n) add(-n - 0.5, "trivial zero of zeta(2s+1)", 1);
    if (!bad_primes.empty()) add(-0.5, "zeros of M(s+1) at all bad primes", static_cast<int>(bad_primes.size()));
    for (auto p : bad_primes) {
        const double step = std::numbers::pi / std::log(static_cast<double>(p));
        for (int sign : {1, -1})
            for (int k = 1; k * step <= std::max(std::abs(w.im_min), std::abs(w.im_max)); ++k)
                add({-0.5, sign * k * step},
                    "zero of 1-p^(-1-2s), p=" + std::to_string(p) + ", k=" + std::to_string(sign * k), 1);
    }
    std::sort(out.begin(), out.end(), [](const Singularity& x, const Singularity& y) {
        if (x.location.real() != y.location.real()) return x.location.real() < y.location.real();
        return x.location.imag() < y.location.imag();
    });
    if (w.re_min <= -0.25 && -0.25 <= w.re_max)
        out.push_back({-0.25, "non-trivial zeros of zeta(2s+1) (assumes RH)", 0, true, true});
    return out;
}

std::vector<Singularity> singularity_catalog(const CurveModel& e, const Window& w) {
    return singularity_catalog(e.bad_primes(), w);
}

}  // namespace char1
