#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "char1/monoid.hpp"
#include "char1/special.hpp"

namespace char1 {

/// gamma(H, d): number of cyclic subgroups of order d, for every d dividing |H|.
std::map<std::int64_t, std::int64_t> cyclic_subgroup_counts(const FinAbGroup& h);

/// epsilon_H = sum_d phi(d) gamma(H, d) / d, exactly.
mpq_class epsilon_H(const FinAbGroup& h);

/// Canonical entire extension N(z) = (z-1)^rank sum_C N(z, C) of a point's counting function.
cplx canonical_extension_eval(const FinAbGroup& point, cplx z);
cplx canonical_extension_eval(const SchemeData& x, cplx z);

/// d/ds log xi_d(s) = -(phi(d)/d) (1/s + sum_{0<|k|<=d/2} e^(-2 pi i k/d) f(s, 2 pi k/d)),
/// the k = d/2 term halved. Throws DomainError at s = 0.
cplx xi_logderiv(int d, cplx s);

/// Exact exponents alpha_0, ..., alpha_{max rank}.
std::vector<mpq_class> alpha_exponents(const SchemeData& x);

/// Torsion-free scheme whose count is N(q) = sum_k a_k q^k: c_n = sum_k a_k C(k, n) points
/// of rank n. Throws ValidationError if some c_n is negative.
SchemeData scheme_from_polynomial_count(const std::vector<std::int64_t>& a);

enum class ZetaMode { Integral, Discrete };

struct Evaluation {
    cplx value;
    double error_bound = 0;
};

/// Log-derivative of a zeta function attached to a counting function N.
/// integral: -int_1^oo N(u) u^(-s) du/u;  discrete: -sum_{n >= 1} N(n) n^(-s-1).
class LogDerivEvaluator {
public:
    /// N from the points of an F_1-scheme (canonical extension); both modes continue to all s
    /// away from the poles s = 0, 1, ..., max rank.
    static LogDerivEvaluator from_scheme(SchemeData x);
    /// Single constituent N_d (phi(d) on n = 1 mod d at the integers).
    static LogDerivEvaluator from_constituent(int d);
    /// Explicit sampler with |N(u)| <= bound u^growth; integral mode needs Re(s) > growth.
    static LogDerivEvaluator from_sampler(std::function<cplx(double)> n, double growth, double bound);
    /// Arithmetic sequence with |N(n)| <= bound n^growth, summed to n_max; discrete mode only,
    /// Re(s) > growth.
    static LogDerivEvaluator from_sequence(std::function<double(std::int64_t)> n, double growth, double bound,
                                           std::int64_t n_max);

    Evaluation evaluate(cplx s, ZetaMode mode) const;

private:
    struct Scheme {
        SchemeData x;
    };
    struct Constituent {
        int d;
    };
    struct Sampler {
        std::function<cplx(double)> n;
        double growth, bound;
    };
    struct Sequence {
        std::function<double(std::int64_t)> n;
        double growth, bound;
        std::int64_t n_max;
    };
    std::variant<Scheme, Constituent, Sampler, Sequence> source_;
    explicit LogDerivEvaluator(std::variant<Scheme, Constituent, Sampler, Sequence> s) : source_(std::move(s)) {}
};

Evaluation zeta_logderiv(const LogDerivEvaluator& ev, cplx s, ZetaMode mode);

/// zeta(s) / zeta(s0) = exp(int_{s0}^{s} log-derivative) along the straight segment; s0 = 10 by default.
cplx zeta_ratio(const LogDerivEvaluator& ev, cplx s, ZetaMode mode, cplx s0 = 10.0);

/// Residue of the log-derivative at `center`: mean of (s - center) L(s) over a circle.
cplx logderiv_residue(const LogDerivEvaluator& ev, cplx center, ZetaMode mode, double radius = 1e-3);

/// Value factor * log p, kept symbolic; p = 0 stands for the value 0.
struct MangoldtEntry {
    std::int64_t n;
    std::int64_t p;
    std::int64_t factor;
    double value() const;
};
/// N(n) = n Lambda(n) for n = 1..n_max.
std::vector<MangoldtEntry> mangoldt_profile(std::int64_t n_max);

/// Idealized point counts #X(F_{1^n}) = N(n+1) = (n+1) log p when n+1 = p^l, else 0.
std::vector<MangoldtEntry> mangoldt_point_counts(std::int64_t n_max);

/// sum_{n <= n_max} Lambda(n) n^(-s) for real s.
double mangoldt_dirichlet(double s, std::int64_t n_max);

}  // namespace char1
