#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace char1 {

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over Q. The model is taken to be minimal at
/// every prime; this is not checked beyond the heuristic in reduction_report.
class CurveModel {
public:
    /// Throws ValidationError if the discriminant vanishes.
    CurveModel(mpz_class a1, mpz_class a2, mpz_class a3, mpz_class a4, mpz_class a6);
    /// From {a1, a2, a3, a4, a6}.
    static CurveModel from_coefficients(const std::vector<mpz_class>& a);

    const mpz_class& a1() const { return a_[0]; }
    const mpz_class& a2() const { return a_[1]; }
    const mpz_class& a3() const { return a_[2]; }
    const mpz_class& a4() const { return a_[3]; }
    const mpz_class& a6() const { return a_[4]; }
    const std::vector<mpz_class>& coefficients() const { return a_; }

    mpz_class b2() const;
    mpz_class b4() const;
    mpz_class b6() const;
    mpz_class b8() const;
    mpz_class c4() const;
    const mpz_class& discriminant() const { return disc_; }
    /// Primes dividing the discriminant, ascending.
    const std::vector<std::int64_t>& bad_primes() const { return bad_; }

private:
    std::vector<mpz_class> a_;
    mpz_class disc_;
    std::vector<std::int64_t> bad_;
};

enum class ReductionType { Good, SplitMult, NonSplitMult, Additive };

const char* to_string(ReductionType t);

struct ReductionReport {
    ReductionType type;
    /// Non-empty when the model looks non-minimal at p.
    std::string warning;
};

/// #E(F_p) including the point at infinity and, at bad p, the singular point.
/// Throws DomainError unless p is a prime <= 10^6.
std::int64_t count_points_modp(const CurveModel& e, std::int64_t p);

ReductionType reduction_type(const CurveModel& e, std::int64_t p);
ReductionReport reduction_report(const CurveModel& e, std::int64_t p);

/// Coefficients c[0..N] of a Dirichlet series, c[0] unused (kept 0).
struct DirichletCoeffs {
    std::vector<std::int64_t> c;
    bool multiplicative = false;

    std::int64_t size() const { return static_cast<std::int64_t>(c.size()) - 1; }
    std::int64_t operator[](std::int64_t n) const { return c.at(static_cast<std::size_t>(n)); }
};

/// q prod (1-q^n)^2 (1-q^(11n))^2 through q^N. Throws DomainError for N > 10^5.
DirichletCoeffs eta_coeffs(std::int64_t N);

/// L-series coefficients a(n) from point counts: a(p) = p + 1 - N(p), bad p by reduction type,
/// extended by the Hecke recurrence.
DirichletCoeffs l_coeffs_from_curve(const CurveModel& e, std::int64_t N);

/// The multiplicative t(n): t(p^l) = alpha_p^l + conj(alpha_p)^l at good p; 1, (-1)^l or 0 at
/// split, non-split and additive p. `a` must cover every prime <= N (ValidationError otherwise).
DirichletCoeffs t_coeffs(const DirichletCoeffs& a, const std::map<std::int64_t, ReductionType>& bad, std::int64_t N);
DirichletCoeffs t_coeffs(const CurveModel& e, std::int64_t N);

std::map<std::int64_t, ReductionType> bad_reduction_types(const CurveModel& e);

/// #E(F_(p^l)) = p^l + 1 - t(p^l), from t rather than by enumeration.
mpz_class count_points_prime_power(const CurveModel& e, std::int64_t p, int l);

/// N(n) = n + 1 - t(n) for n = 1..N, index 0 unused.
std::vector<std::int64_t> counting_function(const DirichletCoeffs& t);

struct LocalCheck {
    std::int64_t p;
    bool good;
    int order;  // highest power of x compared
    bool holds;
};

struct IdentityReport {
    bool holds = true;
    std::int64_t checked_through = 0;
    std::int64_t first_failure = 0;  // 0 when none
    std::int64_t expected = 0, actual = 0;
    std::vector<LocalCheck> local;
    std::string message;
};

/// t = a * (1/zeta(2s-1)) * (1/M) coefficientwise through N, plus per-prime power series checks
/// to order 8 for the primes <= order_primes.
IdentityReport dirichlet_identity_check(const DirichletCoeffs& a, const std::map<std::int64_t, ReductionType>& bad,
                                        std::int64_t N, std::int64_t order_primes = 50);
IdentityReport dirichlet_identity_check(const CurveModel& e, std::int64_t N);

struct Window {
    double re_min, re_max, im_min, im_max;
    bool contains(std::complex<double> z) const {
        return z.real() >= re_min && z.real() <= re_max && z.imag() >= im_min && z.imag() <= im_max;
    }
};

struct Singularity {
    std::complex<double> location;
    std::string source;
    int order = 1;
    /// Vertical line Re(s) = location.real(); only emitted as a conditional item.
    bool is_line = false;
    bool conditional = false;
};

/// Closed-form singularities of the log-derivative of zeta_E inside the window, sorted by
/// (re, im); the line Re(s) = -1/4 is appended last when it meets the window.
std::vector<Singularity> singularity_catalog(const CurveModel& e, const Window& w);
std::vector<Singularity> singularity_catalog(const std::vector<std::int64_t>& bad_primes, const Window& w);

}  // namespace char1
