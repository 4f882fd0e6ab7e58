#pragma once

#include <cstdint>
#include <map>
#include <string>

#include <gmpxx.h>

namespace char1 {

/// Polynomial in one variable with exponents in Z[1/p]: each exponent is stored as an
/// integer numerator over the common denominator p^denom_exp. Coefficients are integers.
class FracExpPoly {
public:
    using Terms = std::map<std::int64_t, mpz_class>;

    explicit FracExpPoly(int p, int denom_exp = 0);

    static FracExpPoly constant(int p, const mpz_class& c);
    /// c * x^(num / p^denom_exp)
    static FracExpPoly monomial(int p, const mpz_class& c, std::int64_t num, int denom_exp = 0);

    int p() const { return p_; }
    int denom_exp() const { return d_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }

    /// Coefficient of x^(num/den); den must be a power of p.
    mpz_class coefficient(std::int64_t num, std::int64_t den) const;

    /// Same polynomial written over p^d, d >= denom_exp().
    FracExpPoly with_denom_exp(int d) const;
    /// Smallest common denominator.
    FracExpPoly normalized() const;

    FracExpPoly operator+(const FracExpPoly& o) const;
    FracExpPoly operator-(const FracExpPoly& o) const;
    FracExpPoly operator*(const FracExpPoly& o) const;
    FracExpPoly operator*(const mpz_class& c) const;
    FracExpPoly& operator+=(const FracExpPoly& o) { return *this = *this + o; }
    FracExpPoly pow(std::uint64_t k) const;

    /// Coefficients reduced into [0, p).
    FracExpPoly mod_p() const;
    /// Exact division of every coefficient; throws InternalError otherwise.
    FracExpPoly div_exact(const mpz_class& c) const;
    /// x^e -> x^(e / p^k).
    FracExpPoly root_exponents(int k) const;
    /// x^e -> x^(p e).
    FracExpPoly frobenius_exponents() const;

    /// Equality as functions of x (denominators normalized).
    bool operator==(const FracExpPoly& o) const;

    std::string to_string(const std::string& var = "x") const;

private:
    int p_;
    int d_;
    Terms terms_;
    void add_term(std::int64_t e, const mpz_class& c);
};

}  // namespace char1
