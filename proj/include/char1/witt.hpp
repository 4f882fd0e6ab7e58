#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "char1/fracexp.hpp"

namespace char1 {

/// Truncated p-typical Witt vector (a_0, ..., a_N) over Z[x^(1/p^D)].
struct WittVec {
    int p = 2;
    std::vector<FracExpPoly> components;

    std::size_t length() const { return components.size(); }
    bool operator==(const WittVec&) const = default;
};

WittVec witt_zero(int p, std::size_t length);

/// gh_i = sum_{j <= i} p^j a_j^(p^(i-j)).
std::vector<FracExpPoly> ghost(const WittVec& a);
/// Inverse of ghost by successive exact division; InternalError when a division is inexact.
WittVec from_ghost(int p, const std::vector<FracExpPoly>& gh);

WittVec witt_add(const WittVec& a, const WittVec& b);
WittVec witt_mul(const WittVec& a, const WittVec& b);
/// (m, 0, ..., 0) for a single monomial m; DomainError otherwise.
WittVec teichmuller(const FracExpPoly& monomial, std::size_t length);

/// Universal coefficients w(p^n, k) in Z/p for 1 <= n <= N and 0 < k < p^n.
struct WCoeffTable {
    int p = 0;
    int N = 0;
    std::map<std::pair<int, std::int64_t>, int> entries;

    int w(int n, std::int64_t k) const;
};

/// Truncated power series in T over F_p, coefficient of T^n at index n.
using FpSeries = std::vector<int>;

/// Reads the coefficients from tau(x) + tau(1) computed by Witt addition. Requires
/// p in {2, 3, 5, 7} and N <= 3.
WCoeffTable witt_coeffs(int p, int N);

/// Exponent alpha = num / den in [0, 1].
struct Rational {
    std::int64_t num;
    std::int64_t den;
};

/// w_p(alpha) modulo T^(N+1); 1 at alpha in {0, 1}. DomainError when the reduced
/// denominator is not p^n with n <= N, or alpha lies outside [0, 1].
FpSeries wp_map(const WCoeffTable& table, Rational alpha);

/// "4T^3", "3T^2+2T^3", "T", "1", "0".
std::string format_series(const FpSeries& s);
FpSeries parse_series(const std::string& text);

/// Rows (alpha, w_p(alpha)) for alpha = k / p^N, k = 1..p^N, in increasing order of alpha.
std::vector<std::pair<Rational, FpSeries>> witt_table_rows(const WCoeffTable& table);
/// CSV with header alpha_num,alpha_den,series.
void write_witt_table_csv(const WCoeffTable& table, std::ostream& out);

/// Monomial c t^e with e in Z[1/p], c read modulo p.
struct Monomial {
    Rational exponent;
    std::int64_t coeff = 1;
};

/// Coefficient of T^n (n = 0..N) of x +' y: polynomials in t over F_p.
using DeformedSum = std::vector<FracExpPoly>;

/// sum_alpha w_p(alpha) x^alpha y^(1 - alpha) on monomials, from the coefficient table.
DeformedSum deformed_add(const Monomial& x, const Monomial& y, const WCoeffTable& table);
/// Digits of tau(x) + tau(y) computed by Witt addition over Z, reduced mod p,
/// with the n-th digit's p^n-th root taken. Independent of the coefficient table.
DeformedSum deformed_add_oracle(const Monomial& x, const Monomial& y, int p, int N);

}  // namespace char1
