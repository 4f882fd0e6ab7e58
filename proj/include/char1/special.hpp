#pragma once

#include <complex>
#include <vector>

namespace char1 {

using cplx = std::complex<double>;

/// Gamma function on C (Lanczos, g = 7, with reflection for Re z < 1/2).
/// Throws DomainError at the poles z = 0, -1, -2, ...
cplx gamma(cplx z);

/// Hurwitz zeta sum_{k >= 0} (k + alpha)^(-w) for alpha in (0, 1], w != 1, by Euler-Maclaurin.
cplx hurwitz_zeta(cplx w, double alpha);

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const GaussRule& gauss_legendre(int n);

/// f(s, a) = int_1^oo e^(iau) u^(-s) du/u continued to an entire function of s:
/// e^(-i pi s/2) a^s Gamma(-s) + sum_n (ia)^n / (n! (s - n)).
/// Near a non-negative integer the value is the mean over a small circle.
/// Throws DomainError for a <= 0 and AccuracyError when `terms` does not reach full precision.
cplx f_entire(cplx s, double a, int terms = 400);

}  // namespace char1
