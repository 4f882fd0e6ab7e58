#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace char1 {

/// Finite semiring given by explicit operation tables on the carrier {0, ..., size-1}.
struct SemiringTable {
    int size = 0;
    int zero = 0;
    int one = 1;
    std::vector<int> add;  // row-major size x size
    std::vector<int> mul;

    int plus(int x, int y) const { return add[static_cast<std::size_t>(x * size + y)]; }
    int times(int x, int y) const { return mul[static_cast<std::size_t>(x * size + y)]; }

    /// Throws ValidationError naming the first violated axiom.
    void validate() const;

    /// Same as validate() but reports through the return value.
    bool is_semiring() const;
};

/// The prime semiring B(n, i) on {0, ..., n-1}: sums and products that leave the
/// carrier wrap around into [i, n-1] modulo m = n - i.
class PrimeSemiring {
public:
    PrimeSemiring(int n, int i);

    int n() const { return n_; }
    int i() const { return i_; }
    int m() const { return n_ - i_; }

    int add(int x, int y) const;
    int mul(int x, int y) const;

    /// Image of a natural number under N -> B(n, i).
    int reduce(long long k) const;

    SemiringTable table() const;

private:
    void check(int x) const;
    int n_;
    int i_;
};

inline PrimeSemiring bni_ops(int n, int i) { return PrimeSemiring(n, i); }

struct Characteristic {
    enum class Kind { Positive, Combinatorial };
    Kind kind;
    int n;
    int i;  // 0 for Positive

    bool operator==(const Characteristic&) const = default;
};

/// Characteristic of a finite semiring: Positive(n) when n.1 = 0, otherwise the
/// pair (n, i) with n least such that n.1 = i.1 for some 1 <= i <= n-1.
Characteristic characteristic_of(const SemiringTable& r);

/// Partial order a <= b iff a + b = b, for an idempotent commutative addition.
/// Returns false if the table is not idempotent or the relation fails to be a
/// partial order whose joins are the sums.
bool is_sup_semilattice(const SemiringTable& r);

/// Brute-force enumeration of commutative semifields of the given size whose
/// addition is idempotent. Element 0 is the zero and element 1 the unit.
std::vector<SemiringTable> enumerate_idempotent_semifields(int size);

// Max-plus layer over the non-negative reals.

struct RMax {
    double value = 0.0;

    friend RMax operator+(RMax a, RMax b) { return {a.value < b.value ? b.value : a.value}; }
    friend RMax operator*(RMax a, RMax b) { return {a.value * b.value}; }
    friend bool operator==(RMax, RMax) = default;
};

/// The automorphism u -> u^lambda of R_+^max.
RMax rmax_frobenius(RMax x, double lambda);

/// Entropy S(s) = -s log s - (1-s) log(1-s) with 0 log 0 = 0.
double entropy_S(double s);

/// c(s) = exp(S(s)) on [0, 1]; c(0) = c(1) = 1.
double entropy_c(double s);

/// c_n(s_0, ..., s_n) = prod s_j^{-s_j} on a simplex point.
double entropy_c_simplex(std::span<const double> s);

struct FreeEnergyResult {
    double value;
    double argmax;
};

/// sup over [0, 1] of c(s) x^s y^(1-s), by grid scan followed by golden-section refinement.
FreeEnergyResult free_energy_sup(double x, double y, int grid = 1024);

/// Pointwise (f^(1/T) + g^(1/T))^T with the T = 0 limit max(f, g).
std::vector<double> rho_add(std::span<const double> f, std::span<const double> g,
                            std::span<const double> temperature);

double rho_add(double f, double g, double temperature);

}  // namespace char1
