#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace char1 {

/// Subset of a finite monoid, as a sorted list of element indices.
using ElementSet = std::vector<int>;

/// Finite commutative monoid with unit and absorbing zero, given by its table.
/// A monoid of size 1 (zero == one) is the trivial monoid and is allowed.
class PointedMonoid {
public:
    PointedMonoid(int size, std::vector<int> table, int zero, int one);

    int size() const { return size_; }
    int zero() const { return zero_; }
    int one() const { return one_; }
    int mul(int x, int y) const { return table_[static_cast<std::size_t>(x * size_ + y)]; }
    int pow(int x, int k) const;
    const std::vector<int>& table() const { return table_; }

    bool is_trivial() const { return size_ == 1; }
    bool is_unit(int x) const;
    ElementSet units() const;
    /// Complement of the units: the maximal prime ideal.
    ElementSet maximal_ideal() const;

    // Common families.
    static PointedMonoid f1();
    /// F_1[Z/n] = Z/n with an adjoined zero; element 0 is zero, 1 + k is the k-th power of a generator.
    static PointedMonoid f1_cyclic(int n);
    /// {1, t, ..., t^(k-1), 0} with t^k = 0.
    static PointedMonoid truncated(int k);
    /// {1, t, ..., t^k, 0} with t^(k+1) = t^k.
    static PointedMonoid idempotent_tail(int k);
    /// Smash product: (M x N) with the classes having a zero coordinate identified to 0.
    static PointedMonoid smash(const PointedMonoid& a, const PointedMonoid& b);
    /// Rees quotient M / I.
    static PointedMonoid rees_quotient(const PointedMonoid& m, const ElementSet& ideal);

private:
    int size_;
    std::vector<int> table_;
    int zero_;
    int one_;
};

bool is_ideal(const PointedMonoid& m, const ElementSet& s);
bool is_prime_ideal(const PointedMonoid& m, const ElementSet& s);

/// All prime ideals, ordered so that every ideal precedes the ones strictly containing it.
std::vector<ElementSet> prime_ideals(const PointedMonoid& m);

/// All (non-empty) ideals of m; exhaustive, intended for small monoids.
std::vector<ElementSet> all_ideals(const PointedMonoid& m);

ElementSet radical(const PointedMonoid& m, const ElementSet& ideal);

/// Basis open D(fM): the primes not containing f.
std::vector<ElementSet> basic_open(const PointedMonoid& m, int f);

/// Localization M_f = S^{-1} M with S = {f^k}, computed by congruence closure on M x S.
PointedMonoid localize(const PointedMonoid& m, int f);

bool isomorphic(const PointedMonoid& a, const PointedMonoid& b);

/// A point of Spec(M) viewed as a morphism M -> F_1: value[x] in {0, 1}.
struct PrimeHom {
    ElementSet prime;
    std::vector<int> value;
};

/// The bijection p -> phi_p between Spec(M) and Hom(M, F_1), with both directions
/// verified. Throws InternalError if some phi_p fails to be a morphism.
std::vector<PrimeHom> spec_as_homs_to_f1(const PointedMonoid& m);

/// Finitely generated abelian group Z^rank x prod Z/d_i with d_1 | d_2 | ...
struct FinAbGroup {
    int rank = 0;
    std::vector<std::int64_t> invariant_factors;

    /// Normal form from an arbitrary list of cyclic orders (1s dropped).
    static FinAbGroup from_cyclic_orders(int rank, std::vector<std::int64_t> orders);
    std::int64_t torsion_order() const;
    bool operator==(const FinAbGroup&) const = default;
};

/// Noetherian F_1-scheme reduced to the unit groups of its local monoids.
struct SchemeData {
    std::vector<FinAbGroup> points;
};

/// #Hom(Z/m, Z/n) = gcd(m, n).
std::int64_t hom_count_cyclic(std::int64_t m, std::int64_t n);

/// Explicit enumeration of x in Z/n with m x = 0; intended for m n <= 1e4.
std::int64_t hom_count_cyclic_enumerated(std::int64_t m, std::int64_t n);

/// #X(F_{1^n}) = sum_x n^{n(x)} prod_j gcd(n, m_j(x)).
mpz_class count_points_f1n(const SchemeData& x, std::int64_t n);

}  // namespace char1
