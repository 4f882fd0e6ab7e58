#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace char1 {

/// Map s on K = H u {0}, H cyclic of order n with a fixed generator zeta.
/// Index 0 is the zero element; index e >= 1 stands for zeta^(e-1), so index 1 is the unit.
struct SymmetryMap {
    int n = 0;
    std::vector<int> s;  // length n + 1

    int operator()(int x) const { return s[static_cast<std::size_t>(x)]; }
    bool is_bijective() const;
    bool is_involution() const;
    bool is_retraction() const;  // s o s = s
    bool operator==(const SymmetryMap&) const = default;
    auto operator<=>(const SymmetryMap&) const = default;
};

/// Product on indices of K.
int k_mul(int n, int a, int b);
/// Inverse of a group index (a >= 1).
int k_inv(int n, int a);
/// Index of zeta^e.
int k_pow_gen(int n, long long e);

/// First (x, y) with x in H, y in K violating s(x s(x^-1 y)) = x s(s(y) x^-1), if any.
std::optional<std::pair<int, int>> commutation_witness(const SymmetryMap& s);

enum class SearchMode { Brute, Constructive };

/// Elements of A(F_1^n): maps with s(0) = 1 commuting with all conjugates x s(x^-1 .).
/// Results are sorted. Brute mode throws ResourceError for n > 10.
std::vector<SymmetryMap> search_A(int n, SearchMode mode);

/// s(x) = j(j^-1(x) + 1) for the field F_{p^l} and its generator_choice-th primitive
/// element (increasing encoding order), which identifies H with F_q^x.
SymmetryMap build_field_symmetry(int p, int l, int generator_choice = 0);

/// Additive structure on K derived from s.
struct DerivedAddition {
    enum class Kind { Field, Semifield };
    int n = 0;
    Kind kind = Kind::Field;
    std::vector<int> table;  // (n+1) x (n+1)

    int plus(int x, int y) const { return table[static_cast<std::size_t>(x * (n + 1) + y)]; }
    /// Additive inverse of x (field case only): theta x with theta = s^-1(0).
    int negate(int x) const;
    int theta = -1;
};

/// x + y = y if x = 0, else s(0)^-1 x s(s(0) y x^-1), over any commutative group with zero.
template <class T, class Mul, class Inv, class S>
T derived_sum(const T& x, const T& y, const T& zero, Mul mul, Inv inv, S s) {
    if (x == zero) return y;
    const T s0 = s(zero);
    return mul(mul(inv(s0), x), s(mul(mul(s0, y), inv(x))));
}

/// Builds and validates the addition table. Throws PreconditionError if s(0) = 0,
/// if s fails the commutation rule (message carries the witness), or if s is
/// neither bijective nor a retraction.
DerivedAddition addition_from_symmetry(const SymmetryMap& s);

/// Exhaustive check that (K, +, x) is a field (resp. a semifield when kind is Semifield).
bool check_field_axioms(const DerivedAddition& add);

struct QuadrilateralReport {
    bool all_at_most_four = false;
    std::map<int, int> cycle_lengths;  // length -> number of components
};

/// Decomposes the union of the matchings x -- s(x) and x -- R s R^-1 (x), R = multiplication
/// by the group element `rotation`. Throws PreconditionError if s is not a fixed-point-free involution.
QuadrilateralReport quadrilateral_check(const SymmetryMap& s, int rotation);

/// True if s commutes with R s R^-1 for every rotation R.
bool rotations_commute(const SymmetryMap& s);

/// T(x) = g alpha(x) with alpha(x) = x^k, k prime to n.
struct Conjugator {
    int k;
    int g;  // group index
};

/// A conjugator with t = T s T^-1, if one exists.
std::optional<Conjugator> find_conjugator(const SymmetryMap& s, const SymmetryMap& t);

/// "x,s(x)" per line, elements 0..n.
void write_edge_csv(const SymmetryMap& s, std::ostream& out);

}  // namespace char1
