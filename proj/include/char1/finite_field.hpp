#pragma once

#include <cstdint>
#include <vector>

namespace char1 {

/// F_{p^l} as F_p[T]/(f) with f the least monic irreducible of degree l in the
/// base-p encoding order. Elements are integers 0..q-1: digit i (base p) is the
/// coefficient of T^i.
class FiniteField {
public:
    FiniteField(int p, int l);

    int p() const { return p_; }
    int degree() const { return l_; }
    int order() const { return q_; }
    /// Coefficients c_0..c_{l-1} of the reduction polynomial (leading 1 omitted).
    const std::vector<int>& modulus() const { return modulus_; }

    int add(int a, int b) const;
    int neg(int a) const;
    int mul(int a, int b) const;
    int pow(int a, std::int64_t e) const;
    int one() const { return 1; }
    bool is_primitive(int a) const;
    /// All primitive elements, in increasing encoding order.
    std::vector<int> primitive_elements() const;

private:
    int p_, l_, q_;
    std::vector<int> modulus_;
    std::vector<int> digits(int a) const;
    int encode(const std::vector<int>& d) const;
};

/// Least monic irreducible polynomial of degree l over F_p, as c_0..c_{l-1}.
std::vector<int> least_irreducible(int p, int l);

}  // namespace char1
