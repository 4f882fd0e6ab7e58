#include "char1/finite_field.hpp"

#include <algorithm>

#include "char1/errors.hpp"
#include "char1/numtheory.hpp"

namespace char1 {

namespace {

// polynomials over F_p as coefficient vectors, lowest degree first
using Poly = std::vector<int>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, int p) {
    trim(a);
    const int inv_lead = static_cast<int>(nt::pow_mod(m.back(), p - 2, p));
    while (a.size() >= m.size()) {
        const int c = static_cast<int>(static_cast<long long>(a.back()) * inv_lead % p);
        const std::size_t shift = a.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i)
            a[shift + i] = static_cast<int>(((a[shift + i] - static_cast<long long>(c) * m[i]) % p + p) % p);
        trim(a);
    }
    return a;
}

Poly monic_from_index(int p, int deg, long long index) {
    Poly f(static_cast<std::size_t>(deg) + 1, 0);
    for (int i = 0; i < deg; ++i, index /= p) f[static_cast<std::size_t>(i)] = static_cast<int>(index % p);
    f[static_cast<std::size_t>(deg)] = 1;
    return f;
}

bool irreducible(const Poly& f, int p) {
    const int deg = static_cast<int>(f.size()) - 1;
    for (int d = 1; 2 * d <= deg; ++d) {
        const long long count = nt::ipow(p, d);
        for (long long idx = 0; idx < count; ++idx)
            if (poly_mod(f, monic_from_index(p, d, idx), p).empty()) return false;
    }
    return true;
}

}  // namespace

std::vector<int> least_irreducible(int p, int l) {
    if (!nt::is_prime(p)) throw DomainError("finite field: p must be prime");
    if (l < 1) throw DomainError("finite field: degree must be positive");
    const long long count = nt::ipow(p, l);
    for (long long idx = 0; idx < count; ++idx) {
        Poly f = monic_from_index(p, l, idx);
        if (irreducible(f, p)) {
            f.pop_back();
            return f;
        }
    }
    throw InternalError("no irreducible polynomial found");
}

FiniteField::FiniteField(int p, int l) : p_(p), l_(l), q_(0) {
    if (!nt::is_prime(p)) throw DomainError("finite field: p must be prime");
    if (l < 1) throw DomainError("finite field: degree must be positive");
    const long long q = nt::ipow(p, l);
    if (q > (1 << 16)) throw DomainError("finite field: order above 2^16");
    q_ = static_cast<int>(q);
    modulus_ = least_irreducible(p, l);
}

std::vector<int> FiniteField::digits(int a) const {
    std::vector<int> d(static_cast<std::size_t>(l_), 0);
    for (int i = 0; i < l_; ++i, a /= p_) d[static_cast<std::size_t>(i)] = a % p_;
    return d;
}

int FiniteField::encode(const std::vector<int>& d) const {
    int a = 0;
    for (std::size_t i = d.size(); i-- > 0;) a = a * p_ + d[i];
    return a;
}

int FiniteField::add(int a, int b) const {
    auto da = digits(a), db = digits(b);
    for (int i = 0; i < l_; ++i) da[static_cast<std::size_t>(i)] = (da[static_cast<std::size_t>(i)] + db[static_cast<std::size_t>(i)]) % p_;
    return encode(da);
}

int FiniteField::neg(int a) const {
    auto d = digits(a);
    for (auto& c : d) c = (p_ - c) % p_;
    return encode(d);
}

int FiniteField::mul(int a, int b) const {
    auto da = digits(a), db = digits(b);
    Poly prod(static_cast<std::size_t>(2 * l_), 0);
    for (int i = 0; i < l_; ++i)
        for (int j = 0; j < l_; ++j)
            prod[static_cast<std::size_t>(i + j)] =
                (prod[static_cast<std::size_t>(i + j)] + da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(j)]) % p_;
    Poly m = modulus_;
    m.push_back(1);
    Poly r = poly_mod(prod, m, p_);
    r.resize(static_cast<std::size_t>(l_), 0);
    return encode(r);
}

int FiniteField::pow(int a, std::int64_t e) const {
    int r = 1, b = a;
    for (; e > 0; e >>= 1) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
    }
    return r;
}

bool FiniteField::is_primitive(int a) const {
    if (a == 0) return false;
    const std::int64_t n = q_ - 1;
    if (pow(a, n) != 1) return false;
    for (auto [r, e] : nt::factorize(n))
        if (pow(a, n / r) == 1) return false;
    return true;
}

std::vector<int> FiniteField::primitive_elements() const {
    const int n = q_ - 1;
    int g = 1;
    while (!is_primitive(g)) ++g;
    std::vector<int> out;
    int x = 1;
    for (int k = 0; k < n; ++k, x = mul(x, g))
        if (nt::gcd(k, n) == 1) out.push_back(x);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace char1
