#include "char1/monoid.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <string>

#include "char1/errors.hpp"
#include "char1/numtheory.hpp"

namespace char1 {

PointedMonoid::PointedMonoid(int size, std::vector<int> table, int zero, int one)
    : size_(size), table_(std::move(table)), zero_(zero), one_(one) {
    if (size_ < 1) throw ValidationError("monoid: empty carrier");
    if (table_.size() != static_cast<std::size_t>(size_ * size_))
        throw ValidationError("monoid: table has wrong size");
    if (zero_ < 0 || zero_ >= size_ || one_ < 0 || one_ >= size_)
        throw ValidationError("monoid: zero/one out of range");
    if (size_ > 1 && zero_ == one_) throw ValidationError("monoid: zero equals one in a non-trivial monoid");
    for (int v : table_)
        if (v < 0 || v >= size_) throw ValidationError("monoid: table not closed");
    for (int x = 0; x < size_; ++x) {
        if (mul(one_, x) != x) throw ValidationError("monoid: unit is not neutral");
        if (mul(zero_, x) != zero_) throw ValidationError("monoid: zero is not absorbing");
        for (int y = 0; y < size_; ++y) {
            if (mul(x, y) != mul(y, x)) throw ValidationError("monoid: not commutative");
            for (int z = 0; z < size_; ++z)
                if (mul(mul(x, y), z) != mul(x, mul(y, z)))
                    throw ValidationError("monoid: not associative");
        }
    }
}

int PointedMonoid::pow(int x, int k) const {
    int r = one_;
    for (int i = 0; i < k; ++i) r = mul(r, x);
    return r;
}

bool PointedMonoid::is_unit(int x) const {
    for (int y = 0; y < size_; ++y)
        if (mul(x, y) == one_) return true;
    return false;
}

ElementSet PointedMonoid::units() const {
    ElementSet out;
    for (int x = 0; x < size_; ++x)
        if (is_unit(x)) out.push_back(x);
    return out;
}

ElementSet PointedMonoid::maximal_ideal() const {
    ElementSet out;
    for (int x = 0; x < size_; ++x)
        if (!is_unit(x)) out.push_back(x);
    return out;
}

PointedMonoid PointedMonoid::f1() { return f1_cyclic(1); }

PointedMonoid PointedMonoid::f1_cyclic(int n) {
    if (n < 1) throw DomainError("f1_cyclic: n must be positive");
    const int size = n + 1;
    std::vector<int> t(static_cast<std::size_t>(size * size), 0);
    for (int a = 1; a < size; ++a)
        for (int b = 1; b < size; ++b) t[static_cast<std::size_t>(a * size + b)] = 1 + (a - 1 + b - 1) % n;
    return PointedMonoid(size, std::move(t), 0, 1);
}

PointedMonoid PointedMonoid::truncated(int k) {
    if (k < 1) throw DomainError("truncated: k must be positive");
    // element 0 = zero, element 1 + e = t^e for 0 <= e < k
    const int size = k + 1;
    std::vector<int> t(static_cast<std::size_t>(size * size), 0);
    for (int a = 1; a < size; ++a)
        for (int b = 1; b < size; ++b) {
            int e = (a - 1) + (b - 1);
            t[static_cast<std::size_t>(a * size + b)] = e < k ? 1 + e : 0;
        }
    return PointedMonoid(size, std::move(t), 0, 1);
}

PointedMonoid PointedMonoid::idempotent_tail(int k) {
    if (k < 1) throw DomainError("idempotent_tail: k must be positive");
    // element 0 = zero, element 1 + e = t^e for 0 <= e <= k, t^(k+1) = t^k
    const int size = k + 2;
    std::vector<int> t(static_cast<std::size_t>(size * size), 0);
    for (int a = 1; a < size; ++a)
        for (int b = 1; b < size; ++b)
            t[static_cast<std::size_t>(a * size + b)] = 1 + std::min(k, (a - 1) + (b - 1));
    return PointedMonoid(size, std::move(t), 0, 1);
}

PointedMonoid PointedMonoid::smash(const PointedMonoid& a, const PointedMonoid& b) {
    // non-zero pairs get indices 1.., zero is 0
    std::map<std::pair<int, int>, int> index;
    std::vector<std::pair<int, int>> pairs{{a.zero(), b.zero()}};
    for (int x = 0; x < a.size(); ++x)
        for (int y = 0; y < b.size(); ++y)
            if (x != a.zero() && y != b.zero()) {
                index[{x, y}] = static_cast<int>(pairs.size());
                pairs.emplace_back(x, y);
            }
    const int size = static_cast<int>(pairs.size());
    auto idx = [&](int x, int y) {
        if (x == a.zero() || y == b.zero()) return 0;
        return index.at({x, y});
    };
    std::vector<int> t(static_cast<std::size_t>(size * size), 0);
    for (int i = 1; i < size; ++i)
        for (int j = 1; j < size; ++j)
            t[static_cast<std::size_t>(i * size + j)] =
                idx(a.mul(pairs[i].first, pairs[j].first), b.mul(pairs[i].second, pairs[j].second));
    int one = size == 1 ? 0 : idx(a.one(), b.one());
    return PointedMonoid(size, std::move(t), 0, one);
}

PointedMonoid PointedMonoid::rees_quotient(const PointedMonoid& m, const ElementSet& ideal) {
    if (!is_ideal(m, ideal)) throw ValidationError("rees_quotient: not an ideal");
    std::vector<int> newindex(static_cast<std::size_t>(m.size()), 0);
    int next = 1;
    for (int x = 0; x < m.size(); ++x)
        if (!std::binary_search(ideal.begin(), ideal.end(), x)) newindex[static_cast<std::size_t>(x)] = next++;
    const int size = next;
    std::vector<int> t(static_cast<std::size_t>(size * size), 0);
    for (int x = 0; x < m.size(); ++x)
        for (int y = 0; y < m.size(); ++y) {
            int i = newindex[static_cast<std::size_t>(x)], j = newindex[static_cast<std::size_t>(y)];
            if (i && j) t[static_cast<std::size_t>(i * size + j)] = newindex[static_cast<std::size_t>(m.mul(x, y))];
        }
    int one = std::binary_search(ideal.begin(), ideal.end(), m.one()) ? 0 : newindex[static_cast<std::size_t>(m.one())];
    return PointedMonoid(size, std::move(t), 0, one);
}

namespace {

std::vector<char> mask_of(const PointedMonoid& m, const ElementSet& s) {
    std::vector<char> in(static_cast<std::size_t>(m.size()), 0);
    for (int x : s) {
        if (x < 0 || x >= m.size()) throw ValidationError("element index out of range");
        in[static_cast<std::size_t>(x)] = 1;
    }
    return in;
}

ElementSet set_of(const std::vector<signed char>& state) {
    ElementSet out;
    for (std::size_t x = 0; x < state.size(); ++x)
        if (state[x] == 1) out.push_back(static_cast<int>(x));
    return out;
}

}  // namespace

bool is_ideal(const PointedMonoid& m, const ElementSet& s) {
    if (s.empty()) return false;
    auto in = mask_of(m, s);
    for (int x : s)
        for (int y = 0; y < m.size(); ++y)
            if (!in[static_cast<std::size_t>(m.mul(x, y))]) return false;
    return true;
}

bool is_prime_ideal(const PointedMonoid& m, const ElementSet& s) {
    if (!is_ideal(m, s)) return false;
    auto in = mask_of(m, s);
    if (in[static_cast<std::size_t>(m.one())]) return false;
    for (int x = 0; x < m.size(); ++x)
        for (int y = 0; y < m.size(); ++y)
            if (!in[static_cast<std::size_t>(x)] && !in[static_cast<std::size_t>(y)] &&
                in[static_cast<std::size_t>(m.mul(x, y))])
                return false;
    return true;
}

std::vector<ElementSet> prime_ideals(const PointedMonoid& m) {
    const int n = m.size();
    std::vector<ElementSet> out;
    if (m.is_trivial()) return out;  // no proper ideal
    // state: 1 in the ideal, 0 outside, -1 undecided
    std::vector<signed char> state(static_cast<std::size_t>(n), -1);

    // Propagate: ideal closure (x in I => xy in I) and prime closure
    // (x, y outside => xy outside; equivalently xy outside => x, y outside).
    std::function<bool(std::vector<signed char>&)> propagate = [&](std::vector<signed char>& st) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) {
                    const int xy = m.mul(x, y);
                    auto sx = st[static_cast<std::size_t>(x)], sy = st[static_cast<std::size_t>(y)];
                    auto& sxy = st[static_cast<std::size_t>(xy)];
                    if (sx == 1) {
                        if (sxy == 0) return false;
                        if (sxy == -1) sxy = 1, changed = true;
                    }
                    if (sx == 0 && sy == 0) {
                        if (sxy == 1) return false;
                        if (sxy == -1) sxy = 0, changed = true;
                    }
                    if (sxy == 0) {
                        if (sx == 1) return false;
                        if (sx == -1) st[static_cast<std::size_t>(x)] = 0, changed = true;
                    }
                }
        }
        return true;
    };

    std::function<void(std::vector<signed char>)> search = [&](std::vector<signed char> st) {
        if (!propagate(st)) return;
        auto it = std::find(st.begin(), st.end(), -1);
        if (it == st.end()) {
            out.push_back(set_of(st));
            return;
        }
        const auto k = static_cast<std::size_t>(it - st.begin());
        auto a = st;
        a[k] = 1;
        search(a);
        st[k] = 0;
        search(st);
    };

    state[static_cast<std::size_t>(m.zero())] = 1;
    state[static_cast<std::size_t>(m.one())] = 0;
    search(state);

    for (const auto& p : out)
        if (!is_prime_ideal(m, p)) throw InternalError("prime_ideals: search produced a non-prime");
    std::sort(out.begin(), out.end(), [](const ElementSet& a, const ElementSet& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

std::vector<ElementSet> all_ideals(const PointedMonoid& m) {
    const int n = m.size();
    if (n > 20) throw ResourceError("all_ideals: exhaustive enumeration capped at 20 elements");
    std::vector<ElementSet> out;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        if (!(mask >> m.zero() & 1u)) continue;
        ElementSet s;
        for (int x = 0; x < n; ++x)
            if (mask >> x & 1u) s.push_back(x);
        if (is_ideal(m, s)) out.push_back(std::move(s));
    }
    return out;
}

ElementSet radical(const PointedMonoid& m, const ElementSet& ideal) {
    auto in = mask_of(m, ideal);
    ElementSet out;
    for (int x = 0; x < m.size(); ++x) {
        int p = x;
        for (int k = 1; k <= m.size(); ++k, p = m.mul(p, x))
            if (in[static_cast<std::size_t>(p)]) {
                out.push_back(x);
                break;
            }
    }
    return out;
}

std::vector<ElementSet> basic_open(const PointedMonoid& m, int f) {
    std::vector<ElementSet> out;
    for (auto& p : prime_ideals(m))
        if (!std::binary_search(p.begin(), p.end(), f)) out.push_back(p);
    return out;
}

PointedMonoid localize(const PointedMonoid& m, int f) {
    if (f < 0 || f >= m.size()) throw ValidationError("localize: element out of range");
    ElementSet powers;
    for (int p = m.one();;) {
        if (std::find(powers.begin(), powers.end(), p) != powers.end()) break;
        powers.push_back(p);
        p = m.mul(p, f);
    }
    const int n = m.size();
    const int ns = static_cast<int>(powers.size());
    auto pid = [&](int x, int si) { return x * ns + si; };
    std::vector<int> parent(static_cast<std::size_t>(n * ns));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] != v)
            v = parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
        return v;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
        return true;
    };
    // generating relation: (x, s) ~ (y, t) iff u x t = u y s for some u in S
    for (int x = 0; x < n; ++x)
        for (int si = 0; si < ns; ++si)
            for (int y = 0; y < n; ++y)
                for (int ti = 0; ti < ns; ++ti)
                    for (int u : powers)
                        if (m.mul(u, m.mul(x, powers[static_cast<std::size_t>(ti)])) ==
                            m.mul(u, m.mul(y, powers[static_cast<std::size_t>(si)]))) {
                            unite(pid(x, si), pid(y, ti));
                            break;
                        }
    auto index_of_power = [&](int p) {
        return static_cast<int>(std::find(powers.begin(), powers.end(), p) - powers.begin());
    };
    // congruence closure: classes must be compatible with the product
    bool changed = true;
    while (changed) {
        changed = false;
        for (int a = 0; a < n * ns; ++a) {
            if (find(a) == a) continue;
            int b = find(a);
            for (int z = 0; z < n; ++z)
                for (int ri = 0; ri < ns; ++ri) {
                    auto prod = [&](int v) {
                        int x = v / ns, si = v % ns;
                        return pid(m.mul(x, z), index_of_power(m.mul(powers[static_cast<std::size_t>(si)],
                                                                      powers[static_cast<std::size_t>(ri)])));
                    };
                    if (unite(prod(a), prod(b))) changed = true;
                }
        }
    }
    std::map<int, int> cls;
    for (int v = 0; v < n * ns; ++v) cls.emplace(find(v), 0);
    int next = 0;
    // zero class first so the result keeps 0 at index 0
    const int zero_root = find(pid(m.zero(), 0));
    cls[zero_root] = next++;
    for (auto& [root, id] : cls)
        if (root != zero_root) id = next++;
    const int size = next;
    std::vector<int> rep(static_cast<std::size_t>(size));
    for (auto& [root, id] : cls) rep[static_cast<std::size_t>(id)] = root;
    std::vector<int> t(static_cast<std::size_t>(size * size));
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) {
            int a = rep[static_cast<std::size_t>(i)], b = rep[static_cast<std::size_t>(j)];
            int x = a / ns, si = a % ns, y = b / ns, ti = b % ns;
            int prod = pid(m.mul(x, y), index_of_power(m.mul(powers[static_cast<std::size_t>(si)],
                                                              powers[static_cast<std::size_t>(ti)])));
            t[static_cast<std::size_t>(i * size + j)] = cls.at(find(prod));
        }
    return PointedMonoid(size, std::move(t), 0, cls.at(find(pid(m.one(), 0))));
}

bool isomorphic(const PointedMonoid& a, const PointedMonoid& b) {
    if (a.size() != b.size()) return false;
    const int n = a.size();
    if (n > 10) throw ResourceError("isomorphic: brute-force limited to 10 elements");
    std::vector<int> img(static_cast<std::size_t>(n), -1);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    img[static_cast<std::size_t>(a.zero())] = b.zero();
    used[static_cast<std::size_t>(b.zero())] = 1;
    if (a.one() != a.zero()) {
        img[static_cast<std::size_t>(a.one())] = b.one();
        used[static_cast<std::size_t>(b.one())] = 1;
    }
    auto consistent = [&]() {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                int ix = img[static_cast<std::size_t>(x)], iy = img[static_cast<std::size_t>(y)];
                int ixy = img[static_cast<std::size_t>(a.mul(x, y))];
                if (ix >= 0 && iy >= 0 && ixy >= 0 && b.mul(ix, iy) != ixy) return false;
            }
        return true;
    };
    std::function<bool(int)> go = [&](int x) {
        if (x == n) return consistent();
        if (img[static_cast<std::size_t>(x)] >= 0) return go(x + 1);
        for (int y = 0; y < n; ++y) {
            if (used[static_cast<std::size_t>(y)]) continue;
            img[static_cast<std::size_t>(x)] = y;
            used[static_cast<std::size_t>(y)] = 1;
            if (consistent() && go(x + 1)) return true;
            used[static_cast<std::size_t>(y)] = 0;
            img[static_cast<std::size_t>(x)] = -1;
        }
        return false;
    };
    return go(0);
}

std::vector<PrimeHom> spec_as_homs_to_f1(const PointedMonoid& m) {
    std::vector<PrimeHom> out;
    for (auto& p : prime_ideals(m)) {
        PrimeHom h{p, std::vector<int>(static_cast<std::size_t>(m.size()), 1)};
        for (int x : p) h.value[static_cast<std::size_t>(x)] = 0;
        if (h.value[static_cast<std::size_t>(m.one())] != 1 || h.value[static_cast<std::size_t>(m.zero())] != 0)
            throw InternalError("phi_p is not unital/pointed");
        for (int x = 0; x < m.size(); ++x)
            for (int y = 0; y < m.size(); ++y)
                if (h.value[static_cast<std::size_t>(m.mul(x, y))] !=
                    h.value[static_cast<std::size_t>(x)] * h.value[static_cast<std::size_t>(y)])
                    throw InternalError("phi_p is not multiplicative: prime_ideals is inconsistent");
        ElementSet kernel;
        for (int x = 0; x < m.size(); ++x)
            if (h.value[static_cast<std::size_t>(x)] == 0) kernel.push_back(x);
        if (kernel != p) throw InternalError("kernel of phi_p differs from p");
        out.push_back(std::move(h));
    }
    return out;
}

FinAbGroup FinAbGroup::from_cyclic_orders(int rank, std::vector<std::int64_t> orders) {
    if (rank < 0) throw ValidationError("FinAbGroup: negative rank");
    // elementary divisors per prime, then recombine largest-first
    std::map<std::int64_t, std::vector<std::int64_t>> by_prime;
    for (auto m : orders) {
        if (m < 1) throw ValidationError("FinAbGroup: cyclic orders must be positive");
        for (auto [p, e] : nt::factorize(m)) by_prime[p].push_back(nt::ipow(p, e));
    }
    std::size_t len = 0;
    for (auto& [p, v] : by_prime) {
        std::sort(v.begin(), v.end(), std::greater<>());
        len = std::max(len, v.size());
    }
    std::vector<std::int64_t> factors(len, 1);
    for (auto& [p, v] : by_prime)
        for (std::size_t k = 0; k < v.size(); ++k) factors[k] *= v[k];
    std::reverse(factors.begin(), factors.end());
    return FinAbGroup{rank, factors};
}

std::int64_t FinAbGroup::torsion_order() const {
    std::int64_t r = 1;
    for (auto d : invariant_factors) r *= d;
    return r;
}

std::int64_t hom_count_cyclic(std::int64_t m, std::int64_t n) {
    if (m < 1 || n < 1) throw DomainError("hom_count_cyclic: orders must be positive");
    return nt::gcd(m, n);
}

std::int64_t hom_count_cyclic_enumerated(std::int64_t m, std::int64_t n) {
    if (m < 1 || n < 1) throw DomainError("hom_count_cyclic: orders must be positive");
    if (m * n > 10000) throw ResourceError("hom enumeration limited to m*n <= 1e4");
    // a homomorphism Z/m -> Z/n is determined by the image x of 1, and it exists iff m x = 0 in Z/n
    std::int64_t count = 0;
    for (std::int64_t x = 0; x < n; ++x)
        if (m % n * x % n == 0) ++count;
    return count;
}

mpz_class count_points_f1n(const SchemeData& x, std::int64_t n) {
    if (n < 1) throw DomainError("count_points_f1n: n must be positive");
    mpz_class total = 0;
    for (const auto& pt : x.points) {
        mpz_class term;
        mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(pt.rank));
        for (auto m : pt.invariant_factors) term *= nt::gcd(n, m);
        total += term;
    }
    return total;
}

}  // namespace char1
