#include "char1/additive.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "char1/errors.hpp"
#include "char1/finite_field.hpp"
#include "char1/numtheory.hpp"
#include "char1/parallel.hpp"

namespace char1 {

int k_mul(int n, int a, int b) {
    if (a == 0 || b == 0) return 0;
    return 1 + (a - 1 + b - 1) % n;
}

int k_inv(int n, int a) {
    if (a == 0) throw DomainError("zero has no inverse");
    return 1 + (n - (a - 1)) % n;
}

int k_pow_gen(int n, long long e) { return 1 + static_cast<int>(nt::mod(e, n)); }

bool SymmetryMap::is_bijective() const {
    std::vector<char> hit(s.size(), 0);
    for (int v : s) {
        if (hit[static_cast<std::size_t>(v)]) return false;
        hit[static_cast<std::size_t>(v)] = 1;
    }
    return true;
}

bool SymmetryMap::is_involution() const {
    for (std::size_t x = 0; x < s.size(); ++x)
        if (s[static_cast<std::size_t>(s[x])] != static_cast<int>(x)) return false;
    return true;
}

bool SymmetryMap::is_retraction() const {
    for (int v : s)
        if (s[static_cast<std::size_t>(v)] != v) return false;
    return true;
}

namespace {

void check_shape(const SymmetryMap& s) {
    if (s.n < 1) throw ValidationError("symmetry map: n must be positive");
    if (s.s.size() != static_cast<std::size_t>(s.n) + 1) throw ValidationError("symmetry map: wrong length");
    for (int v : s.s)
        if (v < 0 || v > s.n) throw ValidationError("symmetry map: value out of range");
}

// Fixpoint of the commutation rule on a partial map (-1 = undecided).
bool propagate(int n, std::vector<int>& s) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int x = 1; x <= n; ++x) {
            const int xi = k_inv(n, x);
            for (int y = 0; y <= n; ++y) {
                const int u = s[static_cast<std::size_t>(k_mul(n, xi, y))];
                const int v = s[static_cast<std::size_t>(y)];
                if (u < 0 || v < 0) continue;
                const int a = k_mul(n, x, u);
                const int b = k_mul(n, v, xi);
                int& sa = s[static_cast<std::size_t>(a)];
                int& sb = s[static_cast<std::size_t>(b)];
                if (sa >= 0 && sb >= 0) {
                    if (sa != k_mul(n, x, sb)) return false;
                } else if (sb >= 0) {
                    sa = k_mul(n, x, sb);
                    changed = true;
                } else if (sa >= 0) {
                    sb = k_mul(n, xi, sa);
                    changed = true;
                }
            }
        }
    }
    return true;
}

int next_undecided(const std::vector<int>& s) {
    // follow the orbit of 0 first
    std::vector<char> seen(s.size(), 0);
    for (int x = 0; x >= 0 && !seen[static_cast<std::size_t>(x)]; x = s[static_cast<std::size_t>(x)]) {
        seen[static_cast<std::size_t>(x)] = 1;
        if (s[static_cast<std::size_t>(x)] < 0) return x;
    }
    auto it = std::find(s.begin(), s.end(), -1);
    return it == s.end() ? -1 : static_cast<int>(it - s.begin());
}

void brute_search(int n, std::vector<int> s, std::vector<SymmetryMap>& out) {
    if (!propagate(n, s)) return;
    const int k = next_undecided(s);
    if (k < 0) {
        SymmetryMap m{n, s};
        if (commutation_witness(m)) throw InternalError("brute search: propagation accepted an invalid map");
        out.push_back(std::move(m));
        return;
    }
    for (int v = 0; v <= n; ++v) {
        auto t = s;
        t[static_cast<std::size_t>(k)] = v;
        brute_search(n, std::move(t), out);
    }
}

}  // namespace

std::optional<std::pair<int, int>> commutation_witness(const SymmetryMap& s) {
    check_shape(s);
    const int n = s.n;
    for (int x = 1; x <= n; ++x) {
        const int xi = k_inv(n, x);
        for (int y = 0; y <= n; ++y) {
            const int lhs = s(k_mul(n, x, s(k_mul(n, xi, y))));
            const int rhs = k_mul(n, x, s(k_mul(n, s(y), xi)));
            if (lhs != rhs) return std::make_pair(x, y);
        }
    }
    return std::nullopt;
}

SymmetryMap build_field_symmetry(int p, int l, int generator_choice) {
    if (!nt::is_prime(p)) throw DomainError("build_field_symmetry: p must be prime");
    FiniteField field(p, l);
    const auto gens = field.primitive_elements();
    if (generator_choice < 0 || generator_choice >= static_cast<int>(gens.size()))
        throw DomainError("build_field_symmetry: no primitive element with index " + std::to_string(generator_choice));
    const int g = gens[static_cast<std::size_t>(generator_choice)];
    const int q = field.order();
    const int n = q - 1;
    std::vector<int> antilog(static_cast<std::size_t>(n)), dlog(static_cast<std::size_t>(q), -1);
    for (int e = 0, x = 1; e < n; ++e, x = field.mul(x, g)) {
        antilog[static_cast<std::size_t>(e)] = x;
        dlog[static_cast<std::size_t>(x)] = e;
    }
    auto j = [&](int fe) { return fe == 0 ? 0 : 1 + dlog[static_cast<std::size_t>(fe)]; };
    SymmetryMap s{n, std::vector<int>(static_cast<std::size_t>(n) + 1)};
    s.s[0] = j(field.one());
    for (int e = 0; e < n; ++e) s.s[static_cast<std::size_t>(e) + 1] = j(field.add(antilog[static_cast<std::size_t>(e)], 1));
    return s;
}

std::vector<SymmetryMap> search_A(int n, SearchMode mode) {
    if (n < 1) throw DomainError("search_A: n must be positive");
    std::vector<SymmetryMap> out;
    if (mode == SearchMode::Brute) {
        if (n > 10) throw ResourceError("search_A: brute mode limited to n <= 10");
        // branch on s(1) in parallel; s(0) = 1 is fixed
        std::vector<std::vector<SymmetryMap>> parts(static_cast<std::size_t>(n) + 1);
        parallel_for(parts.size(), [&](std::size_t v) {
            std::vector<int> s(static_cast<std::size_t>(n) + 1, -1);
            s[0] = 1;
            if (s[1] >= 0 && s[1] != static_cast<int>(v)) return;
            s[1] = static_cast<int>(v);
            brute_search(n, std::move(s), parts[v]);
        });
        for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    } else {
        auto [p, l] = nt::prime_power(n + 1);
        if (p == 0) return out;
        if (nt::ipow(p, l) > (1 << 16)) throw ResourceError("search_A: field order above 2^16");
        std::set<SymmetryMap> unique;
        const auto count = FiniteField(static_cast<int>(p), l).primitive_elements().size();
        for (std::size_t g = 0; g < count; ++g)
            unique.insert(build_field_symmetry(static_cast<int>(p), l, static_cast<int>(g)));
        // over F_1 the Boolean retraction s = 1 also satisfies the rule
        if (n == 1) unique.insert(SymmetryMap{1, {1, 1}});
        out.assign(unique.begin(), unique.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int DerivedAddition::negate(int x) const {
    if (kind != Kind::Field) throw PreconditionError("negate: additive inverses exist only in the field case");
    return k_mul(n, theta, x);
}

DerivedAddition addition_from_symmetry(const SymmetryMap& s) {
    check_shape(s);
    const int n = s.n;
    if (s(0) == 0) throw PreconditionError("addition_from_symmetry: s(0) = 0");
    if (auto w = commutation_witness(s)) {
        auto [x, y] = *w;
        const int xi = k_inv(n, x);
        std::ostringstream msg;
        msg << "addition_from_symmetry: commutation fails at x=" << x << ", y=" << y << ": "
            << s(k_mul(n, x, s(k_mul(n, xi, y)))) << " != " << k_mul(n, x, s(k_mul(n, s(y), xi)));
        throw PreconditionError(msg.str());
    }
    DerivedAddition add;
    add.n = n;
    if (s.is_bijective())
        add.kind = DerivedAddition::Kind::Field;
    else if (s.is_retraction())
        add.kind = DerivedAddition::Kind::Semifield;
    else
        throw PreconditionError("addition_from_symmetry: s is neither bijective nor a retraction");
    const int size = n + 1;
    add.table.resize(static_cast<std::size_t>(size * size));
    auto mul = [n](int a, int b) { return k_mul(n, a, b); };
    auto inv = [n](int a) { return k_inv(n, a); };
    for (int x = 0; x < size; ++x)
        for (int y = 0; y < size; ++y)
            add.table[static_cast<std::size_t>(x * size + y)] = derived_sum(x, y, 0, mul, inv, s);
    if (add.kind == DerivedAddition::Kind::Field)
        add.theta = static_cast<int>(std::find(s.s.begin(), s.s.end(), 0) - s.s.begin());
    if (!check_field_axioms(add)) throw InternalError("addition_from_symmetry: derived law fails the axioms");
    return add;
}

bool check_field_axioms(const DerivedAddition& add) {
    const int n = add.n, size = n + 1;
    for (int x = 0; x < size; ++x) {
        if (add.plus(0, x) != x || add.plus(x, 0) != x) return false;
        for (int y = 0; y < size; ++y) {
            if (add.plus(x, y) != add.plus(y, x)) return false;
            for (int z = 0; z < size; ++z) {
                if (add.plus(add.plus(x, y), z) != add.plus(x, add.plus(y, z))) return false;
                if (k_mul(n, x, add.plus(y, z)) != add.plus(k_mul(n, x, y), k_mul(n, x, z))) return false;
            }
        }
    }
    if (add.kind == DerivedAddition::Kind::Field) {
        for (int x = 0; x < size; ++x) {
            bool has_inverse = false;
            for (int y = 0; y < size && !has_inverse; ++y) has_inverse = add.plus(x, y) == 0;
            if (!has_inverse) return false;
        }
    } else {
        for (int x = 0; x < size; ++x)
            if (add.plus(x, x) != x) return false;
    }
    return true;
}

QuadrilateralReport quadrilateral_check(const SymmetryMap& s, int rotation) {
    check_shape(s);
    const int n = s.n;
    if (rotation < 1 || rotation > n) throw DomainError("quadrilateral_check: rotation must be a group element");
    if (!s.is_involution()) throw PreconditionError("quadrilateral_check: s is not an involution");
    for (int x = 0; x <= n; ++x)
        if (s(x) == x) throw PreconditionError("quadrilateral_check: s has a fixed point");
    const int ri = k_inv(n, rotation);
    std::vector<int> m1(static_cast<std::size_t>(n) + 1), m2(static_cast<std::size_t>(n) + 1);
    for (int x = 0; x <= n; ++x) {
        m1[static_cast<std::size_t>(x)] = s(x);
        m2[static_cast<std::size_t>(x)] = k_mul(n, rotation, s(k_mul(n, ri, x)));
    }
    QuadrilateralReport rep;
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int v = 0; v <= n; ++v) {
        if (seen[static_cast<std::size_t>(v)]) continue;
        int len = 0, cur = v;
        bool first = true;
        do {
            seen[static_cast<std::size_t>(cur)] = 1;
            cur = first ? m1[static_cast<std::size_t>(cur)] : m2[static_cast<std::size_t>(cur)];
            first = !first;
            ++len;
        } while (!(cur == v && first));
        ++rep.cycle_lengths[len];
    }
    rep.all_at_most_four = rep.cycle_lengths.rbegin()->first <= 4;
    return rep;
}

bool rotations_commute(const SymmetryMap& s) {
    check_shape(s);
    const int n = s.n;
    for (int r = 1; r <= n; ++r) {
        const int ri = k_inv(n, r);
        auto conj = [&](int x) { return k_mul(n, r, s(k_mul(n, ri, x))); };
        for (int x = 0; x <= n; ++x)
            if (s(conj(x)) != conj(s(x))) return false;
    }
    return true;
}

std::optional<Conjugator> find_conjugator(const SymmetryMap& s, const SymmetryMap& t) {
    check_shape(s);
    check_shape(t);
    if (s.n != t.n) return std::nullopt;
    const int n = s.n;
    for (int k = 1; k <= n; ++k) {
        if (nt::gcd(k, n) != 1) continue;
        for (int g = 1; g <= n; ++g) {
            auto T = [&](int x) { return x == 0 ? 0 : k_mul(n, g, k_pow_gen(n, static_cast<long long>(k) * (x - 1))); };
            bool ok = true;
            for (int x = 0; x <= n && ok; ++x) ok = t(T(x)) == T(s(x));
            if (ok) return Conjugator{k, g};
        }
    }
    return std::nullopt;
}

void write_edge_csv(const SymmetryMap& s, std::ostream& out) {
    check_shape(s);
    for (int x = 0; x <= s.n; ++x) out << x << ',' << s(x) << '\n';
}

}  // namespace char1
