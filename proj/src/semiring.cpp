#include "char1/semiring.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "char1/errors.hpp"

namespace char1 {

namespace {

std::string triple(int a, int b, int c) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

// Returns an empty string when all axioms hold.
std::string first_violation(const SemiringTable& r) {
    const int n = r.size;
    if (n < 1) return "empty carrier";
    if (r.add.size() != static_cast<std::size_t>(n * n) ||
        r.mul.size() != static_cast<std::size_t>(n * n))
        return "table size mismatch";
    for (int v : r.add)
        if (v < 0 || v >= n) return "addition not closed";
    for (int v : r.mul)
        if (v < 0 || v >= n) return "multiplication not closed";
    for (int x = 0; x < n; ++x) {
        if (r.plus(r.zero, x) != x) return "zero not additive identity at " + std::to_string(x);
        if (r.times(r.one, x) != x || r.times(x, r.one) != x)
            return "one not multiplicative identity at " + std::to_string(x);
        if (r.times(r.zero, x) != r.zero || r.times(x, r.zero) != r.zero)
            return "zero not absorbing at " + std::to_string(x);
        for (int y = 0; y < n; ++y) {
            if (r.plus(x, y) != r.plus(y, x)) return "addition not commutative";
            for (int z = 0; z < n; ++z) {
                if (r.plus(r.plus(x, y), z) != r.plus(x, r.plus(y, z)))
                    return "addition not associative at " + triple(x, y, z);
                if (r.times(r.times(x, y), z) != r.times(x, r.times(y, z)))
                    return "multiplication not associative at " + triple(x, y, z);
                if (r.times(x, r.plus(y, z)) != r.plus(r.times(x, y), r.times(x, z)))
                    return "left distributivity fails at " + triple(x, y, z);
                if (r.times(r.plus(y, z), x) != r.plus(r.times(y, x), r.times(z, x)))
                    return "right distributivity fails at " + triple(x, y, z);
            }
        }
    }
    return {};
}

}  // namespace

void SemiringTable::validate() const {
    if (auto msg = first_violation(*this); !msg.empty())
        throw ValidationError("semiring table: " + msg);
}

bool SemiringTable::is_semiring() const { return first_violation(*this).empty(); }

PrimeSemiring::PrimeSemiring(int n, int i) : n_(n), i_(i) {
    if (n < 2 || i < 1 || i > n - 1)
        throw DomainError("B(n,i) requires n >= 2 and 1 <= i <= n-1");
}

void PrimeSemiring::check(int x) const {
    if (x < 0 || x >= n_) throw DomainError("B(n,i) operand out of range: " + std::to_string(x));
}

int PrimeSemiring::reduce(long long k) const {
    if (k < n_) return static_cast<int>(k);
    const long long m = n_ - i_;
    // unique l in [i, n-1] with l = k (mod m)
    long long l = i_ + ((k - i_) % m + m) % m;
    return static_cast<int>(l);
}

int PrimeSemiring::add(int x, int y) const {
    check(x);
    check(y);
    return reduce(static_cast<long long>(x) + y);
}

int PrimeSemiring::mul(int x, int y) const {
    check(x);
    check(y);
    return reduce(static_cast<long long>(x) * y);
}

SemiringTable PrimeSemiring::table() const {
    SemiringTable t;
    t.size = n_;
    t.zero = 0;
    t.one = 1;
    t.add.resize(static_cast<std::size_t>(n_ * n_));
    t.mul.resize(static_cast<std::size_t>(n_ * n_));
    for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y) {
            t.add[static_cast<std::size_t>(x * n_ + y)] = add(x, y);
            t.mul[static_cast<std::size_t>(x * n_ + y)] = mul(x, y);
        }
    return t;
}

Characteristic characteristic_of(const SemiringTable& r) {
    r.validate();
    // multiples[k] = k.1
    std::vector<int> multiples{r.zero, r.one};
    for (int k = 2;; ++k) {
        int next = r.plus(multiples.back(), r.one);
        if (next == r.zero) return {Characteristic::Kind::Positive, k, 0};
        for (int j = 1; j < k; ++j)
            if (multiples[static_cast<std::size_t>(j)] == next)
                return {Characteristic::Kind::Combinatorial, k, j};
        multiples.push_back(next);
        if (k > r.size + 1) throw InternalError("characteristic_of: no cycle in finite table");
    }
}

bool is_sup_semilattice(const SemiringTable& r) {
    const int n = r.size;
    auto leq = [&](int a, int b) { return r.plus(a, b) == b; };
    for (int a = 0; a < n; ++a) {
        if (r.plus(a, a) != a) return false;
        for (int b = 0; b < n; ++b) {
            if (leq(a, b) && leq(b, a) && a != b) return false;
            for (int c = 0; c < n; ++c)
                if (leq(a, b) && leq(b, c) && !leq(a, c)) return false;
            // a + b is an upper bound and below every other upper bound
            int j = r.plus(a, b);
            if (!leq(a, j) || !leq(b, j)) return false;
            for (int u = 0; u < n; ++u)
                if (leq(a, u) && leq(b, u) && !leq(j, u)) return false;
        }
    }
    return true;
}

namespace {

// All multiplication tables on {0..n-1} with 0 absorbing, 1 the unit and the
// non-zero elements forming an abelian group.
std::vector<std::vector<int>> multiplicative_groups(int n) {
    std::vector<std::pair<int, int>> free_cells;  // (a, b) with 2 <= a <= b
    for (int a = 2; a < n; ++a)
        for (int b = a; b < n; ++b) free_cells.emplace_back(a, b);

    std::vector<std::vector<int>> out;
    std::vector<int> mul(static_cast<std::size_t>(n * n), 0);
    auto at = [&](int a, int b) -> int& { return mul[static_cast<std::size_t>(a * n + b)]; };
    for (int x = 0; x < n; ++x) {
        at(0, x) = at(x, 0) = 0;
        if (x > 0) at(1, x) = at(x, 1) = x;
    }
    std::vector<int> choice(free_cells.size(), 1);
    const int values = n - 1;  // products of non-zero elements stay non-zero
    while (true) {
        for (std::size_t c = 0; c < free_cells.size(); ++c) {
            auto [a, b] = free_cells[c];
            at(a, b) = at(b, a) = choice[c];
        }
        bool ok = true;
        for (int a = 1; a < n && ok; ++a) {
            bool has_inverse = false;
            for (int b = 1; b < n; ++b) {
                if (at(a, b) == 1) has_inverse = true;
                for (int c = 1; c < n && ok; ++c)
                    if (at(at(a, b), c) != at(a, at(b, c))) ok = false;
            }
            if (!has_inverse) ok = false;
        }
        if (ok) out.push_back(mul);
        std::size_t k = 0;
        while (k < choice.size() && ++choice[k] > values) choice[k++] = 1;
        if (k == choice.size()) break;
    }
    return out;
}

}  // namespace

std::vector<SemiringTable> enumerate_idempotent_semifields(int size) {
    if (size < 2) return {};
    if (size > 5) throw ResourceError("semifield enumeration is capped at size 5");
    const int n = size;
    std::vector<SemiringTable> out;
    std::vector<std::pair<int, int>> cells;  // unordered pairs of distinct non-zero elements
    for (int a = 1; a < n; ++a)
        for (int b = a + 1; b < n; ++b) cells.emplace_back(a, b);

    for (const auto& mul : multiplicative_groups(n)) {
        SemiringTable t;
        t.size = n;
        t.mul = mul;
        t.add.assign(static_cast<std::size_t>(n * n), 0);
        for (int x = 0; x < n; ++x) {
            t.add[static_cast<std::size_t>(x)] = x;
            t.add[static_cast<std::size_t>(x * n)] = x;
            t.add[static_cast<std::size_t>(x * n + x)] = x;
        }
        std::vector<int> choice(cells.size(), 0);
        while (true) {
            for (std::size_t c = 0; c < cells.size(); ++c) {
                auto [a, b] = cells[c];
                t.add[static_cast<std::size_t>(a * n + b)] = choice[c];
                t.add[static_cast<std::size_t>(b * n + a)] = choice[c];
            }
            if (t.is_semiring()) out.push_back(t);
            std::size_t k = 0;
            while (k < choice.size() && ++choice[k] >= n) choice[k++] = 0;
            if (k == choice.size()) break;
        }
    }
    return out;
}

RMax rmax_frobenius(RMax x, double lambda) {
    if (!(lambda > 0.0)) throw DomainError("rmax_frobenius: lambda must be positive");
    if (x.value < 0.0) throw DomainError("rmax_frobenius: element must be non-negative");
    return {std::pow(x.value, lambda)};
}

double entropy_S(double s) {
    if (!(s >= 0.0 && s <= 1.0)) throw DomainError("entropy: s outside [0,1]");
    auto xlogx = [](double v) { return v > 0.0 ? v * std::log(v) : 0.0; };
    return -xlogx(s) - xlogx(1.0 - s);
}

double entropy_c(double s) { return std::exp(entropy_S(s)); }

double entropy_c_simplex(std::span<const double> s) {
    double total = 0.0;
    double logc = 0.0;
    for (double v : s) {
        if (v < 0.0) throw DomainError("entropy_c_simplex: negative coordinate");
        total += v;
        if (v > 0.0) logc -= v * std::log(v);
    }
    if (std::abs(total - 1.0) > 1e-12) throw DomainError("entropy_c_simplex: not on the simplex");
    return std::exp(logc);
}

FreeEnergyResult free_energy_sup(double x, double y, int grid) {
    if (!(x > 0.0) || !(y > 0.0)) throw DomainError("free_energy_sup: inputs must be positive");
    if (grid < 3) throw DomainError("free_energy_sup: grid must have at least 3 points");
    const double lx = std::log(x), ly = std::log(y);
    auto objective = [&](double s) { return entropy_S(s) + s * lx + (1.0 - s) * ly; };

    int best = 0;
    double best_val = objective(0.0);
    for (int k = 1; k < grid; ++k) {
        double v = objective(static_cast<double>(k) / (grid - 1));
        if (v > best_val) {
            best_val = v;
            best = k;
        }
    }
    const double h = 1.0 / (grid - 1);
    double a = std::max(0.0, (best - 1) * h);
    double b = std::min(1.0, (best + 1) * h);
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = objective(c), fd = objective(d);
    while (b - a > 1e-15) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = objective(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = objective(d);
        }
        if (c >= d) break;
    }
    double s = 0.5 * (a + b);
    return {std::exp(objective(s)), s};
}

double rho_add(double f, double g, double temperature) {
    if (!(f > 0.0 && f <= 1.0) || !(g > 0.0 && g <= 1.0))
        throw DomainError("rho_add: values must lie in (0,1]");
    if (!(temperature >= 0.0)) throw DomainError("rho_add: temperature must be non-negative");
    const double hi = std::max(f, g), lo = std::min(f, g);
    if (temperature == 0.0) return hi;
    // hi * (1 + (lo/hi)^beta)^T, stable for large beta
    const double ratio = std::pow(lo / hi, 1.0 / temperature);
    return hi * std::pow(1.0 + ratio, temperature);
}

std::vector<double> rho_add(std::span<const double> f, std::span<const double> g,
                            std::span<const double> temperature) {
    if (f.size() != g.size() || f.size() != temperature.size())
        throw DomainError("rho_add: sample sizes differ");
    std::vector<double> out(f.size());
    for (std::size_t k = 0; k < f.size(); ++k) out[k] = rho_add(f[k], g[k], temperature[k]);
    return out;
}

}  // namespace char1
