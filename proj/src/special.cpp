#include "char1/special.hpp"

#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "char1/errors.hpp"

namespace char1 {

namespace {

constexpr double pi = std::numbers::pi;

constexpr std::array<double, 9> lanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

// B_{2j} / (2j)!
constexpr std::array<double, 12> bernoulli_over_factorial = {
    0.083333333333333329,    -0.0013888888888888889,  3.3068783068783071e-05,
    -8.2671957671957675e-07, 2.08767569878681e-08,    -5.2841901386874932e-10,
    1.3382536530684679e-11,  -3.3896802963225827e-13, 8.5860620562778452e-15,
    -2.1748686985580619e-16, 5.5090028283602295e-18,  -1.3954464685812522e-19};

cplx f_direct(cplx s, double a, int terms) {
    // e^(-i pi s/2) a^s Gamma(-s)
    const cplx head = std::exp(cplx(0, -pi / 2) * s + s * std::log(a)) * gamma(-s);
    const cplx ia(0, a);
    cplx power = 1.0;  // (ia)^n / n!
    cplx sum = 0;
    double last = 0;
    for (int n = 0; n < terms; ++n) {
        if (n > 0) power *= ia / static_cast<double>(n);
        const cplx term = power / (s - static_cast<double>(n));
        sum += term;
        last = std::abs(power);
        if (n > a && last < 1e-18 * std::max(1.0, std::abs(sum))) return head + sum;
    }
    throw AccuracyError("f_entire: series not converged in " + std::to_string(terms) + " terms (last term " +
                        std::to_string(last) + ")");
}

}  // namespace

cplx gamma(cplx z) {
    if (z.imag() == 0 && z.real() <= 0 && z.real() == std::floor(z.real()))
        throw DomainError("gamma: pole at a non-positive integer");
    if (z.real() < 0.5) return pi / (std::sin(pi * z) * gamma(1.0 - z));
    z -= 1.0;
    cplx x = lanczos[0];
    for (std::size_t i = 1; i < lanczos.size(); ++i) x += lanczos[i] / (z + static_cast<double>(i));
    const cplx t = z + 7.5;
    return std::sqrt(2 * pi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

cplx hurwitz_zeta(cplx w, double alpha) {
    if (!(alpha > 0 && alpha <= 1)) throw DomainError("hurwitz_zeta: alpha must lie in (0, 1]");
    if (w == cplx(1, 0)) throw DomainError("hurwitz_zeta: pole at w = 1");
    const int M = 40;
    cplx sum = 0;
    for (int k = 0; k < M; ++k) sum += std::exp(-w * std::log(k + alpha));
    const double x = M + alpha;
    const double lx = std::log(x);
    sum += std::exp((1.0 - w) * lx) / (w - 1.0);
    sum += 0.5 * std::exp(-w * lx);
    // sum_j B_2j/(2j)! (w)_(2j-1) x^(-w-2j+1)
    cplx rising = w;  // (w)_1
    cplx xpow = std::exp(-(w + 1.0) * lx);
    for (std::size_t j = 0; j < bernoulli_over_factorial.size(); ++j) {
        sum += bernoulli_over_factorial[j] * rising * xpow;
        const double k = 2.0 * static_cast<double>(j) + 1;
        rising *= (w + k) * (w + k + 1.0);
        xpow /= x * x;
    }
    return sum;
}

const GaussRule& gauss_legendre(int n) {
    static std::mutex mutex;
    static std::map<int, GaussRule> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    if (n < 1) throw DomainError("gauss_legendre: n must be positive");
    GaussRule r;
    r.nodes.resize(static_cast<std::size_t>(n));
    r.weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double dp = 0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            if (n == 1) p1 = x, p0 = 1;
            dp = n * (x * p1 - p0) / (x * x - 1);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        r.nodes[static_cast<std::size_t>(i)] = x;
        r.weights[static_cast<std::size_t>(i)] = 2 / ((1 - x * x) * dp * dp);
    }
    return cache.emplace(n, std::move(r)).first->second;
}

cplx f_entire(cplx s, double a, int terms) {
    if (!(a > 0)) throw DomainError("f_entire: a must be positive");
    const double n0 = std::round(s.real());
    if (n0 >= 0 && std::abs(s - n0) < 1e-3) {
        // mean value over a circle around s; both parts are regular there
        constexpr int points = 32;
        constexpr double radius = 0.01;
        cplx sum = 0;
        for (int j = 0; j < points; ++j) sum += f_direct(s + std::polar(radius, 2 * pi * (j + 0.5) / points), a, terms);
        return sum / static_cast<double>(points);
    }
    return f_direct(s, a, terms);
}

}  // namespace char1
