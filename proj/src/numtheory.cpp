#include "char1/numtheory.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "char1/errors.hpp"

namespace char1::nt {

std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
    if (n < 1) throw DomainError("factorize: n must be positive");
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::int64_t euler_phi(std::int64_t n) {
    std::int64_t r = n;
    for (auto [p, e] : factorize(n)) r = r / p * (p - 1);
    return r;
}

int mobius(std::int64_t n) {
    int sign = 1;
    for (auto [p, e] : factorize(n)) {
        if (e > 1) return 0;
        sign = -sign;
    }
    return sign;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    if (n < 1) throw DomainError("divisors: n must be positive");
    std::vector<std::int64_t> lo, hi;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        lo.push_back(d);
        if (d != n / d) hi.push_back(n / d);
    }
    lo.insert(lo.end(), hi.rbegin(), hi.rend());
    return lo;
}

std::pair<std::int64_t, int> prime_power(std::int64_t n) {
    if (n < 2) return {0, 0};
    auto f = factorize(n);
    if (f.size() != 1) return {0, 0};
    return f.front();
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    unsigned __int128 result = 1 % m;
    unsigned __int128 b = base % m;
    while (exp) {
        if (exp & 1) result = result * b % m;
        b = b * b % m;
        exp >>= 1;
    }
    return static_cast<std::uint64_t>(result);
}

int legendre(std::int64_t a, std::int64_t p) {
    if (p < 3 || !is_prime(p)) throw DomainError("legendre: p must be an odd prime");
    auto r = static_cast<std::uint64_t>(mod(a, p));
    if (r == 0) return 0;
    auto e = pow_mod(r, static_cast<std::uint64_t>((p - 1) / 2), static_cast<std::uint64_t>(p));
    return e == 1 ? 1 : -1;
}

std::vector<std::int32_t> spf_sieve(std::int64_t n) {
    std::vector<std::int32_t> spf(static_cast<std::size_t>(n + 1), 0);
    for (std::int64_t i = 2; i <= n; ++i) {
        if (spf[i] != 0) continue;
        for (std::int64_t j = i; j <= n; j += i)
            if (spf[j] == 0) spf[j] = static_cast<std::int32_t>(i);
    }
    return spf;
}

std::int64_t ipow(std::int64_t base, int exp) {
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

}  // namespace char1::nt
