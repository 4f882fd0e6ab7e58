#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace char1::nt {

std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t lcm(std::int64_t a, std::int64_t b);
std::int64_t euler_phi(std::int64_t n);
int mobius(std::int64_t n);
bool is_prime(std::int64_t n);

/// Sorted divisors of n >= 1.
std::vector<std::int64_t> divisors(std::int64_t n);

/// Prime factorization as (prime, exponent) pairs in increasing order.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

/// If n = p^l with p prime and l >= 1 returns (p, l); otherwise (0, 0).
std::pair<std::int64_t, int> prime_power(std::int64_t n);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

/// Legendre symbol (a|p) for an odd prime p via Euler's criterion. Returns -1, 0 or 1.
int legendre(std::int64_t a, std::int64_t p);

/// Non-negative residue of a modulo m > 0.
inline std::int64_t mod(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

/// Smallest-prime-factor sieve on [0, n].
std::vector<std::int32_t> spf_sieve(std::int64_t n);

std::int64_t ipow(std::int64_t base, int exp);

}  // namespace char1::nt
