#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace frobspec {

/// Ascending list of all divisors of n (n >= 1).
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Ascending list of the distinct prime divisors of n.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Every prime power p^k (k >= 1) dividing n, ascending. 12 -> {2, 3, 4}.
std::vector<std::uint64_t> prime_power_divisors(std::uint64_t n);

/// Smallest prime divisor, or nullopt for n = 1.
std::optional<std::uint64_t> smallest_prime(std::uint64_t n);

bool is_prime(std::uint64_t n);

/// p^m with the usual convention p^0 = 1. Throws on overflow.
std::uint64_t ipow(std::uint64_t p, std::uint32_t m);

/// k^e mod n (n >= 1).
std::uint64_t powmod(std::uint64_t k, std::uint64_t e, std::uint64_t n);

/// lcm that refuses to overflow silently.
std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b);

/// Largest power of p dividing n, returned as (p^m, m).
std::pair<std::uint64_t, std::uint32_t> p_part(std::uint64_t n, std::uint64_t p);

/// Multiplicative order of k mod n; requires gcd(k, n) = 1.
std::uint64_t multiplicative_order(std::uint64_t k, std::uint64_t n);

} // namespace frobspec
