#include "frobspec/numtheory.hpp"

#include <algorithm>
#include <numeric>

#include "frobspec/errors.hpp"

namespace frobspec {

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    if (n == 0) throw DomainError("divisors: n must be >= 1");
    std::vector<std::uint64_t> lo, hi;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            lo.push_back(d);
            if (d != n / d) hi.push_back(n / d);
        }
    }
    lo.insert(lo.end(), hi.rbegin(), hi.rend());
    return lo;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::vector<std::uint64_t> prime_power_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p : prime_factors(n)) {
        for (std::uint64_t pk = p; n % pk == 0; pk *= p) {
            out.push_back(pk);
            if (pk > n / p) break; // next pk would overflow past n anyway
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<std::uint64_t> smallest_prime(std::uint64_t n) {
    if (n <= 1) return std::nullopt;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return d;
    return n;
}

bool is_prime(std::uint64_t n) {
    auto p = smallest_prime(n);
    return p && *p == n;
}

std::uint64_t ipow(std::uint64_t p, std::uint32_t m) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        if (p != 0 && r > UINT64_MAX / p) throw DomainError("ipow: overflow");
        r *= p;
    }
    return r;
}

std::uint64_t powmod(std::uint64_t k, std::uint64_t e, std::uint64_t n) {
    if (n == 0) throw DomainError("powmod: modulus must be >= 1");
    if (n == 1) return 0;
    __uint128_t r = 1, b = k % n;
    while (e) {
        if (e & 1) r = r * b % n;
        b = b * b % n;
        e >>= 1;
    }
    return static_cast<std::uint64_t>(r);
}

std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) throw DomainError("lcm of zero");
    std::uint64_t g = std::gcd(a, b);
    std::uint64_t q = a / g;
    if (q > UINT64_MAX / b) throw DomainError("lcm overflow");
    return q * b;
}

std::pair<std::uint64_t, std::uint32_t> p_part(std::uint64_t n, std::uint64_t p) {
    if (p < 2) throw DomainError("p_part: p must be >= 2");
    if (n == 0) throw DomainError("p_part: n must be >= 1");
    std::uint64_t pm = 1;
    std::uint32_t m = 0;
    while (n % p == 0) {
        pm *= p;
        n /= p;
        ++m;
    }
    return {pm, m};
}

std::uint64_t multiplicative_order(std::uint64_t k, std::uint64_t n) {
    if (n == 0) throw DomainError("multiplicative_order: modulus must be >= 1");
    if (n == 1) return 1;
    if (std::gcd(k % n, n) != 1) throw DomainError("multiplicative_order: k not a unit");
    std::uint64_t o = 1, v = k % n;
    while (v != 1) {
        v = static_cast<std::uint64_t>(static_cast<__uint128_t>(v) * (k % n) % n);
        ++o;
    }
    return o;
}

} // namespace frobspec
