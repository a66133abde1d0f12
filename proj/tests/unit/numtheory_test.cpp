#include "frobspec/numtheory.hpp"
#include "frobspec/errors.hpp"

#include "doctest.h"

using namespace frobspec;

TEST_CASE("divisors come back sorted and complete") {
    CHECK(divisors(1) == std::vector<std::uint64_t>{1});
    CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(49) == std::vector<std::uint64_t>{1, 7, 49});
}

TEST_CASE("prime factorization") {
    CHECK(prime_factors(360) == std::vector<std::uint64_t>{2, 3, 5});
    CHECK(prime_factors(1).empty());
    CHECK(prime_factors(97) == std::vector<std::uint64_t>{97});
}

TEST_CASE("prime power divisors exclude 1") {
    CHECK(prime_power_divisors(12) == std::vector<std::uint64_t>{2, 3, 4});
    CHECK(prime_power_divisors(1).empty());
    CHECK(prime_power_divisors(36) == std::vector<std::uint64_t>{2, 3, 4, 9});
}

TEST_CASE("smallest prime is empty only for 1") {
    CHECK_FALSE(smallest_prime(1).has_value());
    CHECK(smallest_prime(2) == 2);
    CHECK(smallest_prime(15) == 3);
    CHECK(smallest_prime(77) == 7);
}

TEST_CASE("p_part splits out the full prime power") {
    auto [pk, m] = p_part(48, 2);
    CHECK(pk == 16);
    CHECK(m == 4);
    auto [pk3, m3] = p_part(48, 3);
    CHECK(pk3 == 3);
    CHECK(m3 == 1);
    auto [pk5, m5] = p_part(48, 5);
    CHECK(pk5 == 1);
    CHECK(m5 == 0);
    CHECK_THROWS_AS(p_part(0, 2), DomainError);
}

TEST_CASE("checked arithmetic") {
    CHECK(checked_lcm(4, 6) == 12);
    CHECK(checked_lcm(1, 1) == 1);
    CHECK(ipow(3, 4) == 81);
    CHECK(ipow(2, 62) == (1ull << 62));
    CHECK_THROWS_AS(ipow(10, 30), DomainError);
}

TEST_CASE("powmod and multiplicative order") {
    CHECK(powmod(2, 10, 1000) == 24);
    CHECK(multiplicative_order(2, 7) == 3);
    CHECK(multiplicative_order(3, 7) == 6);
    CHECK(powmod(3, multiplicative_order(3, 1000003), 1000003) == 1);
}

TEST_CASE("primality on small values") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
    CHECK(is_prime(499));
}
