#pragma once

#include "frobspec/group.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace frobspec {

/// Element order -> number of elements of that order. A sufficient statistic
/// for every solution count below.
using OrderCensus = std::map<std::uint64_t, std::uint64_t>;

OrderCensus order_census(const FiniteGroup& g);

/// lcm of all element orders; divides |G|.
std::uint64_t exponent(const FiniteGroup& g);
std::uint64_t exponent(const OrderCensus& c);

/// |{g : g^n = 1}| for any n >= 1 (equals the count at gcd(n, exp G)).
std::uint64_t count_solutions(const FiniteGroup& g, std::uint64_t n);
std::uint64_t count_solutions(const OrderCensus& c, std::uint64_t n);

/// f_n = |{g : g^n = 1}| / n. Requires n | |G|; the division being exact for
/// such n is a theorem, so a remainder raises InternalError.
std::uint64_t frobenius_quotient(const FiniteGroup& g, std::uint64_t n);

struct FrobeniusRow {
    std::uint64_t n = 1;        // divisor of |G|
    std::uint64_t fn_count = 1; // |{g : g^n = 1}|
    std::uint64_t fn_quot = 1;  // fn_count / n
};

/// Solution counts, quotients, the three quotient spectra and their maxima.
struct FrobeniusReport {
    std::uint64_t order = 1;
    std::uint64_t exponent = 1;
    std::optional<std::uint64_t> smallest_prime; // empty for the trivial group
    std::vector<FrobeniusRow> table;             // one row per divisor of |G|, ascending

    // Distinct quotient values, ascending: over all divisors of |G|, over the
    // even divisors, and over the prime-power divisors of the exponent.
    std::vector<std::uint64_t> full;
    std::vector<std::uint64_t> even;
    std::vector<std::uint64_t> pp;

    std::uint64_t mf = 1;               // max over `full`
    std::optional<std::uint64_t> mfe;   // max over `even`; empty when |G| is odd
    std::uint64_t mf_pp = 1;            // max over `pp`; 1 for the trivial group by convention
    std::uint64_t b = 1;                // max quotient over divisors of the exponent
};

FrobeniusReport full_report(const FiniteGroup& g);
FrobeniusReport report_from_census(const OrderCensus& c, std::uint64_t order);

} // namespace frobspec
