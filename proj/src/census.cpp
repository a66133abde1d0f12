#include "frobspec/census.hpp"

#include "frobspec/errors.hpp"
#include "frobspec/numtheory.hpp"

#include <algorithm>

namespace frobspec {

OrderCensus order_census(const FiniteGroup& g) {
    OrderCensus c;
    for (std::size_t i = 0; i < g.order(); ++i)
        ++c[g.order_of(i)];
    return c;
}

std::uint64_t exponent(const OrderCensus& c) {
    std::uint64_t e = 1;
    for (const auto& [o, cnt] : c) {
        (void)cnt;
        e = checked_lcm(e, o);
    }
    return e;
}

std::uint64_t exponent(const FiniteGroup& g) {
    return exponent(order_census(g));
}

std::uint64_t count_solutions(const OrderCensus& c, std::uint64_t n) {
    if (n == 0) throw DomainError("count_solutions: n must be >= 1");
    std::uint64_t total = 0;
    for (const auto& [o, cnt] : c)
        if (n % o == 0) total += cnt;
    return total;
}

std::uint64_t count_solutions(const FiniteGroup& g, std::uint64_t n) {
    return count_solutions(order_census(g), n);
}

std::uint64_t frobenius_quotient(const FiniteGroup& g, std::uint64_t n) {
    if (n == 0 || g.order() % n != 0)
        throw DomainError("frobenius_quotient: n must divide the group order");
    std::uint64_t cnt = count_solutions(g, n);
    if (cnt % n != 0)
        throw InternalError("divisibility failed at n = " + std::to_string(n));
    return cnt / n;
}

FrobeniusReport report_from_census(const OrderCensus& c, std::uint64_t order) {
    FrobeniusReport r;
    r.order = order;
    r.exponent = exponent(c);
    r.smallest_prime = smallest_prime(order);

    for (std::uint64_t n : divisors(order)) {
        std::uint64_t cnt = count_solutions(c, n);
        if (cnt % n != 0)
            throw InternalError("divisibility failed at n = " + std::to_string(n));
        r.table.push_back({n, cnt, cnt / n});
    }

    auto quot_at = [&r](std::uint64_t n) {
        auto it = std::lower_bound(r.table.begin(), r.table.end(), n,
                                   [](const FrobeniusRow& row, std::uint64_t v) { return row.n < v; });
        if (it == r.table.end() || it->n != n)
            throw InternalError("missing table row for n = " + std::to_string(n));
        return it->fn_quot;
    };

    std::vector<std::uint64_t> full, even, pp, over_exp;
    for (const auto& row : r.table) {
        full.push_back(row.fn_quot);
        if (row.n % 2 == 0) even.push_back(row.fn_quot);
    }
    for (std::uint64_t n : prime_power_divisors(r.exponent))
        pp.push_back(quot_at(n)); // prime powers dividing exp divide |G| too
    for (std::uint64_t n : divisors(r.exponent))
        over_exp.push_back(quot_at(n));

    auto dedup = [](std::vector<std::uint64_t>& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    dedup(full);
    dedup(even);
    dedup(pp);

    r.full = full;
    r.even = even;
    r.pp = pp;
    r.mf = full.back(); // the divisor n=1 always contributes, so never empty
    if (!even.empty()) r.mfe = even.back();
    r.mf_pp = pp.empty() ? 1 : pp.back();
    r.b = *std::max_element(over_exp.begin(), over_exp.end());
    return r;
}

FrobeniusReport full_report(const FiniteGroup& g) {
    return report_from_census(order_census(g), g.order());
}

} // namespace frobspec
