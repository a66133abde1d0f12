#include "frobspec/sylow.hpp"

#include "frobspec/census.hpp"
#include "frobspec/errors.hpp"
#include "frobspec/numtheory.hpp"

#include <algorithm>
#include <set>

namespace frobspec {
namespace {

bool is_p_element(const FiniteGroup& g, std::size_t i, std::uint64_t pm) {
    std::uint64_t o = g.order_of(i);
    return o > 1 && pm % o == 0;
}

} // namespace

std::vector<std::size_t> sylow_subgroup(const FiniteGroup& g, std::uint64_t p) {
    if (!is_prime(p)) throw DomainError("sylow: p must be prime");
    auto [pm, m] = p_part(g.order(), p);
    if (m == 0) throw DomainError("sylow: p does not divide the group order");

    // Seed with the first p-element of maximal order.
    std::uint64_t best = 1;
    for (std::size_t i = 0; i < g.order(); ++i)
        if (is_p_element(g, i, pm)) best = std::max(best, g.order_of(i));
    std::vector<std::size_t> members{0};
    for (std::size_t i = 0; i < g.order(); ++i)
        if (g.order_of(i) == best && is_p_element(g, i, pm)) {
            members = subgroup_closure(g, {i});
            break;
        }

    // Ascend: a p-element normalizing P but outside it always enlarges P,
    // because a non-Sylow p-subgroup is proper in the p-part of its normalizer.
    while (members.size() < pm) {
        std::vector<std::size_t> nz = normalizer(g, members);
        bool grew = false;
        for (std::size_t x : nz) {
            if (!is_p_element(g, x, pm)) continue;
            if (std::binary_search(members.begin(), members.end(), x)) continue;
            std::vector<std::size_t> seed = members;
            seed.push_back(x);
            members = subgroup_closure(g, seed);
            grew = true;
            break;
        }
        if (!grew) throw InternalError("sylow ascent stalled");
    }
    return members;
}

SylowInfo sylow_count(const FiniteGroup& g, std::uint64_t p) {
    SylowInfo info;
    info.prime = p;
    info.members = sylow_subgroup(g, p);
    auto [pm, m] = p_part(g.order(), p);
    info.m = m;
    info.order = pm;
    if (info.members.size() != pm)
        throw InternalError("sylow subgroup has wrong order");

    std::vector<std::size_t> nz = normalizer(g, info.members);
    info.count = g.order() / nz.size();
    info.is_normal = info.count == 1;
    info.is_cyclic = std::any_of(info.members.begin(), info.members.end(),
                                 [&](std::size_t i) { return g.order_of(i) == pm; });

    if (info.count % p != 1)
        throw InternalError("sylow count fails t = 1 mod p");
    if ((g.order() / pm) % info.count != 0)
        throw InternalError("sylow count does not divide the coprime part");

    if (g.order() <= 2000) {
        // Enumerate the conjugates explicitly and confirm both the count and
        // that together they cover every p-element.
        std::set<std::vector<std::size_t>> conjugates;
        std::vector<bool> covered(g.order(), false);
        for (std::size_t x = 0; x < g.order(); ++x) {
            std::size_t xinv = g.inverse_of(x);
            std::vector<std::size_t> conj;
            conj.reserve(info.members.size());
            for (std::size_t s : info.members)
                conj.push_back(g.product(g.product(x, s), xinv));
            std::sort(conj.begin(), conj.end());
            for (std::size_t s : conj) covered[s] = true;
            conjugates.insert(std::move(conj));
        }
        if (conjugates.size() != info.count)
            throw InternalError("conjugate enumeration disagrees with the normalizer index");
        for (std::size_t i = 0; i < g.order(); ++i)
            if (is_p_element(g, i, pm) && !covered[i])
                throw InternalError("a p-element escapes every Sylow conjugate");
    }
    return info;
}

std::uint64_t cyclic_sylow_lower_bound(std::uint64_t q, std::uint32_t m, std::uint64_t t) {
    if (!is_prime(q)) throw DomainError("bound: q must be prime");
    if (m < 1 || t < 1) throw DomainError("bound: m and t must be >= 1");
    std::uint64_t qm = ipow(q, m);
    return qm + (t - 1) * (qm - qm / q);
}

BoundCheck check_cyclic_sylow_bound(const FiniteGroup& g, std::uint64_t q) {
    SylowInfo info = sylow_count(g, q);
    BoundCheck out;
    out.prime = q;
    out.m = info.m;
    out.sylow_order = info.order;
    out.count = info.count;
    out.actual = count_solutions(g, info.order);
    if (!info.is_cyclic) return out; // applicable stays false, ok stays true
    out.applicable = true;
    out.bound = cyclic_sylow_lower_bound(q, info.m, info.count);
    out.ok = out.actual >= out.bound;
    out.tight = out.actual == out.bound;
    return out;
}

} // namespace frobspec
