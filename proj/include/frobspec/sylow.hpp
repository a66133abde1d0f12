#pragma once

#include "frobspec/group.hpp"

#include <cstdint>
#include <vector>

namespace frobspec {

struct SylowInfo {
    std::uint64_t prime = 0;
    std::uint32_t m = 0;                // p^m is the full p-part of |G|
    std::uint64_t order = 1;            // p^m
    std::vector<std::size_t> members;   // one Sylow p-subgroup, sorted ambient indices
    std::uint64_t count = 1;            // t, the number of Sylow p-subgroups
    bool is_cyclic = false;
    bool is_normal = false;             // t == 1
};

/// One Sylow p-subgroup, found by greedy normalizer ascent from a p-element
/// of maximal order. Deterministic: ties break by element index.
std::vector<std::size_t> sylow_subgroup(const FiniteGroup& g, std::uint64_t p);

/// Full Sylow data. t = |G : N(P)|; for |G| <= 2000 the result is
/// cross-checked by enumerating the conjugates and confirming they cover
/// every p-element. Throws DomainError when p does not divide |G|.
SylowInfo sylow_count(const FiniteGroup& g, std::uint64_t p);

/// q^m + (t-1)(q^m - q^(m-1)): the lower bound for the number of solutions of
/// g^(q^m) = 1 in a group with t Sylow q-subgroups, all cyclic of order q^m.
std::uint64_t cyclic_sylow_lower_bound(std::uint64_t q, std::uint32_t m, std::uint64_t t);

struct BoundCheck {
    bool applicable = false;    // false when the Sylow subgroup is not cyclic
    std::uint64_t prime = 0;
    std::uint32_t m = 0;
    std::uint64_t sylow_order = 1;
    std::uint64_t count = 1;    // t
    std::uint64_t bound = 0;
    std::uint64_t actual = 0;   // |{g : g^(q^m) = 1}|
    bool ok = true;             // actual >= bound whenever applicable
    bool tight = false;         // actual == bound
};

/// Evaluates the cyclic-Sylow lower bound against the exact solution count.
/// Inapplicability (non-cyclic Sylow subgroup) is a result, not an error.
BoundCheck check_cyclic_sylow_bound(const FiniteGroup& g, std::uint64_t q);

} // namespace frobspec
