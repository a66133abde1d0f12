#pragma once

#include "frobspec/group.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace frobspec {

enum class QShape { Cyclic, AbelianPair, Q8, Modular2, ModularOdd, Other };
enum class CaseTag { None, Case1, Case2 };

std::string to_string(QShape tag);
std::string to_string(CaseTag tag);

struct PGroupShape {
    QShape tag = QShape::Other;
    std::uint64_t q = 0;
    std::uint32_t m = 0;                // the group has order q^m
    std::vector<Permutation> witnesses; // generators realizing the presentation
};

/// Which of the five recognized prime-power shapes a q-group has: cyclic;
/// Z_{q^(m-1)} x Z_q (m >= 2); the order-8 quaternion group; the modular
/// group <a, b | a^(q^(m-1)) = b^q = 1, b^-1 a b = a^(1+q^(m-2))> with m >= 4
/// for q = 2 and m >= 3 for odd q; otherwise Other. Witnesses are re-checked
/// against the presentation on every accept. Requires |Q| to be a power of q.
PGroupShape recognize_p_group_shape(const FiniteGroup& qgroup, std::uint64_t q);

struct QPrimePart {
    std::vector<std::size_t> members; // sorted ambient indices
    bool cyclic = false;
};

/// The set of elements with order coprime to q, returned iff it is closed
/// under the group operation (i.e. forms a subgroup).
std::optional<QPrimePart> qprime_part(const FiniteGroup& g, std::uint64_t q);

struct Verdict {
    bool in_class = false;
    CaseTag case_tag = CaseTag::None;
    std::optional<std::uint64_t> q;   // smallest prime of |G|; empty for |G| = 1
    std::optional<PGroupShape> shape; // Case1 only
    std::uint32_t m = 0;              // Case1: |Q| = q^m; Case2: a has order 2^m
    std::uint64_t cyclic_part = 1;    // |R| (Case1) or |T| (Case2)
    std::vector<Permutation> witnesses;
    std::string reason;
};

/// Structural recognizer, independent of any quotient computation.
/// Case1: G = Q x R where the q-elements form a subgroup Q of full q-part
/// order with a recognized shape, the q'-elements form a cyclic subgroup R,
/// and the two parts commute elementwise. Case2: q = 2 and G = H x T where
/// H = <a, b | a^(2^m) = b^3 = 1, a^-1 b a = b^-1> and T is cyclic of order
/// coprime to 6. The trivial group is Case1 with Q = R = 1.
Verdict classify_group(const FiniteGroup& g);

/// First pair (a, b), a from `as` and b from `bs`, scanned in the given
/// order, satisfying the relation. The search engine behind the recognizers.
std::optional<std::pair<std::size_t, std::size_t>> find_witness_pair(
    const FiniteGroup& g, const std::vector<std::size_t>& as,
    const std::vector<std::size_t>& bs,
    const std::function<bool(std::size_t, std::size_t)>& relation);

/// Exact isomorphism test for groups of order <= bound. Invariant screens
/// (order census, abelianness, center size, conjugacy class sizes) first,
/// then backtracking over generator images with incremental closure
/// consistency checks. Throws DomainError above the bound.
bool is_isomorphic_small(const FiniteGroup& a, const FiniteGroup& b,
                         std::size_t bound = 256);

} // namespace frobspec
