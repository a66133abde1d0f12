#pragma once

#include "frobspec/group.hpp"
#include "frobspec/perm.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace frobspec {

/// Hard ceiling on permutation degree, to keep image vectors allocatable.
inline constexpr std::size_t kMaxDegree = 1u << 20;

/// One factor of a group spec. Kinds mirror the grammar keywords.
enum class TermKind { C, AB, D, SD, M, Q, Q8, B, SDP, Perm };

struct Term {
    TermKind kind;
    std::uint64_t n = 0; // C(n), SDP(n,m,k)
    std::uint64_t q = 0; // AB(q,m), M(q,m)
    std::uint64_t m = 0; // AB, D, SD, M, Q, B, SDP
    std::uint64_t k = 0; // SDP
    std::size_t degree = 0;         // Perm
    std::vector<Permutation> gens;  // Perm
};

/// spec := term ("x" term)*. Whitespace-insensitive. Throws ParseError with
/// the offending offset on bad syntax or out-of-range family parameters.
std::vector<Term> parse_spec(const std::string& text);

/// A degree plus generating permutations: what a term denotes before closure.
struct PermRep {
    std::size_t degree = 1;
    std::vector<Permutation> gens;
};

/// Z_n as an n-cycle (no generators for n = 1).
PermRep cyclic_rep(std::uint64_t n);

/// Z_n semidirect Z_m where the actor sends the base generator to its k-th
/// power. Acts on n+m points: the base cycle, then the actor rotating its own
/// block while multiplying the base block by k. Requires gcd(k, n) = 1 and
/// k^m = 1 mod n.
PermRep sdp_rep(std::uint64_t n, std::uint64_t m, std::uint64_t k);

/// Dicyclic group <a, b | a^N = 1, b^2 = a^(N/2), b a b^-1 = a^-1> via its
/// left-regular representation; N even, N >= 4, order 2N.
PermRep dicyclic_rep(std::uint64_t big_n);

/// A and B acting on disjoint point blocks.
PermRep direct_product(const PermRep& a, const PermRep& b);

PermRep term_rep(const Term& t);
PermRep spec_rep(const std::vector<Term>& terms);

/// Materializes the spec. Rejects specs whose denoted order already exceeds
/// `cap` before allocating anything.
FiniteGroup build(const std::vector<Term>& terms, std::size_t cap = kDefaultOrderCap);
FiniteGroup build_spec(const std::string& text, std::size_t cap = kDefaultOrderCap);

/// Emits "perm:deg:..." whose parse yields exactly these generators, inserting
/// a redundant product generator wherever two consecutive generators have
/// disjoint support (the cycle-list grammar would otherwise merge them).
/// Identity generators are dropped; they do not affect the group.
std::string render_perm_spec(std::size_t degree, const std::vector<Permutation>& gens);

/// Dihedral group of order 2n (n >= 3) as a spec string. The D(m) family in
/// the grammar only covers the 2-power orders; this covers the rest.
std::string dihedral_spec(std::uint64_t n);

} // namespace frobspec
