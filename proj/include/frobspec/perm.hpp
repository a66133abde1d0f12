#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace frobspec {

/// A permutation of {0, ..., degree-1}, stored as its image vector.
/// Value type; two permutations compare equal iff degrees and images match.
class Permutation {
public:
    Permutation() = default;

    static Permutation identity(std::size_t degree);

    /// Validates that `images` is a bijection on {0, ..., images.size()-1}.
    static Permutation from_images(std::vector<std::uint32_t> images);

    /// Builds from cycles of 0-based points. Cycles must be pairwise disjoint
    /// and stay below `degree`; unlisted points are fixed.
    static Permutation from_cycles(std::size_t degree,
                                   const std::vector<std::vector<std::uint32_t>>& cycles);

    /// No validation; caller guarantees a bijection. Internal fast path.
    static Permutation raw(std::vector<std::uint32_t> images);

    std::size_t degree() const noexcept { return img_.size(); }
    std::uint32_t operator[](std::size_t i) const { return img_[i]; }
    const std::vector<std::uint32_t>& images() const noexcept { return img_; }
    bool is_identity() const noexcept;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<std::uint32_t> img_;
};

/// result[i] = p[q[i]]; q is applied first. Degrees must match.
Permutation compose(const Permutation& p, const Permutation& q);

/// Allocation-free variant for hot loops; `out` may not alias p or q.
void compose_into(const Permutation& p, const Permutation& q, std::vector<std::uint32_t>& out);

Permutation inverse(const Permutation& p);

/// p^e by binary powering; e = 0 gives the identity.
Permutation power(const Permutation& p, std::uint64_t e);

/// Least k >= 1 with p^k = identity; the lcm of the cycle lengths.
std::uint64_t element_order(const Permutation& p);

/// Nontrivial cycles, each starting at its smallest point, ordered by that point.
std::vector<std::vector<std::uint32_t>> cycles(const Permutation& p);

/// Canonical cycle notation, fixed points omitted; identity renders as "()".
std::string cycle_string(const Permutation& p);

struct PermHash {
    std::size_t operator()(const Permutation& p) const noexcept;
};

} // namespace frobspec
