#pragma once

#include "frobspec/perm.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace frobspec {

inline constexpr std::size_t kDefaultOrderCap = 10000;

/// A finite permutation group, materialized as its full element list.
/// Element 0 is always the identity. Orders and inverse indices are
/// precomputed so the scan loops never re-derive them.
class FiniteGroup {
public:
    /// BFS closure of the generators from the identity, visiting children in
    /// generator order. Throws OrderCapError if more than `cap` elements
    /// appear. Generators must share one degree; an empty list gives the
    /// trivial group of that degree (degree 1 if none given).
    static FiniteGroup generate(const std::vector<Permutation>& generators,
                                std::size_t cap = kDefaultOrderCap);

    /// Same, with the degree stated explicitly so a generator-free spec like
    /// "perm:3:" keeps acting on the right number of points.
    static FiniteGroup generate(std::size_t degree,
                                const std::vector<Permutation>& generators,
                                std::size_t cap = kDefaultOrderCap);

    std::size_t order() const noexcept { return elems_.size(); }
    std::size_t degree() const noexcept { return degree_; }
    const Permutation& element(std::size_t i) const { return elems_[i]; }
    const std::vector<Permutation>& elements() const noexcept { return elems_; }
    const std::vector<Permutation>& generators() const noexcept { return gens_; }

    /// Index of g in the element list; throws DomainError if g is not a member.
    std::size_t index_of(const Permutation& g) const;
    bool contains(const Permutation& g) const;

    std::uint64_t order_of(std::size_t i) const { return orders_[i]; }
    std::size_t inverse_of(std::size_t i) const { return inv_[i]; }
    /// Index of element(i) * element(j) (j applied first).
    std::size_t product(std::size_t i, std::size_t j) const;

    bool is_abelian() const;

private:
    std::size_t degree_ = 1;
    std::vector<Permutation> gens_;
    std::vector<Permutation> elems_;
    std::unordered_map<Permutation, std::size_t, PermHash> index_;
    std::vector<std::uint64_t> orders_;
    std::vector<std::size_t> inv_;
    mutable int abelian_ = -1; // lazy tristate
};

/// Closure of `seed` inside G, as sorted element indices. The seed elements
/// must belong to G; the result always contains the identity.
std::vector<std::size_t> subgroup_closure(const FiniteGroup& g,
                                          const std::vector<std::size_t>& seed);

/// True if the sorted index set `members` is closed under product and inverse.
bool is_subgroup(const FiniteGroup& g, const std::vector<std::size_t>& members);

/// A small generating set for the subgroup given by sorted indices `members`,
/// found greedily: repeatedly adjoin an element not yet generated.
std::vector<std::size_t> small_generating_set(const FiniteGroup& g,
                                              const std::vector<std::size_t>& members);

/// Normalizer of the subgroup `members` (sorted indices) in G.
/// Conjugation is tested on a small generating set of the subgroup only.
std::vector<std::size_t> normalizer(const FiniteGroup& g,
                                    const std::vector<std::size_t>& members);

/// Size of the conjugacy class of each element, indexed like the elements.
std::vector<std::size_t> conjugacy_class_sizes(const FiniteGroup& g);

/// Number of elements commuting with the whole group.
std::size_t center_size(const FiniteGroup& g);

} // namespace frobspec
