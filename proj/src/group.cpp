#include "frobspec/group.hpp"

#include "frobspec/errors.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace frobspec {

FiniteGroup FiniteGroup::generate(const std::vector<Permutation>& generators,
                                  std::size_t cap) {
    return generate(generators.empty() ? 1 : generators.front().degree(),
                    generators, cap);
}

FiniteGroup FiniteGroup::generate(std::size_t degree,
                                  const std::vector<Permutation>& generators,
                                  std::size_t cap) {
    FiniteGroup g;
    g.gens_ = generators;
    g.degree_ = degree;
    for (const auto& p : generators)
        if (p.degree() != g.degree_)
            throw DomainError("generators have mixed degrees");

    Permutation id = Permutation::identity(g.degree_);
    g.elems_.push_back(id);
    g.index_.emplace(id, 0);

    // Plain BFS; the frontier is just an index into elems_ since we only append.
    std::vector<std::uint32_t> scratch;
    for (std::size_t head = 0; head < g.elems_.size(); ++head) {
        for (const auto& gen : g.gens_) {
            compose_into(g.elems_[head], gen, scratch);
            Permutation child = Permutation::raw(scratch);
            if (g.index_.find(child) != g.index_.end()) continue;
            if (g.elems_.size() >= cap)
                throw OrderCapError(cap, g.elems_.size());
            g.index_.emplace(child, g.elems_.size());
            g.elems_.push_back(std::move(child));
        }
    }

    g.orders_.reserve(g.elems_.size());
    g.inv_.reserve(g.elems_.size());
    for (const auto& e : g.elems_) {
        g.orders_.push_back(element_order(e));
        g.inv_.push_back(g.index_.at(inverse(e)));
    }
    return g;
}

std::size_t FiniteGroup::index_of(const Permutation& g) const {
    auto it = index_.find(g);
    if (it == index_.end())
        throw DomainError("permutation is not an element of this group");
    return it->second;
}

bool FiniteGroup::contains(const Permutation& g) const {
    return index_.find(g) != index_.end();
}

std::size_t FiniteGroup::product(std::size_t i, std::size_t j) const {
    return index_.at(compose(elems_[i], elems_[j]));
}

bool FiniteGroup::is_abelian() const {
    if (abelian_ < 0) {
        abelian_ = 1;
        // Generators suffice: if they pairwise commute the whole group does.
        for (std::size_t a = 0; a + 1 < gens_.size() && abelian_; ++a)
            for (std::size_t b = a + 1; b < gens_.size(); ++b)
                if (compose(gens_[a], gens_[b]) != compose(gens_[b], gens_[a])) {
                    abelian_ = 0;
                    break;
                }
    }
    return abelian_ == 1;
}

std::vector<std::size_t> subgroup_closure(const FiniteGroup& g,
                                          const std::vector<std::size_t>& seed) {
    // Greedy: seed elements already spanned are skipped, so the generator
    // list stays short and each re-closure is cheap.
    std::vector<std::size_t> gens;
    std::vector<std::size_t> span{0};
    std::unordered_set<std::size_t> have{0};
    for (std::size_t s : seed) {
        if (!have.insert(s).second) continue;
        gens.push_back(s);
        span.push_back(s);
        for (std::size_t head = 0; head < span.size(); ++head) {
            for (std::size_t t : gens) {
                std::size_t next = g.product(span[head], t);
                if (have.insert(next).second) span.push_back(next);
            }
        }
    }
    std::sort(span.begin(), span.end());
    return span;
}

bool is_subgroup(const FiniteGroup& g, const std::vector<std::size_t>& members) {
    if (members.empty()) return false;
    std::unordered_set<std::size_t> set(members.begin(), members.end());
    if (set.find(0) == set.end()) return false;
    for (std::size_t a : members) {
        if (set.find(g.inverse_of(a)) == set.end()) return false;
        for (std::size_t b : members)
            if (set.find(g.product(a, b)) == set.end()) return false;
    }
    return true;
}

std::vector<std::size_t> small_generating_set(const FiniteGroup& g,
                                              const std::vector<std::size_t>& members) {
    std::vector<std::size_t> gens;
    std::vector<std::size_t> span{0};
    std::unordered_set<std::size_t> have(span.begin(), span.end());
    for (std::size_t m : members) {
        if (have.find(m) != have.end()) continue;
        gens.push_back(m);
        // Re-close the span with the new generator.
        std::vector<std::size_t> frontier(span);
        for (std::size_t head = 0; head < frontier.size(); ++head) {
            for (std::size_t s : gens) {
                std::size_t next = g.product(frontier[head], s);
                if (have.insert(next).second) frontier.push_back(next);
            }
        }
        span = std::move(frontier);
        if (span.size() == members.size()) break;
    }
    return gens;
}

std::vector<std::size_t> conjugacy_class_sizes(const FiniteGroup& g) {
    std::size_t n = g.order();
    std::vector<std::size_t> gidx;
    for (const auto& p : g.generators()) gidx.push_back(g.index_of(p));

    std::vector<std::size_t> sizes(n, 0);
    std::vector<char> seen(n, 0);
    for (std::size_t start = 0; start < n; ++start) {
        if (seen[start]) continue;
        // Orbit under conjugation by the generators; a finite orbit closed
        // under each generator's action is closed under the whole group's.
        std::vector<std::size_t> orbit{start};
        seen[start] = 1;
        for (std::size_t head = 0; head < orbit.size(); ++head) {
            for (std::size_t k : gidx) {
                std::size_t c = g.product(g.product(k, orbit[head]), g.inverse_of(k));
                if (!seen[c]) {
                    seen[c] = 1;
                    orbit.push_back(c);
                }
            }
        }
        for (std::size_t x : orbit) sizes[x] = orbit.size();
    }
    return sizes;
}

std::size_t center_size(const FiniteGroup& g) {
    std::vector<std::size_t> gidx;
    for (const auto& p : g.generators()) gidx.push_back(g.index_of(p));
    std::size_t count = 0;
    for (std::size_t i = 0; i < g.order(); ++i) {
        bool central = true;
        for (std::size_t k : gidx)
            if (g.product(i, k) != g.product(k, i)) {
                central = false;
                break;
            }
        if (central) ++count;
    }
    return count;
}

std::vector<std::size_t> normalizer(const FiniteGroup& g,
                                    const std::vector<std::size_t>& members) {
    std::unordered_set<std::size_t> set(members.begin(), members.end());
    std::vector<std::size_t> gens = small_generating_set(g, members);
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < g.order(); ++x) {
        std::size_t xinv = g.inverse_of(x);
        bool ok = true;
        // x P x^-1 = P iff x maps a generating set of P into P.
        for (std::size_t s : gens) {
            std::size_t conj = g.product(g.product(x, s), xinv);
            if (set.find(conj) == set.end()) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(x);
    }
    return out;
}

} // namespace frobspec
