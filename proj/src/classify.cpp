#include "frobspec/classify.hpp"

#include "frobspec/census.hpp"
#include "frobspec/errors.hpp"
#include "frobspec/numtheory.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <unordered_set>

namespace frobspec {

namespace {

// g.element(i) raised to e, computed on indices by binary powering.
std::size_t index_power(const FiniteGroup& g, std::size_t i, std::uint64_t e) {
    std::size_t acc = 0; // identity index
    std::size_t base = i;
    while (e > 0) {
        if (e & 1) acc = g.product(acc, base);
        base = g.product(base, base);
        e >>= 1;
    }
    return acc;
}

// Elementwise commutation of <A> with <B>, checked on generating sets only.
// Sound because the centralizer of any set is a subgroup.
bool sets_commute(const FiniteGroup& g, const std::vector<std::size_t>& a,
                  const std::vector<std::size_t>& b) {
    for (std::size_t x : a)
        for (std::size_t y : b)
            if (g.product(x, y) != g.product(y, x)) return false;
    return true;
}

bool closed_subgroup(const FiniteGroup& g, const std::vector<std::size_t>& members) {
    return subgroup_closure(g, members).size() == members.size();
}

// Rebuild a member set as a standalone FiniteGroup so the shape recognizer
// can work with plain element indices of the subgroup itself.
FiniteGroup subgroup_as_group(const FiniteGroup& g,
                              const std::vector<std::size_t>& members) {
    std::vector<std::size_t> gens = small_generating_set(g, members);
    std::vector<Permutation> perms;
    perms.reserve(gens.size());
    for (std::size_t i : gens) perms.push_back(g.element(i));
    FiniteGroup sub = FiniteGroup::generate(g.degree(), perms, members.size());
    if (sub.order() != members.size())
        throw InternalError("subgroup closure mismatch");
    return sub;
}

std::vector<std::size_t> elements_of_order(const FiniteGroup& g, std::uint64_t k) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < g.order(); ++i)
        if (g.order_of(i) == k) out.push_back(i);
    return out;
}

} // namespace

std::string to_string(QShape tag) {
    switch (tag) {
        case QShape::Cyclic: return "Cyclic";
        case QShape::AbelianPair: return "AbelianPair";
        case QShape::Q8: return "Q8";
        case QShape::Modular2: return "Modular2";
        case QShape::ModularOdd: return "ModularOdd";
        case QShape::Other: return "Other";
    }
    throw InternalError("unhandled QShape");
}

std::string to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::None: return "None";
        case CaseTag::Case1: return "Case1";
        case CaseTag::Case2: return "Case2";
    }
    throw InternalError("unhandled CaseTag");
}

std::optional<std::pair<std::size_t, std::size_t>> find_witness_pair(
    const FiniteGroup& g, const std::vector<std::size_t>& as,
    const std::vector<std::size_t>& bs,
    const std::function<bool(std::size_t, std::size_t)>& relation) {
    (void)g;
    for (std::size_t a : as)
        for (std::size_t b : bs)
            if (relation(a, b)) return std::make_pair(a, b);
    return std::nullopt;
}

PGroupShape recognize_p_group_shape(const FiniteGroup& qgroup, std::uint64_t q) {
    const std::uint64_t n = qgroup.order();
    std::uint64_t rem = n;
    std::uint32_t m = 0;
    while (rem % q == 0) {
        rem /= q;
        ++m;
    }
    if (rem != 1) throw DomainError("shape: group order is not a power of q");

    PGroupShape shape;
    shape.q = q;
    shape.m = m;

    const std::uint64_t exp = exponent(qgroup);

    if (exp == n) {
        // Cyclic, including the trivial group at m = 0.
        shape.tag = QShape::Cyclic;
        for (std::size_t i = 0; i < n; ++i) {
            if (qgroup.order_of(i) == n) {
                shape.witnesses.push_back(qgroup.element(i));
                break;
            }
        }
        if (shape.witnesses.empty())
            throw InternalError("cyclic group without a full-order element");
        return shape;
    }

    if (qgroup.is_abelian() && m >= 2 && exp == n / q) {
        // Z_{q^(m-1)} x Z_q. Witness: a of maximal order plus b of order q
        // outside <a>, and their joint closure must exhaust the group.
        std::size_t a = qgroup.order();
        for (std::size_t i = 0; i < qgroup.order(); ++i) {
            if (qgroup.order_of(i) == exp) {
                a = i;
                break;
            }
        }
        if (a == qgroup.order())
            throw InternalError("abelian pair: no element of maximal order");
        std::vector<std::size_t> span = subgroup_closure(qgroup, {a});
        std::unordered_set<std::size_t> in_a(span.begin(), span.end());
        std::size_t b = qgroup.order();
        for (std::size_t i = 0; i < qgroup.order(); ++i) {
            if (qgroup.order_of(i) == q && in_a.find(i) == in_a.end()) {
                b = i;
                break;
            }
        }
        if (b == qgroup.order())
            throw InternalError("abelian pair: no complement generator");
        if (subgroup_closure(qgroup, {a, b}).size() != n)
            throw InternalError("abelian pair witnesses do not span");
        shape.tag = QShape::AbelianPair;
        shape.witnesses = {qgroup.element(a), qgroup.element(b)};
        return shape;
    }

    if (!qgroup.is_abelian() && n == 8) {
        // Quaternion check: a unique involution and exponent 4.
        std::size_t involutions = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (qgroup.order_of(i) == 2) ++involutions;
        if (involutions == 1 && exp == 4) {
            std::vector<std::size_t> fours = elements_of_order(qgroup, 4);
            auto pair = find_witness_pair(
                qgroup, fours, fours, [&](std::size_t a, std::size_t b) {
                    if (a == b) return false;
                    if (index_power(qgroup, b, 2) != index_power(qgroup, a, 2))
                        return false;
                    std::size_t conj = qgroup.product(
                        qgroup.product(qgroup.inverse_of(b), a), b);
                    if (conj != qgroup.inverse_of(a)) return false;
                    return subgroup_closure(qgroup, {a, b}).size() == 8;
                });
            if (!pair) throw InternalError("Q8 witness search failed");
            shape.tag = QShape::Q8;
            shape.witnesses = {qgroup.element(pair->first),
                               qgroup.element(pair->second)};
            return shape;
        }
    }

    if (!qgroup.is_abelian() && exp == n / q &&
        ((q == 2 && m >= 4) || (q > 2 && m >= 3))) {
        // Modular group of order q^m: look for a of order q^(m-1) and b of
        // order q with b^-1 a b = a^(1 + q^(m-2)) generating everything.
        const std::uint64_t half = n / q;           // q^(m-1)
        const std::uint64_t step = 1 + half / q;    // 1 + q^(m-2)
        std::vector<std::size_t> as = elements_of_order(qgroup, half);
        std::vector<std::size_t> bs = elements_of_order(qgroup, q);
        auto pair = find_witness_pair(
            qgroup, as, bs, [&](std::size_t a, std::size_t b) {
                std::size_t conj =
                    qgroup.product(qgroup.product(qgroup.inverse_of(b), a), b);
                if (conj != index_power(qgroup, a, step)) return false;
                return subgroup_closure(qgroup, {a, b}).size() == n;
            });
        if (pair) {
            shape.tag = (q == 2) ? QShape::Modular2 : QShape::ModularOdd;
            shape.witnesses = {qgroup.element(pair->first),
                               qgroup.element(pair->second)};
            return shape;
        }
    }

    shape.tag = QShape::Other;
    return shape;
}

std::optional<QPrimePart> qprime_part(const FiniteGroup& g, std::uint64_t q) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < g.order(); ++i)
        if (g.order_of(i) % q != 0) members.push_back(i);
    if (!closed_subgroup(g, members)) return std::nullopt;
    QPrimePart part;
    part.cyclic = false;
    for (std::size_t i : members) {
        if (g.order_of(i) == members.size()) {
            part.cyclic = true;
            break;
        }
    }
    part.members = std::move(members);
    return part;
}

Verdict classify_group(const FiniteGroup& g) {
    Verdict v;
    const std::uint64_t n = g.order();
    if (n == 1) {
        v.in_class = true;
        v.case_tag = CaseTag::Case1;
        PGroupShape shape;
        shape.tag = QShape::Cyclic;
        shape.q = 0;
        shape.m = 0;
        shape.witnesses.push_back(g.element(0));
        v.shape = shape;
        v.m = 0;
        v.cyclic_part = 1;
        v.witnesses = shape.witnesses;
        v.reason = "trivial group: Q = R = 1";
        return v;
    }

    const std::uint64_t q = *smallest_prime(n);
    v.q = q;
    auto [qm, mexp] = p_part(n, q);

    // Case1 candidate: the q-elements must form a subgroup of order q^m.
    std::vector<std::size_t> qels;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t k = g.order_of(i);
        bool pure = true;
        while (k > 1) {
            if (k % q != 0) {
                pure = false;
                break;
            }
            k /= q;
        }
        if (pure) qels.push_back(i);
    }

    if (qels.size() == qm && closed_subgroup(g, qels)) {
        auto rpart = qprime_part(g, q);
        if (rpart && rpart->cyclic) {
            std::vector<std::size_t> qgens = small_generating_set(g, qels);
            std::vector<std::size_t> rgens =
                small_generating_set(g, rpart->members);
            if (sets_commute(g, qgens, rgens)) {
                FiniteGroup qgroup = subgroup_as_group(g, qels);
                PGroupShape shape = recognize_p_group_shape(qgroup, q);
                if (shape.tag != QShape::Other) {
                    v.in_class = true;
                    v.case_tag = CaseTag::Case1;
                    v.shape = shape;
                    v.m = shape.m;
                    v.cyclic_part = rpart->members.size();
                    v.witnesses = shape.witnesses;
                    v.reason = "Case1: Q x R with Q of shape " +
                               to_string(shape.tag) + " and cyclic R of order " +
                               std::to_string(v.cyclic_part);
                    return v;
                }
            }
        }
    }

    // Case2 candidate: q = 2 and G = <a, b | a^(2^m) = b^3 = 1,
    // a^-1 b a = b^-1> x T with T cyclic and gcd(|T|, 6) = 1.
    if (q == 2 && n % 3 == 0) {
        std::vector<std::size_t> tset;
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t k = g.order_of(i);
            if (k % 2 != 0 && k % 3 != 0) tset.push_back(i);
        }
        const std::uint64_t tsize = tset.size();
        std::uint64_t sixpart = n;
        while (sixpart % 2 == 0) sixpart /= 2;
        while (sixpart % 3 == 0) sixpart /= 3;
        bool tgood = (tsize == sixpart) && closed_subgroup(g, tset);
        if (tgood) {
            bool tcyclic = false;
            for (std::size_t i : tset) {
                if (g.order_of(i) == tsize) {
                    tcyclic = true;
                    break;
                }
            }
            tgood = tcyclic;
        }
        const std::uint64_t hsize = tgood ? n / tsize : 0; // 3 * 2^m if Case2
        const std::uint64_t target = hsize / 3;            // candidate order of a
        const bool target_pow2 =
            target >= 2 && (target & (target - 1)) == 0 && hsize % 3 == 0;
        if (tgood && target_pow2 && hsize * tsize == n) {
            std::vector<std::size_t> tgens = small_generating_set(g, tset);
            std::vector<std::size_t> twos;
            for (std::size_t i = 0; i < n; ++i)
                if (g.order_of(i) == target) twos.push_back(i);
            std::vector<std::size_t> threes = elements_of_order(g, 3);
            auto pair = find_witness_pair(
                g, twos, threes, [&](std::size_t a, std::size_t b) {
                    std::size_t conj =
                        g.product(g.product(g.inverse_of(a), b), a);
                    if (conj != g.inverse_of(b)) return false;
                    std::vector<std::size_t> h = subgroup_closure(g, {a, b});
                    if (h.size() != 3 * g.order_of(a)) return false;
                    if (h.size() * tsize != n) return false;
                    return sets_commute(g, tgens, {a, b});
                });
            if (pair) {
                v.in_class = true;
                v.case_tag = CaseTag::Case2;
                v.m = static_cast<std::uint32_t>(
                    std::countr_zero(g.order_of(pair->first)));
                v.cyclic_part = tsize;
                v.witnesses = {g.element(pair->first), g.element(pair->second)};
                v.reason = "Case2: dihedral-type extension of C3 by C" +
                           std::to_string(g.order_of(pair->first)) +
                           " times cyclic T of order " + std::to_string(tsize);
                return v;
            }
        }
    }

    v.in_class = false;
    v.case_tag = CaseTag::None;
    v.reason = "no recognized structural decomposition";
    return v;
}

bool is_isomorphic_small(const FiniteGroup& a, const FiniteGroup& b,
                         std::size_t bound) {
    if (a.order() > bound || b.order() > bound)
        throw DomainError("is_isomorphic_small: order exceeds the configured bound");
    const std::size_t n = a.order();
    if (b.order() != n) return false;
    if (n == 1) return true;
    if (order_census(a) != order_census(b)) return false;
    if (a.is_abelian() != b.is_abelian()) return false;
    if (center_size(a) != center_size(b)) return false;

    // Per-element class sizes double as a screen (compared as multisets,
    // since element numbering is presentation-dependent) and as a candidate
    // filter (an isomorphism preserves each element's class size).
    std::vector<std::size_t> cls_a = conjugacy_class_sizes(a);
    std::vector<std::size_t> cls_b = conjugacy_class_sizes(b);
    {
        std::vector<std::size_t> sa = cls_a;
        std::vector<std::size_t> sb = cls_b;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }

    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), 0);
    std::vector<std::size_t> gens = small_generating_set(a, all);

    // Candidate images in b for each generator: same order, same class size.
    std::vector<std::vector<std::size_t>> candidates;
    for (std::size_t ga : gens) {
        std::vector<std::size_t> c;
        for (std::size_t i = 0; i < n; ++i)
            if (b.order_of(i) == a.order_of(ga) && cls_b[i] == cls_a[ga])
                c.push_back(i);
        if (c.empty()) return false;
        candidates.push_back(std::move(c));
    }

    std::vector<std::size_t> image(gens.size(), 0);

    // Check that mapping gens[0..upto] to image[0..upto] extends to a
    // homomorphism on the span so far, injectively. Fresh BFS each time.
    auto consistent = [&](std::size_t upto) {
        std::vector<std::size_t> map_ab(n, n); // n = unset
        std::vector<char> used(n, 0);
        map_ab[0] = 0;
        used[0] = 1;
        std::vector<std::size_t> span{0};
        for (std::size_t head = 0; head < span.size(); ++head) {
            for (std::size_t k = 0; k <= upto; ++k) {
                std::size_t x = a.product(span[head], gens[k]);
                std::size_t y = b.product(map_ab[span[head]], image[k]);
                if (map_ab[x] == n) {
                    if (used[y]) return std::make_pair(false, std::size_t{0});
                    map_ab[x] = y;
                    used[y] = 1;
                    span.push_back(x);
                } else if (map_ab[x] != y) {
                    return std::make_pair(false, std::size_t{0});
                }
            }
        }
        return std::make_pair(true, span.size());
    };

    std::function<bool(std::size_t)> place = [&](std::size_t k) {
        if (k == gens.size()) {
            auto [ok, span] = consistent(gens.size() - 1);
            return ok && span == n;
        }
        for (std::size_t cand : candidates[k]) {
            image[k] = cand;
            auto [ok, span] = consistent(k);
            (void)span;
            if (!ok) continue;
            if (place(k + 1)) return true;
        }
        return false;
    };

    return place(0);
}

} // namespace frobspec
