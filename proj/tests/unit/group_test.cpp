#include "frobspec/group.hpp"
#include "frobspec/constructors.hpp"
#include "frobspec/errors.hpp"

#include "doctest.h"

#include <algorithm>

using namespace frobspec;

namespace {

FiniteGroup s3() {
    return FiniteGroup::generate({Permutation::from_cycles(3, {{0, 1}}),
                                  Permutation::from_cycles(3, {{0, 1, 2}})});
}

} // namespace

TEST_CASE("closure of S3 generators") {
    FiniteGroup g = s3();
    CHECK(g.order() == 6);
    CHECK(g.degree() == 3);
    CHECK_FALSE(g.is_abelian());
    CHECK(g.element(0).is_identity());
}

TEST_CASE("element orders divide the group order") {
    FiniteGroup g = build_spec("SDP(5,4,2)");
    REQUIRE(g.order() == 20);
    for (std::size_t i = 0; i < g.order(); ++i)
        CHECK(g.order() % g.order_of(i) == 0);
}

TEST_CASE("product and inverse tables are coherent") {
    FiniteGroup g = s3();
    for (std::size_t i = 0; i < g.order(); ++i) {
        CHECK(g.product(i, g.inverse_of(i)) == 0);
        CHECK(g.product(g.inverse_of(i), i) == 0);
        CHECK(g.product(0, i) == i);
    }
    // the table matches actual permutation composition
    for (std::size_t i = 0; i < g.order(); ++i)
        for (std::size_t j = 0; j < g.order(); ++j)
            CHECK(g.element(g.product(i, j)) == compose(g.element(i), g.element(j)));
}

TEST_CASE("index_of finds every element and rejects strangers") {
    FiniteGroup g = s3();
    for (std::size_t i = 0; i < g.order(); ++i)
        CHECK(g.index_of(g.element(i)) == i);
    CHECK_THROWS_AS(g.index_of(Permutation::identity(4)), DomainError);
    CHECK(g.contains(Permutation::from_cycles(3, {{0, 1}})));
    CHECK_FALSE(g.contains(Permutation::identity(4)));
}

TEST_CASE("order cap aborts runaway closures") {
    std::vector<Permutation> gens{Permutation::from_cycles(3, {{0, 1}}),
                                  Permutation::from_cycles(3, {{0, 1, 2}})};
    try {
        FiniteGroup::generate(gens, 5);
        FAIL("expected OrderCapError");
    } catch (const OrderCapError& e) {
        CHECK(e.cap() == 5);
        CHECK(e.partial_count() >= 5);
    }
}

TEST_CASE("explicit degree survives an empty generator list") {
    FiniteGroup g = FiniteGroup::generate(4, {}, 10);
    CHECK(g.order() == 1);
    CHECK(g.degree() == 4);
}

TEST_CASE("subgroup_closure spans and is idempotent") {
    FiniteGroup g = s3();
    std::size_t rot = g.index_of(Permutation::from_cycles(3, {{0, 1, 2}}));
    std::vector<std::size_t> h = subgroup_closure(g, {rot});
    CHECK(h.size() == 3);
    CHECK(subgroup_closure(g, h) == h);
    CHECK(is_subgroup(g, h));
    std::vector<std::size_t> not_closed{0, g.index_of(Permutation::from_cycles(3, {{0, 1}})), rot};
    CHECK_FALSE(is_subgroup(g, not_closed));
}

TEST_CASE("small_generating_set regenerates the subgroup") {
    FiniteGroup g = build_spec("Q8");
    std::vector<std::size_t> all(g.order());
    for (std::size_t i = 0; i < g.order(); ++i) all[i] = i;
    std::vector<std::size_t> gens = small_generating_set(g, all);
    CHECK(gens.size() <= 3);
    CHECK(subgroup_closure(g, gens).size() == g.order());
}

TEST_CASE("normalizer of a normal subgroup is everything") {
    FiniteGroup g = s3();
    std::size_t rot = g.index_of(Permutation::from_cycles(3, {{0, 1, 2}}));
    std::vector<std::size_t> a3 = subgroup_closure(g, {rot});
    CHECK(normalizer(g, a3).size() == 6);
    // a 2-element subgroup generated by a transposition is self-normalizing
    std::vector<std::size_t> c2 =
        subgroup_closure(g, {g.index_of(Permutation::from_cycles(3, {{0, 1}}))});
    CHECK(normalizer(g, c2).size() == 2);
}

TEST_CASE("conjugacy class sizes and center") {
    // sizes come back per element: sizes[i] is the class size of element i
    FiniteGroup g = s3();
    std::vector<std::size_t> sizes = conjugacy_class_sizes(g);
    CHECK(sizes[0] == 1); // the identity sits alone
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<std::size_t>{1, 2, 2, 3, 3, 3});
    CHECK(center_size(g) == 1);

    FiniteGroup q8 = build_spec("Q8");
    std::vector<std::size_t> qs = conjugacy_class_sizes(q8);
    std::sort(qs.begin(), qs.end());
    CHECK(qs == std::vector<std::size_t>{1, 1, 2, 2, 2, 2, 2, 2});
    CHECK(center_size(q8) == 2);

    FiniteGroup c12 = build_spec("C(12)");
    CHECK(center_size(c12) == 12);
    CHECK(conjugacy_class_sizes(c12).size() == 12);
}
