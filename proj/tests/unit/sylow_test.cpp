#include "frobspec/sylow.hpp"
#include "frobspec/census.hpp"
#include "frobspec/constructors.hpp"
#include "frobspec/errors.hpp"
#include "frobspec/numtheory.hpp"

#include "doctest.h"

using namespace frobspec;

TEST_CASE("sylow subgroups of S3") {
    FiniteGroup g = build_spec("SDP(3,2,2)");
    SylowInfo two = sylow_count(g, 2);
    CHECK(two.order == 2);
    CHECK(two.m == 1);
    CHECK(two.is_cyclic);
    CHECK_FALSE(two.is_normal);
    CHECK(two.count == 3);
    CHECK(two.members.size() == 2);

    SylowInfo three = sylow_count(g, 3);
    CHECK(three.order == 3);
    CHECK(three.is_cyclic);
    CHECK(three.is_normal);
    CHECK(three.count == 1);
}

TEST_CASE("alternating group on four points") {
    FiniteGroup g = build_spec("perm:4:(0 1 2)(1 2 3)");
    REQUIRE(g.order() == 12);
    SylowInfo three = sylow_count(g, 3);
    CHECK(three.order == 3);
    CHECK(three.count == 4);
    SylowInfo two = sylow_count(g, 2);
    CHECK(two.order == 4);
    CHECK_FALSE(two.is_cyclic); // the Klein four-group
    CHECK(two.is_normal);
}

TEST_CASE("cyclic groups have unique sylow subgroups") {
    FiniteGroup g = build_spec("C(12)");
    SylowInfo two = sylow_count(g, 2);
    CHECK(two.order == 4);
    CHECK(two.m == 2);
    CHECK(two.is_cyclic);
    CHECK(two.count == 1);
    CHECK(sylow_count(g, 3).count == 1);
    CHECK_THROWS_AS(sylow_count(g, 5), DomainError);
    CHECK_THROWS_AS(sylow_subgroup(g, 5), DomainError);
}

TEST_CASE("subgroup members form a closed p-power set when unique") {
    FiniteGroup g = build_spec("B(2)");
    std::vector<std::size_t> members = sylow_subgroup(g, 3);
    CHECK(members.size() == 3);
    CHECK(is_subgroup(g, members));
    for (std::size_t i : members) {
        std::uint64_t k = g.order_of(i);
        CHECK((k == 1 || k == 3));
    }
}

TEST_CASE("bound formula") {
    CHECK(cyclic_sylow_lower_bound(3, 1, 4) == 9);
    CHECK(cyclic_sylow_lower_bound(2, 2, 1) == 4);
    CHECK(cyclic_sylow_lower_bound(2, 1, 3) == 4);
    CHECK(cyclic_sylow_lower_bound(5, 2, 6) == 25 + 5 * 20);
    CHECK_THROWS_AS(cyclic_sylow_lower_bound(4, 1, 1), DomainError);
    CHECK_THROWS_AS(cyclic_sylow_lower_bound(3, 0, 1), DomainError);
    CHECK_THROWS_AS(cyclic_sylow_lower_bound(3, 1, 0), DomainError);
}

TEST_CASE("bound check on the tight examples") {
    FiniteGroup a4 = build_spec("perm:4:(0 1 2)(1 2 3)");
    BoundCheck c = check_cyclic_sylow_bound(a4, 3);
    CHECK(c.applicable);
    CHECK(c.count == 4);
    CHECK(c.bound == 9);
    CHECK(c.actual == 9);
    CHECK(c.ok);
    CHECK(c.tight);

    FiniteGroup s3 = build_spec("SDP(3,2,2)");
    BoundCheck s = check_cyclic_sylow_bound(s3, 3);
    CHECK(s.count == 1);
    CHECK(s.bound == 3);
    CHECK(s.actual == 3);
    CHECK(s.tight);
}

TEST_CASE("every unique cyclic sylow case is exactly tight") {
    for (const char* spec : {"C(12)", "B(2)", "Q8 x C(15)", "M(3,3) x C(2)"}) {
        FiniteGroup g = build_spec(spec);
        for (std::uint64_t p : prime_factors(g.order())) {
            BoundCheck c = check_cyclic_sylow_bound(g, p);
            if (!c.applicable || c.count != 1) continue;
            // t = 1 gives bound q^m, and F_{q^m} is then exactly the sylow
            CHECK(c.tight);
        }
    }
}

TEST_CASE("non-cyclic sylow subgroups are out of scope") {
    FiniteGroup q8 = build_spec("Q8");
    BoundCheck c = check_cyclic_sylow_bound(q8, 2);
    CHECK_FALSE(c.applicable);
    CHECK(c.ok);
}
