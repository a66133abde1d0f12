#include "frobspec/constructors.hpp"
#include "frobspec/classify.hpp"
#include "frobspec/errors.hpp"

#include "doctest.h"

using namespace frobspec;

TEST_CASE("family orders come out right") {
    CHECK(build_spec("C(12)").order() == 12);
    CHECK(build_spec("AB(3,2)").order() == 9);
    CHECK(build_spec("D(4)").order() == 16);
    CHECK(build_spec("SD(4)").order() == 16);
    CHECK(build_spec("Q(4)").order() == 16);
    CHECK(build_spec("M(2,4)").order() == 16);
    CHECK(build_spec("M(3,3)").order() == 27);
    CHECK(build_spec("Q8").order() == 8);
    CHECK(build_spec("B(2)").order() == 12);
    CHECK(build_spec("SDP(5,4,2)").order() == 20);
    CHECK(build_spec("C(6) x D(3) x Q8").order() == 6 * 8 * 8);
}

TEST_CASE("whitespace never matters") {
    FiniteGroup a = build_spec("Q8 x C(15)");
    FiniteGroup b = build_spec("  Q8x C( 15 )  ");
    CHECK(a.order() == b.order());
    CHECK(a.degree() == b.degree());
    CHECK(a.generators().size() == b.generators().size());
}

TEST_CASE("raw permutation terms and the cycle merge rule") {
    // disjoint cycles extend one generator, overlap starts a new one
    CHECK(build_spec("perm:4:(0 1)(2 3)").order() == 2);
    CHECK(build_spec("perm:3:(0 1)(1 2)").order() == 6);
    CHECK(build_spec("perm:4:(0 1)(0 1 2 3)").order() == 24);
    CHECK(build_spec("perm:5:").order() == 1);
    CHECK(build_spec("perm:5:").degree() == 5);
}

TEST_CASE("parse errors carry the offending offset") {
    try {
        parse_spec("C(2) x foo");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 7);
    }
    try {
        parse_spec("C(2))");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
        CHECK(std::string(e.what()).find("expected 'x' or end of spec") !=
              std::string::npos);
    }
}

TEST_CASE("family parameter validation") {
    CHECK_THROWS_AS(parse_spec("C(0)"), ParseError);
    CHECK_THROWS_AS(parse_spec("AB(1,2)"), ParseError);
    CHECK_THROWS_AS(parse_spec("AB(2,1)"), ParseError);
    CHECK_THROWS_AS(parse_spec("D(2)"), ParseError);
    CHECK_THROWS_AS(parse_spec("SD(3)"), ParseError);
    CHECK_THROWS_AS(parse_spec("Q(2)"), ParseError);
    CHECK_THROWS_AS(parse_spec("M(2,3)"), ParseError);
    CHECK_THROWS_AS(parse_spec("M(4,4)"), ParseError);
    CHECK_THROWS_AS(parse_spec("M(3,2)"), ParseError);
    CHECK_THROWS_AS(parse_spec("B(0)"), ParseError);
    CHECK_THROWS_AS(parse_spec("SDP(5,2,2)"), ParseError);
    CHECK_THROWS_AS(parse_spec("SDP(6,2,2)"), ParseError);
    CHECK_THROWS_AS(parse_spec("C(99999999999999999999)"), ParseError);
}

TEST_CASE("perm term validation") {
    try {
        parse_spec("perm:3:(0 0 1)");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("repeated point in cycle") !=
              std::string::npos);
    }
    try {
        parse_spec("perm:3:(0 3)");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("point 3 out of range for degree 3") !=
              std::string::npos);
    }
    CHECK_THROWS_AS(parse_spec("perm:0:"), ParseError);
    CHECK_THROWS_AS(parse_spec("perm:9999999:"), ParseError);
}

TEST_CASE("order cap triggers before any huge allocation") {
    CHECK_THROWS_AS(build_spec("AB(2,64)", 10000), OrderCapError);
    CHECK_THROWS_AS(build_spec("C(2000000)", 10000), OrderCapError);
    try {
        build_spec("C(30) x C(30)", 100);
        FAIL("expected OrderCapError");
    } catch (const OrderCapError& e) {
        CHECK(e.cap() == 100);
    }
}

TEST_CASE("rendered specs rebuild the same group") {
    for (const char* spec : {"Q8 x C(3)", "D(3)", "M(3,3)", "AB(2,3)", "B(2)",
                             "SDP(7,3,2)"}) {
        FiniteGroup g = build_spec(spec);
        std::string rendered = render_perm_spec(g.degree(), g.generators());
        FiniteGroup h = build_spec(rendered);
        REQUIRE(h.order() == g.order());
        CHECK(is_isomorphic_small(g, h));
    }
}

TEST_CASE("dihedral_spec names the right groups") {
    CHECK(build_spec(dihedral_spec(3)).order() == 6);
    CHECK(build_spec(dihedral_spec(9)).order() == 18);
    CHECK(is_isomorphic_small(build_spec(dihedral_spec(4)),
                              build_spec("perm:4:(0 1 2 3)(1 3)")));
}

TEST_CASE("semidirect action must be a unit of the right order") {
    FiniteGroup g = build_spec("SDP(9,3,4)"); // 4^3 = 64 = 1 mod 9
    CHECK(g.order() == 27);
    // SDP(n,1,1) degenerates to the cyclic group
    CHECK(is_isomorphic_small(build_spec("SDP(5,1,1)"), build_spec("C(5)")));
}
