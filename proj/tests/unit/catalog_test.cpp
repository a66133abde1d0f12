#include "frobspec/catalog.hpp"
#include "frobspec/errors.hpp"
#include "frobspec/scan.hpp"

#include "doctest.h"

#include <cstdio>
#include <map>
#include <set>

using namespace frobspec;

TEST_CASE("built-in corpus basics") {
    const std::vector<CatalogEntry>& cat = load_catalog();
    CHECK(cat.size() == 465);
    CHECK(cat.front().id == "slice-c1");
    CHECK(cat.front().spec == "C(1)");
    CHECK(cat.front().order == 1);

    std::set<std::string> ids;
    for (const CatalogEntry& e : cat) {
        CHECK(ids.insert(e.id).second);
        CHECK(e.order >= 1);
        CHECK(e.order <= 500);
        CHECK(e.tags.count("section") == 1);
    }
}

TEST_CASE("exhaustive slice matches the standard counts per order") {
    // isomorphism type counts for orders 1..24, standard enumeration
    const std::map<std::uint64_t, std::size_t> expected{
        {1, 1},  {2, 1},  {3, 1},  {4, 2},  {5, 1},  {6, 2},
        {7, 1},  {8, 5},  {9, 2},  {10, 2}, {11, 1}, {12, 5},
        {13, 1}, {14, 2}, {15, 1}, {16, 14}, {17, 1}, {18, 5},
        {19, 1}, {20, 5}, {21, 2}, {22, 2}, {23, 1}, {24, 15}};
    std::map<std::uint64_t, std::size_t> got;
    for (const CatalogEntry& e : load_catalog())
        if (e.tags.at("section") == "slice24") ++got[e.order];
    CHECK(got == expected);
}

TEST_CASE("tsv parser round-trips") {
    std::string text =
        "a1\tC(4)\t4\tsection=x,family=C\n"
        "\n"
        "# comment line\n"
        "a2\tQ8 x C(3)\t24\tsection=x,family=prod\n";
    std::vector<CatalogEntry> entries = parse_catalog(text);
    REQUIRE(entries.size() == 2);
    CHECK(entries[0].id == "a1");
    CHECK(entries[1].order == 24);
    CHECK(entries[1].tags.at("family") == "prod");

    std::vector<CatalogEntry> again = parse_catalog(render_catalog(entries));
    REQUIRE(again.size() == entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        CHECK(again[i].id == entries[i].id);
        CHECK(again[i].spec == entries[i].spec);
        CHECK(again[i].order == entries[i].order);
        CHECK(again[i].tags == entries[i].tags);
    }
}

TEST_CASE("tsv parser rejects malformed rows") {
    CHECK_THROWS_AS(parse_catalog("a\tC(2)\t2\n"), ParseError);
    CHECK_THROWS_AS(parse_catalog("a\tC(2)\ttwo\tfamily=C\n"), ParseError);
    CHECK_THROWS_AS(parse_catalog("a\tC(2)\t2\tnokeyvalue\n"), ParseError);
    CHECK_THROWS_AS(parse_catalog("\tC(2)\t2\tfamily=C\n"), ParseError);
    try {
        parse_catalog("ok\tC(2)\t2\tfamily=C\nbad line\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 2); // line number of the bad row
    }
}

TEST_CASE("catalog files round-trip on disk") {
    std::string path = "catalog_roundtrip_test.tsv";
    std::vector<CatalogEntry> entries{
        {"x1", "D(3)", 8, {{"family", "D"}, {"m", "3"}}},
        {"x2", "C(7)", 7, {{"family", "C"}}}};
    write_catalog_file(path, entries);
    std::vector<CatalogEntry> back = load_catalog_file(path);
    std::remove(path.c_str());
    REQUIRE(back.size() == 2);
    CHECK(back[0].id == "x1");
    CHECK(back[0].tags.at("m") == "3");
    CHECK(back[1].order == 7);
    CHECK_THROWS_AS(load_catalog_file("does_not_exist.tsv"), DomainError);
}

TEST_CASE("integrity scan flags bad entries") {
    std::vector<CatalogEntry> entries{
        {"good", "Q8", 8, {}},
        {"wrong-order", "C(6)", 7, {}},
        {"bad-spec", "Q8 x", 8, {}},
        {"good", "C(2)", 2, {}}};
    IntegrityReport rep = run_catalog_integrity(entries);
    CHECK_FALSE(rep.ok());
    CHECK(rep.failures == 2);
    REQUIRE(rep.duplicate_ids.size() == 1);
    CHECK(rep.duplicate_ids[0] == "good");
    CHECK(rep.rows[0].built == 8);
    CHECK(rep.rows[1].built == 6);
    CHECK(rep.rows[1].error.empty());
    CHECK_FALSE(rep.rows[2].error.empty());
}

TEST_CASE("integrity passes on the built-in corpus sample") {
    std::vector<CatalogEntry> sample;
    for (const CatalogEntry& e : load_catalog())
        if (e.order <= 24) sample.push_back(e);
    IntegrityReport rep = run_catalog_integrity(sample);
    CHECK(rep.ok());
    CHECK(rep.failures == 0);
}

TEST_CASE("selectors slice the corpus") {
    const std::vector<CatalogEntry>& cat = load_catalog();

    CatalogSelector all;
    all.all = true;
    all.max_order = 10000;
    CHECK(filter_catalog(cat, all).size() == cat.size());

    CatalogSelector fam;
    fam.family = "M";
    fam.m_lo = 4;
    fam.m_hi = 7;
    fam.max_order = 10000;
    std::vector<CatalogEntry> ms = filter_catalog(cat, fam);
    CHECK(ms.size() >= 4);
    for (const CatalogEntry& e : ms) CHECK(e.tags.at("family") == "M");

    CatalogSelector ids;
    ids.ids = {"slice-a4", "slice-c1"};
    std::vector<CatalogEntry> picked = filter_catalog(cat, ids);
    REQUIRE(picked.size() == 2);
    CHECK(picked[0].id == "slice-a4"); // requested order, not catalog order
    CHECK(picked[1].id == "slice-c1");

    CatalogSelector unknown;
    unknown.ids = {"no-such-id"};
    CHECK_THROWS_AS(filter_catalog(cat, unknown), DomainError);

    CatalogSelector toosmall;
    toosmall.all = true;
    toosmall.max_order = 0;
    CHECK_THROWS_AS(filter_catalog(cat, toosmall), DomainError);
}
