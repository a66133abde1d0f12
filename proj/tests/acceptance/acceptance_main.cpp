// Acceptance harness: one [PASS]/[FAIL] line per criterion, exit code is the
// number of failures. Each check recomputes its expectations independently of
// the library paths it exercises.

#include "frobspec/catalog.hpp"
#include "frobspec/census.hpp"
#include "frobspec/classify.hpp"
#include "frobspec/constructors.hpp"
#include "frobspec/numtheory.hpp"
#include "frobspec/perm.hpp"
#include "frobspec/scan.hpp"
#include "frobspec/sylow.hpp"

#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <string>
#include <vector>

using namespace frobspec;

namespace {

// Independent oracle: |{g : g^n = 1}| by literally raising every element to
// the n-th power. Deliberately avoids order_census and count_solutions.
std::uint64_t brute_force_solutions(const FiniteGroup& g, std::uint64_t n) {
    std::uint64_t hits = 0;
    for (std::size_t i = 0; i < g.order(); ++i)
        if (power(g.element(i), n).is_identity()) ++hits;
    return hits;
}

int failures = 0;

void report(const std::string& name, bool ok, const std::string& detail = "") {
    if (ok) {
        std::printf("[PASS] %s\n", name.c_str());
    } else {
        ++failures;
        if (detail.empty())
            std::printf("[FAIL] %s\n", name.c_str());
        else
            std::printf("[FAIL] %s: %s\n", name.c_str(), detail.c_str());
    }
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
}

std::vector<CatalogEntry> corpus_under(std::uint64_t max_order) {
    std::vector<CatalogEntry> out;
    for (const CatalogEntry& e : load_catalog())
        if (e.order <= max_order) out.push_back(e);
    return out;
}

// 1. The golden quotient table at m = 4 plus the abelian-pair sweep.
void criterion_golden_table() {
    auto start = std::chrono::steady_clock::now();
    std::string bad;

    FiniteGroup m24 = build_spec("M(2,4)");
    for (std::uint64_t n : {2, 4, 8})
        if (frobenius_quotient(m24, n) != 2) bad += " M(2,4):f_" + std::to_string(n);

    if (count_solutions(build_spec("D(4)"), 2) != 10) bad += " D(4):|F_2|";
    if (count_solutions(build_spec("SD(4)"), 2) != 6) bad += " SD(4):|F_2|";
    if (count_solutions(build_spec("Q(4)"), 4) != 12) bad += " Q(4):|F_4|";

    const std::pair<std::uint64_t, std::uint32_t> sweeps[] = {{2, 3}, {3, 3}, {5, 2}};
    for (auto [q, m] : sweeps) {
        FiniteGroup g = build_spec("AB(" + std::to_string(q) + "," +
                                   std::to_string(m) + ")");
        for (std::uint32_t s = 1; s + 1 <= m; ++s)
            if (frobenius_quotient(g, ipow(q, s)) != q)
                bad += " AB(" + std::to_string(q) + "," + std::to_string(m) +
                       "):f_q^" + std::to_string(s);
    }

    double dt = seconds_since(start);
    if (dt >= 1.0) bad += " too slow";
    report("golden quotient table at m = 4", bad.empty(), bad);
}

// 2. mf_pp <= q agrees with the structural recognizer on the whole corpus.
void criterion_equivalence() {
    auto start = std::chrono::steady_clock::now();
    ScanOptions opt;
    opt.jobs = 1; // single-threaded per the runtime requirement
    ScanReport rep = run_equivalence_scan(corpus_under(500), opt);
    std::string bad;
    if (rep.errors != 0) bad += " errors=" + std::to_string(rep.errors);
    if (rep.mismatches != 0)
        bad += " mismatches=" + std::to_string(rep.mismatches);
    for (const EquivalenceRow& row : rep.rows)
        if (row.error.empty() && !row.agree) bad += " " + row.id;
    double dt = seconds_since(start);
    if (dt >= 60.0) bad += " too slow";
    report("equivalence of mf_pp <= q with the recognizer (465 groups)",
           bad.empty(), bad);
}

// 3. n divides |F_n| for every group and every divisor n of the order.
void criterion_divisibility() {
    std::string bad;
    std::size_t checked = 0;
    for (const CatalogEntry& e : corpus_under(500)) {
        FiniteGroup g = build_spec(e.spec);
        OrderCensus c = order_census(g);
        for (std::uint64_t n : divisors(g.order())) {
            ++checked;
            if (count_solutions(c, n) % n != 0) {
                bad += " " + e.id + ":n=" + std::to_string(n);
                break;
            }
        }
    }
    report("divisibility n | |F_n| over " + std::to_string(checked) +
               " (group, divisor) pairs",
           bad.empty(), bad);
}

// 4. The cyclic-Sylow lower bound, with the tight cases pinned.
void criterion_sylow_bound() {
    ScanOptions opt;
    opt.jobs = 1;
    ScanReport rep = run_sylow_bound_scan(corpus_under(500), opt);
    std::string bad;
    if (rep.errors != 0) bad += " errors=" + std::to_string(rep.errors);
    if (rep.bound_violations != 0)
        bad += " violations=" + std::to_string(rep.bound_violations);

    // every t = 1 record must be exactly tight: F_{q^m} is then the sylow
    for (const BoundRow& row : rep.bounds)
        if (row.check.count == 1 && !row.check.tight) bad += " loose:" + row.id;

    FiniteGroup a4 = build_spec("perm:4:(0 1 2)(1 2 3)");
    BoundCheck c = check_cyclic_sylow_bound(a4, 3);
    if (!(c.applicable && c.count == 4 && c.bound == 9 && c.actual == 9 &&
          c.tight))
        bad += " a4-not-tight";

    report("cyclic-sylow bound over " + std::to_string(rep.bounds.size()) +
               " (group, prime) records",
           bad.empty(), bad);
}

// 5. The three corollaries in their testable forms.
void criterion_corollaries() {
    std::vector<CorollaryViolation> v = run_corollary_scan(corpus_under(500));
    std::string bad;
    for (const CorollaryViolation& cv : v) bad += " " + cv.id + ":" + cv.label;
    report("corollaries: pp-subset, below-q-cyclic, two-element-floor",
           bad.empty(), bad);
}

// 6. The spectra chain mf_pp <= B <= mf everywhere.
void criterion_chain() {
    std::string bad;
    for (const CatalogEntry& e : corpus_under(500)) {
        FrobeniusReport r = full_report(build_spec(e.spec));
        if (!(r.mf_pp <= r.b && r.b <= r.mf)) bad += " " + e.id;
    }
    report("spectra chain mf_pp <= B <= mf", bad.empty(), bad);
}

// 7. count_solutions against the element-powering oracle on 50 random groups.
void criterion_oracle() {
    std::vector<CatalogEntry> all = corpus_under(500);
    std::mt19937 rng(271828);
    std::string bad;
    for (int pick = 0; pick < 50; ++pick) {
        const CatalogEntry& e = all[rng() % all.size()];
        FiniteGroup g = build_spec(e.spec);
        OrderCensus c = order_census(g);
        for (std::uint64_t n : divisors(g.order()))
            if (count_solutions(c, n) != brute_force_solutions(g, n)) {
                bad += " " + e.id + ":n=" + std::to_string(n);
                break;
            }
        // off-lattice exponents must agree too
        for (std::uint64_t n : {7ull, 30ull, 97ull})
            if (count_solutions(c, n) != brute_force_solutions(g, n)) {
                bad += " " + e.id + ":off-lattice";
                break;
            }
    }
    report("census path matches the brute-force oracle on 50 random groups",
           bad.empty(), bad);
}

// 8. Catalog integrity: orders, unique ids, pairwise distinct slice entries.
void criterion_catalog() {
    std::string bad;
    IntegrityReport integ = run_catalog_integrity(load_catalog());
    if (!integ.ok()) {
        bad += " failures=" + std::to_string(integ.failures);
        for (const std::string& d : integ.duplicate_ids) bad += " dup:" + d;
    }

    // the exhaustive slice must be pairwise non-isomorphic, order by order
    std::map<std::uint64_t, std::vector<const CatalogEntry*>> by_order;
    for (const CatalogEntry& e : load_catalog())
        if (e.tags.at("section") == "slice24") by_order[e.order].push_back(&e);

    const std::map<std::uint64_t, std::size_t> expected{
        {1, 1},  {2, 1},  {3, 1},  {4, 2},  {5, 1},  {6, 2},
        {7, 1},  {8, 5},  {9, 2},  {10, 2}, {11, 1}, {12, 5},
        {13, 1}, {14, 2}, {15, 1}, {16, 14}, {17, 1}, {18, 5},
        {19, 1}, {20, 5}, {21, 2}, {22, 2}, {23, 1}, {24, 15}};
    for (const auto& [order, count] : expected) {
        auto it = by_order.find(order);
        std::size_t have = it == by_order.end() ? 0 : it->second.size();
        if (have != count)
            bad += " order" + std::to_string(order) + "=" +
                   std::to_string(have) + "/" + std::to_string(count);
    }

    for (const auto& [order, members] : by_order) {
        std::vector<FiniteGroup> built;
        for (const CatalogEntry* e : members) built.push_back(build_spec(e->spec));
        for (std::size_t i = 0; i < built.size(); ++i)
            for (std::size_t j = i + 1; j < built.size(); ++j)
                if (is_isomorphic_small(built[i], built[j]))
                    bad += " iso:" + members[i]->id + "=" + members[j]->id;
    }

    report("catalog integrity and pairwise distinct exhaustive slice",
           bad.empty(), bad);
}

} // namespace

int main() {
    criterion_golden_table();
    criterion_equivalence();
    criterion_divisibility();
    criterion_sylow_bound();
    criterion_corollaries();
    criterion_chain();
    criterion_oracle();
    criterion_catalog();
    if (failures == 0)
        std::printf("all acceptance criteria passed\n");
    else
        std::printf("%d acceptance criteria failed\n", failures);
    return failures;
}
