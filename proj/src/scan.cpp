#include "frobspec/scan.hpp"

#include "frobspec/constructors.hpp"
#include "frobspec/errors.hpp"
#include "frobspec/numtheory.hpp"

#include <algorithm>
#include <exception>
#include <set>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace frobspec {

namespace {

// Corollary checks for one built row. Labels land in row.violations.
void check_corollaries(EquivalenceRow& row) {
    const FrobeniusReport& r = row.report;
    const std::vector<std::uint64_t>& pp = r.pp;

    if (row.verdict.in_class) {
        // In-class groups must have F_pp inside {1, q}.
        for (std::uint64_t f : pp) {
            bool allowed = (f == 1) || (r.smallest_prime && f == *r.smallest_prime);
            if (!allowed) {
                row.violations.push_back("pp-subset");
                break;
            }
        }
    }
    if (r.smallest_prime && r.mf_pp < *r.smallest_prime) {
        // Below-q breadth forces a cyclic group.
        if (r.exponent != r.order) row.violations.push_back("below-q-cyclic");
    }
    if (pp.size() == 2 && pp.front() == 1 && pp.back() > 1) {
        // Two-element spectra {1, f} cannot dip below q.
        if (!r.smallest_prime || pp.back() < *r.smallest_prime)
            row.violations.push_back("two-element-floor");
    }
}

EquivalenceRow equivalence_row(const CatalogEntry& entry, std::uint64_t cap) {
    EquivalenceRow row;
    row.id = entry.id;
    row.spec = entry.spec;
    try {
        FiniteGroup g = build_spec(entry.spec, cap);
        row.report = full_report(g);
        row.verdict = classify_group(g);
        row.le_q = !row.report.smallest_prime ||
                   row.report.mf_pp <= *row.report.smallest_prime;
        row.agree = (row.le_q == row.verdict.in_class);
        row.chain_ok = row.report.mf_pp <= row.report.b &&
                       row.report.b <= row.report.mf;
        check_corollaries(row);
    } catch (const Error& e) {
        row.error = e.what();
    }
    return row;
}

struct BoundWork {
    std::vector<BoundRow> rows;
    std::string error; // "id: message" when the build fails
};

BoundWork bound_rows(const CatalogEntry& entry, std::uint64_t cap) {
    BoundWork work;
    try {
        FiniteGroup g = build_spec(entry.spec, cap);
        for (std::uint64_t p : prime_factors(g.order())) {
            BoundCheck check = check_cyclic_sylow_bound(g, p);
            if (!check.applicable) continue;
            work.rows.push_back(BoundRow{entry.id, check});
        }
    } catch (const Error& e) {
        work.error = entry.id + ": " + e.what();
    }
    return work;
}

// Run `fn(i)` for every index, serially or under OpenMP depending on jobs.
// Results are written by index so output order never depends on scheduling.
template <typename Fn>
void for_each_entry(std::size_t count, int jobs, Fn&& fn) {
    if (jobs <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
#ifdef _OPENMP
    std::vector<std::exception_ptr> errs(count);
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
    for (long long i = 0; i < static_cast<long long>(count); ++i) {
        try {
            fn(static_cast<std::size_t>(i));
        } catch (...) {
            errs[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    for (const std::exception_ptr& e : errs)
        if (e) std::rethrow_exception(e);
#else
    for (std::size_t i = 0; i < count; ++i) fn(i);
#endif
}

} // namespace

ScanReport run_equivalence_scan(const std::vector<CatalogEntry>& entries,
                                const ScanOptions& options) {
    ScanReport report;
    report.kind = "equivalence";
    report.total = entries.size();
    report.rows.resize(entries.size());
    for_each_entry(entries.size(), options.jobs, [&](std::size_t i) {
        report.rows[i] = equivalence_row(entries[i], options.cap);
    });
    for (const EquivalenceRow& row : report.rows) {
        if (!row.error.empty()) {
            ++report.errors;
            continue;
        }
        if (row.verdict.in_class) ++report.in_class;
        if (!row.agree) ++report.mismatches;
        if (!row.chain_ok) ++report.chain_violations;
        report.corollary_violations += row.violations.size();
    }
    return report;
}

ScanReport run_sylow_bound_scan(const std::vector<CatalogEntry>& entries,
                                const ScanOptions& options) {
    ScanReport report;
    report.kind = "bounds";
    report.total = entries.size();
    std::vector<BoundWork> work(entries.size());
    for_each_entry(entries.size(), options.jobs, [&](std::size_t i) {
        work[i] = bound_rows(entries[i], options.cap);
    });
    for (BoundWork& w : work) {
        if (!w.error.empty()) {
            report.bound_errors.push_back(std::move(w.error));
            ++report.errors;
            continue;
        }
        for (BoundRow& row : w.rows) {
            if (!row.check.ok) ++report.bound_violations;
            if (row.check.tight) ++report.tight;
            report.bounds.push_back(std::move(row));
        }
    }
    return report;
}

std::vector<CorollaryViolation> run_corollary_scan(
    const std::vector<CatalogEntry>& entries, const ScanOptions& options) {
    ScanReport report = run_equivalence_scan(entries, options);
    std::vector<CorollaryViolation> out;
    for (const EquivalenceRow& row : report.rows)
        for (const std::string& label : row.violations)
            out.push_back(CorollaryViolation{row.id, label});
    return out;
}

IntegrityReport run_catalog_integrity(const std::vector<CatalogEntry>& entries,
                                      const ScanOptions& options) {
    IntegrityReport report;
    report.rows.resize(entries.size());
    for_each_entry(entries.size(), options.jobs, [&](std::size_t i) {
        IntegrityRow row;
        row.id = entries[i].id;
        row.spec = entries[i].spec;
        row.claimed = entries[i].order;
        try {
            FiniteGroup g = build_spec(entries[i].spec, options.cap);
            row.built = g.order();
        } catch (const Error& e) {
            row.error = e.what();
        }
        report.rows[i] = std::move(row);
    });
    std::unordered_set<std::string> seen;
    std::set<std::string> dups;
    for (const CatalogEntry& e : entries)
        if (!seen.insert(e.id).second) dups.insert(e.id);
    report.duplicate_ids.assign(dups.begin(), dups.end());
    for (const IntegrityRow& row : report.rows)
        if (!row.error.empty() || row.built != row.claimed) ++report.failures;
    return report;
}

std::vector<CatalogEntry> filter_catalog(const std::vector<CatalogEntry>& entries,
                                         const CatalogSelector& sel) {
    std::vector<CatalogEntry> out;
    if (!sel.ids.empty()) {
        for (const std::string& id : sel.ids) {
            auto it = std::find_if(entries.begin(), entries.end(),
                                   [&](const CatalogEntry& e) { return e.id == id; });
            if (it == entries.end())
                throw DomainError("unknown catalog id: " + id);
            if (it->order <= sel.max_order) out.push_back(*it);
        }
    } else if (!sel.family.empty()) {
        for (const CatalogEntry& e : entries) {
            auto tag = e.tags.find("family");
            if (tag == e.tags.end() || tag->second != sel.family) continue;
            if (sel.m_lo || sel.m_hi) {
                auto mt = e.tags.find("m");
                if (mt == e.tags.end()) continue;
                std::uint32_t m = 0;
                try {
                    m = static_cast<std::uint32_t>(std::stoul(mt->second));
                } catch (const std::exception&) {
                    continue;
                }
                if (sel.m_lo && m < *sel.m_lo) continue;
                if (sel.m_hi && m > *sel.m_hi) continue;
            }
            if (e.order <= sel.max_order) out.push_back(e);
        }
    } else {
        // --all, also the default when no selector is given
        for (const CatalogEntry& e : entries)
            if (e.order <= sel.max_order) out.push_back(e);
    }
    if (out.empty()) throw DomainError("catalog selector matched no entries");
    return out;
}

} // namespace frobspec
