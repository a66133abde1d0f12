#pragma once

#include "frobspec/catalog.hpp"
#include "frobspec/census.hpp"
#include "frobspec/classify.hpp"
#include "frobspec/group.hpp"
#include "frobspec/sylow.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace frobspec {

struct ScanOptions {
    std::uint64_t cap = kDefaultOrderCap;
    int jobs = 1; // 1 runs the serial reference kernel, > 1 the parallel one
};

/// One catalog entry's equivalence record. If `error` is nonempty the build
/// failed and every other computed field is meaningless.
struct EquivalenceRow {
    std::string id;
    std::string spec;
    std::string error;
    FrobeniusReport report;
    Verdict verdict;
    bool le_q = false; // mf_pp <= q, vacuously true for the trivial group
    bool agree = false;
    bool chain_ok = false; // mf_pp <= B <= mf
    std::vector<std::string> violations; // corollary labels, empty if clean
};

/// One cyclic-Sylow bound record: |F_{q^m}| >= q^m + (t-1)(q^m - q^(m-1)).
struct BoundRow {
    std::string id;
    BoundCheck check;
};

struct CorollaryViolation {
    std::string id;
    std::string label; // pp-subset, below-q-cyclic, two-element-floor
};

struct ScanReport {
    std::string kind; // "equivalence" or "bounds"
    std::vector<EquivalenceRow> rows;
    std::vector<BoundRow> bounds;
    std::vector<std::string> bound_errors; // "id: message" per failed build
    std::size_t total = 0;
    std::size_t errors = 0;
    std::size_t in_class = 0;
    std::size_t mismatches = 0;
    std::size_t corollary_violations = 0;
    std::size_t chain_violations = 0;
    std::size_t bound_violations = 0;
    std::size_t tight = 0;

    bool ok() const {
        return errors == 0 && mismatches == 0 && corollary_violations == 0 &&
               chain_violations == 0 && bound_violations == 0;
    }
};

/// Per entry: build, full report, structural verdict, and the agreement bit
/// between mf_pp <= q and the recognizer. Rows keep catalog order no matter
/// how many workers run.
ScanReport run_equivalence_scan(const std::vector<CatalogEntry>& entries,
                                const ScanOptions& options = {});

/// Per entry and per prime with a cyclic Sylow subgroup: the solution-count
/// lower bound record, with tight cases flagged.
ScanReport run_sylow_bound_scan(const std::vector<CatalogEntry>& entries,
                                const ScanOptions& options = {});

/// The corollary slice of the equivalence scan, as a flat violation list.
std::vector<CorollaryViolation> run_corollary_scan(
    const std::vector<CatalogEntry>& entries, const ScanOptions& options = {});

struct IntegrityRow {
    std::string id;
    std::string spec;
    std::uint64_t claimed = 0;
    std::uint64_t built = 0; // 0 if the build failed
    std::string error;
};

struct IntegrityReport {
    std::vector<IntegrityRow> rows;
    std::vector<std::string> duplicate_ids;
    std::size_t failures = 0;
    bool ok() const { return failures == 0 && duplicate_ids.empty(); }
};

/// Every entry must build at its claimed order and ids must be unique.
IntegrityReport run_catalog_integrity(const std::vector<CatalogEntry>& entries,
                                      const ScanOptions& options = {});

struct CatalogSelector {
    bool all = false;
    std::string family;                 // with optional m_lo..m_hi below
    std::optional<std::uint32_t> m_lo;
    std::optional<std::uint32_t> m_hi;
    std::vector<std::string> ids;
    std::uint64_t max_order = 200;
};

/// Apply a selector to the catalog. Unknown ids or an empty selection throw
/// DomainError; the order cap applies to every selector uniformly.
std::vector<CatalogEntry> filter_catalog(const std::vector<CatalogEntry>& entries,
                                         const CatalogSelector& sel);

} // namespace frobspec
