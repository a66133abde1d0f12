#include "frobspec/render.hpp"

#include "frobspec/perm.hpp"

#include <iomanip>
#include <sstream>

namespace frobspec {

namespace {

Json opt_json(const std::optional<std::uint64_t>& v) {
    if (v) return *v;
    return nullptr;
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

} // namespace

Json report_json(const FrobeniusReport& r) {
    Json j;
    j["order"] = r.order;
    j["exponent"] = r.exponent;
    j["smallest_prime"] = opt_json(r.smallest_prime);
    Json table = Json::array();
    for (const FrobeniusRow& row : r.table) {
        Json jr;
        jr["n"] = row.n;
        jr["fn_count"] = row.fn_count;
        jr["fn_quot"] = row.fn_quot;
        table.push_back(std::move(jr));
    }
    j["table"] = std::move(table);
    j["spectra"] = Json{{"full", r.full}, {"even", r.even}, {"pp", r.pp}};
    j["maxima"] = Json{{"mf", r.mf},
                       {"mfe", opt_json(r.mfe)},
                       {"mf_pp", r.mf_pp},
                       {"B", r.b}};
    return j;
}

Json verdict_json(const Verdict& v) {
    Json j;
    j["in_class"] = v.in_class;
    j["case"] = to_string(v.case_tag);
    j["q"] = opt_json(v.q);
    if (v.shape)
        j["shape"] = to_string(v.shape->tag);
    else
        j["shape"] = nullptr;
    if (v.case_tag == CaseTag::None) {
        j["parameters"] = nullptr;
    } else {
        j["parameters"] = Json{{"m", v.m}, {"cyclic_part", v.cyclic_part}};
    }
    Json wits = Json::array();
    for (const Permutation& w : v.witnesses) wits.push_back(cycle_string(w));
    j["witnesses"] = std::move(wits);
    j["reason"] = v.reason;
    return j;
}

Json census_json(const OrderCensus& c) {
    Json j;
    for (const auto& [order, count] : c) j[std::to_string(order)] = count;
    return j;
}

Json scan_json(const ScanReport& r) {
    Json j;
    Json summary;
    summary["kind"] = r.kind;
    summary["total"] = r.total;
    summary["errors"] = r.errors;
    if (r.kind == "equivalence") {
        summary["in_class"] = r.in_class;
        summary["mismatches"] = r.mismatches;
        summary["corollary_violations"] = r.corollary_violations;
        summary["chain_violations"] = r.chain_violations;
    } else {
        summary["rows"] = r.bounds.size();
        summary["violations"] = r.bound_violations;
        summary["tight"] = r.tight;
    }
    summary["ok"] = r.ok();
    j["summary"] = std::move(summary);

    if (r.kind == "equivalence") {
        Json rows = Json::array();
        for (const EquivalenceRow& row : r.rows) {
            Json jr;
            jr["id"] = row.id;
            jr["spec"] = row.spec;
            if (!row.error.empty()) {
                jr["error"] = row.error;
                rows.push_back(std::move(jr));
                continue;
            }
            jr["order"] = row.report.order;
            jr["exponent"] = row.report.exponent;
            jr["q"] = opt_json(row.report.smallest_prime);
            jr["mf_pp"] = row.report.mf_pp;
            jr["in_class"] = row.verdict.in_class;
            jr["case"] = to_string(row.verdict.case_tag);
            jr["agree"] = row.agree;
            jr["chain_ok"] = row.chain_ok;
            jr["violations"] = row.violations;
            rows.push_back(std::move(jr));
        }
        j["entries"] = std::move(rows);
    } else {
        Json rows = Json::array();
        for (const BoundRow& row : r.bounds) {
            Json jr;
            jr["id"] = row.id;
            jr["prime"] = row.check.prime;
            jr["m"] = row.check.m;
            jr["sylow_order"] = row.check.sylow_order;
            jr["count"] = row.check.count;
            jr["bound"] = row.check.bound;
            jr["actual"] = row.check.actual;
            jr["ok"] = row.check.ok;
            jr["tight"] = row.check.tight;
            rows.push_back(std::move(jr));
        }
        j["bounds"] = std::move(rows);
        j["errors"] = r.bound_errors;
    }
    return j;
}

std::string report_table(const FrobeniusReport& r) {
    std::ostringstream out;
    out << "order    " << r.order << "\n";
    out << "exponent " << r.exponent << "\n";
    out << "q        ";
    if (r.smallest_prime)
        out << *r.smallest_prime << "\n";
    else
        out << "-\n";
    out << "\n";
    out << std::setw(8) << "n" << std::setw(12) << "|F_n|" << std::setw(8)
        << "f_n" << "\n";
    for (const FrobeniusRow& row : r.table) {
        out << std::setw(8) << row.n << std::setw(12) << row.fn_count
            << std::setw(8) << row.fn_quot << "\n";
    }
    out << "\n";
    auto list = [&](const std::vector<std::uint64_t>& v) {
        std::ostringstream s;
        s << "{";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s << ", ";
            s << v[i];
        }
        s << "}";
        return s.str();
    };
    out << "F      " << list(r.full) << "\n";
    out << "F'     " << list(r.even) << "\n";
    out << "F_pp   " << list(r.pp) << "\n";
    out << "mf     " << r.mf << "\n";
    out << "mfe    ";
    if (r.mfe)
        out << *r.mfe << "\n";
    else
        out << "-\n";
    out << "mf_pp  " << r.mf_pp << "\n";
    out << "B      " << r.b << "\n";
    return out.str();
}

std::string verdict_table(const Verdict& v) {
    std::ostringstream out;
    out << "in_class " << yesno(v.in_class) << "\n";
    out << "case     " << to_string(v.case_tag) << "\n";
    out << "q        ";
    if (v.q)
        out << *v.q << "\n";
    else
        out << "-\n";
    if (v.shape) out << "shape    " << to_string(v.shape->tag) << "\n";
    if (v.case_tag != CaseTag::None) {
        out << "m        " << v.m << "\n";
        out << "cyclic   " << v.cyclic_part << "\n";
    }
    for (const Permutation& w : v.witnesses)
        out << "witness  " << cycle_string(w) << "\n";
    out << "reason   " << v.reason << "\n";
    return out.str();
}

std::string census_table(const OrderCensus& c) {
    std::ostringstream out;
    out << std::setw(8) << "order" << std::setw(8) << "count" << "\n";
    for (const auto& [order, count] : c)
        out << std::setw(8) << order << std::setw(8) << count << "\n";
    return out.str();
}

std::string scan_table(const ScanReport& r) {
    std::ostringstream out;
    if (r.kind == "equivalence") {
        out << std::left << std::setw(22) << "id" << std::right << std::setw(7)
            << "order" << std::setw(6) << "exp" << std::setw(4) << "q"
            << std::setw(7) << "mf_pp" << "  " << std::left << std::setw(6)
            << "case" << "in_class agree\n";
        for (const EquivalenceRow& row : r.rows) {
            if (!row.error.empty()) {
                out << std::left << std::setw(22) << row.id
                    << "ERROR: " << row.error << "\n";
                continue;
            }
            out << std::left << std::setw(22) << row.id << std::right
                << std::setw(7) << row.report.order << std::setw(6)
                << row.report.exponent << std::setw(4);
            if (row.report.smallest_prime)
                out << *row.report.smallest_prime;
            else
                out << "-";
            out << std::setw(7) << row.report.mf_pp << "  " << std::left
                << std::setw(6) << to_string(row.verdict.case_tag)
                << std::setw(9) << yesno(row.verdict.in_class)
                << yesno(row.agree);
            if (!row.violations.empty()) {
                out << "  violations:";
                for (const std::string& v : row.violations) out << " " << v;
            }
            if (!row.chain_ok) out << "  chain-broken";
            out << "\n";
        }
        out << "\n";
        out << "total " << r.total << ", errors " << r.errors << ", in_class "
            << r.in_class << ", mismatches " << r.mismatches
            << ", corollary violations " << r.corollary_violations
            << ", chain violations " << r.chain_violations << "\n";
    } else {
        out << std::left << std::setw(22) << "id" << std::right << std::setw(4)
            << "q" << std::setw(4) << "m" << std::setw(6) << "t" << std::setw(10)
            << "bound" << std::setw(10) << "actual" << "  status\n";
        for (const BoundRow& row : r.bounds) {
            out << std::left << std::setw(22) << row.id << std::right
                << std::setw(4) << row.check.prime << std::setw(4)
                << row.check.m << std::setw(6) << row.check.count
                << std::setw(10) << row.check.bound << std::setw(10)
                << row.check.actual << "  "
                << (row.check.ok ? (row.check.tight ? "tight" : "ok")
                                 : "VIOLATION")
                << "\n";
        }
        for (const std::string& e : r.bound_errors) out << "ERROR: " << e << "\n";
        out << "\n";
        out << "rows " << r.bounds.size() << ", errors " << r.errors
            << ", violations " << r.bound_violations << ", tight " << r.tight
            << "\n";
    }
    return out.str();
}

} // namespace frobspec
