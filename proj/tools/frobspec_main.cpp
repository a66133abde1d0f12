#include "frobspec/catalog.hpp"
#include "frobspec/census.hpp"
#include "frobspec/classify.hpp"
#include "frobspec/constructors.hpp"
#include "frobspec/errors.hpp"
#include "frobspec/render.hpp"
#include "frobspec/scan.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

namespace {

using namespace frobspec;

std::uint64_t resolve_cap(const std::optional<std::uint64_t>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("FROBSPEC_CAP")) {
        try {
            std::size_t used = 0;
            std::string s(env);
            std::uint64_t v = std::stoull(s, &used);
            if (used != s.size() || v == 0) throw std::invalid_argument("cap");
            return v;
        } catch (const std::exception&) {
            throw DomainError("FROBSPEC_CAP is not a positive integer");
        }
    }
    return kDefaultOrderCap;
}

int default_jobs() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : static_cast<int>(n);
}

void parse_m_range(const std::string& text, CatalogSelector& sel) {
    std::size_t dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            sel.m_lo = sel.m_hi = static_cast<std::uint32_t>(std::stoul(text));
            return;
        }
        sel.m_lo = static_cast<std::uint32_t>(std::stoul(text.substr(0, dots)));
        sel.m_hi = static_cast<std::uint32_t>(std::stoul(text.substr(dots + 2)));
    } catch (const std::exception&) {
        throw DomainError("bad m-range, expected a..b: " + text);
    }
    if (*sel.m_lo > *sel.m_hi) throw DomainError("empty m-range: " + text);
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DomainError("cannot write file: " + path);
    out << text;
    if (!out) throw DomainError("write failed: " + path);
}

struct ScanArgs {
    bool all = false;
    std::string family;
    std::string m_range;
    std::vector<std::string> ids;
    std::uint64_t max_order = 200;
    std::optional<std::uint64_t> cap;
    int jobs = default_jobs();
    std::string format = "table";
    std::string catalog_file;
    std::string write_catalog;
    std::string out_prefix;
    bool lemma1 = false;
};

void add_scan_options(CLI::App* cmd, ScanArgs& args) {
    auto* all = cmd->add_flag("--all", args.all, "scan the whole catalog");
    auto* fam = cmd->add_option("--family", args.family,
                                "scan one family tag (C, AB, D, Q, SD, M, Modd, B, SDP, perm)");
    auto* ids = cmd->add_option("--ids", args.ids,
                                "scan specific catalog ids (comma separated)")
                    ->delimiter(',');
    cmd->add_option("--m-range", args.m_range,
                    "parameter range a..b, only with --family")
        ->needs(fam);
    all->excludes(fam);
    all->excludes(ids);
    fam->excludes(ids);
    cmd->add_option("--max-order", args.max_order,
                    "skip entries above this order (default 200)");
    cmd->add_option("--cap", args.cap, "closure cap (default 10000)");
    cmd->add_option("--jobs", args.jobs, "worker count, 1 = serial")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--format", args.format, "output format")
        ->check(CLI::IsMember({"json", "table"}));
    cmd->add_option("--catalog", args.catalog_file,
                    "read entries from a TSV file instead of the built-in corpus");
    cmd->add_option("--write-catalog", args.write_catalog,
                    "write the selected entries as TSV to this path");
    cmd->add_option("--out", args.out_prefix,
                    "write PREFIX.json and PREFIX.txt reports");
}

int run_scan(const ScanArgs& args) {
    std::vector<CatalogEntry> corpus =
        args.catalog_file.empty() ? load_catalog()
                                  : load_catalog_file(args.catalog_file);
    CatalogSelector sel;
    sel.max_order = args.max_order;
    if (!args.ids.empty()) {
        sel.ids = args.ids;
    } else if (!args.family.empty()) {
        sel.family = args.family;
        if (!args.m_range.empty()) parse_m_range(args.m_range, sel);
    } else {
        sel.all = true; // default selector
    }
    std::vector<CatalogEntry> entries = filter_catalog(corpus, sel);
    if (!args.write_catalog.empty())
        write_catalog_file(args.write_catalog, entries);

    ScanOptions options;
    options.cap = resolve_cap(args.cap);
    options.jobs = args.jobs;
    ScanReport report = args.lemma1 ? run_sylow_bound_scan(entries, options)
                                    : run_equivalence_scan(entries, options);

    if (args.format == "json")
        std::cout << scan_json(report).dump(2) << "\n";
    else
        std::cout << scan_table(report);
    if (!args.out_prefix.empty()) {
        write_text_file(args.out_prefix + ".json",
                        scan_json(report).dump(2) + "\n");
        write_text_file(args.out_prefix + ".txt", scan_table(report));
    }
    return report.ok() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"frobspec: solution counts g^n = 1 in small finite groups"};
    app.require_subcommand(1);

    std::string info_spec, classify_spec, census_spec;
    std::string info_format = "table", classify_format = "table",
                census_format = "table";
    std::optional<std::uint64_t> info_cap, classify_cap, census_cap;

    auto* info = app.add_subcommand(
        "info", "order, exponent, solution counts and quotient spectra");
    info->add_option("spec", info_spec, "group spec, e.g. \"Q8 x C(7)\"")
        ->required();
    info->add_option("--format", info_format, "output format")
        ->check(CLI::IsMember({"json", "table"}));
    info->add_option("--cap", info_cap, "closure cap (default 10000)");

    auto* classify = app.add_subcommand(
        "classify", "structural recognizer with witnesses");
    classify->add_option("spec", classify_spec, "group spec")->required();
    classify->add_option("--format", classify_format, "output format")
        ->check(CLI::IsMember({"json", "table"}));
    classify->add_option("--cap", classify_cap, "closure cap (default 10000)");

    auto* census = app.add_subcommand("census", "element order census");
    census->add_option("spec", census_spec, "group spec")->required();
    census->add_option("--format", census_format, "output format")
        ->check(CLI::IsMember({"json", "table"}));
    census->add_option("--cap", census_cap, "closure cap (default 10000)");

    ScanArgs scan_args;
    auto* scan = app.add_subcommand("scan", "batch verification over the catalog");
    add_scan_options(scan, scan_args);
    scan->add_flag("--lemma1", scan_args.lemma1,
                   "check the cyclic-Sylow solution-count lower bound");

    ScanArgs lemma1_args;
    lemma1_args.lemma1 = true;
    auto* lemma1 = app.add_subcommand(
        "lemma1", "cyclic-Sylow bound scan (alias for scan --lemma1)");
    add_scan_options(lemma1, lemma1_args);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*info) {
            FiniteGroup g = build_spec(info_spec, resolve_cap(info_cap));
            FrobeniusReport r = full_report(g);
            if (info_format == "json")
                std::cout << report_json(r).dump(2) << "\n";
            else
                std::cout << report_table(r);
            return 0;
        }
        if (*classify) {
            FiniteGroup g = build_spec(classify_spec, resolve_cap(classify_cap));
            FrobeniusReport r = full_report(g);
            Verdict v = classify_group(g);
            bool le_q = !r.smallest_prime || r.mf_pp <= *r.smallest_prime;
            bool agree = (le_q == v.in_class);
            if (classify_format == "json") {
                Json j = verdict_json(v);
                j["mf_pp"] = r.mf_pp;
                j["agree"] = agree;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << verdict_table(v);
                std::cout << "mf_pp    " << r.mf_pp << "\n";
                std::cout << "agree    " << (agree ? "yes" : "no") << "\n";
            }
            return 0;
        }
        if (*census) {
            FiniteGroup g = build_spec(census_spec, resolve_cap(census_cap));
            OrderCensus c = order_census(g);
            if (census_format == "json") {
                Json j;
                j["order"] = g.order();
                j["exponent"] = exponent(c);
                j["census"] = census_json(c);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "order    " << g.order() << "\n";
                std::cout << "exponent " << exponent(c) << "\n";
                std::cout << census_table(c);
            }
            return 0;
        }
        if (*scan) return run_scan(scan_args);
        if (*lemma1) return run_scan(lemma1_args);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
