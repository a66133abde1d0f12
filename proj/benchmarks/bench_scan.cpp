// Compares the serial reference scan kernel against the worker-parallel one
// over the built-in corpus. Wall-clock timing, one warmup pass.

#include "frobspec/catalog.hpp"
#include "frobspec/render.hpp"
#include "frobspec/scan.hpp"

#include <chrono>
#include <cstdio>
#include <string>
#include <thread>
#include <vector>

using namespace frobspec;
using Clock = std::chrono::steady_clock;

namespace {

double run_once(const std::vector<CatalogEntry>& entries, int jobs) {
    ScanOptions opt;
    opt.jobs = jobs;
    auto start = Clock::now();
    ScanReport rep = run_equivalence_scan(entries, opt);
    double dt = std::chrono::duration<double>(Clock::now() - start).count();
    if (!rep.ok()) std::printf("  warning: scan not clean at jobs=%d\n", jobs);
    return dt;
}

} // namespace

int main(int argc, char** argv) {
    std::uint64_t max_order = 500;
    if (argc > 1) max_order = std::stoull(argv[1]);

    std::vector<CatalogEntry> entries;
    for (const CatalogEntry& e : load_catalog())
        if (e.order <= max_order) entries.push_back(e);
    std::printf("equivalence scan over %zu entries (order <= %llu)\n",
                entries.size(),
                static_cast<unsigned long long>(max_order));

    run_once(entries, 1); // warmup

    double serial = 0.0;
    unsigned cores = std::thread::hardware_concurrency();
    if (cores == 0) cores = 1;
    std::vector<int> sweep{1, 2, 4};
    if (static_cast<int>(cores) > 4) sweep.push_back(static_cast<int>(cores));
    for (int jobs : sweep) {
        double best = 1e18;
        for (int rep = 0; rep < 3; ++rep) {
            double dt = run_once(entries, jobs);
            if (dt < best) best = dt;
        }
        if (jobs == 1) serial = best;
        std::printf("  jobs=%-2d  %8.1f ms  speedup %.2fx\n", jobs, best * 1e3,
                    serial / best);
    }

    // serial and parallel kernels must agree byte for byte
    ScanOptions s1, s4;
    s1.jobs = 1;
    s4.jobs = 4;
    std::string a = scan_json(run_equivalence_scan(entries, s1)).dump();
    std::string b = scan_json(run_equivalence_scan(entries, s4)).dump();
    std::printf("kernel agreement: %s\n", a == b ? "identical" : "DIVERGED");
    return a == b ? 0 : 1;
}
