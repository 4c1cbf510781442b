#include <chrono>
#include <cstdio>

#include "vspread/decomposition.hpp"
#include "vspread/spread.hpp"
#include "vspread/sweep.hpp"

using namespace vspread;

static double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int main() {
    // facet oracle: one chunky instance, serial vs parallel
    BorelInstance inst = validate_instance(16, {1, 1, 1}, {13, 14, 15, 16});
    MonomialIdeal ideal = borel_gens(inst);

    auto t0 = std::chrono::steady_clock::now();
    auto serial_facets = facets_oracle_serial(ideal, inst.n);
    double serial_s = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    auto parallel_facets = facets_oracle(ideal, inst.n);
    double parallel_s = seconds_since(t0);

    std::printf("facet oracle on %s (%zu gens, 2^%d masks)\n", inst.str().c_str(),
                ideal.gen_count(), inst.n);
    std::printf("  serial    %8.3fs  %zu facets\n", serial_s, serial_facets.size());
    std::printf("  parallel  %8.3fs  %zu facets  %s\n", parallel_s,
                parallel_facets.size(),
                serial_facets == parallel_facets ? "match" : "MISMATCH");

    // sweep: the full per-instance battery at a reduced size
    SweepConfig cfg;
    cfg.n_max = 6;
    cfg.fm_pairs = 25;

    t0 = std::chrono::steady_clock::now();
    SweepReport serial_report = run_sweep_serial(cfg);
    serial_s = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    SweepReport parallel_report = run_sweep(cfg);
    parallel_s = seconds_since(t0);

    bool same = serial_report.instance_count == parallel_report.instance_count &&
                serial_report.failures.size() == parallel_report.failures.size();
    std::printf("sweep to n_max=%d (%ld instances)\n", cfg.n_max,
                serial_report.instance_count);
    std::printf("  serial    %8.3fs\n", serial_s);
    std::printf("  parallel  %8.3fs  %s\n", parallel_s, same ? "match" : "MISMATCH");
    return same && serial_facets == parallel_facets ? 0 : 1;
}
