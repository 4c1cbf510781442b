#ifndef VSPREAD_SWEEP_HPP
#define VSPREAD_SWEEP_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "vspread/spread.hpp"

namespace vspread {

/* Exhaustive verification over every valid instance with j_d = n <= n_max,
 * 2 <= d <= d_max, 1 <= t_i <= t_max (non-monotone t included).  Checks:
 *   spread   generator enumeration vs exchange closure; stability
 *   primdec  facet formula vs subset-scan oracle; intersection identity
 *   height   min component size vs j_1
 *   dual     two-route dual, involution, associated primes vs components
 *   split    dual splitting formula, witness trees
 *   linquot  verified linear quotient order for the dual
 *   ntf      condition (c) vs power/symbolic equality up to k_max; witnesses
 *   blocks   relation-graph block structure and analytic spread
 *   fm       randomized (u*J)^(k) = u^k J^(k) over fm_pairs seeded pairs
 * fm runs as its own phase; the rest run per instance. */
struct SweepConfig {
    int n_max = 8;
    int d_max = 4;
    int t_max = 3;
    int k_max = 2;
    int ass_var_cap = 6; // associated-primes oracle bound inside blocks/ntf
    int fm_pairs = 100;
    int fm_vars = 6;
    int fm_k_max = 3;
    unsigned seed = 97;
    std::set<std::string> checks; // empty = all
    int threads = 0;              // 0 = OpenMP default
};

extern const std::vector<std::string> kSweepCheckNames;

std::vector<BorelInstance> enumerate_instances(const SweepConfig& cfg);

struct CheckStats {
    long instances = 0;
    long passed = 0;
    long failed = 0;
    long resource_skipped = 0;
    double seconds = 0.0;
};

struct SweepFailure {
    std::string check;
    std::string instance; // re-runnable literal, or pair description for fm
    std::string detail;
};

struct SweepReport {
    long instance_count = 0;
    std::map<std::string, CheckStats> stats;
    std::vector<SweepFailure> failures;

    bool ok() const { return failures.empty(); }
};

SweepReport run_sweep(const SweepConfig& cfg);        // OpenMP over instances
SweepReport run_sweep_serial(const SweepConfig& cfg); // reference loop

} // namespace vspread

#endif
