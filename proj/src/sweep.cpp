#include "vspread/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include "vspread/decomposition.hpp"
#include "vspread/duality.hpp"
#include "vspread/powers.hpp"
#include "vspread/relation_graph.hpp"

#ifdef VSPREAD_OPENMP
#include <omp.h>
#endif

namespace vspread {

const std::vector<std::string> kSweepCheckNames = {
    "spread", "primdec", "height", "dual", "split",
    "linquot", "ntf", "blocks", "fm"};

namespace {

void enumerate_u(int n, const std::vector<int>& t, std::vector<int>& u,
                 std::vector<BorelInstance>& out) {
    const int d = static_cast<int>(t.size()) + 1;
    const int pos = static_cast<int>(u.size());
    if (pos == d - 1) {
        int last = pos == 0 ? 0 : u.back();
        int gap = pos == 0 ? 1 : t[pos - 1];
        if (n - last >= gap) {
            u.push_back(n);
            out.push_back(validate_instance(n, t, u));
            u.pop_back();
        }
        return;
    }
    int lo = pos == 0 ? 1 : u.back() + t[pos - 1];
    int slack = 0; // room the remaining gaps still need below n
    for (int s = pos; s < d - 1; ++s)
        slack += t[s];
    for (int j = lo; j + slack <= n; ++j) {
        u.push_back(j);
        enumerate_u(n, t, u, out);
        u.pop_back();
    }
}

} // namespace

std::vector<BorelInstance> enumerate_instances(const SweepConfig& cfg) {
    std::vector<BorelInstance> out;
    for (int n = 2; n <= cfg.n_max; ++n) {
        for (int d = 2; d <= std::min(cfg.d_max, n); ++d) {
            std::vector<int> t(static_cast<std::size_t>(d) - 1, 1);
            while (true) {
                std::vector<int> u;
                enumerate_u(n, t, u, out);
                int slot = d - 2; // advance t like an odometer, lex ascending
                while (slot >= 0 && t[slot] == cfg.t_max)
                    t[slot--] = 1;
                if (slot < 0)
                    break;
                ++t[slot];
            }
        }
    }
    return out;
}

namespace {

Monomial lift(const Monomial& m, int n) {
    std::vector<int> idx;
    for (int i : m.support_indices())
        for (int e = 0; e < m.exponent(i); ++e)
            idx.push_back(i);
    return Monomial::from_indices(n, idx);
}

MonomialIdeal lift(const MonomialIdeal& a, int n) {
    std::vector<Monomial> gens;
    for (const Monomial& g : a.gens())
        gens.push_back(lift(g, n));
    return MonomialIdeal::make(n, std::move(gens));
}

std::vector<PrimeSupport> oracle_components(const MonomialIdeal& a) {
    const int n = a.vars();
    const std::uint64_t full = n == 64 ? ~0ull : (1ull << n) - 1;
    std::vector<PrimeSupport> out;
    for (std::uint64_t f : facets_oracle(a, n))
        out.emplace_back(n, full & ~f);
    return out;
}

void check_spread(const BorelInstance& inst, const SweepConfig&) {
    MonomialIdeal ideal = borel_gens(inst);
    Monomial u = Monomial::from_indices(inst.n, inst.u);
    std::vector<Monomial> seed = {u};
    if (!(ideal == borel_closure(inst.n, seed, inst.t)))
        throw ConsistencyError("enumerated generators differ from the exchange closure");
    for (const Monomial& g : ideal.gens())
        if (!is_t_spread(g, inst.t))
            throw ConsistencyError("generator " + g.str() + " is not t-spread");
    if (!is_t_strongly_stable(ideal, inst.t))
        throw ConsistencyError("ideal is not t-spread strongly stable");
}

void check_primdec(const BorelInstance& inst, const SweepConfig&) {
    MonomialIdeal ideal = borel_gens(inst);
    std::vector<std::uint64_t> predicted = facets_theorem(inst);
    std::vector<std::uint64_t> scanned = facets_oracle(ideal, inst.n);
    if (predicted != scanned)
        throw ConsistencyError("facet formula disagrees with the subset scan (" +
                               std::to_string(predicted.size()) + " vs " +
                               std::to_string(scanned.size()) + " facets)");
    primary_decomposition(inst); // re-verifies the intersection identity
}

void check_height(const BorelInstance& inst, const SweepConfig&) {
    if (height(inst) != inst.u.front())
        throw ConsistencyError("height differs from j_1");
}

void check_dual(const BorelInstance& inst, const SweepConfig&) {
    MonomialIdeal ideal = borel_gens(inst);
    MonomialIdeal dual = alexander_dual(ideal);
    if (!(alexander_dual(dual) == ideal))
        throw ConsistencyError("duality is not an involution here");

    std::vector<std::uint64_t> component_masks, dual_supports, ass_masks;
    for (const PrimeSupport& p : primary_decomposition(inst))
        component_masks.push_back(p.mask());
    for (const Monomial& g : dual.gens())
        dual_supports.push_back(g.support());
    for (const PrimeSupport& p : associated_primes(ideal))
        ass_masks.push_back(p.mask());
    std::sort(component_masks.begin(), component_masks.end());
    std::sort(dual_supports.begin(), dual_supports.end());
    std::sort(ass_masks.begin(), ass_masks.end());
    if (component_masks != dual_supports)
        throw ConsistencyError("dual generators do not match the components");
    if (component_masks != ass_masks)
        throw ConsistencyError("associated primes do not match the components");

    /* (I ∩ J)^v = I^v + J^v, exercised with J = I^v */
    if (!(alexander_dual(intersect(ideal, dual)) == sum(dual, ideal)))
        throw ConsistencyError("dual of the intersection is not the sum of duals");
}

void check_split(const BorelInstance& inst, const SweepConfig&) {
    DualSplit ds = dual_split(inst); // reconstructs and checks containment
    instance_dual_split_tree(inst);  // verified witness tree
    auto free_tree = vertex_split_tree(ds.dual);
    if (!free_tree)
        throw ConsistencyError("free splitting search failed on the dual");
    if (!verify_split_tree(ds.dual, *free_tree))
        throw ConsistencyError("free splitting witness fails verification");
}

void check_linquot(const BorelInstance& inst, const SweepConfig&) {
    MonomialIdeal dual = dual_split(inst).dual;
    auto tree = instance_dual_split_tree(inst);
    std::vector<Monomial> order = split_induced_order(*tree);
    if (!verify_quotient_order(inst.n, order))
        throw ConsistencyError("split-induced order fails the quotient check");
    std::vector<Monomial> sorted = order;
    std::sort(sorted.begin(), sorted.end(), Monomial::canonical_less);
    if (!(sorted == dual.gens()))
        throw ConsistencyError("split-induced order is not a permutation of the dual");
    auto found = linear_quotients_order(dual);
    if (!found)
        throw ConsistencyError("generic linear-quotient search came up empty");
}

/* expected B_t(v) with I^{<= 1 - e_{j_i}} per the two-case restriction rule */
MonomialIdeal expected_restriction(const BorelInstance& inst, int i) {
    std::vector<int> v = inst.u;
    if (i >= 2 && inst.u[i - 1] - inst.u[i - 2] == inst.t[i - 2]) {
        int chain = i; // smallest m >= 2 with every gap in [m, i] tight
        while (chain > 2 && inst.u[chain - 2] - inst.u[chain - 3] == inst.t[chain - 3])
            --chain;
        for (int pos = chain - 1; pos <= i; ++pos)
            --v[pos - 1];
    } else {
        --v[i - 1];
    }
    return lift(borel_gens(validate_instance(v.back(), inst.t, v)), inst.n);
}

void check_ntf(const BorelInstance& inst, const SweepConfig& cfg) {
    NtfVerdict verdict = classify_ntf(inst, cfg.k_max);
    if (verdict.satisfied) {
        for (const NtfCheck& c : verdict.checks)
            if (!c.equal)
                throw ConsistencyError("condition (c) holds but I^" +
                                       std::to_string(c.k) + " != I^(" +
                                       std::to_string(c.k) + ")");
        /* every component meets {x_{j_1}..x_{j_d}} in at most one variable */
        for (const PrimeSupport& p : primary_decomposition(inst)) {
            int met = 0;
            for (int j : inst.u)
                if (p.contains(j))
                    ++met;
            if (met > 1)
                throw ConsistencyError("a component contains " + std::to_string(met) +
                                       " of the x_{j_i}");
        }
        bool all_blocks_big = true;
        for (auto [lo, hi] : blocks(inst))
            if (hi - lo + 1 < 2)
                all_blocks_big = false;
        if (all_blocks_big) {
            MonomialIdeal ideal = borel_gens(inst);
            for (int i = 1; i <= static_cast<int>(inst.u.size()); ++i) {
                std::vector<int> bounds(static_cast<std::size_t>(inst.n), 1);
                bounds[inst.u[i - 1] - 1] = 0;
                if (!(a_restriction(ideal, bounds) == expected_restriction(inst, i)))
                    throw ConsistencyError("restriction at j_" + std::to_string(i) +
                                           " is not the predicted instance");
            }
        }
    } else {
        if (!verdict.certificate)
            throw ConsistencyError("violated instance came back without a certificate");
        const NtfCertificate& cert = *verdict.certificate;
        if (!cert.witness_in_symbolic2 || cert.witness_in_power2)
            throw ConsistencyError("witness flags are wrong");
        if (verdict.checks.empty() || verdict.checks.front().equal)
            throw ConsistencyError("original instance should separate at k = 2");
    }
}

void check_blocks(const BorelInstance& inst, const SweepConfig& cfg) {
    BlockReport report = block_structure_check(inst, cfg.k_max, cfg.ass_var_cap);
    if (!report.all_ok()) {
        std::string what = "block report flags:";
        if (!report.blocks_match_vertices) what += " vertices";
        if (!report.blocks_complete) what += " cliques";
        if (!report.blocks_disjoint) what += " disjoint";
        if (!report.graph_is_block_cliques) what += " exact-graph";
        if (report.max_ideal_not_associated == false) what += " max-ideal";
        throw ConsistencyError(what);
    }
    MonomialIdeal ideal = borel_gens(inst);
    if (ideal.gen_count() == 1 && report.analytic_spread != 1)
        throw ConsistencyError("principal ideal with analytic spread != 1");
    if (report.condition_c && ideal.gen_count() > 1 &&
        report.analytic_spread >= inst.n)
        throw ConsistencyError("analytic spread not below n under condition (c)");
}

using CheckFn = void (*)(const BorelInstance&, const SweepConfig&);

const std::vector<std::pair<std::string, CheckFn>> kInstanceChecks = {
    {"spread", check_spread},   {"primdec", check_primdec},
    {"height", check_height},   {"dual", check_dual},
    {"split", check_split},     {"linquot", check_linquot},
    {"ntf", check_ntf},         {"blocks", check_blocks},
};

struct Outcome {
    enum class Status { Pass, Fail, Skip } status;
    std::string check;
    std::string detail;
    double seconds = 0.0;
};

std::vector<Outcome> evaluate_instance(const BorelInstance& inst,
                                       const SweepConfig& cfg,
                                       const std::set<std::string>& selected) {
    std::vector<Outcome> outcomes;
    for (const auto& [name, fn] : kInstanceChecks) {
        if (!selected.count(name))
            continue;
        Outcome o;
        o.check = name;
        auto start = std::chrono::steady_clock::now();
        try {
            fn(inst, cfg);
            o.status = Outcome::Status::Pass;
        } catch (const ResourceLimit& e) {
            o.status = Outcome::Status::Skip;
            o.detail = e.what();
        } catch (const std::exception& e) {
            o.status = Outcome::Status::Fail;
            o.detail = e.what();
        }
        o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                  start)
                        .count();
        outcomes.push_back(std::move(o));
    }
    return outcomes;
}

std::set<std::string> resolve_checks(const SweepConfig& cfg) {
    std::set<std::string> all(kSweepCheckNames.begin(), kSweepCheckNames.end());
    if (cfg.checks.empty())
        return all;
    for (const std::string& name : cfg.checks)
        if (!all.count(name))
            throw InvalidInput("unknown sweep check: " + name);
    return cfg.checks;
}

void run_fm_phase(const SweepConfig& cfg, SweepReport& report) {
    auto start = std::chrono::steady_clock::now();
    CheckStats& stats = report.stats["fm"];

    SweepConfig pool_cfg;
    pool_cfg.n_max = cfg.fm_vars - 1;
    pool_cfg.d_max = 3;
    pool_cfg.t_max = 2;
    std::vector<BorelInstance> pool = enumerate_instances(pool_cfg);
    if (pool.empty() || cfg.fm_vars < 3 || cfg.fm_vars > 16)
        throw InvalidInput("fm phase needs 3 <= fm_vars <= 16");

    for (int p = 0; p < cfg.fm_pairs; ++p) {
        std::mt19937 rng(cfg.seed * 1000003u + static_cast<unsigned>(p));
        const BorelInstance& j_inst = pool[rng() % pool.size()];
        int free_vars = cfg.fm_vars - j_inst.n;
        std::uint64_t pickable = (1ull << free_vars) - 1;
        std::uint64_t subset = pickable ? 1 + rng() % pickable : 0;
        std::vector<int> u_idx;
        for (int b = 0; b < free_vars; ++b)
            if (subset >> b & 1)
                u_idx.push_back(j_inst.n + 1 + b);
        Monomial u = Monomial::from_indices(cfg.fm_vars, u_idx);

        std::ostringstream label;
        label << "pair " << p << ": J = {" << j_inst.str() << "}, u = " << u.str();
        ++stats.instances;
        try {
            MonomialIdeal part = lift(borel_gens(j_inst), cfg.fm_vars);
            MonomialIdeal product = multiply(part, u);
            std::vector<PrimeSupport> product_comps = oracle_components(product);
            std::vector<PrimeSupport> part_comps = oracle_components(part);
            bool good = true;
            for (int k = 1; k <= cfg.fm_k_max && good; ++k) {
                MonomialIdeal lhs = symbolic_power_from(product_comps, k, cfg.fm_vars);
                MonomialIdeal rhs = multiply(symbolic_power_from(part_comps, k, cfg.fm_vars),
                                             u.pow(k));
                if (!(lhs == rhs)) {
                    good = false;
                    report.failures.push_back(
                        {"fm", label.str(),
                         "(uJ)^(" + std::to_string(k) + ") != u^k J^(" +
                             std::to_string(k) + ")"});
                }
            }
            good ? ++stats.passed : ++stats.failed;
        } catch (const ResourceLimit&) {
            ++stats.resource_skipped;
        } catch (const std::exception& e) {
            ++stats.failed;
            report.failures.push_back({"fm", label.str(), e.what()});
        }
    }
    stats.seconds +=
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

SweepReport aggregate(const SweepConfig& cfg,
                      const std::vector<BorelInstance>& instances,
                      const std::vector<std::vector<Outcome>>& results,
                      const std::set<std::string>& selected) {
    SweepReport report;
    report.instance_count = static_cast<long>(instances.size());
    for (const auto& [name, fn] : kInstanceChecks)
        if (selected.count(name))
            report.stats[name]; // fixed ordering even when a check never ran
    for (std::size_t i = 0; i < instances.size(); ++i) {
        for (const Outcome& o : results[i]) {
            CheckStats& s = report.stats[o.check];
            ++s.instances;
            s.seconds += o.seconds;
            switch (o.status) {
            case Outcome::Status::Pass:
                ++s.passed;
                break;
            case Outcome::Status::Skip:
                ++s.resource_skipped;
                break;
            case Outcome::Status::Fail:
                ++s.failed;
                report.failures.push_back({o.check, instances[i].str(), o.detail});
                break;
            }
        }
    }
    if (selected.count("fm"))
        run_fm_phase(cfg, report);
    return report;
}

} // namespace

SweepReport run_sweep_serial(const SweepConfig& cfg) {
    std::set<std::string> selected = resolve_checks(cfg);
    std::vector<BorelInstance> instances = enumerate_instances(cfg);
    std::vector<std::vector<Outcome>> results(instances.size());
    for (std::size_t i = 0; i < instances.size(); ++i)
        results[i] = evaluate_instance(instances[i], cfg, selected);
    return aggregate(cfg, instances, results, selected);
}

SweepReport run_sweep(const SweepConfig& cfg) {
#ifdef VSPREAD_OPENMP
    std::set<std::string> selected = resolve_checks(cfg);
    std::vector<BorelInstance> instances = enumerate_instances(cfg);
    std::vector<std::vector<Outcome>> results(instances.size());
    const int threads = cfg.threads > 0 ? cfg.threads : omp_get_max_threads();
    const long count = static_cast<long>(instances.size());
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (long i = 0; i < count; ++i)
        results[i] = evaluate_instance(instances[i], cfg, selected);
    return aggregate(cfg, instances, results, selected);
#else
    return run_sweep_serial(cfg);
#endif
}

} // namespace vspread
