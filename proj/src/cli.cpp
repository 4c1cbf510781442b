#include "vspread/cli.hpp"

#include <cctype>
#include <sstream>

#include "CLI11.hpp"

#include "vspread/caps.hpp"
#include "vspread/io.hpp"

namespace vspread {

namespace {

MonomialIdeal parse_ideal_arg(int n, const std::string& raw) {
    std::string text = raw;
    auto trim = [](std::string& s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
            s.erase(s.begin());
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
            s.pop_back();
    };
    trim(text);
    if (!text.empty() && text.front() == '{') {
        try {
            return ideal_from_json(json::parse(text));
        } catch (const json::exception& e) {
            throw InvalidInput(std::string("bad ideal JSON: ") + e.what());
        }
    }
    if (n < 1)
        throw InvalidInput("--n is required with a textual --ideal");
    if (text.size() >= 2 && text.front() == '(' && text.back() == ')')
        text = text.substr(1, text.size() - 2);
    trim(text);
    if (text == "0" || text.empty())
        return MonomialIdeal::zero(n);
    std::vector<Monomial> gens;
    std::istringstream in(text);
    std::string piece;
    while (std::getline(in, piece, ','))
        gens.push_back(parse_monomial_text(n, piece));
    return MonomialIdeal::make(n, std::move(gens));
}

std::string split_tree_text(const SplitTree& tree) {
    switch (tree.kind) {
    case SplitTree::Kind::ZeroLeaf:
        return "(0)";
    case SplitTree::Kind::UnitLeaf:
        return "(1)";
    case SplitTree::Kind::PrincipalLeaf:
        return "(" + tree.gen->str() + ")";
    case SplitTree::Kind::Node:
        break;
    }
    return "(x" + std::to_string(tree.var) + " * " + split_tree_text(*tree.left) +
           " + " + split_tree_text(*tree.right) + ")";
}

struct Args {
    int n = 0;
    std::vector<int> t, u;
    std::string ideal;
    int k = 2;
    int kmax = 2;
    int max_k = 3;
    bool json_out = false;
    bool timings = false;
    bool oracle = false;
    bool assume_linear = false;
    bool serial = false;
    SweepConfig sweep;
    std::vector<std::string> checks;
};

void add_instance_options(CLI::App* cmd, Args& a) {
    cmd->add_option("--n", a.n, "ambient variable count (0 = take j_d)");
    cmd->add_option("--t", a.t, "spread vector t_1,..,t_{d-1}")->delimiter(',');
    cmd->add_option("--u", a.u, "indices j_1,..,j_d of the seed monomial")
        ->delimiter(',');
}

BorelInstance instance_from(const Args& a) {
    if (a.u.empty())
        throw InvalidInput("--u is required here");
    return validate_instance(a.n, a.t, a.u);
}

MonomialIdeal ideal_from(const Args& a) {
    if (!a.ideal.empty()) {
        if (!a.u.empty())
            throw InvalidInput("pass either --ideal or --u, not both");
        return parse_ideal_arg(a.n, a.ideal);
    }
    return borel_gens(instance_from(a));
}

void guard_k(int k, int max_k) {
    if (k > max_k)
        throw ResourceLimit("k = " + std::to_string(k) + " is over the k cap (" +
                            std::to_string(max_k) + "); raise it with --max-k");
}

json envelope(const char* command) {
    return {{"schema", kSchemaVersion}, {"command", command}};
}

void emit(std::ostream& out, const json& payload) {
    out << payload.dump(2) << "\n";
}

} // namespace

CommandResult run_command(const std::vector<std::string>& args) {
    CommandResult result;
    std::ostringstream out, err;
    Args a;

    CLI::App app{"squarefree vector-spread Borel ideals B_t(u)"};
    app.name("vspread");
    app.require_subcommand(1);

    auto* gens_cmd = app.add_subcommand("gens", "list the minimal generators");
    add_instance_options(gens_cmd, a);
    gens_cmd->add_flag("--json", a.json_out, "structured output");
    gens_cmd->callback([&] {
        BorelInstance inst = instance_from(a);
        MonomialIdeal ideal = borel_gens(inst);
        if (a.json_out) {
            json j = envelope("gens");
            j["instance"] = instance_to_json(inst);
            j["count"] = ideal.gen_count();
            j["gens"] = gens_to_json(ideal);
            emit(out, j);
        } else {
            for (const Monomial& g : ideal.gens())
                out << g.str() << "\n";
        }
    });

    auto* primdec_cmd =
        app.add_subcommand("primdec", "minimal primary decomposition");
    add_instance_options(primdec_cmd, a);
    primdec_cmd->add_flag("--json", a.json_out, "structured output");
    primdec_cmd->callback([&] {
        BorelInstance inst = instance_from(a);
        std::vector<PrimeSupport> components = primary_decomposition(inst);
        if (a.json_out) {
            json j = envelope("primdec");
            j["instance"] = instance_to_json(inst);
            j["facets"] = facets_to_json(inst.n, facets_theorem(inst));
            j["components"] = components_to_json(components);
            emit(out, j);
        } else {
            for (const PrimeSupport& p : components)
                out << ideal_text(prime_power(p, 1)) << "\n";
        }
    });

    auto* height_cmd = app.add_subcommand("height", "height of B_t(u)");
    add_instance_options(height_cmd, a);
    height_cmd->add_flag("--json", a.json_out, "structured output");
    height_cmd->callback([&] {
        BorelInstance inst = instance_from(a);
        int h = height(inst);
        if (a.json_out) {
            json j = envelope("height");
            j["instance"] = instance_to_json(inst);
            j["height"] = h;
            emit(out, j);
        } else {
            out << h << "\n";
        }
    });

    auto* dual_cmd = app.add_subcommand("dual", "Alexander dual");
    add_instance_options(dual_cmd, a);
    dual_cmd->add_option("--ideal", a.ideal, "explicit squarefree ideal instead of --u");
    dual_cmd->add_flag("--json", a.json_out, "structured output");
    dual_cmd->callback([&] {
        MonomialIdeal dual = alexander_dual(ideal_from(a));
        if (a.json_out) {
            json j = envelope("dual");
            j["dual"] = ideal_to_json(dual);
            emit(out, j);
        } else {
            out << ideal_text(dual) << "\n";
        }
    });

    auto* split_cmd =
        app.add_subcommand("split", "vertex splitting of the dual (or of --ideal)");
    add_instance_options(split_cmd, a);
    split_cmd->add_option("--ideal", a.ideal, "split this ideal instead");
    split_cmd->add_flag("--json", a.json_out, "structured output");
    split_cmd->callback([&] {
        if (!a.ideal.empty()) {
            MonomialIdeal ideal = parse_ideal_arg(a.n, a.ideal);
            auto tree = vertex_split_tree(ideal);
            if (tree && !verify_split_tree(ideal, *tree))
                throw ConsistencyError("split witness fails verification");
            if (a.json_out) {
                json j = envelope("split");
                j["splittable"] = tree != nullptr;
                j["tree"] = tree ? split_tree_to_json(*tree) : json(nullptr);
                emit(out, j);
            } else {
                out << (tree ? split_tree_text(*tree) : "not vertex splittable")
                    << "\n";
            }
            return;
        }
        BorelInstance inst = instance_from(a);
        auto tree = instance_dual_split_tree(inst);
        if (a.json_out) {
            json j = envelope("split");
            j["instance"] = instance_to_json(inst);
            j["dual"] = ideal_to_json(tree->ideal);
            j["tree"] = split_tree_to_json(*tree);
            emit(out, j);
        } else {
            out << "dual: " << ideal_text(tree->ideal) << "\n";
            out << "tree: " << split_tree_text(*tree) << "\n";
        }
    });

    auto* linquot_cmd =
        app.add_subcommand("linquot", "linear quotient order for the dual (or --ideal)");
    add_instance_options(linquot_cmd, a);
    linquot_cmd->add_option("--ideal", a.ideal, "order this ideal instead");
    linquot_cmd->add_flag("--json", a.json_out, "structured output");
    linquot_cmd->callback([&] {
        MonomialIdeal ideal =
            a.ideal.empty() ? alexander_dual(borel_gens(instance_from(a)))
                            : parse_ideal_arg(a.n, a.ideal);
        auto order = linear_quotients_order(ideal);
        if (order && !verify_quotient_order(ideal.vars(), *order))
            throw ConsistencyError("quotient order fails verification");
        if (a.json_out) {
            json j = envelope("linquot");
            if (order) {
                json list = json::array();
                for (const Monomial& g : *order)
                    list.push_back(monomial_to_json(g));
                j["order"] = list;
            } else {
                j["order"] = nullptr;
            }
            emit(out, j);
        } else if (order) {
            for (const Monomial& g : *order)
                out << g.str() << "\n";
        } else {
            out << "no linear quotient order\n";
        }
    });

    auto* power_cmd = app.add_subcommand("power", "ordinary power I^k");
    add_instance_options(power_cmd, a);
    power_cmd->add_option("--ideal", a.ideal, "explicit ideal instead of --u");
    power_cmd->add_option("--k", a.k, "exponent")->required();
    power_cmd->add_option("--max-k", a.max_k, "raise the k resource guard (default 3)");
    power_cmd->add_flag("--json", a.json_out, "structured output");
    power_cmd->callback([&] {
        guard_k(a.k, a.max_k);
        MonomialIdeal result_ideal = power(ideal_from(a), a.k);
        if (a.json_out) {
            json j = envelope("power");
            j["k"] = a.k;
            j["power"] = ideal_to_json(result_ideal);
            emit(out, j);
        } else {
            out << ideal_text(result_ideal) << "\n";
        }
    });

    auto* symbolic_cmd = app.add_subcommand("symbolic", "symbolic power I^(k)");
    add_instance_options(symbolic_cmd, a);
    symbolic_cmd->add_option("--k", a.k, "exponent")->required();
    symbolic_cmd->add_option("--max-k", a.max_k,
                             "raise the k resource guard (default 3)");
    symbolic_cmd->add_flag("--oracle", a.oracle,
                           "cross-check against the facet-oracle decomposition");
    symbolic_cmd->add_flag("--json", a.json_out, "structured output");
    symbolic_cmd->callback([&] {
        guard_k(a.k, a.max_k);
        BorelInstance inst = instance_from(a);
        MonomialIdeal symbolic = symbolic_power(inst, a.k);
        if (a.oracle) {
            MonomialIdeal ideal = borel_gens(inst);
            const std::uint64_t full =
                inst.n == 64 ? ~0ull : (1ull << inst.n) - 1;
            std::vector<PrimeSupport> components;
            for (std::uint64_t f : facets_oracle(ideal, inst.n))
                components.emplace_back(inst.n, full & ~f);
            if (!(symbolic_power_from(components, a.k, inst.n) == symbolic))
                throw ConsistencyError("oracle decomposition gives a different I^(k)");
        }
        if (a.json_out) {
            json j = envelope("symbolic");
            j["instance"] = instance_to_json(inst);
            j["k"] = a.k;
            j["oracle_checked"] = a.oracle;
            j["symbolic"] = ideal_to_json(symbolic);
            emit(out, j);
        } else {
            out << ideal_text(symbolic) << "\n";
        }
    });

    auto* ntf_cmd =
        app.add_subcommand("ntf", "normal torsionfreeness: condition, checks, witness");
    add_instance_options(ntf_cmd, a);
    ntf_cmd->add_option("--kmax", a.kmax, "check powers up to this k (default 2)");
    ntf_cmd->add_option("--max-k", a.max_k, "raise the k resource guard (default 3)");
    ntf_cmd->add_flag("--json", a.json_out, "structured output");
    ntf_cmd->callback([&] {
        guard_k(a.kmax, a.max_k);
        BorelInstance inst = instance_from(a);
        NtfVerdict verdict = classify_ntf(inst, a.kmax);
        if (a.json_out) {
            json j = envelope("ntf");
            j["instance"] = instance_to_json(inst);
            j.update(ntf_verdict_to_json(verdict));
            emit(out, j);
            return;
        }
        out << "condition (c): " << (verdict.satisfied ? "holds" : "fails") << "\n";
        for (const NtfCheck& c : verdict.checks)
            out << "k=" << c.k << ": "
                << (c.equal ? "I^k = I^(k)" : "I^k != I^(k)") << "\n";
        if (verdict.certificate) {
            const NtfCertificate& cert = *verdict.certificate;
            out << "localization: Q = "
                << support_text(cert.q.vars(), cert.q.mask()) << "\n";
            out << "reduced instance: " << cert.reduced.str() << "\n";
            out << "witness: " << cert.witness.str()
                << " in I^(2) \\ I^2 of the reduced instance"
                << (cert.closed_form ? "" : " (found by generator search)")
                << "\n";
        }
    });

    auto* lrg_cmd = app.add_subcommand("lrg", "linear relation graph and analytic spread");
    add_instance_options(lrg_cmd, a);
    lrg_cmd->add_option("--ideal", a.ideal, "explicit equigenerated ideal");
    lrg_cmd->add_flag("--assume-linear-relations", a.assume_linear,
                      "apply the spread formula to --ideal input");
    lrg_cmd->add_flag("--json", a.json_out, "structured output");
    lrg_cmd->callback([&] {
        MonomialIdeal ideal = ideal_from(a);
        RelationGraph graph = linear_relation_graph(ideal);
        bool formula_applies = a.ideal.empty() || a.assume_linear;
        if (a.json_out) {
            json j = envelope("lrg");
            j.update(relation_graph_to_json(graph));
            j["analytic_spread"] =
                formula_applies ? json(analytic_spread_linear(graph)) : json(nullptr);
            emit(out, j);
            return;
        }
        out << "vertices: " << support_text(graph.n, graph.vertices) << "\n";
        out << "edges:";
        for (auto [i, j] : graph.edges)
            out << " {" << i << "," << j << "}";
        out << "\n";
        out << "components: " << graph.component_count() << "\n";
        if (formula_applies)
            out << "analytic spread: " << analytic_spread_linear(graph) << "\n";
        else
            out << "analytic spread: skipped (pass --assume-linear-relations)\n";
    });

    auto* sweep_cmd =
        app.add_subcommand("sweep", "verify the theorems over all small instances");
    sweep_cmd->add_option("--nmax", a.sweep.n_max, "largest ambient n (default 8)");
    sweep_cmd->add_option("--dmax", a.sweep.d_max, "largest degree d (default 4)");
    sweep_cmd->add_option("--tmax", a.sweep.t_max, "largest spread entry (default 3)");
    sweep_cmd->add_option("--kmax", a.sweep.k_max, "power checks up to k (default 2)");
    sweep_cmd->add_option("--checks", a.checks,
                          "subset of spread,primdec,height,dual,split,linquot,ntf,blocks,fm")
        ->delimiter(',');
    sweep_cmd->add_option("--pairs", a.sweep.fm_pairs, "randomized product pairs (default 100)");
    sweep_cmd->add_option("--seed", a.sweep.seed, "seed for the randomized phase");
    sweep_cmd->add_option("--threads", a.sweep.threads, "worker threads (0 = default)");
    sweep_cmd->add_flag("--serial", a.serial, "run the serial reference loop");
    sweep_cmd->add_flag("--timings", a.timings, "include per-check seconds");
    sweep_cmd->add_flag("--json", a.json_out, "structured output");
    sweep_cmd->callback([&] {
        a.sweep.checks.insert(a.checks.begin(), a.checks.end());
        SweepReport report =
            a.serial ? run_sweep_serial(a.sweep) : run_sweep(a.sweep);
        if (a.json_out) {
            json j = envelope("sweep");
            j.update(sweep_report_to_json(report, a.timings));
            emit(out, j);
        } else {
            out << sweep_report_text(report, a.timings);
        }
        if (!report.ok())
            throw ConsistencyError(std::to_string(report.failures.size()) +
                                   " sweep failure(s); see the report above");
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed); // CLI11 consumes the vector back to front
        result.exit_code = 0;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        result.exit_code = 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        result.exit_code = 1;
    } catch (const InvalidInput& e) {
        err << "invalid input: " << e.what() << "\n";
        result.exit_code = 2;
    } catch (const ResourceLimit& e) {
        err << "resource cap: " << e.what() << "\n";
        result.exit_code = 3;
    } catch (const ConsistencyError& e) {
        err << "consistency violation: " << e.what() << "\n";
        result.exit_code = 4;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        result.exit_code = 4;
    }
    result.out = out.str();
    result.err = err.str();
    return result;
}

} // namespace vspread
