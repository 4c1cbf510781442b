#include "vspread/io.hpp"

#include <cctype>
#include <sstream>

namespace vspread {

namespace {

int want_int(const json& j, const char* what) {
    if (!j.is_number_integer())
        throw InvalidInput(std::string("expected an integer for ") + what);
    return j.get<int>();
}

std::vector<int> want_int_list(const json& j, const char* what) {
    if (!j.is_array())
        throw InvalidInput(std::string("expected an array for ") + what);
    std::vector<int> out;
    for (const json& e : j)
        out.push_back(want_int(e, what));
    return out;
}

} // namespace

Monomial parse_monomial_text(int n, const std::string& text) {
    std::string stripped;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            stripped += c;
    if (stripped == "1")
        return Monomial::one(n);
    if (stripped.empty())
        throw InvalidInput("empty monomial");
    std::vector<int> exps(static_cast<std::size_t>(n), 0);
    std::istringstream in(stripped);
    std::string factor;
    while (std::getline(in, factor, '*')) {
        std::size_t caret = factor.find('^');
        std::string base = factor.substr(0, caret == std::string::npos
                                                ? std::string::npos
                                                : caret);
        int exp = 1;
        if (caret != std::string::npos) {
            try {
                exp = std::stoi(factor.substr(caret + 1));
            } catch (...) {
                throw InvalidInput("bad exponent in '" + factor + "'");
            }
        }
        if (base.size() < 2 || base[0] != 'x' || exp < 1)
            throw InvalidInput("bad factor '" + factor + "'");
        int index = 0;
        try {
            index = std::stoi(base.substr(1));
        } catch (...) {
            throw InvalidInput("bad variable in '" + factor + "'");
        }
        if (index < 1 || index > n)
            throw InvalidInput("variable x" + std::to_string(index) +
                               " outside the ring of " + std::to_string(n) +
                               " variables");
        exps[index - 1] += exp;
    }
    return Monomial::from_exponents(n, exps);
}

Monomial monomial_from_json(int n, const json& j) {
    return Monomial::from_indices(n, want_int_list(j, "a monomial"));
}

json monomial_to_json(const Monomial& m) {
    json out = json::array();
    for (int i : m.support_indices())
        for (int e = 0; e < m.exponent(i); ++e)
            out.push_back(i);
    return out;
}

MonomialIdeal ideal_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("gens"))
        throw InvalidInput("an ideal is {\"n\": .., \"gens\": [..]}");
    int n = want_int(j["n"], "n");
    if (!j["gens"].is_array())
        throw InvalidInput("expected an array for gens");
    std::vector<Monomial> gens;
    for (const json& g : j["gens"])
        gens.push_back(monomial_from_json(n, g));
    return MonomialIdeal::make(n, std::move(gens));
}

json ideal_to_json(const MonomialIdeal& a) {
    return {{"n", a.vars()}, {"gens", gens_to_json(a)}};
}

json gens_to_json(const MonomialIdeal& a) {
    json out = json::array();
    for (const Monomial& g : a.gens())
        out.push_back(monomial_to_json(g));
    return out;
}

BorelInstance instance_from_json(const json& j) {
    if (!j.is_object() || !j.contains("u"))
        throw InvalidInput("an instance is {\"n\": .., \"t\": [..], \"u\": [..]}");
    int n = j.contains("n") ? want_int(j["n"], "n") : 0;
    std::vector<int> t =
        j.contains("t") ? want_int_list(j["t"], "t") : std::vector<int>{};
    return validate_instance(n, t, want_int_list(j["u"], "u"));
}

json instance_to_json(const BorelInstance& inst) {
    return {{"n", inst.n}, {"t", inst.t}, {"u", inst.u}};
}

json support_to_json(int n, std::uint64_t mask) {
    json out = json::array();
    for (int i = 1; i <= n; ++i)
        if (mask >> (i - 1) & 1)
            out.push_back(i);
    return out;
}

json facets_to_json(int n, const std::vector<std::uint64_t>& facets) {
    json out = json::array();
    for (std::uint64_t f : facets)
        out.push_back(support_to_json(n, f));
    return out;
}

json components_to_json(const std::vector<PrimeSupport>& components) {
    json out = json::array();
    for (const PrimeSupport& p : components)
        out.push_back(support_to_json(p.vars(), p.mask()));
    return out;
}

json split_tree_to_json(const SplitTree& tree) {
    switch (tree.kind) {
    case SplitTree::Kind::ZeroLeaf:
        return {{"kind", "zero"}};
    case SplitTree::Kind::UnitLeaf:
        return {{"kind", "unit"}};
    case SplitTree::Kind::PrincipalLeaf:
        return {{"kind", "principal"}, {"gen", monomial_to_json(*tree.gen)}};
    case SplitTree::Kind::Node:
        break;
    }
    return {{"kind", "node"},
            {"var", tree.var},
            {"ideal", ideal_to_json(tree.ideal)},
            {"left", split_tree_to_json(*tree.left)},
            {"right", split_tree_to_json(*tree.right)}};
}

json ntf_verdict_to_json(const NtfVerdict& verdict) {
    json checks = json::array();
    for (const NtfCheck& c : verdict.checks)
        checks.push_back({{"k", c.k}, {"equal", c.equal}});
    json out = {{"satisfied", verdict.satisfied}, {"checks", checks}};
    if (verdict.certificate) {
        const NtfCertificate& cert = *verdict.certificate;
        out["certificate"] = {
            {"q", support_to_json(cert.q.vars(), cert.q.mask())},
            {"var_map", cert.var_map},
            {"reduced", instance_to_json(cert.reduced)},
            {"witness", monomial_to_json(cert.witness)},
            {"witness_in_symbolic2", cert.witness_in_symbolic2},
            {"witness_in_power2", cert.witness_in_power2},
            {"closed_form", cert.closed_form}};
    } else {
        out["certificate"] = nullptr;
    }
    return out;
}

json relation_graph_to_json(const RelationGraph& graph) {
    json edges = json::array();
    for (auto [i, j] : graph.edges)
        edges.push_back({i, j});
    return {{"n", graph.n},
            {"vertices", support_to_json(graph.n, graph.vertices)},
            {"edges", edges},
            {"equigenerated", graph.equigenerated},
            {"components", graph.component_count()}};
}

json block_report_to_json(const BlockReport& report) {
    json out = {{"blocks_match_vertices", report.blocks_match_vertices},
                {"blocks_complete", report.blocks_complete},
                {"condition_c", report.condition_c},
                {"analytic_spread", report.analytic_spread},
                {"ok", report.all_ok()}};
    if (report.condition_c) {
        out["blocks_disjoint"] = report.blocks_disjoint;
        out["graph_is_block_cliques"] = report.graph_is_block_cliques;
        out["max_ideal_not_associated"] =
            report.max_ideal_not_associated.has_value()
                ? json(*report.max_ideal_not_associated)
                : json(nullptr);
    }
    return out;
}

json sweep_report_to_json(const SweepReport& report, bool with_timings) {
    json checks = json::object();
    for (const auto& [name, s] : report.stats) {
        json entry = {{"instances", s.instances},
                      {"passed", s.passed},
                      {"failed", s.failed},
                      {"resource_skipped", s.resource_skipped}};
        if (with_timings)
            entry["seconds"] = s.seconds;
        checks[name] = entry;
    }
    json failures = json::array();
    for (const SweepFailure& f : report.failures)
        failures.push_back(
            {{"check", f.check}, {"instance", f.instance}, {"detail", f.detail}});
    return {{"instances", report.instance_count},
            {"checks", checks},
            {"failures", failures},
            {"ok", report.ok()}};
}

std::string ideal_text(const MonomialIdeal& a) {
    if (a.is_zero())
        return "(0)";
    std::string out = "(";
    for (std::size_t i = 0; i < a.gen_count(); ++i) {
        if (i)
            out += ", ";
        out += a.gens()[i].str();
    }
    return out + ")";
}

std::string support_text(int n, std::uint64_t mask) {
    std::string out = "{";
    bool first = true;
    for (int i = 1; i <= n; ++i)
        if (mask >> (i - 1) & 1) {
            if (!first)
                out += ", ";
            out += "x" + std::to_string(i);
            first = false;
        }
    return out + "}";
}

std::string sweep_report_text(const SweepReport& report, bool with_timings) {
    std::ostringstream out;
    out << "instances: " << report.instance_count << "\n";
    for (const auto& [name, s] : report.stats) {
        out << "  " << name;
        for (std::size_t pad = name.size(); pad < 8; ++pad)
            out << ' ';
        out << " ran " << s.instances << "  passed " << s.passed << "  failed "
            << s.failed << "  skipped " << s.resource_skipped;
        if (with_timings) {
            out.setf(std::ios::fixed);
            out.precision(2);
            out << "  (" << s.seconds << "s)";
        }
        out << "\n";
    }
    for (const SweepFailure& f : report.failures)
        out << "FAIL " << f.check << " [" << f.instance << "] " << f.detail << "\n";
    out << (report.ok() ? "ok" : "FAILURES: " + std::to_string(report.failures.size()))
        << "\n";
    return out.str();
}

} // namespace vspread
