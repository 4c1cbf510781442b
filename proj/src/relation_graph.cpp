#include "vspread/relation_graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "vspread/powers.hpp"

namespace vspread {

int RelationGraph::vertex_count() const {
    return std::popcount(vertices);
}

int RelationGraph::component_count() const {
    if (!vertices)
        return 0;
    std::vector<int> parent(n + 1);
    for (int i = 0; i <= n; ++i)
        parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [a, b] : edges)
        parent[find(a)] = find(b);
    std::set<int> roots;
    for (int i = 1; i <= n; ++i)
        if (vertices >> (i - 1) & 1)
            roots.insert(find(i));
    return static_cast<int>(roots.size());
}

RelationGraph linear_relation_graph(const MonomialIdeal& a) {
    RelationGraph g;
    g.n = a.vars();
    g.equigenerated = a.is_equigenerated();

    std::map<std::string, std::vector<int>> buckets; // g/x_v keyed canonically
    for (const Monomial& gen : a.gens())
        for (int v : gen.support_indices())
            buckets[gen.divide_by(Monomial::variable(g.n, v)).str()].push_back(v);

    std::set<std::pair<int, int>> edges;
    for (const auto& [quotient, vars] : buckets)
        for (std::size_t x = 0; x < vars.size(); ++x)
            for (std::size_t y = x + 1; y < vars.size(); ++y)
                edges.emplace(std::min(vars[x], vars[y]), std::max(vars[x], vars[y]));
    for (auto [i, j] : edges) {
        g.edges.emplace_back(i, j);
        g.vertices |= 1ull << (i - 1);
        g.vertices |= 1ull << (j - 1);
    }
    return g;
}

int analytic_spread_linear(const RelationGraph& g) {
    if (!g.equigenerated)
        throw InvalidInput("analytic spread formula needs an equigenerated ideal");
    return g.vertex_count() - g.component_count() + 1;
}

bool BlockReport::all_ok() const {
    if (!blocks_match_vertices || !blocks_complete)
        return false;
    if (!condition_c)
        return true;
    return blocks_disjoint && graph_is_block_cliques &&
           max_ideal_not_associated.value_or(true);
}

BlockReport block_structure_check(const BorelInstance& inst, int k_max,
                                  int ass_var_cap) {
    BlockReport report;
    MonomialIdeal ideal = borel_gens(inst);
    RelationGraph graph = linear_relation_graph(ideal);
    std::vector<std::pair<int, int>> block_ranges = blocks(inst);
    report.condition_c = ntf_condition(inst);
    report.analytic_spread = analytic_spread_linear(graph);

    auto has_edge = [&](int x, int y) {
        auto e = std::make_pair(std::min(x, y), std::max(x, y));
        return std::binary_search(graph.edges.begin(), graph.edges.end(), e);
    };

    std::uint64_t big_union = 0;
    for (auto [lo, hi] : block_ranges) {
        bool big = hi - lo + 1 >= 2;
        bool inside = true;
        for (int v = lo; v <= hi; ++v)
            if (!(graph.vertices >> (v - 1) & 1))
                inside = false;
        if (big != inside)
            report.blocks_match_vertices = false;
        if (big) {
            for (int v = lo; v <= hi; ++v)
                big_union |= 1ull << (v - 1);
            for (int x = lo; x <= hi; ++x)
                for (int y = x + 1; y <= hi; ++y)
                    if (!has_edge(x, y))
                        report.blocks_complete = false;
        }
    }

    if (report.condition_c) {
        for (std::size_t r = 0; r + 1 < block_ranges.size(); ++r)
            if (block_ranges[r].second >= block_ranges[r + 1].first)
                report.blocks_disjoint = false;

        report.graph_is_block_cliques = graph.vertices == big_union;
        for (auto [x, y] : graph.edges) {
            bool together = false;
            for (auto [lo, hi] : block_ranges)
                if (lo <= x && y <= hi)
                    together = true;
            if (!together)
                report.graph_is_block_cliques = false;
        }

        if (inst.n <= ass_var_cap) {
            const std::uint64_t full =
                inst.n == 64 ? ~0ull : (1ull << inst.n) - 1;
            bool clean = true;
            for (int k = 1; k <= k_max; ++k)
                for (const PrimeSupport& p : associated_primes(power(ideal, k)))
                    if (p.mask() == full)
                        clean = false;
            report.max_ideal_not_associated = clean;
        }
    }
    return report;
}

} // namespace vspread
