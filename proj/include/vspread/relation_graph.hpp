#ifndef VSPREAD_RELATION_GRAPH_HPP
#define VSPREAD_RELATION_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "vspread/ideal.hpp"
#include "vspread/spread.hpp"

namespace vspread {

/* The linear relation graph of I: vertices the variables that occur in a
 * linear syzygy, an edge {i, j} whenever x_i u_k = x_j u_l for generators
 * u_k, u_l.  Built by bucketing g / x_v over all g in G(I), v in supp(g). */
struct RelationGraph {
    int n = 0;
    std::uint64_t vertices = 0;
    std::vector<std::pair<int, int>> edges; // i < j, sorted
    bool equigenerated = false;

    int vertex_count() const;
    int component_count() const; // over the touched vertices only
};

RelationGraph linear_relation_graph(const MonomialIdeal& a);

/* Analytic spread from the relation graph: l(I) = r - s + 1 with r the
 * vertex count and s the component count (1 for the empty graph).  Valid
 * when I is equigenerated with linear relations in the degrees the formula
 * assumes; throws InvalidInput when the ideal is not equigenerated. */
int analytic_spread_linear(const RelationGraph& g);

/* Block structure of the relation graph of B_t(u):
 *  - |B_i| >= 2 exactly when B_i lies inside V(Γ), and each such block
 *    induces a complete subgraph (checked unconditionally);
 *  - under condition (c): the blocks are pairwise disjoint, Γ is exactly
 *    the disjoint union of the cliques on the blocks with |B_i| >= 2, and
 *    the maximal ideal is not associated to I^k (checked via the
 *    associated-primes oracle for k <= k_max when n <= ass_var_cap). */
struct BlockReport {
    bool blocks_match_vertices = true;  // |B_i|>=2  <=>  B_i ⊆ V(Γ)
    bool blocks_complete = true;        // cliques on the big blocks
    bool condition_c = false;
    // the fields below are meaningful when condition_c holds
    bool blocks_disjoint = true;
    bool graph_is_block_cliques = true; // no extra vertices or cross edges
    std::optional<bool> max_ideal_not_associated; // unset when skipped
    int analytic_spread = 0;

    bool all_ok() const;
};
BlockReport block_structure_check(const BorelInstance& inst, int k_max,
                                  int ass_var_cap);

} // namespace vspread

#endif
