#ifndef VSPREAD_DUALITY_HPP
#define VSPREAD_DUALITY_HPP

#include <memory>
#include <optional>
#include <vector>

#include "vspread/decomposition.hpp"
#include "vspread/ideal.hpp"
#include "vspread/spread.hpp"

namespace vspread {

/* Alexander dual of a squarefree proper non-zero ideal, computed two ways —
 * as the intersection of the supports' primes and as the ideal of facet
 * complements — and cross-checked (ConsistencyError on disagreement).
 * Inherits the facet oracle's variable cap. */
MonomialIdeal alexander_dual(const MonomialIdeal& a);

/* Witness that an ideal is vertex splittable: either a base case or a
 * splitting I = x_v I1 + I2 with G(I) = G(x_v I1) ⊔ G(I2) and I2 ⊆ I1,
 * with both parts recursively splittable. */
struct SplitTree {
    enum class Kind { ZeroLeaf, UnitLeaf, PrincipalLeaf, Node };
    Kind kind;
    MonomialIdeal ideal;                   // the ideal this node witnesses
    std::optional<Monomial> gen;           // PrincipalLeaf
    int var = 0;                           // Node: splitting variable
    std::shared_ptr<const SplitTree> left; // Node: I1
    std::shared_ptr<const SplitTree> right; // Node: I2
};

/* Searches for a SplitTree; null when the ideal is not vertex splittable.
 * Splitting-variable candidates are tried by descending occurrence count
 * among the generators, then by index; results are memoized on the
 * canonical form of the ideal. */
std::shared_ptr<const SplitTree> vertex_split_tree(const MonomialIdeal& a);

/* Re-checks every node condition of a claimed witness against `a`. */
bool verify_split_tree(const MonomialIdeal& a, const SplitTree& tree);

/* The structural splitting of the dual of B_t(u):
 *   B_t(u)^v = x_1 * (B_t(u) ∩ K[x_2..x_n])^v + (B_t(u) : x_1)^v,
 * with disjoint generator sets and the right part contained in the left.
 * Verified against alexander_dual on construction (ConsistencyError
 * otherwise).  Degenerate shapes (principal u, j_1 = 1, d = 2) all land in
 * the same formula. */
struct DualSplit {
    MonomialIdeal dual;  // B_t(u)^v
    int var;             // always 1
    MonomialIdeal left;  // (B_t(u) ∩ K[x_2..x_n])^v
    MonomialIdeal right; // (B_t(u) : x_1)^v
};
DualSplit dual_split(const BorelInstance& inst);

/* SplitTree for B_t(u)^v rooted at the dual_split above, with the parts
 * witnessed by the generic search; verified before returning. */
std::shared_ptr<const SplitTree> instance_dual_split_tree(const BorelInstance& inst);

/* Order u_1, u_2, ... of the generators such that every colon
 * (u_1..u_{i-1}) : u_i is generated by variables.  Tries the order induced
 * by a SplitTree first (x_v-part in induced order, then the rest), falling
 * back to backtracking search, capped by caps().linquot_gens generators.
 * Returns nullopt when no order exists. */
std::optional<std::vector<Monomial>> linear_quotients_order(const MonomialIdeal& a);

/* The sequence a SplitTree induces on the generators. */
std::vector<Monomial> split_induced_order(const SplitTree& tree);

/* True when each successive colon is variable-generated. */
bool verify_quotient_order(int n, std::span<const Monomial> order);

} // namespace vspread

#endif
