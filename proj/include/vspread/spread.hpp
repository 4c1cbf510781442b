#ifndef VSPREAD_SPREAD_HPP
#define VSPREAD_SPREAD_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "vspread/ideal.hpp"

namespace vspread {

/* A principal t-spread Borel instance: the ideal B_t(u) in K[x_1..x_n] for
 * u = x_{j_1}...x_{j_d} with j_1 < ... < j_d = n, d >= 2, and spread vector
 * t = (t_1..t_{d-1}), t_i >= 1, with j_{i+1} - j_i >= t_i. */
struct BorelInstance {
    int n = 0;
    std::vector<int> t;
    std::vector<int> u;

    int degree() const { return static_cast<int>(u.size()); }
    std::string str() const; // "n=8 t=2,1 u=2,5,8"
    friend bool operator==(const BorelInstance&, const BorelInstance&) = default;
};

/* Checks the constraints above and returns the normalized instance
 * (n lowered to j_d when the ambient ring carries trailing unused
 * variables).  Throws InvalidInput otherwise. */
BorelInstance validate_instance(int n, std::vector<int> t, std::vector<int> u);

/* m squarefree with support i_1 < ... < i_l, l <= |t|+1, and
 * i_{k+1} - i_k >= t_k for all k. */
bool is_t_spread(const Monomial& m, std::span<const int> t);

/* supp_t(m) = union of [i_s, i_s + t_s - 1] over s = 1..l-1: the support of
 * m "thickened" by the spread, except at the last variable.  Pre: m t-spread
 * of degree >= 1. */
std::uint64_t t_support(const Monomial& m, std::span<const int> t);

/* Minimal generators of B_t(u): all x_{i_1}...x_{i_d} with i_r <= j_r and
 * i_{r+1} - i_r >= t_r, enumerated in ascending index-tuple order. */
MonomialIdeal borel_gens(const BorelInstance& inst);

/* Closure of equal-degree t-spread seeds under the exchanges
 * x_j (m / x_i), j < i, that stay t-spread.  This is the smallest t-spread
 * strongly stable ideal containing the seeds; used as the oracle against
 * borel_gens. */
MonomialIdeal borel_closure(int n, std::span<const Monomial> seeds,
                            std::span<const int> t);

/* All generators t-spread and their exchange closure stays inside the
 * ideal. */
bool is_t_strongly_stable(const MonomialIdeal& a, std::span<const int> t);

/* B_i = [sum_{s<i} t_s + 1, j_i], the window the i-th generator index ranges
 * over.  Returned as d (lo, hi) pairs. */
std::vector<std::pair<int, int>> blocks(const BorelInstance& inst);

/* Degenerate d = 1 case: B_t(x_{j_1}) = (x_1, ..., x_{j_1}).  Excluded from
 * the instance space but needed as a recursion base. */
MonomialIdeal degree_one_borel(int n, int j1);

} // namespace vspread

#endif
