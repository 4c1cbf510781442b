#ifndef VSPREAD_POWERS_HPP
#define VSPREAD_POWERS_HPP

#include <optional>
#include <vector>

#include "vspread/decomposition.hpp"
#include "vspread/ideal.hpp"
#include "vspread/spread.hpp"

namespace vspread {

/* I^(k) = intersection of P^k over the minimal primary components. */
MonomialIdeal symbolic_power(const BorelInstance& inst, int k);

/* Same fold over an explicit component list (used for oracle-derived
 * decompositions and for ideals that are not of the B_t(u) shape). */
MonomialIdeal symbolic_power_from(std::span<const PrimeSupport> components,
                                  int k, int n);

/* Condition (c): j_i <= t_1 + ... + t_i for i = 1..d-1.  Equivalent to
 * B_t(u) being normally torsionfree, i.e. I^(k) = I^k for all k. */
bool ntf_condition(const BorelInstance& inst);

/* Certificate that I^(k) != I^k for some k, built the way the proof does:
 * localize at Q = P_[sum_{s<l} t_s + 1, n] for l the first index violating
 * condition (c), drop the killed variables (the instance shrinks to
 * t' = (t_l..t_{d-1}), u' = u / x_{j_1}..x_{j_{l-1}}, re-indexed densely),
 * and exhibit an explicit w in I'^(2) \ I'^2 there.  Both memberships are
 * re-checked; a failed re-check throws ConsistencyError. */
struct NtfCertificate {
    PrimeSupport q;            // localization prime in the original ring
    std::vector<int> var_map;  // reduced variable r  ->  var_map[r-1]
    BorelInstance reduced;
    Monomial witness;          // in the reduced ring
    bool witness_in_symbolic2 = false;
    bool witness_in_power2 = false;
    /* true when the witness is the closed-form candidate; false when that
     * candidate failed and the witness is a searched generator of the
     * symbolic square that escapes the ordinary square */
    bool closed_form = false;
};
NtfCertificate witness_noneq(const BorelInstance& inst);

/* Decides normal torsionfreeness via condition (c).  When it holds, checks
 * power == symbolic for k = 2..k_max; when it fails, produces the witness
 * certificate and additionally confirms I^(2) != I^2 on the original
 * instance. */
struct NtfCheck {
    int k;
    bool equal;
};
struct NtfVerdict {
    bool satisfied = false;
    std::vector<NtfCheck> checks;
    std::optional<NtfCertificate> certificate;
};
NtfVerdict classify_ntf(const BorelInstance& inst, int k_max);

/* I^{<= a}: the subideal on the generators with exponents bounded by a. */
MonomialIdeal a_restriction(const MonomialIdeal& a, std::span<const int> bounds);

/* Monomial localization I(P): set the variables outside P to 1 and
 * minimalize.  The result is returned in the same ambient ring; only P's
 * variables occur in it. */
MonomialIdeal monomial_localization(const MonomialIdeal& a, const PrimeSupport& p);

} // namespace vspread

#endif
