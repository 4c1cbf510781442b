#ifndef VSPREAD_DECOMPOSITION_HPP
#define VSPREAD_DECOMPOSITION_HPP

#include <cstdint>
#include <vector>

#include "vspread/spread.hpp"

namespace vspread {

/* Facets of the simplicial complex of B_t(u), from the closed-form
 * description: the t-supports of the generators together with, for each
 * s = 1..d and each generator of the truncated ideal B_t(x_{j_1}..x_{j_s})
 * ending exactly at j_s, the set supp_t(w) ∪ [j_s+1, n].  Deduplicated,
 * sorted canonically, and audited for pairwise incomparability. */
std::vector<std::uint64_t> facets_theorem(const BorelInstance& inst);

/* Reference facet enumeration for any squarefree proper non-zero ideal:
 * scans all 2^n subsets and keeps the maximal ones whose product is outside
 * the ideal.  Throws ResourceLimit when n exceeds caps().oracle_vars.
 * facets_oracle partitions the scan across OpenMP threads;
 * facets_oracle_serial is the plain loop kept as the reference. */
std::vector<std::uint64_t> facets_oracle(const MonomialIdeal& a, int n);
std::vector<std::uint64_t> facets_oracle_serial(const MonomialIdeal& a, int n);

/* Minimal primary decomposition of B_t(u): the primes on the complements of
 * the facets.  Verified internally by intersecting the components back
 * together and comparing with borel_gens; a mismatch throws
 * ConsistencyError. */
std::vector<PrimeSupport> primary_decomposition(const BorelInstance& inst);

/* height B_t(u) = j_1 = min(u); cross-checked against the smallest
 * component size. */
int height(const BorelInstance& inst);

} // namespace vspread

#endif
