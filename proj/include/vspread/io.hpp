#ifndef VSPREAD_IO_HPP
#define VSPREAD_IO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "vspread/duality.hpp"
#include "vspread/ideal.hpp"
#include "vspread/powers.hpp"
#include "vspread/relation_graph.hpp"
#include "vspread/spread.hpp"
#include "vspread/sweep.hpp"

namespace vspread {

/* All JSON payloads carry "schema": 1.  Monomials serialize as index lists
 * with multiplicity ([1,3,3] = x1*x3^2), ideals as {"n": .., "gens": [..]},
 * instances as {"n": .., "t": [..], "u": [..]}. */
inline constexpr int kSchemaVersion = 1;

using json = nlohmann::json;

Monomial parse_monomial_text(int n, const std::string& text); // x1*x3^2 | 1
Monomial monomial_from_json(int n, const json& j);            // [1,3,3]
json monomial_to_json(const Monomial& m);

MonomialIdeal ideal_from_json(const json& j);
json ideal_to_json(const MonomialIdeal& a);
json gens_to_json(const MonomialIdeal& a); // bare generator array

BorelInstance instance_from_json(const json& j);
json instance_to_json(const BorelInstance& inst);

json support_to_json(int n, std::uint64_t mask); // ascending index list
json facets_to_json(int n, const std::vector<std::uint64_t>& facets);
json components_to_json(const std::vector<PrimeSupport>& components);
json split_tree_to_json(const SplitTree& tree);
json ntf_verdict_to_json(const NtfVerdict& verdict);
json relation_graph_to_json(const RelationGraph& graph);
json block_report_to_json(const BlockReport& report);
json sweep_report_to_json(const SweepReport& report, bool with_timings);

std::string ideal_text(const MonomialIdeal& a); // (x1*x2, x3) | (0) | (1)
std::string support_text(int n, std::uint64_t mask);
std::string sweep_report_text(const SweepReport& report, bool with_timings);

} // namespace vspread

#endif
