#include <algorithm>
#include <cstdint>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"

#include "vspread/decomposition.hpp"
#include "vspread/errors.hpp"
#include "vspread/spread.hpp"
#include "vspread/sweep.hpp"

using namespace vspread;

namespace {

std::vector<BorelInstance> small_grid(int n_max) {
    SweepConfig cfg;
    cfg.n_max = n_max;
    return enumerate_instances(cfg);
}

std::vector<std::uint64_t> sorted_masks(const std::vector<PrimeSupport>& ps) {
    std::vector<std::uint64_t> masks;
    for (const PrimeSupport& p : ps)
        masks.push_back(p.mask());
    std::sort(masks.begin(), masks.end());
    return masks;
}

} // namespace

TEST_CASE("facet formula matches the subset scan on the small grid") {
    for (const BorelInstance& inst : small_grid(6)) {
        CAPTURE(inst.str());
        MonomialIdeal ideal = borel_gens(inst);
        std::vector<std::uint64_t> formula = facets_theorem(inst);
        std::vector<std::uint64_t> reference = oracle::facets_reference(ideal);
        std::vector<std::uint64_t> sorted_formula = formula;
        std::sort(sorted_formula.begin(), sorted_formula.end());
        std::sort(reference.begin(), reference.end());
        CHECK(sorted_formula == reference);

        // parallel and serial oracles agree with both
        std::vector<std::uint64_t> scan = facets_oracle(ideal, inst.n);
        std::vector<std::uint64_t> scan_serial = facets_oracle_serial(ideal, inst.n);
        CHECK(scan == scan_serial);
        std::sort(scan.begin(), scan.end());
        CHECK(scan == reference);
    }
}

TEST_CASE("smallest non-trivial case, frozen") {
    BorelInstance inst = validate_instance(3, {1}, {2, 3});
    std::vector<std::uint64_t> facets = facets_theorem(inst);
    std::sort(facets.begin(), facets.end());
    CHECK(facets == std::vector<std::uint64_t>{0b001, 0b010, 0b100});
    CHECK(sorted_masks(primary_decomposition(inst)) ==
          std::vector<std::uint64_t>{0b011, 0b101, 0b110});
    CHECK(height(inst) == 2);
}

TEST_CASE("running example decomposes into the eight frozen components") {
    BorelInstance inst = validate_instance(8, {2, 1}, {2, 5, 8});
    std::vector<PrimeSupport> components = primary_decomposition(inst);
    REQUIRE(components.size() == 8);
    std::vector<std::uint64_t> expected;
    for (const auto& idx : std::vector<std::vector<int>>{{1, 2},
                                                         {1, 4, 5},
                                                         {3, 4, 5},
                                                         {1, 4, 6, 7, 8},
                                                         {1, 5, 6, 7, 8},
                                                         {3, 4, 6, 7, 8},
                                                         {3, 5, 6, 7, 8},
                                                         {4, 5, 6, 7, 8}})
        expected.push_back(PrimeSupport::from_indices(8, idx).mask());
    std::sort(expected.begin(), expected.end());
    CHECK(sorted_masks(components) == expected);
    CHECK(height(inst) == 2);
}

TEST_CASE("components cut out the ideal, membership-checked") {
    for (const BorelInstance& inst : small_grid(5)) {
        CAPTURE(inst.str());
        MonomialIdeal ideal = borel_gens(inst);
        std::vector<PrimeSupport> components = primary_decomposition(inst);
        for (const Monomial& m : oracle::all_squarefree(inst.n)) {
            bool in_every_component = true;
            for (const PrimeSupport& p : components) {
                bool touches = false;
                for (int v : p.indices())
                    if (m.exponent(v) > 0)
                        touches = true;
                if (!touches) {
                    in_every_component = false;
                    break;
                }
            }
            CHECK(ideal.contains(m) == in_every_component);
        }
    }
}

TEST_CASE("components form an antichain and their sizes floor at the height") {
    for (const BorelInstance& inst : small_grid(6)) {
        CAPTURE(inst.str());
        std::vector<PrimeSupport> components = primary_decomposition(inst);
        int h = height(inst);
        CHECK(h == inst.u.front());
        for (std::size_t i = 0; i < components.size(); ++i) {
            CHECK(components[i].size() >= h);
            for (std::size_t j = 0; j < components.size(); ++j)
                if (i != j)
                    CHECK((components[i].mask() & components[j].mask()) !=
                          components[i].mask());
        }
    }
}

TEST_CASE("subset scan refuses oversized ambients") {
    const int n = 17; // over the default 16-variable oracle cap
    MonomialIdeal a = MonomialIdeal::make(n, {Monomial::variable(n, 1)});
    CHECK_THROWS_AS(facets_oracle(a, n), ResourceLimit);
    CHECK_THROWS_AS(facets_oracle_serial(a, n), ResourceLimit);
}
