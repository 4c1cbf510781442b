#include <algorithm>
#include <cstdint>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "vspread/decomposition.hpp"
#include "vspread/errors.hpp"
#include "vspread/powers.hpp"
#include "vspread/spread.hpp"
#include "vspread/sweep.hpp"

using namespace vspread;

namespace {

BorelInstance example() { return validate_instance(8, {2, 1}, {2, 5, 8}); }

std::vector<BorelInstance> small_grid(int n_max) {
    SweepConfig cfg;
    cfg.n_max = n_max;
    return enumerate_instances(cfg);
}

PrimeSupport prime(int n, std::vector<int> idx) {
    return PrimeSupport::from_indices(n, idx);
}

// components as facet complements, with the facets found by the subset scan
std::vector<PrimeSupport> components_reference(const MonomialIdeal& a) {
    const int n = a.vars();
    const std::uint64_t full = (1ull << n) - 1;
    std::vector<PrimeSupport> out;
    for (std::uint64_t facet : oracle::facets_reference(a))
        out.emplace_back(n, full & ~facet);
    return out;
}

} // namespace

TEST_CASE("first symbolic power is the ideal") {
    for (const BorelInstance& inst : small_grid(5)) {
        CAPTURE(inst.str());
        CHECK(symbolic_power(inst, 1) == borel_gens(inst));
    }
}

TEST_CASE("symbolic powers match componentwise degree counting") {
    for (const BorelInstance& inst : small_grid(4)) {
        CAPTURE(inst.str());
        std::vector<PrimeSupport> components =
            components_reference(borel_gens(inst));
        for (int k = 2; k <= 3; ++k) {
            MonomialIdeal computed = symbolic_power(inst, k);
            // membership agreement up to the largest possible generator degree
            // (every minimal generator of an intersection of ideals generated
            // in degree k divides a product of one degree-k monomial per
            // component) decides equality
            int bound = k * static_cast<int>(components.size());
            for (const Monomial& g : computed.gens())
                bound = std::max(bound, g.degree());
            for (const Monomial& m : oracle::all_monomials_up_to(inst.n, bound)) {
                bool expect = oracle::symbolic_member(components, m, k);
                if (computed.contains(m) != expect) {
                    CAPTURE(m.str());
                    CHECK(computed.contains(m) == expect);
                }
            }
        }
    }
}

TEST_CASE("symbolic power guards") {
    CHECK_THROWS_AS(symbolic_power(example(), 0), InvalidInput);
    CHECK_THROWS_AS(symbolic_power_from({}, 2, 3), InvalidInput);
}

TEST_CASE("condition (c) on fixed instances") {
    CHECK_FALSE(ntf_condition(example()));                          // j_2 = 5 > 3
    CHECK(ntf_condition(validate_instance(6, {2, 2}, {2, 4, 6}))); // 2<=2, 4<=4
    CHECK_FALSE(ntf_condition(validate_instance(3, {1}, {2, 3}))); // j_1 = 2 > 1
    CHECK(ntf_condition(validate_instance(2, {1}, {1, 2})));
}

TEST_CASE("witness certificate for the running example") {
    NtfCertificate cert = witness_noneq(example());
    CHECK(cert.q.indices() == std::vector<int>{3, 4, 5, 6, 7, 8});
    CHECK(cert.var_map == std::vector<int>{3, 4, 5, 6, 7, 8});
    CHECK(cert.reduced.str() == "n=6 t=1 u=3,6");
    CHECK(cert.witness.str() == "x1*x3*x6");
    CHECK(cert.witness_in_symbolic2);
    CHECK_FALSE(cert.witness_in_power2);
    CHECK(cert.closed_form);
}

TEST_CASE("searched witness when the closed form fails") {
    // here the generator x1*x2*x4 starts its second interval at t_1 + 1, so
    // the closed-form candidate x1*x2*x3*x5 misses the component {4, 5} and a
    // generator search must supply the witness
    BorelInstance inst = validate_instance(5, {1, 2}, {2, 3, 5});
    NtfCertificate cert = witness_noneq(inst);
    CHECK(cert.q.indices() == std::vector<int>{1, 2, 3, 4, 5});
    CHECK(cert.var_map == std::vector<int>{1, 2, 3, 4, 5});
    CHECK(cert.reduced.str() == "n=5 t=1,2 u=2,3,5");
    CHECK_FALSE(cert.closed_form);
    CHECK(cert.witness.str() == "x1*x2*x3*x4*x5");
    CHECK(cert.witness_in_symbolic2);
    CHECK_FALSE(cert.witness_in_power2);
}

TEST_CASE("witness construction refuses satisfied instances") {
    CHECK_THROWS_AS(witness_noneq(validate_instance(6, {2, 2}, {2, 4, 6})),
                    InvalidInput);
}

TEST_CASE("classification both ways") {
    NtfVerdict good = classify_ntf(validate_instance(6, {2, 2}, {2, 4, 6}), 3);
    CHECK(good.satisfied);
    REQUIRE(good.checks.size() == 2);
    CHECK(good.checks[0].k == 2);
    CHECK(good.checks[0].equal);
    CHECK(good.checks[1].k == 3);
    CHECK(good.checks[1].equal);
    CHECK_FALSE(good.certificate.has_value());

    NtfVerdict bad = classify_ntf(validate_instance(3, {1}, {2, 3}), 3);
    CHECK_FALSE(bad.satisfied);
    REQUIRE(bad.checks.size() == 1);
    CHECK(bad.checks[0].k == 2);
    CHECK_FALSE(bad.checks[0].equal);
    REQUIRE(bad.certificate.has_value());
    CHECK(bad.certificate->witness_in_symbolic2);
    CHECK_FALSE(bad.certificate->witness_in_power2);

    CHECK_THROWS_AS(classify_ntf(example(), 1), InvalidInput);
}

TEST_CASE("principal factor passes through symbolic powers") {
    // (u J)^(k) = u^k J^(k) for a variable u coprime to J
    MonomialIdeal j = oracle::ideal_of(4, {{1, 2}, {1, 3}, {2, 3}});
    Monomial u = Monomial::variable(4, 4);
    MonomialIdeal uj = multiply(j, u);
    for (int k = 1; k <= 3; ++k) {
        MonomialIdeal left = symbolic_power_from(components_reference(uj), k, 4);
        MonomialIdeal right =
            multiply(symbolic_power_from(components_reference(j), k, 4), u.pow(k));
        CHECK(left == right);
    }
}

TEST_CASE("restriction by exponent bounds") {
    MonomialIdeal triangle = oracle::ideal_of(3, {{1, 2}, {1, 3}, {2, 3}});
    std::vector<int> b1 = {1, 1, 0};
    CHECK(a_restriction(triangle, b1) == oracle::ideal_of(3, {{1, 2}}));
    std::vector<int> b2 = {0, 1, 1};
    CHECK(a_restriction(triangle, b2) == oracle::ideal_of(3, {{2, 3}}));
    std::vector<int> b3 = {1, 1, 1};
    CHECK(a_restriction(triangle, b3) == triangle);
    std::vector<int> shortb = {1, 1};
    CHECK_THROWS_AS(a_restriction(triangle, shortb), InvalidInput);
}

TEST_CASE("monomial localization") {
    MonomialIdeal triangle = oracle::ideal_of(3, {{1, 2}, {1, 3}, {2, 3}});
    MonomialIdeal at12 = monomial_localization(triangle, prime(3, {1, 2}));
    CHECK(at12 == MonomialIdeal::make(3, {Monomial::variable(3, 1),
                                          Monomial::variable(3, 2)}));
    CHECK(monomial_localization(triangle, prime(3, {3})).is_unit());
    CHECK(monomial_localization(triangle, prime(3, {1, 2, 3})) == triangle);
    CHECK_THROWS_AS(monomial_localization(triangle, prime(4, {1, 2})),
                    InvalidInput);
}
