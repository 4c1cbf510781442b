#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "vspread/duality.hpp"
#include "vspread/errors.hpp"
#include "vspread/spread.hpp"
#include "vspread/sweep.hpp"

using namespace vspread;

namespace {

BorelInstance example() { return validate_instance(8, {2, 1}, {2, 5, 8}); }

std::vector<std::string> gen_strings(const MonomialIdeal& a) {
    std::vector<std::string> out;
    for (const Monomial& g : a.gens())
        out.push_back(g.str());
    return out;
}

std::vector<BorelInstance> small_grid(int n_max) {
    SweepConfig cfg;
    cfg.n_max = n_max;
    return enumerate_instances(cfg);
}

} // namespace

TEST_CASE("dual of the running example") {
    MonomialIdeal dual = alexander_dual(borel_gens(example()));
    std::vector<std::string> expected = {
        "x1*x4*x6*x7*x8", "x1*x5*x6*x7*x8", "x3*x4*x6*x7*x8",
        "x3*x5*x6*x7*x8", "x4*x5*x6*x7*x8", "x1*x4*x5",
        "x3*x4*x5",       "x1*x2",
    };
    CHECK(gen_strings(dual) == expected);
}

TEST_CASE("dual matches the transversal scan and is an involution") {
    for (const BorelInstance& inst : small_grid(6)) {
        CAPTURE(inst.str());
        MonomialIdeal ideal = borel_gens(inst);
        MonomialIdeal dual = alexander_dual(ideal);
        CHECK(dual == MonomialIdeal::make(inst.n, oracle::dual_reference(ideal)));
        CHECK(alexander_dual(dual) == ideal);
    }
}

TEST_CASE("dual rejects improper input") {
    CHECK_THROWS_AS(alexander_dual(MonomialIdeal::zero(3)), InvalidInput);
    CHECK_THROWS_AS(alexander_dual(MonomialIdeal::unit(3)), InvalidInput);
    Monomial sq = Monomial::variable(3, 1).times(Monomial::variable(3, 1));
    CHECK_THROWS_AS(alexander_dual(MonomialIdeal::make(3, {sq})), InvalidInput);
    CHECK_THROWS_AS(alexander_dual(MonomialIdeal::make(17, {Monomial::variable(17, 1)})),
                    ResourceLimit);
}

TEST_CASE("structural splitting of the example dual") {
    DualSplit split = dual_split(example());
    CHECK(split.var == 1);
    CHECK(split.dual == alexander_dual(borel_gens(example())));
    CHECK(gen_strings(split.left) ==
          std::vector<std::string>{"x4*x6*x7*x8", "x5*x6*x7*x8", "x4*x5", "x2"});
    CHECK(gen_strings(split.right) ==
          std::vector<std::string>{"x3*x4*x6*x7*x8", "x3*x5*x6*x7*x8",
                                   "x4*x5*x6*x7*x8", "x3*x4*x5"});
}

TEST_CASE("splitting reconstructs the dual with disjoint parts") {
    for (const BorelInstance& inst : small_grid(6)) {
        CAPTURE(inst.str());
        DualSplit split = dual_split(inst);
        CHECK(split.var == 1);
        MonomialIdeal rebuilt =
            sum(multiply(split.left, Monomial::variable(inst.n, 1)), split.right);
        CHECK(rebuilt == split.dual);
        CHECK(split.left.contains_ideal(split.right));
        std::set<std::string> seen;
        for (const Monomial& g : split.dual.gens())
            seen.insert(g.str());
        std::size_t hits = 0;
        for (const Monomial& g : split.right.gens())
            hits += seen.count(g.str());
        CHECK(hits == split.right.gen_count()); // right gens appear verbatim
    }
}

TEST_CASE("split trees verify and handle the base cases") {
    MonomialIdeal dual = alexander_dual(borel_gens(example()));
    auto tree = vertex_split_tree(dual);
    REQUIRE(tree != nullptr);
    CHECK(tree->kind == SplitTree::Kind::Node);
    CHECK(verify_split_tree(dual, *tree));

    auto zero = vertex_split_tree(MonomialIdeal::zero(4));
    REQUIRE(zero != nullptr);
    CHECK(zero->kind == SplitTree::Kind::ZeroLeaf);
    auto unit = vertex_split_tree(MonomialIdeal::unit(4));
    REQUIRE(unit != nullptr);
    CHECK(unit->kind == SplitTree::Kind::UnitLeaf);
    auto principal = vertex_split_tree(oracle::ideal_of(4, {{2, 3}}));
    REQUIRE(principal != nullptr);
    CHECK(principal->kind == SplitTree::Kind::PrincipalLeaf);
    REQUIRE(principal->gen.has_value());
    CHECK(principal->gen->str() == "x2*x3");

    // a tree claimed for the wrong ideal is rejected
    CHECK_FALSE(verify_split_tree(oracle::ideal_of(8, {{1, 2}}), *tree));
}

TEST_CASE("two disjoint edges admit no splitting and no linear quotients") {
    MonomialIdeal fourcycle = oracle::ideal_of(4, {{1, 3}, {2, 4}});
    CHECK(vertex_split_tree(fourcycle) == nullptr);
    CHECK_FALSE(linear_quotients_order(fourcycle).has_value());
}

TEST_CASE("instance duals split all the way down") {
    for (const BorelInstance& inst : small_grid(6)) {
        CAPTURE(inst.str());
        auto tree = instance_dual_split_tree(inst);
        REQUIRE(tree != nullptr);
        MonomialIdeal dual = alexander_dual(borel_gens(inst));
        CHECK(verify_split_tree(dual, *tree));

        std::vector<Monomial> order = split_induced_order(*tree);
        REQUIRE(order.size() == dual.gen_count());
        CHECK(verify_quotient_order(inst.n, order));
        std::vector<std::string> sorted_order;
        for (const Monomial& g : order)
            sorted_order.push_back(g.str());
        std::sort(sorted_order.begin(), sorted_order.end());
        std::vector<std::string> sorted_gens = gen_strings(dual);
        std::sort(sorted_gens.begin(), sorted_gens.end());
        CHECK(sorted_order == sorted_gens); // a permutation of the generators
    }
}

TEST_CASE("linear quotient search succeeds on splittable ideals") {
    MonomialIdeal triangle = oracle::ideal_of(3, {{1, 2}, {1, 3}, {2, 3}});
    auto order = linear_quotients_order(triangle);
    REQUIRE(order.has_value());
    CHECK(order->size() == 3);
    CHECK(verify_quotient_order(3, *order));

    MonomialIdeal dual = alexander_dual(borel_gens(example()));
    auto dual_order = linear_quotients_order(dual);
    REQUIRE(dual_order.has_value());
    CHECK(verify_quotient_order(8, *dual_order));
}
