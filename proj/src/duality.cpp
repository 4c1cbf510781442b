#include "vspread/duality.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "vspread/caps.hpp"

namespace vspread {

namespace {

MonomialIdeal support_prime(int n, const Monomial& g) {
    std::vector<Monomial> vars;
    for (int i : g.support_indices())
        vars.push_back(Monomial::variable(n, i));
    return MonomialIdeal::make(n, std::move(vars));
}

MonomialIdeal dual_by_supports(const MonomialIdeal& a) {
    std::vector<MonomialIdeal> primes;
    primes.reserve(a.gen_count());
    for (const Monomial& g : a.gens())
        primes.push_back(support_prime(a.vars(), g));
    return intersect_many(primes, a.vars());
}

MonomialIdeal dual_by_facets(const MonomialIdeal& a) {
    const int n = a.vars();
    const std::uint64_t all = n == 64 ? ~0ull : (1ull << n) - 1;
    std::vector<Monomial> gens;
    for (std::uint64_t f : facets_oracle(a, n)) {
        std::vector<int> idx;
        std::uint64_t c = all & ~f;
        while (c) {
            idx.push_back(std::countr_zero(c) + 1);
            c &= c - 1;
        }
        gens.push_back(Monomial::from_indices(n, idx));
    }
    return MonomialIdeal::make(n, std::move(gens));
}

/* Extends Alexander duality to the trivial ideals so the splitting formula
 * can flow through its degenerate shapes: complements of no facets. */
MonomialIdeal dual_with_conventions(const MonomialIdeal& a) {
    if (a.is_zero())
        return MonomialIdeal::unit(a.vars());
    if (a.is_unit())
        return MonomialIdeal::zero(a.vars());
    return alexander_dual(a);
}

} // namespace

MonomialIdeal alexander_dual(const MonomialIdeal& a) {
    if (a.is_zero() || a.is_unit())
        throw InvalidInput("Alexander dual needs a proper non-zero ideal");
    if (!a.is_squarefree())
        throw InvalidInput("Alexander dual needs a squarefree ideal");
    MonomialIdeal by_supports = dual_by_supports(a);
    MonomialIdeal by_facets = dual_by_facets(a);
    if (!(by_supports == by_facets))
        throw ConsistencyError("Alexander dual routes disagree (" +
                               std::to_string(a.gen_count()) + " generators, n=" +
                               std::to_string(a.vars()) + ")");
    return by_supports;
}

/* ---------- vertex splitting ---------- */

namespace {

std::shared_ptr<const SplitTree> make_node(SplitTree::Kind kind, MonomialIdeal ideal,
                                           std::optional<Monomial> gen, int var,
                                           std::shared_ptr<const SplitTree> left,
                                           std::shared_ptr<const SplitTree> right) {
    return std::make_shared<SplitTree>(SplitTree{kind, std::move(ideal),
                                                 std::move(gen), var,
                                                 std::move(left), std::move(right)});
}

std::shared_ptr<const SplitTree> leaf_for(const MonomialIdeal& a) {
    if (a.is_zero())
        return make_node(SplitTree::Kind::ZeroLeaf, a, {}, 0, nullptr, nullptr);
    if (a.is_unit())
        return make_node(SplitTree::Kind::UnitLeaf, a, {}, 0, nullptr, nullptr);
    return make_node(SplitTree::Kind::PrincipalLeaf, a, a.gens()[0], 0, nullptr,
                     nullptr);
}

std::shared_ptr<const SplitTree> split_search(const MonomialIdeal& a) {
    thread_local std::map<std::string, std::shared_ptr<const SplitTree>> memo;
    if (a.gen_count() <= 1)
        return leaf_for(a);
    auto hit = memo.find(a.key());
    if (hit != memo.end())
        return hit->second;

    const int n = a.vars();
    std::vector<std::pair<int, int>> occurrence; // (-count, var)
    for (int v = 1; v <= n; ++v) {
        int count = 0;
        for (const Monomial& g : a.gens())
            if (g.exponent(v) > 0) ++count;
        if (count > 0)
            occurrence.emplace_back(-count, v);
    }
    std::sort(occurrence.begin(), occurrence.end());

    std::shared_ptr<const SplitTree> result;
    for (auto [neg, v] : occurrence) {
        Monomial xv = Monomial::variable(n, v);
        std::vector<Monomial> part1, part2;
        for (const Monomial& g : a.gens()) {
            if (g.exponent(v) > 0)
                part1.push_back(g.divide_by(xv));
            else
                part2.push_back(g);
        }
        if (part1.empty())
            continue; // v occurs, so never happens; keep the guard anyway
        MonomialIdeal i1 = MonomialIdeal::make(n, part1);
        MonomialIdeal i2 = part2.empty() ? MonomialIdeal::zero(n)
                                         : MonomialIdeal::make(n, part2);
        if (i1.gen_count() != part1.size() || i2.gen_count() != part2.size())
            continue; // a quotient collapsed: not a clean generator split
        if (!i1.contains_ideal(i2))
            continue;
        auto left = split_search(i1);
        if (!left)
            continue;
        auto right = split_search(i2);
        if (!right)
            continue;
        result = make_node(SplitTree::Kind::Node, a, {}, v, left, right);
        break;
    }
    memo.emplace(a.key(), result);
    return result;
}

} // namespace

std::shared_ptr<const SplitTree> vertex_split_tree(const MonomialIdeal& a) {
    return split_search(a);
}

bool verify_split_tree(const MonomialIdeal& a, const SplitTree& tree) {
    if (!(tree.ideal == a))
        return false;
    switch (tree.kind) {
    case SplitTree::Kind::ZeroLeaf:
        return a.is_zero();
    case SplitTree::Kind::UnitLeaf:
        return a.is_unit();
    case SplitTree::Kind::PrincipalLeaf:
        return a.gen_count() == 1 && tree.gen && *tree.gen == a.gens()[0];
    case SplitTree::Kind::Node:
        break;
    }
    if (tree.var < 1 || tree.var > a.vars() || !tree.left || !tree.right)
        return false;
    const MonomialIdeal& i1 = tree.left->ideal;
    const MonomialIdeal& i2 = tree.right->ideal;
    if (i1.vars() != a.vars() || i2.vars() != a.vars())
        return false;
    for (const Monomial& g : i2.gens()) // I2 lives in the ring without x_v
        if (g.exponent(tree.var) > 0)
            return false;
    if (!i1.contains_ideal(i2))
        return false;
    Monomial xv = Monomial::variable(a.vars(), tree.var);
    /* G(I) must be exactly G(x_v I1) ⊔ G(I2) */
    if (i1.gen_count() + i2.gen_count() != a.gen_count())
        return false;
    std::vector<Monomial> assembled;
    for (const Monomial& g : i1.gens())
        assembled.push_back(g.times(xv));
    for (const Monomial& g : i2.gens())
        assembled.push_back(g);
    std::sort(assembled.begin(), assembled.end(), Monomial::canonical_less);
    if (std::adjacent_find(assembled.begin(), assembled.end()) != assembled.end())
        return false;
    if (!(assembled == a.gens()))
        return false;
    return verify_split_tree(i1, *tree.left) && verify_split_tree(i2, *tree.right);
}

/* ---------- the structural split of the dual ---------- */

DualSplit dual_split(const BorelInstance& inst) {
    const int n = inst.n;
    MonomialIdeal ideal = borel_gens(inst);
    MonomialIdeal dual = alexander_dual(ideal);

    std::vector<Monomial> outside; // generators avoiding x_1
    for (const Monomial& g : ideal.gens())
        if (g.exponent(1) == 0)
            outside.push_back(g);
    MonomialIdeal intersection_part = outside.empty()
                                          ? MonomialIdeal::zero(n)
                                          : MonomialIdeal::make(n, std::move(outside));
    MonomialIdeal colon_part = colon_by_monomial(ideal, Monomial::variable(n, 1));

    DualSplit ds{dual, 1, dual_with_conventions(intersection_part),
                 dual_with_conventions(colon_part)};

    if (!(sum(multiply(ds.left, Monomial::variable(n, 1)), ds.right) == dual))
        throw ConsistencyError("dual splitting does not reconstruct the dual for " +
                               inst.str());
    if (ds.left.gen_count() + ds.right.gen_count() != dual.gen_count())
        throw ConsistencyError("dual splitting parts overlap for " + inst.str());
    if (!ds.left.contains_ideal(ds.right))
        throw ConsistencyError("dual splitting containment fails for " + inst.str());
    return ds;
}

std::shared_ptr<const SplitTree> instance_dual_split_tree(const BorelInstance& inst) {
    DualSplit ds = dual_split(inst);
    auto left = vertex_split_tree(ds.left);
    auto right = vertex_split_tree(ds.right);
    if (!left || !right)
        throw ConsistencyError("dual splitting part is not vertex splittable for " +
                               inst.str());
    auto node = make_node(SplitTree::Kind::Node, ds.dual, {}, 1, left, right);
    if (!verify_split_tree(ds.dual, *node))
        throw ConsistencyError("dual splitting tree fails verification for " + inst.str());
    return node;
}

/* ---------- linear quotients ---------- */

std::vector<Monomial> split_induced_order(const SplitTree& tree) {
    switch (tree.kind) {
    case SplitTree::Kind::ZeroLeaf:
        return {};
    case SplitTree::Kind::UnitLeaf:
    case SplitTree::Kind::PrincipalLeaf:
        return {tree.ideal.gens()[0]};
    case SplitTree::Kind::Node:
        break;
    }
    Monomial xv = Monomial::variable(tree.ideal.vars(), tree.var);
    std::vector<Monomial> order;
    for (const Monomial& g : split_induced_order(*tree.left))
        order.push_back(g.times(xv));
    for (const Monomial& g : split_induced_order(*tree.right))
        order.push_back(g);
    return order;
}

bool verify_quotient_order(int n, std::span<const Monomial> order) {
    for (std::size_t i = 1; i < order.size(); ++i) {
        std::vector<Monomial> quotients;
        quotients.reserve(i);
        for (std::size_t k = 0; k < i; ++k)
            quotients.push_back(order[k].divide_by(Monomial::gcd(order[k], order[i])));
        for (const Monomial& q : minimalize(std::move(quotients)))
            if (q.degree() != 1)
                return false;
    }
    (void)n;
    return true;
}

namespace {

bool extend_order(int n, const std::vector<Monomial>& gens, std::vector<int>& picked,
                  std::vector<char>& used, std::set<std::vector<char>>& dead) {
    if (picked.size() == gens.size())
        return true;
    if (dead.count(used))
        return false;
    for (std::size_t c = 0; c < gens.size(); ++c) {
        if (used[c])
            continue;
        std::vector<Monomial> quotients;
        for (int p : picked)
            quotients.push_back(gens[p].divide_by(Monomial::gcd(gens[p], gens[c])));
        bool linear = true;
        for (const Monomial& q : minimalize(std::move(quotients)))
            if (q.degree() != 1) {
                linear = false;
                break;
            }
        if (!linear)
            continue;
        used[c] = 1;
        picked.push_back(static_cast<int>(c));
        if (extend_order(n, gens, picked, used, dead))
            return true;
        picked.pop_back();
        used[c] = 0;
    }
    dead.insert(used);
    return false;
}

} // namespace

std::optional<std::vector<Monomial>> linear_quotients_order(const MonomialIdeal& a) {
    if (a.gen_count() <= 1) {
        std::vector<Monomial> order(a.gens().begin(), a.gens().end());
        return order;
    }
    if (auto tree = vertex_split_tree(a)) {
        std::vector<Monomial> order = split_induced_order(*tree);
        if (verify_quotient_order(a.vars(), order))
            return order;
    }
    if (a.gen_count() > caps().linquot_gens)
        throw ResourceLimit("linear-quotient search capped at " +
                            std::to_string(caps().linquot_gens) + " generators");
    std::vector<Monomial> gens = a.gens();
    std::vector<int> picked;
    std::vector<char> used(gens.size(), 0);
    std::set<std::vector<char>> dead;
    if (!extend_order(a.vars(), gens, picked, used, dead))
        return std::nullopt;
    std::vector<Monomial> order;
    order.reserve(picked.size());
    for (int p : picked)
        order.push_back(gens[p]);
    return order;
}

} // namespace vspread
