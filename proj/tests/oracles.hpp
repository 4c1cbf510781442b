#ifndef VSPREAD_TESTS_ORACLES_HPP
#define VSPREAD_TESTS_ORACLES_HPP

/* Reference implementations used only by the tests.  Everything here is
 * written from the definitions, in the most literal way available, so that
 * agreement with the library is evidence rather than tautology: membership
 * predicates instead of enumerations, quadratic scans instead of sorted
 * merges, subset loops instead of closed forms. */

#include <algorithm>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "vspread/ideal.hpp"
#include "vspread/monomial.hpp"
#include "vspread/spread.hpp"

namespace vspread::oracle {

/* Literal definition of G(B_t(u)): squarefree, degree d, i_r <= j_r in every
 * slot, consecutive gaps at least t_r. */
inline bool is_generator(const BorelInstance& inst, const Monomial& m) {
    if (!m.is_squarefree() || m.vars() != inst.n)
        return false;
    std::vector<int> idx = m.support_indices();
    if (idx.size() != inst.u.size())
        return false;
    for (std::size_t r = 0; r < idx.size(); ++r)
        if (idx[r] > inst.u[r])
            return false;
    for (std::size_t r = 0; r + 1 < idx.size(); ++r)
        if (idx[r + 1] - idx[r] < inst.t[r])
            return false;
    return true;
}

/* All squarefree monomials on n variables, one per subset mask. */
inline std::vector<Monomial> all_squarefree(int n) {
    std::vector<Monomial> out;
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        std::vector<int> idx;
        for (int i = 1; i <= n; ++i)
            if (mask & (1ull << (i - 1)))
                idx.push_back(i);
        out.push_back(Monomial::from_indices(n, idx));
    }
    return out;
}

/* All monomials on n variables of total degree <= bound (odometer over
 * exponent vectors).  Sizes explode quickly; callers keep n and bound tiny. */
inline std::vector<Monomial> all_monomials_up_to(int n, int bound) {
    std::vector<Monomial> out;
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    int total = 0;
    for (;;) {
        out.push_back(Monomial::from_exponents(n, e));
        int slot = n - 1;
        while (slot >= 0) {
            if (total < bound) {
                ++e[slot];
                ++total;
                break;
            }
            total -= e[slot];
            e[slot] = 0;
            --slot;
        }
        if (slot < 0)
            return out;
    }
}

/* Divisibility-minimal subset by the quadratic definition. */
inline std::vector<Monomial> minimalize_reference(std::vector<Monomial> monos) {
    std::sort(monos.begin(), monos.end(), Monomial::canonical_less);
    monos.erase(std::unique(monos.begin(), monos.end()), monos.end());
    std::vector<Monomial> kept;
    for (std::size_t i = 0; i < monos.size(); ++i) {
        bool minimal = true;
        for (std::size_t j = 0; j < monos.size() && minimal; ++j)
            if (j != i && monos[j].divides(monos[i]))
                minimal = false;
        if (minimal)
            kept.push_back(monos[i]);
    }
    return kept;
}

/* m lies in the ideal exactly when some minimal generator divides it. */
inline bool ideal_member(const MonomialIdeal& a, const Monomial& m) {
    for (const Monomial& g : a.gens())
        if (g.divides(m))
            return true;
    return false;
}

/* m lies in I^k exactly when some k-fold product of generators divides it
 * (repetition allowed). */
inline bool power_member(const MonomialIdeal& a, const Monomial& m, int k) {
    if (k == 0)
        return true;
    for (const Monomial& g : a.gens()) {
        if (!g.divides(m))
            continue;
        if (power_member(a, m.divide_by(g), k - 1))
            return true;
    }
    return false;
}

/* m lies in the symbolic power exactly when every component sees degree >= k
 * of it. */
inline bool symbolic_member(const std::vector<PrimeSupport>& components,
                            const Monomial& m, int k) {
    for (const PrimeSupport& p : components) {
        int got = 0;
        for (int v : p.indices())
            got += m.exponent(v);
        if (got < k)
            return false;
    }
    return true;
}

/* Linear relation edges by the definition: {i, j} whenever x_i g = x_j h for
 * some generators g, h.  Full quadratic scan over generator pairs and
 * variable pairs. */
inline std::vector<std::pair<int, int>>
relation_edges_reference(const MonomialIdeal& a) {
    std::set<std::pair<int, int>> edges;
    const int n = a.vars();
    for (const Monomial& g : a.gens())
        for (const Monomial& h : a.gens())
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j)
                    if (i < j &&
                        g.times(Monomial::variable(n, i)) ==
                            h.times(Monomial::variable(n, j)))
                        edges.insert({i, j});
    return {edges.begin(), edges.end()};
}

/* Vertices and connected components of an edge list, counted by repeated
 * flood fill over an adjacency map. */
inline std::pair<int, int>
graph_counts_reference(const std::vector<std::pair<int, int>>& edges) {
    std::set<int> vertices;
    for (auto [i, j] : edges) {
        vertices.insert(i);
        vertices.insert(j);
    }
    std::set<int> seen;
    int components = 0;
    for (int start : vertices) {
        if (seen.count(start))
            continue;
        ++components;
        std::vector<int> stack = {start};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (!seen.insert(v).second)
                continue;
            for (auto [i, j] : edges) {
                if (i == v && !seen.count(j))
                    stack.push_back(j);
                if (j == v && !seen.count(i))
                    stack.push_back(i);
            }
        }
    }
    return {static_cast<int>(vertices.size()), components};
}

/* Third route to the Alexander dual of a squarefree ideal: its generators
 * are the minimal transversals of the generator supports, found by scanning
 * all 2^n subsets. */
inline std::vector<Monomial> dual_reference(const MonomialIdeal& a) {
    const int n = a.vars();
    std::vector<std::uint64_t> supports;
    for (const Monomial& g : a.gens())
        supports.push_back(g.support());
    std::vector<std::uint64_t> hits;
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        bool transversal = true;
        for (std::uint64_t s : supports)
            if ((s & mask) == 0) {
                transversal = false;
                break;
            }
        if (transversal)
            hits.push_back(mask);
    }
    std::vector<Monomial> gens;
    for (std::uint64_t mask : hits) {
        bool minimal = true;
        for (std::uint64_t other : hits)
            if (other != mask && (other & mask) == other) {
                minimal = false;
                break;
            }
        if (minimal) {
            std::vector<int> idx;
            for (int i = 1; i <= n; ++i)
                if (mask & (1ull << (i - 1)))
                    idx.push_back(i);
            gens.push_back(Monomial::from_indices(n, idx));
        }
    }
    std::sort(gens.begin(), gens.end(), Monomial::canonical_less);
    return gens;
}

/* Facets by definition: maximal subsets whose squarefree product avoids the
 * ideal. */
inline std::vector<std::uint64_t> facets_reference(const MonomialIdeal& a) {
    const int n = a.vars();
    std::vector<std::uint64_t> faces;
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        std::vector<int> idx;
        for (int i = 1; i <= n; ++i)
            if (mask & (1ull << (i - 1)))
                idx.push_back(i);
        if (!ideal_member(a, Monomial::from_indices(n, idx)))
            faces.push_back(mask);
    }
    std::vector<std::uint64_t> facets;
    for (std::uint64_t f : faces) {
        bool maximal = true;
        for (std::uint64_t g : faces)
            if (g != f && (f & g) == f) {
                maximal = false;
                break;
            }
        if (maximal)
            facets.push_back(f);
    }
    std::sort(facets.begin(), facets.end(), support_less);
    return facets;
}

/* Convenience: build a squarefree monomial from listed variables. */
inline Monomial sq(int n, std::vector<int> idx) {
    return Monomial::from_indices(n, idx);
}

/* Convenience: ideal from index lists. */
inline MonomialIdeal ideal_of(int n, std::vector<std::vector<int>> lists) {
    std::vector<Monomial> gens;
    for (const auto& idx : lists)
        gens.push_back(Monomial::from_indices(n, idx));
    return MonomialIdeal::make(n, std::move(gens));
}

} // namespace vspread::oracle

#endif
