#include "vspread/spread.hpp"

#include <algorithm>

namespace vspread {

std::string BorelInstance::str() const {
    std::string s = "n=" + std::to_string(n) + " t=";
    for (std::size_t i = 0; i < t.size(); ++i)
        s += (i ? "," : "") + std::to_string(t[i]);
    if (t.empty())
        s += "-";
    s += " u=";
    for (std::size_t i = 0; i < u.size(); ++i)
        s += (i ? "," : "") + std::to_string(u[i]);
    return s;
}

BorelInstance validate_instance(int n, std::vector<int> t, std::vector<int> u) {
    if (u.empty())
        throw InvalidInput("u must have at least one factor");
    const int d = static_cast<int>(u.size());
    if (t.size() + 1 != u.size())
        throw InvalidInput("t must have exactly " + std::to_string(d - 1) +
                           " entries for a degree-" + std::to_string(d) + " monomial");
    for (int ti : t)
        if (ti < 1)
            throw InvalidInput("spread entries must be positive");
    if (u[0] < 1)
        throw InvalidInput("u indices must be positive");
    for (int s = 0; s + 1 < d; ++s) {
        if (u[s + 1] - u[s] < t[s])
            throw InvalidInput("u is not t-spread: x" + std::to_string(u[s]) + ",x" +
                               std::to_string(u[s + 1]) + " closer than " + std::to_string(t[s]));
    }
    if (n < 0)
        throw InvalidInput("variable count out of range: " + std::to_string(n));
    if (n != 0 && n < u.back())
        throw InvalidInput("ambient n=" + std::to_string(n) + " cannot carry x" +
                           std::to_string(u.back()));
    n = u.back(); // j_d = n: trailing unused variables are dropped
    if (n > Monomial::kMaxVars)
        throw InvalidInput("variable count out of range: " + std::to_string(n));
    return BorelInstance{n, std::move(t), std::move(u)};
}

bool is_t_spread(const Monomial& m, std::span<const int> t) {
    if (!m.is_squarefree())
        return false;
    std::vector<int> idx = m.support_indices();
    if (idx.size() > t.size() + 1)
        return false; // no spread left to separate the extra factors
    for (std::size_t s = 0; s + 1 < idx.size(); ++s)
        if (idx[s + 1] - idx[s] < t[s])
            return false;
    return true;
}

std::uint64_t t_support(const Monomial& m, std::span<const int> t) {
    /* union of [i_s, i_s + t_s - 1] over all factors but the last */
    std::uint64_t mask = 0;
    std::vector<int> idx = m.support_indices();
    if (idx.size() > t.size() + 1)
        throw InvalidInput("monomial has more factors than the spread admits");
    for (std::size_t s = 0; s + 1 < idx.size(); ++s) {
        for (int k = 0; k < t[s]; ++k) {
            int v = idx[s] + k - 1;
            if (v < Monomial::kMaxVars)
                mask |= 1ull << v;
        }
    }
    return mask;
}

MonomialIdeal borel_gens(const BorelInstance& inst) {
    const int d = static_cast<int>(inst.u.size());
    std::vector<Monomial> gens;
    std::vector<int> pick(d);
    /* tuples i_1 <= j_1, ..., i_d <= j_d with i_{s+1} - i_s >= t_s */
    auto rec = [&](auto&& self, int s) -> void {
        const int lo = (s == 0) ? 1 : pick[s - 1] + inst.t[s - 1];
        for (int i = lo; i <= inst.u[s]; ++i) {
            pick[s] = i;
            if (s + 1 == d)
                gens.push_back(Monomial::from_indices(inst.n, pick));
            else
                self(self, s + 1);
        }
    };
    rec(rec, 0);
    return MonomialIdeal::make(inst.n, std::move(gens));
}

MonomialIdeal borel_closure(int n, std::span<const Monomial> seeds,
                            std::span<const int> t) {
    /* saturate under the single-step moves x_i (m / x_j), i < j, that stay
     * t-spread */
    std::vector<Monomial> pool(seeds.begin(), seeds.end());
    for (const Monomial& m : pool) {
        if (m.vars() != n)
            throw InvalidInput("seed ambient mismatch");
        if (!is_t_spread(m, t))
            throw InvalidInput("seed " + m.str() + " is not t-spread");
    }
    std::sort(pool.begin(), pool.end(), Monomial::canonical_less);
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    std::vector<Monomial> work = pool;
    while (!work.empty()) {
        const Monomial m = work.back();
        work.pop_back();
        for (int j : m.support_indices()) {
            for (int i = 1; i < j; ++i) {
                if (m.exponent(i) != 0)
                    continue;
                Monomial moved = m.divide_by(Monomial::variable(n, j))
                                     .times(Monomial::variable(n, i));
                if (!is_t_spread(moved, t))
                    continue;
                auto at = std::lower_bound(pool.begin(), pool.end(), moved,
                                           Monomial::canonical_less);
                if (at == pool.end() || !(*at == moved)) {
                    pool.insert(at, moved);
                    work.push_back(moved);
                }
            }
        }
    }
    return MonomialIdeal::make(n, std::move(pool));
}

bool is_t_strongly_stable(const MonomialIdeal& a, std::span<const int> t) {
    const int n = a.vars();
    for (const Monomial& m : a.gens()) {
        if (!is_t_spread(m, t))
            return false;
        for (int j : m.support_indices()) {
            for (int i = 1; i < j; ++i) {
                if (m.exponent(i) != 0)
                    continue;
                Monomial moved = m.divide_by(Monomial::variable(n, j))
                                     .times(Monomial::variable(n, i));
                if (is_t_spread(moved, t) && !a.contains(moved))
                    return false;
            }
        }
    }
    return true;
}

std::vector<std::pair<int, int>> blocks(const BorelInstance& inst) {
    /* B_r = [t_1 + ... + t_{r-1} + 1, j_r]: the possible r-th factor indices.
     * Blocks may overlap; they are pairwise disjoint exactly under the
     * normally-torsionfree arithmetic condition. */
    std::vector<std::pair<int, int>> out;
    int offset = 0;
    for (std::size_t r = 0; r < inst.u.size(); ++r) {
        out.emplace_back(offset + 1, inst.u[r]);
        if (r < inst.t.size())
            offset += inst.t[r];
    }
    return out;
}

MonomialIdeal degree_one_borel(int n, int j1) {
    if (j1 < 1 || j1 > n)
        throw InvalidInput("degree-one bound out of range");
    std::vector<Monomial> gens;
    for (int i = 1; i <= j1; ++i)
        gens.push_back(Monomial::variable(n, i));
    return MonomialIdeal::make(n, std::move(gens));
}

} // namespace vspread
