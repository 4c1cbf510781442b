#include "vspread/decomposition.hpp"

#include <algorithm>
#include <bit>

#include "vspread/caps.hpp"

#ifdef VSPREAD_OPENMP
#include <omp.h>
#endif

namespace vspread {

namespace {

std::uint64_t range_mask(int lo, int hi) {
    std::uint64_t m = 0;
    for (int i = lo; i <= hi; ++i)
        m |= 1ull << (i - 1);
    return m;
}

void audit_antichain(const std::vector<std::uint64_t>& facets) {
    for (std::size_t a = 0; a < facets.size(); ++a)
        for (std::size_t b = 0; b < facets.size(); ++b)
            if (a != b && (facets[a] & ~facets[b]) == 0)
                throw ConsistencyError("facet family is not an antichain");
}

} // namespace

std::vector<std::uint64_t> facets_theorem(const BorelInstance& inst) {
    const int d = inst.degree();
    std::vector<std::uint64_t> facets;

    MonomialIdeal ideal = borel_gens(inst);
    for (const Monomial& v : ideal.gens())
        facets.push_back(t_support(v, inst.t));

    /* generators of the degree-s truncation ending exactly at j_s,
     * thickened and completed by the tail [j_s+1, n] */
    for (int s = 1; s <= d; ++s) {
        const std::uint64_t tail =
            inst.u[s - 1] < inst.n ? range_mask(inst.u[s - 1] + 1, inst.n) : 0;
        std::vector<int> pick(s);
        pick[s - 1] = inst.u[s - 1];
        auto rec = [&](auto&& self, int r) -> void {
            if (r == s - 1) {
                Monomial w = Monomial::from_indices(inst.n, pick);
                facets.push_back(t_support(w, inst.t) | tail);
                return;
            }
            const int lo = (r == 0) ? 1 : pick[r - 1] + inst.t[r - 1];
            /* i_r <= j_r suffices: u itself is t-spread, so the gap up to the
             * fixed last factor j_s is never the binding constraint */
            for (int i = lo; i <= inst.u[r]; ++i) {
                pick[r] = i;
                self(self, r + 1);
            }
        };
        rec(rec, 0);
    }

    std::sort(facets.begin(), facets.end(), support_less);
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    audit_antichain(facets);
    return facets;
}

std::vector<std::uint64_t> facets_oracle_serial(const MonomialIdeal& a, int n) {
    if (a.is_zero() || a.is_unit())
        throw InvalidInput("facet enumeration needs a proper non-zero ideal");
    if (!a.is_squarefree())
        throw InvalidInput("facet enumeration needs a squarefree ideal");
    if (n > caps().oracle_vars)
        throw ResourceLimit("facet oracle capped at " + std::to_string(caps().oracle_vars) +
                            " variables");
    std::vector<std::uint64_t> supports;
    supports.reserve(a.gen_count());
    for (const Monomial& g : a.gens())
        supports.push_back(g.support());

    auto is_face = [&](std::uint64_t f) {
        for (std::uint64_t s : supports)
            if ((s & ~f) == 0) return false;
        return true;
    };
    const std::uint64_t all = n == 64 ? ~0ull : (1ull << n) - 1;
    std::vector<std::uint64_t> facets;
    for (std::uint64_t f = 0; f <= all; ++f) {
        if (!is_face(f))
            continue;
        bool maximal = true;
        std::uint64_t outside = all & ~f;
        while (outside) {
            std::uint64_t bit = outside & (~outside + 1);
            if (is_face(f | bit)) {
                maximal = false;
                break;
            }
            outside &= outside - 1;
        }
        if (maximal)
            facets.push_back(f);
    }
    std::sort(facets.begin(), facets.end(), support_less);
    return facets;
}

std::vector<std::uint64_t> facets_oracle(const MonomialIdeal& a, int n) {
#ifdef VSPREAD_OPENMP
    if (n > caps().oracle_vars)
        throw ResourceLimit("facet oracle capped at " + std::to_string(caps().oracle_vars) +
                            " variables");
    if ((1ull << n) < 4096 || omp_in_parallel())
        return facets_oracle_serial(a, n);
    if (a.is_zero() || a.is_unit())
        throw InvalidInput("facet enumeration needs a proper non-zero ideal");
    if (!a.is_squarefree())
        throw InvalidInput("facet enumeration needs a squarefree ideal");

    std::vector<std::uint64_t> supports;
    supports.reserve(a.gen_count());
    for (const Monomial& g : a.gens())
        supports.push_back(g.support());
    auto is_face = [&](std::uint64_t f) {
        for (std::uint64_t s : supports)
            if ((s & ~f) == 0) return false;
        return true;
    };
    const std::uint64_t all = (1ull << n) - 1;

    /* fixed chunking keeps the merged result independent of thread count */
    constexpr int kChunks = 64;
    const std::uint64_t per = (all + 1) / kChunks;
    std::vector<std::vector<std::uint64_t>> found(kChunks);
#pragma omp parallel for schedule(dynamic)
    for (int c = 0; c < kChunks; ++c) {
        const std::uint64_t lo = per * static_cast<std::uint64_t>(c);
        const std::uint64_t hi = (c == kChunks - 1) ? all : lo + per - 1;
        for (std::uint64_t f = lo; f <= hi; ++f) {
            if (!is_face(f))
                continue;
            bool maximal = true;
            std::uint64_t outside = all & ~f;
            while (outside) {
                std::uint64_t bit = outside & (~outside + 1);
                if (is_face(f | bit)) {
                    maximal = false;
                    break;
                }
                outside &= outside - 1;
            }
            if (maximal)
                found[c].push_back(f);
        }
    }
    std::vector<std::uint64_t> facets;
    for (const auto& part : found)
        facets.insert(facets.end(), part.begin(), part.end());
    std::sort(facets.begin(), facets.end(), support_less);
    return facets;
#else
    return facets_oracle_serial(a, n);
#endif
}

std::vector<PrimeSupport> primary_decomposition(const BorelInstance& inst) {
    const std::uint64_t all = range_mask(1, inst.n);
    std::vector<PrimeSupport> components;
    for (std::uint64_t f : facets_theorem(inst))
        components.emplace_back(inst.n, all & ~f);

    /* the components must intersect back to the ideal they decompose */
    std::vector<MonomialIdeal> primes;
    primes.reserve(components.size());
    for (const PrimeSupport& p : components)
        primes.push_back(prime_power(p, 1));
    if (!(intersect_many(primes, inst.n) == borel_gens(inst)))
        throw ConsistencyError("components do not intersect to the ideal for " + inst.str());
    return components;
}

int height(const BorelInstance& inst) {
    int smallest = inst.n + 1;
    for (const PrimeSupport& p : primary_decomposition(inst))
        smallest = std::min(smallest, p.size());
    if (smallest != inst.u.front())
        throw ConsistencyError("height mismatch: min component size " +
                               std::to_string(smallest) + " vs j_1 = " +
                               std::to_string(inst.u.front()) + " for " + inst.str());
    return smallest;
}

} // namespace vspread
