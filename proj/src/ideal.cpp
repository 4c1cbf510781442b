#include "vspread/ideal.hpp"

#include <algorithm>
#include <bit>

#include "vspread/caps.hpp"

namespace vspread {

/* ---------- PrimeSupport ---------- */

PrimeSupport::PrimeSupport(int n, std::uint64_t mask) : n_(n), mask_(mask) {
    if (n < 1 || n > Monomial::kMaxVars)
        throw InvalidInput("variable count out of range: " + std::to_string(n));
    if (mask == 0)
        throw InvalidInput("prime support must be non-empty");
    if (n < 64 && (mask >> n))
        throw InvalidInput("prime support exceeds the ambient variables");
}

PrimeSupport PrimeSupport::from_indices(int n, std::span<const int> indices) {
    std::uint64_t mask = 0;
    for (int i : indices) {
        if (i < 1 || i > n)
            throw InvalidInput("variable index out of range: x" + std::to_string(i));
        mask |= 1ull << (i - 1);
    }
    return PrimeSupport(n, mask);
}

int PrimeSupport::size() const { return std::popcount(mask_); }

bool PrimeSupport::contains(int index) const {
    return index >= 1 && index <= n_ && (mask_ >> (index - 1)) & 1;
}

std::vector<int> PrimeSupport::indices() const {
    std::vector<int> out;
    for (int i = 1; i <= n_; ++i)
        if ((mask_ >> (i - 1)) & 1) out.push_back(i);
    return out;
}

bool support_less(std::uint64_t a, std::uint64_t b) {
    /* ascending index sequences, lexicographic; a strict prefix sorts first */
    while (a && b) {
        int ia = std::countr_zero(a);
        int ib = std::countr_zero(b);
        if (ia != ib)
            return ia < ib;
        a &= a - 1;
        b &= b - 1;
    }
    return !a && b;
}

/* ---------- minimal generating sets ---------- */

std::vector<Monomial> minimalize(std::vector<Monomial> monos) {
    if (monos.empty())
        return monos;
    /* ascending degree so only earlier entries can divide later ones;
     * equal-degree monomials never divide each other once deduplicated */
    std::sort(monos.begin(), monos.end(), [](const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree())
            return a.degree() < b.degree();
        return Monomial::canonical_less(a, b);
    });
    monos.erase(std::unique(monos.begin(), monos.end()), monos.end());

    std::vector<Monomial> kept;
    kept.reserve(monos.size());
    std::size_t lower_degree_end = 0; // kept[0..lower_degree_end) have smaller degree
    int current_degree = -1;
    for (const Monomial& m : monos) {
        if (m.degree() != current_degree) {
            lower_degree_end = kept.size();
            current_degree = m.degree();
        }
        bool redundant = false;
        for (std::size_t i = 0; i < lower_degree_end; ++i) {
            if (kept[i].divides(m)) {
                redundant = true;
                break;
            }
        }
        if (!redundant)
            kept.push_back(m);
    }
    std::sort(kept.begin(), kept.end(), Monomial::canonical_less);
    return kept;
}

/* ---------- MonomialIdeal ---------- */

MonomialIdeal::MonomialIdeal(int n) : n_(n) {
    if (n < 0 || n > Monomial::kMaxVars)
        throw InvalidInput("variable count out of range: " + std::to_string(n));
}

MonomialIdeal MonomialIdeal::zero(int n) { return MonomialIdeal(n); }

MonomialIdeal MonomialIdeal::unit(int n) {
    MonomialIdeal a(n);
    a.gens_.push_back(Monomial::one(n));
    return a;
}

MonomialIdeal MonomialIdeal::make(int n, std::vector<Monomial> gens) {
    MonomialIdeal a(n);
    for (const Monomial& g : gens)
        if (g.vars() != n)
            throw InvalidInput("generator ambient mismatch");
    a.gens_ = minimalize(std::move(gens));
    return a;
}

bool MonomialIdeal::is_unit() const {
    return gens_.size() == 1 && gens_[0].is_one();
}

bool MonomialIdeal::is_squarefree() const {
    for (const Monomial& g : gens_)
        if (!g.is_squarefree()) return false;
    return true;
}

bool MonomialIdeal::is_equigenerated() const {
    for (const Monomial& g : gens_)
        if (g.degree() != gens_[0].degree()) return false;
    return true;
}

bool MonomialIdeal::contains(const Monomial& m) const {
    if (m.vars() != n_)
        throw InvalidInput("monomial ambient mismatch");
    for (const Monomial& g : gens_)
        if (g.divides(m)) return true;
    return false;
}

bool MonomialIdeal::contains_ideal(const MonomialIdeal& other) const {
    if (other.n_ != n_)
        throw InvalidInput("ideal ambient mismatch");
    for (const Monomial& g : other.gens_)
        if (!contains(g)) return false;
    return true;
}

Monomial MonomialIdeal::generator_lcm() const {
    if (is_zero())
        throw InvalidInput("generator lcm of the zero ideal");
    Monomial l = gens_[0];
    for (std::size_t i = 1; i < gens_.size(); ++i)
        l = Monomial::lcm(l, gens_[i]);
    return l;
}

std::string MonomialIdeal::key() const {
    std::string k;
    k.reserve(1 + gens_.size() * n_);
    k.push_back(static_cast<char>(n_));
    for (const Monomial& g : gens_)
        for (int i = 1; i <= n_; ++i)
            k.push_back(static_cast<char>(g.exponent(i)));
    return k;
}

/* ---------- operations ---------- */

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.vars() != b.vars())
        throw InvalidInput("ideal ambient mismatch");
    std::vector<Monomial> gens = a.gens();
    gens.insert(gens.end(), b.gens().begin(), b.gens().end());
    return MonomialIdeal::make(a.vars(), std::move(gens));
}

MonomialIdeal multiply(const MonomialIdeal& a, const Monomial& m) {
    std::vector<Monomial> gens;
    gens.reserve(a.gen_count());
    for (const Monomial& g : a.gens())
        gens.push_back(g.times(m));
    return MonomialIdeal::make(a.vars(), std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.vars() != b.vars())
        throw InvalidInput("ideal ambient mismatch");
    if (a.is_zero() || b.is_zero())
        return MonomialIdeal::zero(a.vars());
    std::size_t products = a.gen_count() * b.gen_count();
    if (products > caps().intersection_gens)
        throw ResourceLimit("intersection would form " + std::to_string(products) +
                            " products (cap " + std::to_string(caps().intersection_gens) + ")");
    std::vector<Monomial> lcms;
    lcms.reserve(products);
    for (const Monomial& f : a.gens())
        for (const Monomial& g : b.gens())
            lcms.push_back(Monomial::lcm(f, g));
    return MonomialIdeal::make(a.vars(), std::move(lcms));
}

MonomialIdeal intersect_many(std::span<const MonomialIdeal> ideals, int n) {
    MonomialIdeal acc = MonomialIdeal::unit(n);
    for (const MonomialIdeal& a : ideals)
        acc = intersect(acc, a);
    return acc;
}

MonomialIdeal colon_by_monomial(const MonomialIdeal& a, const Monomial& m) {
    if (m.vars() != a.vars())
        throw InvalidInput("monomial ambient mismatch");
    std::vector<Monomial> gens;
    gens.reserve(a.gen_count());
    for (const Monomial& g : a.gens())
        gens.push_back(g.divide_by(Monomial::gcd(g, m)));
    return MonomialIdeal::make(a.vars(), std::move(gens));
}

namespace {

/* multisets of size k over gens[lo..], accumulating the product */
void push_products(const std::vector<Monomial>& gens, std::size_t lo, int k,
                   const Monomial& acc, std::vector<Monomial>& out) {
    if (k == 0) {
        out.push_back(acc);
        return;
    }
    for (std::size_t i = lo; i < gens.size(); ++i)
        push_products(gens, i, k - 1, acc.times(gens[i]), out);
}

/* C(m+k-1, k) clamped to a cap sentinel */
std::size_t multiset_count(std::size_t m, int k, std::size_t cap) {
    std::size_t r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (m + static_cast<std::size_t>(i) - 1) / static_cast<std::size_t>(i);
        if (r > cap)
            return cap + 1;
    }
    return r;
}

} // namespace

MonomialIdeal power(const MonomialIdeal& a, int k) {
    if (k < 0)
        throw InvalidInput("negative ideal power");
    if (k == 0)
        return MonomialIdeal::unit(a.vars()); // empty product convention
    if (k == 1 || a.is_zero() || a.is_unit())
        return a;
    std::size_t count = multiset_count(a.gen_count(), k, caps().intersection_gens);
    if (count > caps().intersection_gens)
        throw ResourceLimit("power would form more than " +
                            std::to_string(caps().intersection_gens) + " products");
    std::vector<Monomial> products;
    products.reserve(count);
    push_products(a.gens(), 0, k, Monomial::one(a.vars()), products);
    return MonomialIdeal::make(a.vars(), std::move(products));
}

MonomialIdeal prime_power(const PrimeSupport& a, int k) {
    if (k < 0)
        throw InvalidInput("negative ideal power");
    if (k == 0)
        return MonomialIdeal::unit(a.vars());
    std::vector<int> vars = a.indices();
    std::vector<Monomial> gens;
    std::vector<int> pick;
    /* all degree-k monomials on the support: C(|A|+k-1, k) of them */
    auto rec = [&](auto&& self, std::size_t lo, int left) -> void {
        if (left == 0) {
            gens.push_back(Monomial::from_indices(a.vars(), pick));
            return;
        }
        for (std::size_t i = lo; i < vars.size(); ++i) {
            pick.push_back(vars[i]);
            self(self, i, left - 1);
            pick.pop_back();
        }
    };
    rec(rec, 0, k);
    return MonomialIdeal::make(a.vars(), std::move(gens));
}

std::vector<PrimeSupport> associated_primes(const MonomialIdeal& a) {
    if (a.is_zero() || a.is_unit())
        throw InvalidInput("associated primes need a proper non-zero ideal");
    const int n = a.vars();
    const Monomial big = a.generator_lcm();
    std::vector<int> vars = big.support_indices();

    std::size_t divisors = 1;
    for (int v : vars) {
        divisors *= static_cast<std::size_t>(big.exponent(v)) + 1;
        if (divisors > caps().intersection_gens)
            throw ResourceLimit("associated-primes oracle: too many divisors of the generator lcm");
    }

    std::vector<std::uint64_t> masks;
    std::vector<int> exps(vars.size(), 0);
    for (std::size_t count = 0; count < divisors; ++count) {
        std::vector<int> full(n, 0);
        for (std::size_t i = 0; i < vars.size(); ++i)
            full[vars[i] - 1] = exps[i];
        Monomial w = Monomial::from_exponents(n, full);
        MonomialIdeal q = colon_by_monomial(a, w);
        bool variables_only = !q.is_zero();
        std::uint64_t mask = 0;
        for (const Monomial& g : q.gens()) {
            if (g.degree() != 1) {
                variables_only = false;
                break;
            }
            mask |= g.support();
        }
        if (variables_only)
            masks.push_back(mask);
        /* odometer step */
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (exps[i] < big.exponent(vars[i])) {
                ++exps[i];
                break;
            }
            exps[i] = 0;
        }
    }
    std::sort(masks.begin(), masks.end(), support_less);
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    std::vector<PrimeSupport> out;
    out.reserve(masks.size());
    for (std::uint64_t m : masks)
        out.emplace_back(n, m);
    return out;
}

} // namespace vspread
