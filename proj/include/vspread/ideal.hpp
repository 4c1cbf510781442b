#ifndef VSPREAD_IDEAL_HPP
#define VSPREAD_IDEAL_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "vspread/monomial.hpp"

namespace vspread {

/* A non-empty subset of the variables, identifying the monomial prime
 * P_A = (x_a : a in A). */
class PrimeSupport {
public:
    PrimeSupport(int n, std::uint64_t mask);
    static PrimeSupport from_indices(int n, std::span<const int> indices);

    int vars() const { return n_; }
    std::uint64_t mask() const { return mask_; }
    int size() const;
    bool contains(int index) const;
    std::vector<int> indices() const;

    friend bool operator==(const PrimeSupport& a, const PrimeSupport& b) {
        return a.n_ == b.n_ && a.mask_ == b.mask_;
    }

private:
    int n_;
    std::uint64_t mask_;
};

/* A monomial ideal held by its unique minimal generating set, kept sorted in
 * the canonical order.  The zero ideal has no generators; the unit ideal has
 * the single generator 1. */
class MonomialIdeal {
public:
    explicit MonomialIdeal(int n); // zero ideal
    static MonomialIdeal zero(int n);
    static MonomialIdeal unit(int n);
    static MonomialIdeal make(int n, std::vector<Monomial> gens); // minimalizes

    int vars() const { return n_; }
    const std::vector<Monomial>& gens() const { return gens_; }
    std::size_t gen_count() const { return gens_.size(); }
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const;
    bool is_proper() const { return !is_unit(); }
    bool is_squarefree() const;
    bool is_equigenerated() const;

    bool contains(const Monomial& m) const;
    bool contains_ideal(const MonomialIdeal& other) const;

    /* Max over generators of each exponent; pre: non-zero. */
    Monomial generator_lcm() const;

    /* Byte form of (n, canonical generators); used as a memo key. */
    std::string key() const;

    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
        return a.n_ == b.n_ && a.gens_ == b.gens_;
    }

private:
    int n_;
    std::vector<Monomial> gens_;
};

/* Divisibility-minimal, deduplicated, canonically sorted. */
std::vector<Monomial> minimalize(std::vector<Monomial> monos);

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal multiply(const MonomialIdeal& a, const Monomial& m);

/* Pairwise lcms of generators, minimalized.  Throws ResourceLimit when the
 * product count exceeds caps().intersection_gens. */
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal intersect_many(std::span<const MonomialIdeal> ideals, int n);

/* (I : m), generated by g / gcd(g, m). */
MonomialIdeal colon_by_monomial(const MonomialIdeal& a, const Monomial& m);

/* I^k by k-fold products; power(I, 0) is the unit ideal by convention. */
MonomialIdeal power(const MonomialIdeal& a, int k);

/* P_A^k: all degree-k monomials on A (count C(|A|+k-1, k)). */
MonomialIdeal prime_power(const PrimeSupport& a, int k);

/* Every associated prime of S/I is (I : w) for some monomial w dividing the
 * lcm of the generators; this scans all such w and keeps the colons that are
 * generated by variables.  Exponential in supp(lcm); intended as an oracle.
 * Pre: I proper and non-zero. */
std::vector<PrimeSupport> associated_primes(const MonomialIdeal& a);

/* Canonical order on variable subsets: by ascending index sequence. */
bool support_less(std::uint64_t a, std::uint64_t b);

} // namespace vspread

#endif
