#ifndef VSPREAD_MONOMIAL_HPP
#define VSPREAD_MONOMIAL_HPP

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "vspread/errors.hpp"

namespace vspread {

/* A monomial in K[x_1..x_n], stored as a fixed-length exponent vector.
 * Variables are 1-based everywhere.  The ambient n is part of the value;
 * mixing ambients throws InvalidInput.
 *
 * Two caches ride along: the support bitmask (bit i-1 <=> x_i occurs), which
 * makes divisibility O(1) for squarefree monomials, and for n <= 8 the
 * exponents packed big-endian into one word, so that divisibility and the
 * canonical order compare in a few instructions. */
class Monomial {
public:
    static constexpr int kMaxVars = 64;
    static constexpr int kMaxExponent = 255;

    Monomial() = default; // the monomial 1 in 0 variables

    static Monomial one(int n);
    static Monomial variable(int n, int index);
    static Monomial from_exponents(int n, std::span<const int> exps);
    /* index list with multiplicity, e.g. [1,3,3] = x1*x3^2 */
    static Monomial from_indices(int n, std::span<const int> indices);

    int vars() const { return n_; }
    int degree() const { return deg_; }
    int exponent(int i) const; // 1-based
    bool is_one() const { return deg_ == 0; }
    bool is_squarefree() const;
    std::uint64_t support() const { return support_; }
    int support_size() const;
    std::vector<int> indices() const; // [1,3,3] form, ascending
    std::vector<int> support_indices() const;

    bool divides(const Monomial& m) const;
    Monomial times(const Monomial& m) const;
    Monomial divide_by(const Monomial& m) const; // pre: m divides *this
    Monomial pow(int k) const;

    static Monomial lcm(const Monomial& a, const Monomial& b);
    static Monomial gcd(const Monomial& a, const Monomial& b);

    /* Canonical generator order: descending degree, then descending
     * lexicographic on exponent vectors, which lists equal-degree squarefree
     * monomials by ascending support tuple (x1x3 before x1x4 before x2x3). */
    static bool canonical_less(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.n_ == b.n_ && a.deg_ == b.deg_ && a.e_ == b.e_;
    }

    /* x1*x3^2 form; "1" for the unit monomial. */
    std::string str() const;

private:
    std::array<std::uint8_t, kMaxVars> e_{};
    std::uint64_t support_ = 0;
    std::uint64_t packed_ = 0;
    std::uint16_t deg_ = 0;
    std::uint8_t n_ = 0;
    bool packable_ = false;

    void refresh_caches();
    static void check_ambient(const Monomial& a, const Monomial& b);
};

} // namespace vspread

#endif
