#include "vspread/monomial.hpp"

#include <algorithm>
#include <bit>

namespace vspread {

namespace {
constexpr std::uint64_t kHighBits = 0x8080808080808080ull;

std::string var_name(int i) { return "x" + std::to_string(i); }
} // namespace

void Monomial::refresh_caches() {
    support_ = 0;
    packed_ = 0;
    deg_ = 0;
    packable_ = n_ <= 8;
    for (int i = 0; i < n_; ++i) {
        deg_ = static_cast<std::uint16_t>(deg_ + e_[i]);
        if (e_[i]) support_ |= 1ull << i;
        if (e_[i] > 127) packable_ = false;
    }
    if (packable_) {
        for (int i = 0; i < n_; ++i)
            packed_ |= static_cast<std::uint64_t>(e_[i]) << (8 * (7 - i));
    }
}

void Monomial::check_ambient(const Monomial& a, const Monomial& b) {
    if (a.n_ != b.n_)
        throw InvalidInput("monomial ambient mismatch: " + std::to_string(a.n_) +
                           " vs " + std::to_string(b.n_) + " variables");
}

Monomial Monomial::one(int n) {
    if (n < 0 || n > kMaxVars)
        throw InvalidInput("variable count out of range: " + std::to_string(n));
    Monomial m;
    m.n_ = static_cast<std::uint8_t>(n);
    m.refresh_caches();
    return m;
}

Monomial Monomial::variable(int n, int index) {
    Monomial m = one(n);
    if (index < 1 || index > n)
        throw InvalidInput("variable index out of range: x" + std::to_string(index) +
                           " in " + std::to_string(n) + " variables");
    m.e_[index - 1] = 1;
    m.refresh_caches();
    return m;
}

Monomial Monomial::from_exponents(int n, std::span<const int> exps) {
    Monomial m = one(n);
    if (static_cast<int>(exps.size()) != n)
        throw InvalidInput("exponent vector length != variable count");
    for (int i = 0; i < n; ++i) {
        if (exps[i] < 0 || exps[i] > kMaxExponent)
            throw InvalidInput("exponent out of range: " + std::to_string(exps[i]));
        m.e_[i] = static_cast<std::uint8_t>(exps[i]);
    }
    m.refresh_caches();
    return m;
}

Monomial Monomial::from_indices(int n, std::span<const int> indices) {
    Monomial m = one(n);
    for (int idx : indices) {
        if (idx < 1 || idx > n)
            throw InvalidInput("variable index out of range: x" + std::to_string(idx) +
                               " in " + std::to_string(n) + " variables");
        if (m.e_[idx - 1] == kMaxExponent)
            throw ResourceLimit("exponent overflow at x" + std::to_string(idx));
        ++m.e_[idx - 1];
    }
    m.refresh_caches();
    return m;
}

int Monomial::exponent(int i) const {
    if (i < 1 || i > n_)
        throw InvalidInput("variable index out of range: x" + std::to_string(i));
    return e_[i - 1];
}

bool Monomial::is_squarefree() const {
    return deg_ == std::popcount(support_);
}

int Monomial::support_size() const { return std::popcount(support_); }

std::vector<int> Monomial::indices() const {
    std::vector<int> out;
    out.reserve(deg_);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < e_[i]; ++k)
            out.push_back(i + 1);
    return out;
}

std::vector<int> Monomial::support_indices() const {
    std::vector<int> out;
    for (int i = 0; i < n_; ++i)
        if (e_[i]) out.push_back(i + 1);
    return out;
}

bool Monomial::divides(const Monomial& m) const {
    check_ambient(*this, m);
    if (support_ & ~m.support_)
        return false;
    if (deg_ > m.deg_)
        return false;
    if (packable_ && m.packable_)
        return (((m.packed_ | kHighBits) - packed_) & kHighBits) == kHighBits;
    if (is_squarefree() && m.is_squarefree())
        return true; // support containment already checked
    for (int i = 0; i < n_; ++i)
        if (e_[i] > m.e_[i]) return false;
    return true;
}

Monomial Monomial::times(const Monomial& m) const {
    check_ambient(*this, m);
    Monomial r = *this;
    for (int i = 0; i < n_; ++i) {
        int e = r.e_[i] + m.e_[i];
        if (e > kMaxExponent)
            throw ResourceLimit("exponent overflow at x" + std::to_string(i + 1));
        r.e_[i] = static_cast<std::uint8_t>(e);
    }
    r.refresh_caches();
    return r;
}

Monomial Monomial::divide_by(const Monomial& m) const {
    check_ambient(*this, m);
    Monomial r = *this;
    for (int i = 0; i < n_; ++i) {
        if (m.e_[i] > r.e_[i])
            throw InvalidInput(m.str() + " does not divide " + str());
        r.e_[i] = static_cast<std::uint8_t>(r.e_[i] - m.e_[i]);
    }
    r.refresh_caches();
    return r;
}

Monomial Monomial::pow(int k) const {
    if (k < 0)
        throw InvalidInput("negative monomial power");
    Monomial r = one(n_);
    for (int i = 0; i < n_; ++i) {
        long e = static_cast<long>(e_[i]) * k;
        if (e > kMaxExponent)
            throw ResourceLimit("exponent overflow at x" + std::to_string(i + 1));
        r.e_[i] = static_cast<std::uint8_t>(e);
    }
    r.refresh_caches();
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    check_ambient(a, b);
    Monomial r = a;
    for (int i = 0; i < a.n_; ++i)
        r.e_[i] = std::max(a.e_[i], b.e_[i]);
    r.refresh_caches();
    return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
    check_ambient(a, b);
    Monomial r = a;
    for (int i = 0; i < a.n_; ++i)
        r.e_[i] = std::min(a.e_[i], b.e_[i]);
    r.refresh_caches();
    return r;
}

bool Monomial::canonical_less(const Monomial& a, const Monomial& b) {
    check_ambient(a, b);
    if (a.deg_ != b.deg_)
        return a.deg_ > b.deg_;
    if (a.packable_ && b.packable_)
        return a.packed_ > b.packed_;
    for (int i = 0; i < a.n_; ++i)
        if (a.e_[i] != b.e_[i]) return a.e_[i] > b.e_[i];
    return false;
}

std::string Monomial::str() const {
    if (deg_ == 0)
        return "1";
    std::string out;
    for (int i = 0; i < n_; ++i) {
        if (!e_[i]) continue;
        if (!out.empty()) out += "*";
        out += var_name(i + 1);
        if (e_[i] > 1) out += "^" + std::to_string(e_[i]);
    }
    return out;
}

} // namespace vspread
