#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ltsig/arith.hpp"
#include "ltsig/errors.hpp"
#include "ltsig/interval.hpp"
#include "ltsig/polynomial.hpp"
#include "ltsig/rotation.hpp"

namespace ltsig {

enum class Sign : int { negative = -1, zero = 0, positive = 1 };

inline int sign_value(Sign s) { return static_cast<int>(s); }

/// Exact element of the n-th cyclotomic field: an integer-coefficient
/// polynomial residue modulo Phi_n, stored in canonical reduced form
/// (degree < phi(n)).  The zero test is coefficient-wise and exact.
class CyclotomicElement {
  public:
    explicit CyclotomicElement(std::uint32_t level)
        : level_(check_level(level)), c_(euler_phi(level), mpz_class(0)) {}

    static CyclotomicElement zero(std::uint32_t level) { return CyclotomicElement(level); }

    static CyclotomicElement from_integer(std::uint32_t level, const mpz_class& v) {
        CyclotomicElement e(level);
        e.c_[0] = v;
        e.reduce_in_place();
        return e;
    }

    /// zeta^k where zeta = e^{2*pi*i/level}.
    static CyclotomicElement root_power(std::uint32_t level, std::uint64_t k) {
        return from_polynomial(level,
                               IntegerPolynomial::monomial(static_cast<std::size_t>(k % level)));
    }

    static CyclotomicElement from_polynomial(std::uint32_t level, const IntegerPolynomial& p) {
        CyclotomicElement e(level);
        IntegerPolynomial r = p.mod_monic(cyclotomic_polynomial(level));
        for (std::size_t i = 0; i < e.c_.size(); ++i) e.c_[i] = r.coeff(i);
        return e;
    }

    std::uint32_t level() const { return level_; }
    const std::vector<mpz_class>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& v : c_)
            if (v != 0) return false;
        return true;
    }

    bool operator==(const CyclotomicElement& o) const {
        return level_ == o.level_ && c_ == o.c_;
    }
    bool operator!=(const CyclotomicElement& o) const { return !(*this == o); }

    CyclotomicElement operator-() const {
        CyclotomicElement r(*this);
        for (auto& v : r.c_) v = -v;
        return r;
    }

    CyclotomicElement operator+(const CyclotomicElement& o) const {
        check_same_level(o);
        CyclotomicElement r(*this);
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
        return r;
    }

    CyclotomicElement operator-(const CyclotomicElement& o) const { return *this + (-o); }

    CyclotomicElement operator*(const CyclotomicElement& o) const {
        check_same_level(o);
        std::vector<mpz_class> prod(2 * c_.size(), mpz_class(0));
        if (!prod.empty()) prod.pop_back();
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                if (o.c_[j] != 0) prod[i + j] += c_[i] * o.c_[j];
        }
        CyclotomicElement r(level_);
        IntegerPolynomial rem =
            IntegerPolynomial(std::move(prod)).mod_monic(cyclotomic_polynomial(level_));
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = rem.coeff(i);
        return r;
    }

    CyclotomicElement operator*(const mpz_class& s) const {
        CyclotomicElement r(*this);
        for (auto& v : r.c_) v *= s;
        return r;
    }

    /// Complex conjugation, the field map zeta -> zeta^{-1}.
    CyclotomicElement conj() const {
        std::vector<mpz_class> p(level_, mpz_class(0));
        for (std::size_t j = 0; j < c_.size(); ++j) {
            std::size_t e = (j == 0) ? 0 : static_cast<std::size_t>(level_) - j;
            p[e] += c_[j];
        }
        return from_polynomial(level_, IntegerPolynomial(std::move(p)));
    }

    bool is_real() const { return conj() == *this; }

    /// gcd of all coefficients (0 for the zero element).
    mpz_class content() const {
        mpz_class g = 0;
        for (const auto& v : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        return g;
    }

    void divide_by(const mpz_class& d) {
        for (auto& v : c_) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t());
    }

    /// Interval enclosure of the real part of the value at zeta^q,
    /// q coprime to the level.
    detail::RealInterval real_part_enclosure(std::int64_t q, mpfr_prec_t prec) const {
        detail::RealInterval acc(prec);
        for (std::size_t j = 0; j < c_.size(); ++j) {
            if (c_[j] == 0) continue;
            std::uint64_t e = mul_mod_u64(j, static_cast<std::uint64_t>(q), level_);
            detail::RealInterval term = detail::cos_two_pi(make_rational(e, level_), prec);
            acc.add_scaled(c_[j], term, prec);
        }
        return acc;
    }

  private:
    static std::uint32_t check_level(std::uint32_t level) {
        if (level == 0) throw std::invalid_argument("CyclotomicElement: level must be >= 1");
        return level;
    }

    void check_same_level(const CyclotomicElement& o) const {
        if (level_ != o.level_)
            throw std::invalid_argument("CyclotomicElement: mixed levels");
    }

    void reduce_in_place() {
        // canonical by construction except when built coefficient-wise
        IntegerPolynomial p{std::vector<mpz_class>(c_.begin(), c_.end())};
        IntegerPolynomial r = p.mod_monic(cyclotomic_polynomial(level_));
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = r.coeff(i);
    }

    std::uint32_t level_;
    std::vector<mpz_class> c_;
};

inline constexpr int kDefaultPrecisionBits = 64;

/// Certified sign of a real cyclotomic element evaluated at e^{2*pi*i*q/n}.
///
/// The zero test is exact (the element is the zero residue iff its value at
/// any primitive n-th root vanishes).  For nonzero elements, adaptive
/// interval evaluation starting at `start_bits` of precision and doubling
/// until the enclosure excludes zero determines the sign; termination is
/// guaranteed because nonzero was certified exactly first.
inline Sign certified_sign(const CyclotomicElement& x, const RotationNumber& at,
                           int start_bits = kDefaultPrecisionBits) {
    if (static_cast<std::uint64_t>(at.den()) != x.level())
        throw std::invalid_argument("certified_sign: rotation denominator != element level");
    if (!x.is_real())
        raise(errc::not_real, "element is not conjugation-invariant at level " +
                                  std::to_string(x.level()));
    if (x.is_zero()) return Sign::zero;
    if (start_bits < 2) start_bits = 2;
    for (mpfr_prec_t prec = start_bits; prec <= (mpfr_prec_t{1} << 22); prec *= 2) {
        detail::RealInterval v = x.real_part_enclosure(at.num(), prec);
        int s = v.certain_sign();
        if (s > 0) return Sign::positive;
        if (s < 0) return Sign::negative;
    }
    throw std::logic_error("certified_sign: precision cap reached for nonzero element");
}

}  // namespace ltsig
