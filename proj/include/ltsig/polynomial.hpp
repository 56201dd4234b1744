#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ltsig/arith.hpp"
#include "ltsig/rational.hpp"

namespace ltsig {

/// Dense polynomial over Z, coefficients stored lowest degree first.
/// The zero polynomial has an empty coefficient vector and degree -1.
class IntegerPolynomial {
  public:
    IntegerPolynomial() = default;

    explicit IntegerPolynomial(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) {
        normalize();
    }

    IntegerPolynomial(std::initializer_list<long> coeffs) {
        for (long v : coeffs) c_.emplace_back(v);
        normalize();
    }

    static IntegerPolynomial zero() { return IntegerPolynomial(); }

    static IntegerPolynomial constant(const mpz_class& v) {
        IntegerPolynomial p;
        p.c_.push_back(v);
        p.normalize();
        return p;
    }

    static IntegerPolynomial monomial(std::size_t deg, const mpz_class& coeff = 1) {
        IntegerPolynomial p;
        p.c_.assign(deg + 1, mpz_class(0));
        p.c_[deg] = coeff;
        p.normalize();
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }

    const mpz_class& leading() const {
        if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    mpz_class coeff(std::size_t i) const { return i < c_.size() ? c_[i] : mpz_class(0); }
    const std::vector<mpz_class>& coeffs() const { return c_; }

    bool operator==(const IntegerPolynomial& o) const { return c_ == o.c_; }
    bool operator!=(const IntegerPolynomial& o) const { return c_ != o.c_; }

    IntegerPolynomial operator-() const {
        IntegerPolynomial r(*this);
        for (auto& v : r.c_) v = -v;
        return r;
    }

    IntegerPolynomial operator+(const IntegerPolynomial& o) const {
        IntegerPolynomial r;
        r.c_.resize(std::max(c_.size(), o.c_.size()), mpz_class(0));
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = coeff(i) + o.coeff(i);
        r.normalize();
        return r;
    }

    IntegerPolynomial operator-(const IntegerPolynomial& o) const { return *this + (-o); }

    IntegerPolynomial operator*(const IntegerPolynomial& o) const {
        if (is_zero() || o.is_zero()) return IntegerPolynomial();
        IntegerPolynomial r;
        r.c_.assign(c_.size() + o.c_.size() - 1, mpz_class(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                r.c_[i + j] += c_[i] * o.c_[j];
        r.normalize();
        return r;
    }

    IntegerPolynomial operator*(const mpz_class& s) const {
        IntegerPolynomial r(*this);
        for (auto& v : r.c_) v *= s;
        r.normalize();
        return r;
    }

    /// Multiply by t^k.
    IntegerPolynomial shifted_up(std::size_t k) const {
        if (is_zero()) return *this;
        IntegerPolynomial r;
        r.c_.assign(c_.size() + k, mpz_class(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
        return r;
    }

    /// Index of the lowest nonzero coefficient.
    std::size_t valuation() const {
        if (is_zero()) throw std::logic_error("valuation of zero polynomial");
        std::size_t v = 0;
        while (c_[v] == 0) ++v;
        return v;
    }

    /// Divide by t^valuation so the constant term is nonzero.
    IntegerPolynomial shifted_to_zero() const {
        if (is_zero()) return *this;
        std::size_t v = valuation();
        IntegerPolynomial r;
        r.c_.assign(c_.begin() + static_cast<long>(v), c_.end());
        return r;
    }

    /// t^deg * p(1/t)
    IntegerPolynomial reversed() const {
        IntegerPolynomial r(*this);
        std::reverse(r.c_.begin(), r.c_.end());
        r.normalize();
        return r;
    }

    /// +1 if reversed() == p, -1 if reversed() == -p, nothing otherwise.
    std::optional<int> palindrome_sign() const {
        IntegerPolynomial rev = reversed();
        if (rev == *this) return 1;
        if (rev == -*this) return -1;
        return std::nullopt;
    }

    IntegerPolynomial derivative() const {
        if (c_.size() <= 1) return IntegerPolynomial();
        IntegerPolynomial r;
        r.c_.resize(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * static_cast<long>(i);
        r.normalize();
        return r;
    }

    mpz_class eval(const mpz_class& x) const {
        mpz_class acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Rational eval(const Rational& x) const {
        Rational acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rational(*it);
        return acc;
    }

    mpz_class content() const {
        mpz_class g = 0;
        for (const auto& v : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        return g;
    }

    /// Remainder of division by a monic divisor; exact over Z.
    IntegerPolynomial mod_monic(const IntegerPolynomial& d) const {
        if (d.is_zero() || d.leading() != 1)
            throw std::logic_error("mod_monic: divisor must be monic");
        IntegerPolynomial r(*this);
        while (!r.is_zero() && r.degree() >= d.degree()) {
            mpz_class c = r.leading();
            std::size_t k = static_cast<std::size_t>(r.degree() - d.degree());
            r = r - d.shifted_up(k) * c;
        }
        return r;
    }

    /// Exact quotient; throws std::logic_error if the division is not exact.
    IntegerPolynomial div_exact(const IntegerPolynomial& d) const {
        if (d.is_zero()) throw std::logic_error("div_exact: division by zero polynomial");
        if (is_zero()) return IntegerPolynomial();
        if (degree() < d.degree()) throw std::logic_error("div_exact: not divisible");
        // long division over Q, then check integrality and zero remainder
        std::vector<Rational> rem(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) rem[i] = Rational(c_[i]);
        std::size_t qsize = c_.size() - d.c_.size() + 1;
        std::vector<Rational> quo(qsize, Rational(0));
        Rational lead(d.leading());
        for (std::size_t k = qsize; k-- > 0;) {
            Rational q = rem[k + d.c_.size() - 1] / lead;
            quo[k] = q;
            if (q != 0)
                for (std::size_t j = 0; j < d.c_.size(); ++j) rem[k + j] -= q * Rational(d.c_[j]);
        }
        for (const auto& r : rem)
            if (r != 0) throw std::logic_error("div_exact: nonzero remainder");
        IntegerPolynomial out;
        out.c_.resize(qsize);
        for (std::size_t i = 0; i < qsize; ++i) {
            if (quo[i].get_den() != 1) throw std::logic_error("div_exact: non-integral quotient");
            out.c_[i] = quo[i].get_num();
        }
        out.normalize();
        return out;
    }

    bool divides(const IntegerPolynomial& other) const {
        if (is_zero()) return other.is_zero();
        if (other.is_zero()) return true;
        if (other.degree() < degree()) return false;
        try {
            (void)other.div_exact(*this);
            return true;
        } catch (const std::logic_error&) {
            return false;
        }
    }

    std::string str(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i] == 0) continue;
            mpz_class a = c_[i];
            if (!s.empty()) {
                s += (a < 0) ? "-" : "+";
                if (a < 0) a = -a;
            } else if (a < 0) {
                s += "-";
                a = -a;
            }
            if (i == 0) {
                s += a.get_str();
            } else {
                if (a != 1) s += a.get_str() + "*";
                s += var;
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }

  private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<mpz_class> c_;
};

/// t^n - 1
inline IntegerPolynomial t_pow_minus_one(std::uint64_t n) {
    IntegerPolynomial p = IntegerPolynomial::monomial(static_cast<std::size_t>(n));
    return p - IntegerPolynomial::constant(1);
}

/// 1 + t + ... + t^{n-1}
inline IntegerPolynomial ones_polynomial(std::uint64_t n) {
    std::vector<mpz_class> c(static_cast<std::size_t>(n), mpz_class(1));
    return IntegerPolynomial(std::move(c));
}

/// The n-th cyclotomic polynomial, computed by exact division of t^n - 1
/// by Phi_d over the proper divisors d of n.  Monic of degree phi(n).
inline IntegerPolynomial cyclotomic_polynomial(std::uint64_t n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be >= 1");
    thread_local std::map<std::uint64_t, IntegerPolynomial> cache;
    auto hit = cache.find(n);
    if (hit != cache.end()) return hit->second;
    IntegerPolynomial p = t_pow_minus_one(n);
    for (std::uint64_t d : divisors_of(n)) {
        if (d == n) continue;
        p = p.div_exact(cyclotomic_polynomial(d));
    }
    cache[n] = p;
    return p;
}

namespace detail {

/// Fraction-free Bareiss determinant of a square matrix over Z.
inline mpz_class bareiss_determinant(std::vector<std::vector<mpz_class>> m) {
    std::size_t n = m.size();
    if (n == 0) return 1;
    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && m[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class v = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = v;
            }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

}  // namespace detail

/// Resultant res(f, g) via the Sylvester matrix; res(f, g) =
/// lc(f)^{deg g} * prod over roots a of f of g(a).
inline mpz_class resultant(const IntegerPolynomial& f, const IntegerPolynomial& g) {
    if (f.is_zero() || g.is_zero()) return 0;
    long m = f.degree(), n = g.degree();
    if (m == 0) {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), f.leading().get_mpz_t(), static_cast<unsigned long>(n));
        return r;
    }
    if (n == 0) {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), g.leading().get_mpz_t(), static_cast<unsigned long>(m));
        return r;
    }
    std::size_t size = static_cast<std::size_t>(m + n);
    std::vector<std::vector<mpz_class>> s(size, std::vector<mpz_class>(size, mpz_class(0)));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j <= m; ++j)
            s[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + j)] =
                f.coeff(static_cast<std::size_t>(m - j));
    for (long i = 0; i < m; ++i)
        for (long j = 0; j <= n; ++j)
            s[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(i + j)] =
                g.coeff(static_cast<std::size_t>(n - j));
    return detail::bareiss_determinant(std::move(s));
}

}  // namespace ltsig
