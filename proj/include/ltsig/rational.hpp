#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace ltsig {

using Rational = mpq_class;

inline mpz_class rational_floor(const Rational& q) {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

inline Rational make_rational(const mpz_class& num, const mpz_class& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// "q/n" with an explicit denominator, e.g. "-3/10", "0/1".
inline std::string format_fraction(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline std::optional<Rational> parse_fraction(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos || slash == 0 || slash + 1 == text.size())
        return std::nullopt;
    mpz_class num, den;
    if (num.set_str(text.substr(0, slash), 10) != 0) return std::nullopt;
    if (den.set_str(text.substr(slash + 1), 10) != 0) return std::nullopt;
    if (den == 0) return std::nullopt;
    return make_rational(num, den);
}

namespace detail {

// Stern-Brocot walk: the rational with the smallest denominator strictly
// between a and b.  Requires a < b; both endpoints are excluded.
inline Rational simplest_between_impl(const Rational& a, const Rational& b) {
    mpz_class fa = rational_floor(a);
    Rational candidate(fa + 1);
    if (candidate < b) return candidate;  // a < floor(a)+1 always holds
    Rational a1 = a - Rational(fa);
    Rational b1 = b - Rational(fa);
    if (a1 == 0) {
        // (0, b1): smallest q with 1/q < b1
        mpz_class q = rational_floor(1 / b1) + 1;
        return Rational(fa) + make_rational(1, q);
    }
    Rational inner = simplest_between_impl(1 / b1, 1 / a1);
    return Rational(fa) + 1 / inner;
}

}  // namespace detail

inline Rational simplest_rational_between(const Rational& a, const Rational& b) {
    if (!(a < b)) throw std::invalid_argument("simplest_rational_between: empty interval");
    return detail::simplest_between_impl(a, b);
}

}  // namespace ltsig
