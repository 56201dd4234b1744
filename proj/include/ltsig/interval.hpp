#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "ltsig/rational.hpp"

namespace ltsig {

namespace detail {

/// RAII wrapper for a single mpfr number.
class BigFloat {
  public:
    explicit BigFloat(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

    int sign() const { return mpfr_sgn(v_); }

    Rational to_rational() const {
        if (mpfr_zero_p(v_)) return Rational(0);
        if (!mpfr_number_p(v_)) throw std::logic_error("BigFloat: non-finite value");
        mpz_class z;
        mpfr_exp_t e = mpfr_get_z_2exp(z.get_mpz_t(), v_);
        Rational q(z);
        if (e >= 0) {
            mpz_class p2;
            mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>(e));
            q *= Rational(p2);
        } else {
            mpz_class p2;
            mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>(-e));
            q /= Rational(p2);
        }
        return q;
    }

  private:
    mpfr_t v_;
};

/// Closed interval [lo, hi] with outward-rounded arithmetic; just enough
/// operations for certified sign evaluation at roots of unity.
class RealInterval {
  public:
    explicit RealInterval(mpfr_prec_t prec) : lo_(prec), hi_(prec) {}

    static RealInterval from_point(const BigFloat& lo, const BigFloat& hi, mpfr_prec_t prec) {
        RealInterval r(prec);
        mpfr_set(r.lo_.get(), lo.get(), MPFR_RNDD);
        mpfr_set(r.hi_.get(), hi.get(), MPFR_RNDU);
        return r;
    }

    const BigFloat& lo() const { return lo_; }
    const BigFloat& hi() const { return hi_; }
    BigFloat& lo() { return lo_; }
    BigFloat& hi() { return hi_; }

    void add(const RealInterval& o) {
        mpfr_add(lo_.get(), lo_.get(), o.lo_.get(), MPFR_RNDD);
        mpfr_add(hi_.get(), hi_.get(), o.hi_.get(), MPFR_RNDU);
    }

    /// Accumulate s * o for an integer scalar s.
    void add_scaled(const mpz_class& s, const RealInterval& o, mpfr_prec_t prec) {
        if (s == 0) return;
        BigFloat a(prec), b(prec);
        if (s > 0) {
            mpfr_mul_z(a.get(), o.lo_.get(), s.get_mpz_t(), MPFR_RNDD);
            mpfr_mul_z(b.get(), o.hi_.get(), s.get_mpz_t(), MPFR_RNDU);
        } else {
            mpfr_mul_z(a.get(), o.hi_.get(), s.get_mpz_t(), MPFR_RNDD);
            mpfr_mul_z(b.get(), o.lo_.get(), s.get_mpz_t(), MPFR_RNDU);
        }
        mpfr_add(lo_.get(), lo_.get(), a.get(), MPFR_RNDD);
        mpfr_add(hi_.get(), hi_.get(), b.get(), MPFR_RNDU);
    }

    /// -1 if hi < 0, +1 if lo > 0, 0 if the interval straddles zero.
    int certain_sign() const {
        if (hi_.sign() < 0) return -1;
        if (lo_.sign() > 0) return 1;
        return 0;
    }

  private:
    BigFloat lo_;
    BigFloat hi_;
};

/// Enclosure of cos(2*pi*frac) for a rational frac >= 0.
inline RealInterval cos_two_pi(const Rational& frac, mpfr_prec_t prec) {
    BigFloat pi_lo(prec), pi_hi(prec);
    mpfr_const_pi(pi_lo.get(), MPFR_RNDD);
    mpfr_const_pi(pi_hi.get(), MPFR_RNDU);
    Rational f2 = frac * 2;
    BigFloat th_lo(prec), th_hi(prec);
    mpfr_mul_q(th_lo.get(), pi_lo.get(), f2.get_mpq_t(), MPFR_RNDD);
    mpfr_mul_q(th_hi.get(), pi_hi.get(), f2.get_mpq_t(), MPFR_RNDU);

    BigFloat c1d(prec), c1u(prec), c2d(prec), c2u(prec), w(prec);
    mpfr_cos(c1d.get(), th_lo.get(), MPFR_RNDD);
    mpfr_cos(c1u.get(), th_lo.get(), MPFR_RNDU);
    mpfr_cos(c2d.get(), th_hi.get(), MPFR_RNDD);
    mpfr_cos(c2u.get(), th_hi.get(), MPFR_RNDU);
    mpfr_sub(w.get(), th_hi.get(), th_lo.get(), MPFR_RNDU);

    // |cos(t) - cos(t0)| <= |t - t0| bounds the true value near evaluated
    // endpoints; widen the hull by the argument slack.
    RealInterval r(prec);
    mpfr_min(r.lo().get(), c1d.get(), c2d.get(), MPFR_RNDD);
    mpfr_max(r.hi().get(), c1u.get(), c2u.get(), MPFR_RNDU);
    mpfr_sub(r.lo().get(), r.lo().get(), w.get(), MPFR_RNDD);
    mpfr_add(r.hi().get(), r.hi().get(), w.get(), MPFR_RNDU);
    return r;
}

/// Certified rational enclosure of acos(x/2)/(2*pi) for rational x in (-2, 2).
inline std::pair<Rational, Rational> rotation_enclosure(const Rational& x, mpfr_prec_t prec) {
    Rational half = x / 2;
    BigFloat x_lo(prec), x_hi(prec);
    mpfr_set_q(x_lo.get(), half.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(x_hi.get(), half.get_mpq_t(), MPFR_RNDU);
    // clamp into acos domain; the true argument lies in (-1, 1)
    if (mpfr_cmp_si(x_hi.get(), 1) > 0) mpfr_set_si(x_hi.get(), 1, MPFR_RNDN);
    if (mpfr_cmp_si(x_lo.get(), -1) < 0) mpfr_set_si(x_lo.get(), -1, MPFR_RNDN);

    BigFloat a_lo(prec), a_hi(prec);
    mpfr_acos(a_lo.get(), x_hi.get(), MPFR_RNDD);  // acos is decreasing
    mpfr_acos(a_hi.get(), x_lo.get(), MPFR_RNDU);

    BigFloat pi_lo(prec), pi_hi(prec);
    mpfr_const_pi(pi_lo.get(), MPFR_RNDD);
    mpfr_const_pi(pi_hi.get(), MPFR_RNDU);
    BigFloat tp_lo(prec), tp_hi(prec);
    mpfr_mul_ui(tp_lo.get(), pi_lo.get(), 2, MPFR_RNDD);
    mpfr_mul_ui(tp_hi.get(), pi_hi.get(), 2, MPFR_RNDU);

    BigFloat r_lo(prec), r_hi(prec);
    mpfr_div(r_lo.get(), a_lo.get(), tp_hi.get(), MPFR_RNDD);
    mpfr_div(r_hi.get(), a_hi.get(), tp_lo.get(), MPFR_RNDU);
    return {r_lo.to_rational(), r_hi.to_rational()};
}

}  // namespace detail
}  // namespace ltsig
