#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ltsig/rational.hpp"

namespace ltsig {

/// Exact point e^{2*pi*i*q/n} of the unit circle, stored as the reduced
/// fraction q/n in [0,1).  Denominator 1 encodes the point 1 itself.
class RotationNumber {
  public:
    RotationNumber() : num_(0), den_(1) {}

    RotationNumber(std::int64_t num, std::int64_t den) {
        if (den <= 0) throw std::invalid_argument("RotationNumber: denominator must be positive");
        num %= den;
        if (num < 0) num += den;
        std::int64_t g = std::gcd(num, den);
        num_ = num / g;
        den_ = den / g;
    }

    static RotationNumber from_rational(const Rational& q) {
        Rational r = q - Rational(rational_floor(q));
        if (!r.get_num().fits_slong_p() || !r.get_den().fits_slong_p())
            throw std::invalid_argument("RotationNumber: fraction out of range");
        return RotationNumber(r.get_num().get_si(), r.get_den().get_si());
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    /// The conjugate point, rotation 1 - q/n.
    RotationNumber conjugate() const { return RotationNumber(den_ - num_, den_); }

    /// (q/n)*k mod 1, the k-th power of the circle point.
    RotationNumber power(std::int64_t k) const {
        std::int64_t r = static_cast<std::int64_t>(
            ((static_cast<__int128>(num_) * k) % den_ + den_) % den_);
        return RotationNumber(r, den_);
    }

    Rational as_rational() const { return make_rational(num_, den_); }
    double as_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

    bool operator==(const RotationNumber& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RotationNumber& o) const { return !(*this == o); }
    bool operator<(const RotationNumber& o) const {
        return static_cast<__int128>(num_) * o.den_ < static_cast<__int128>(o.num_) * den_;
    }

  private:
    std::int64_t num_;
    std::int64_t den_;
};

}  // namespace ltsig
