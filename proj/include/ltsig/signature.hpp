#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "ltsig/cyclotomic.hpp"
#include "ltsig/errors.hpp"
#include "ltsig/rational.hpp"
#include "ltsig/root_isolation.hpp"
#include "ltsig/rotation.hpp"
#include "ltsig/seifert.hpp"

namespace ltsig {

/// A point of the unit circle at which signatures are evaluated.  Exact
/// rotation numbers produce certified results; Generic angles are evaluated
/// in floating point and flagged uncertified.
class AlphaPoint {
  public:
    static AlphaPoint exact(const RotationNumber& r) { return AlphaPoint(r); }

    static AlphaPoint generic(double angle) {
        if (!(angle >= 0.0 && angle < 1.0))
            throw std::invalid_argument("AlphaPoint: generic angle must lie in [0,1)");
        return AlphaPoint(angle);
    }

    bool is_exact() const { return std::holds_alternative<RotationNumber>(v_); }
    const RotationNumber& rotation() const { return std::get<RotationNumber>(v_); }
    double angle() const {
        return is_exact() ? rotation().as_double() : std::get<double>(v_);
    }

  private:
    explicit AlphaPoint(const RotationNumber& r) : v_(r) {}
    explicit AlphaPoint(double a) : v_(a) {}
    std::variant<RotationNumber, double> v_;
};

/// Square matrix over a fixed cyclotomic field.
struct CycMatrix {
    std::uint32_t level = 1;
    std::size_t n = 0;
    std::vector<CyclotomicElement> e;

    CycMatrix(std::uint32_t lvl, std::size_t size)
        : level(lvl), n(size), e(size * size, CyclotomicElement::zero(lvl)) {}

    CyclotomicElement& at(std::size_t i, std::size_t j) { return e[i * n + j]; }
    const CyclotomicElement& at(std::size_t i, std::size_t j) const { return e[i * n + j]; }

    bool is_hermitian() const {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j)
                if (at(i, j).conj() != at(j, i)) return false;
        return true;
    }
};

/// H(alpha) = (1 - alpha) A + (1 - conj(alpha)) A^T at an exact root of
/// unity, over the cyclotomic field of the rotation's denominator.  Entries
/// are residues in t with alpha = t, to be evaluated at t = e^{2*pi*i*q/n};
/// this is the same embedding certified_sign uses.
inline CycMatrix hermitian_form(const SeifertMatrix& a, const RotationNumber& at) {
    std::uint32_t level = static_cast<std::uint32_t>(at.den());
    CyclotomicElement one = CyclotomicElement::from_integer(level, 1);
    CyclotomicElement u = one - CyclotomicElement::root_power(level, 1 % level);  // 1 - alpha
    CyclotomicElement ubar = one - CyclotomicElement::root_power(level, (level - 1) % level);
    CycMatrix h(level, a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            h.at(i, j) = u * a.at(i, j) + ubar * a.at(j, i);
    if (!h.is_hermitian()) throw std::logic_error("hermitian_form: H != H^*");
    return h;
}

/// Floating counterpart for Generic angles (uncertified).
inline Eigen::MatrixXcd hermitian_form(const SeifertMatrix& a, double angle) {
    std::complex<double> alpha = std::polar(1.0, 2.0 * M_PI * angle);
    std::complex<double> u = 1.0 - alpha, ubar = 1.0 - std::conj(alpha);
    Eigen::MatrixXcd h(a.size(), a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            h(static_cast<long>(i), static_cast<long>(j)) =
                u * a.at(i, j).get_d() + ubar * a.at(j, i).get_d();
    return h;
}

struct SigResult {
    int signature = 0;
    int nullity = 0;
    bool certified = true;
};

namespace detail {

/// Inertia of a Hermitian matrix over the cyclotomic field by symmetric
/// congruence elimination with certified pivot signs.
///
/// Pivoting keeps all entries in Z[zeta]: eliminating a nonzero real pivot p
/// replaces the remaining block M by p^2 M - p M_ik M_kj (a *-congruence, so
/// inertia is preserved without tracking the sign of p).  When the active
/// diagonal is entirely zero but the block is not, a 2x2 hyperbolic pair is
/// split off; it contributes 0 to the signature and nothing to the nullity.
inline SigResult hermitian_signature(CycMatrix m, const RotationNumber& at, int start_bits) {
    SigResult out;
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < m.n; ++i) active.push_back(i);

    auto strip_content = [&]() {
        mpz_class g = 0;
        for (std::size_t i : active)
            for (std::size_t j : active) {
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m.at(i, j).content().get_mpz_t());
                if (g == 1) return;
            }
        if (g > 1)
            for (std::size_t i : active)
                for (std::size_t j : active) m.at(i, j).divide_by(g);
    };

    auto deactivate = [&](std::size_t idx) {
        active.erase(std::find(active.begin(), active.end(), idx));
    };

    // row_r <- s * row_r, col_r <- conj(s) * col_r
    auto congruence_scale = [&](std::size_t r, const CyclotomicElement& s) {
        CyclotomicElement sc = s.conj();
        for (std::size_t c : active) {
            if (c == r) continue;
            m.at(r, c) = s * m.at(r, c);
            m.at(c, r) = m.at(c, r) * sc;
        }
        m.at(r, r) = s * m.at(r, r) * sc;
    };

    // row_r <- row_r + c * row_x, col_r <- col_r + conj(c) * col_x
    auto congruence_shear = [&](std::size_t r, std::size_t x, const CyclotomicElement& c) {
        CyclotomicElement cc = c.conj();
        CyclotomicElement old_xx = m.at(x, x);
        CyclotomicElement old_xr = m.at(x, r);
        CyclotomicElement old_rx = m.at(r, x);
        for (std::size_t col : active)
            if (col != r) m.at(r, col) = m.at(r, col) + c * m.at(x, col);
        for (std::size_t row : active)
            if (row != r) m.at(row, r) = m.at(row, r) + m.at(row, x) * cc;
        m.at(r, r) = m.at(r, r) + c * old_xr + old_rx * cc + c * old_xx * cc;
    };

    while (!active.empty()) {
        strip_content();

        // rows that vanish entirely contribute to the kernel
        bool removed = true;
        while (removed) {
            removed = false;
            for (std::size_t k : active) {
                bool zero_row = true;
                for (std::size_t j : active)
                    if (!m.at(k, j).is_zero()) {
                        zero_row = false;
                        break;
                    }
                if (zero_row) {
                    ++out.nullity;
                    deactivate(k);
                    removed = true;
                    break;
                }
            }
        }
        if (active.empty()) break;

        // nonzero diagonal pivot if one exists
        std::optional<std::size_t> pivot;
        for (std::size_t k : active)
            if (!m.at(k, k).is_zero()) {
                pivot = k;
                break;
            }

        if (pivot) {
            std::size_t k = *pivot;
            CyclotomicElement p = m.at(k, k);
            Sign s = certified_sign(p, at, start_bits);
            if (s == Sign::zero) throw std::logic_error("hermitian_signature: zero pivot sign");
            out.signature += sign_value(s);
            std::vector<std::size_t> rest;
            for (std::size_t i : active)
                if (i != k) rest.push_back(i);
            // save old row/column of the pivot, then form p^2 M - p M_ik M_kj
            std::vector<CyclotomicElement> col_k, row_k;
            col_k.reserve(rest.size());
            row_k.reserve(rest.size());
            for (std::size_t i : rest) col_k.push_back(m.at(i, k));
            for (std::size_t j : rest) row_k.push_back(m.at(k, j));
            for (std::size_t ii = 0; ii < rest.size(); ++ii)
                for (std::size_t jj = 0; jj < rest.size(); ++jj) {
                    std::size_t i = rest[ii], j = rest[jj];
                    m.at(i, j) = p * p * m.at(i, j) - p * col_k[ii] * row_k[jj];
                }
            deactivate(k);
            continue;
        }

        // all-zero diagonal: take the first nonzero off-diagonal pair
        std::size_t i0 = 0, j0 = 0;
        bool found = false;
        for (std::size_t a = 0; a < active.size() && !found; ++a)
            for (std::size_t b = a + 1; b < active.size() && !found; ++b)
                if (!m.at(active[a], active[b]).is_zero()) {
                    i0 = active[a];
                    j0 = active[b];
                    found = true;
                }
        if (!found) throw std::logic_error("hermitian_signature: no pivot after zero-row sweep");

        CyclotomicElement mm = m.at(i0, j0);
        CyclotomicElement mmc = m.at(j0, i0);  // = conj(mm)
        std::vector<std::size_t> others;
        for (std::size_t r : active)
            if (r != i0 && r != j0) others.push_back(r);
        for (std::size_t r : others) {
            // scale row r by conj(m), then subtract a * row j0: the column-i0
            // entry becomes conj(m) a - a conj(m) = 0; same pattern for j0
            CyclotomicElement a = m.at(r, i0);
            if (!a.is_zero()) {
                congruence_scale(r, mmc);
                congruence_shear(r, j0, -a);
            }
            CyclotomicElement b = m.at(r, j0);
            if (!b.is_zero()) {
                congruence_scale(r, mm);
                congruence_shear(r, i0, -b);
            }
        }
        // the remaining 2x2 block [[0, m], [conj(m), 0]] has signature 0
        deactivate(i0);
        deactivate(j0);
    }
    return out;
}

inline SigResult floating_signature(const Eigen::MatrixXcd& h, double zero_threshold_rel = 1e-9) {
    SigResult out;
    out.certified = false;
    if (h.rows() == 0) return out;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
    Eigen::VectorXd ev = solver.eigenvalues();
    double norm = ev.cwiseAbs().maxCoeff();
    double thr = zero_threshold_rel * norm;
    for (long i = 0; i < ev.size(); ++i) {
        if (ev[i] > thr)
            ++out.signature;
        else if (ev[i] < -thr)
            --out.signature;
        else
            ++out.nullity;
    }
    return out;
}

}  // namespace detail

/// Signature and nullity of H(alpha).  Exact alpha: certified congruence
/// elimination over the cyclotomic field.  Generic alpha: floating eigenvalue
/// sign count with relative zero threshold 1e-9, flagged uncertified.
inline SigResult signature_at(const KnotSpec& k, const AlphaPoint& alpha,
                              int start_bits = kDefaultPrecisionBits) {
    if (alpha.is_exact()) {
        const RotationNumber& r = alpha.rotation();
        if (r.den() > 0x7fffffff)
            throw std::invalid_argument("signature_at: rotation denominator too large");
        return detail::hermitian_signature(hermitian_form(k.matrix, r), r, start_bits);
    }
    return detail::floating_signature(hermitian_form(k.matrix, alpha.angle()));
}

inline SigResult signature_at(const KnotSpec& k, const RotationNumber& r,
                              int start_bits = kDefaultPrecisionBits) {
    return signature_at(k, AlphaPoint::exact(r), start_bits);
}

/// Unit-circle roots of the Alexander polynomial; the signature jump set is
/// a subset of these.
inline std::vector<RootArc> jump_candidates(const KnotSpec& k) {
    IntegerPolynomial delta = alexander_polynomial(k).polynomial;
    if (delta.degree() == 0) return {};
    return isolate_unit_circle_roots(delta);
}

/// The step function alpha -> sigma_alpha(K) on the circle: jump locations
/// in rotation order, one certified value per open arc between consecutive
/// jumps (cyclically, starting from the arc containing rotation 0+), and the
/// value exactly at each ExactRotation jump.
struct SignatureProfile {
    std::vector<RootArc> jumps;
    std::vector<int> arc_values;
    std::vector<std::optional<int>> jump_values;

    /// Value on the open arc `(jumps[i-1], jumps[i])`; arc 0 wraps through
    /// rotation 0.
    int arc_value(std::size_t i) const { return arc_values[i]; }
};

inline SignatureProfile profile(const KnotSpec& k, int start_bits = kDefaultPrecisionBits) {
    SignatureProfile out;
    out.jumps = jump_candidates(k);
    std::size_t m = out.jumps.size();
    if (m == 0) {
        Rational sample = simplest_rational_between(Rational(0), Rational(1));
        out.arc_values.push_back(
            signature_at(k, RotationNumber::from_rational(sample), start_bits).signature);
        return out;
    }
    for (std::size_t i = 0; i < m; ++i) {
        // arc i runs from jump (i-1) to jump i; arc 0 contains rotation 0 and
        // is sampled in its (0, first jump) part, which suffices because the
        // jump set is closed under conjugation
        Rational lo = (i == 0) ? Rational(0) : out.jumps[i - 1].upper_bound();
        Rational hi = out.jumps[i].lower_bound();
        Rational sample = simplest_rational_between(lo, hi);
        out.arc_values.push_back(
            signature_at(k, RotationNumber::from_rational(sample), start_bits).signature);
        if (out.jumps[i].is_exact())
            out.jump_values.push_back(
                signature_at(k, out.jumps[i].rotation, start_bits).signature);
        else
            out.jump_values.push_back(std::nullopt);
    }
    return out;
}

namespace detail {

/// True iff e^{2*pi*i*r} is a root of the Alexander polynomial: the residue
/// of Delta modulo Phi_den vanishes.
inline bool is_alexander_root(const IntegerPolynomial& delta, const RotationNumber& r) {
    if (r.den() > 0x7fffffff) throw std::invalid_argument("rotation denominator too large");
    CyclotomicElement v = CyclotomicElement::from_polynomial(
        static_cast<std::uint32_t>(r.den()), delta);
    // Delta(zeta^q) = 0 iff Phi_den divides Delta, independent of q coprime
    return v.is_zero();
}

}  // namespace detail

/// The averaged invariant: the arc value at non-jump points, and the mean of
/// the two adjacent arc values at a jump.  Integral by the parity of the arc
/// values; a non-integral mean signals an implementation bug and raises
/// ParityViolation.
inline Rational averaged_sigma(const KnotSpec& k, const AlphaPoint& alpha,
                               int start_bits = kDefaultPrecisionBits) {
    if (alpha.is_exact()) {
        const RotationNumber& r = alpha.rotation();
        IntegerPolynomial delta = alexander_polynomial(k).polynomial;
        if (!detail::is_alexander_root(delta, r)) {
            // strictly inside an arc (isolated-interval jumps are irrational,
            // so a rational point is never one)
            return Rational(signature_at(k, r, start_bits).signature);
        }
        SignatureProfile prof = profile(k, start_bits);
        for (std::size_t i = 0; i < prof.jumps.size(); ++i) {
            if (prof.jumps[i].is_exact() && prof.jumps[i].rotation == r) {
                int left = prof.arc_values[i];
                int right = prof.arc_values[(i + 1) % prof.arc_values.size()];
                if ((left + right) % 2 != 0)
                    raise(errc::parity_violation,
                          "one-sided limits " + std::to_string(left) + ", " +
                              std::to_string(right) + " at " + r.str() + " have mixed parity");
                return make_rational(left + right, 2);
            }
        }
        throw std::logic_error("averaged_sigma: Alexander root not among jumps");
    }

    // Generic angle: refuse within 1e-9 of a jump, else the arc value.
    double a = alpha.angle();
    SignatureProfile prof = profile(k, start_bits);
    for (const auto& j : prof.jumps) {
        double lo = j.is_exact() ? j.rotation.as_double() : j.lo.get_d();
        double hi = j.is_exact() ? j.rotation.as_double() : j.hi.get_d();
        for (double shift : {-1.0, 0.0, 1.0})
            if (a + shift >= lo - 1e-9 && a + shift <= hi + 1e-9)
                raise(errc::bad_alpha,
                      "generic alpha is within 1e-9 of a signature jump; use an exact rotation");
    }
    return Rational(signature_at(k, alpha, start_bits).signature);
}

}  // namespace ltsig
