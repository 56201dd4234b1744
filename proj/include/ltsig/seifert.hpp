#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "ltsig/errors.hpp"
#include "ltsig/polynomial.hpp"

namespace ltsig {

/// Square integer matrix of even size 2g with det(A - A^T) = 1: the Seifert
/// form of a genus-g spanning surface.  Size 0 is the unknot.
class SeifertMatrix {
  public:
    SeifertMatrix() = default;

    explicit SeifertMatrix(std::vector<std::vector<mpz_class>> rows) {
        n_ = rows.size();
        for (const auto& r : rows) {
            if (r.size() != n_) throw std::invalid_argument("SeifertMatrix: not square");
            for (const auto& v : r) a_.push_back(v);
        }
        validate();
    }

    std::size_t size() const { return n_; }
    std::size_t genus() const { return n_ / 2; }

    const mpz_class& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    SeifertMatrix transpose() const {
        SeifertMatrix t;
        t.n_ = n_;
        t.a_.resize(a_.size());
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) t.a_[j * n_ + i] = a_[i * n_ + j];
        return t;
    }

    SeifertMatrix negated_transpose() const {
        SeifertMatrix t = transpose();
        for (auto& v : t.a_) v = -v;
        return t;
    }

    /// Block-diagonal sum.
    SeifertMatrix block_sum(const SeifertMatrix& o) const {
        SeifertMatrix s;
        s.n_ = n_ + o.n_;
        s.a_.assign(s.n_ * s.n_, mpz_class(0));
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) s.a_[i * s.n_ + j] = at(i, j);
        for (std::size_t i = 0; i < o.n_; ++i)
            for (std::size_t j = 0; j < o.n_; ++j) s.a_[(n_ + i) * s.n_ + (n_ + j)] = o.at(i, j);
        return s;
    }

    std::vector<std::vector<mpz_class>> rows() const {
        std::vector<std::vector<mpz_class>> r(n_, std::vector<mpz_class>(n_));
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) r[i][j] = at(i, j);
        return r;
    }

    bool operator==(const SeifertMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }

  private:
    void validate() const {
        if (n_ % 2 != 0)
            raise(errc::odd_size, "Seifert matrix must have even size, got " + std::to_string(n_));
        std::vector<std::vector<mpz_class>> d(n_, std::vector<mpz_class>(n_));
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) d[i][j] = at(i, j) - at(j, i);
        mpz_class det = detail::bareiss_determinant(std::move(d));
        if (det != 1)
            raise(errc::not_unimodular,
                  "det(A - A^T) = " + det.get_str() + ", expected 1");
    }

    std::size_t n_ = 0;
    std::vector<mpz_class> a_;
};

/// A named knot given by a Seifert matrix.  The ambient homology sphere Y is
/// carried only through the user-supplied Casson invariant downstream.
struct KnotSpec {
    std::string name;
    SeifertMatrix matrix;

    std::size_t genus() const { return matrix.genus(); }
};

inline KnotSpec from_matrix(const std::string& name, std::vector<std::vector<mpz_class>> entries) {
    if (name.empty()) throw std::invalid_argument("from_matrix: name must be nonempty");
    return KnotSpec{name, SeifertMatrix(std::move(entries))};
}

inline KnotSpec from_matrix(const std::string& name,
                            const std::vector<std::vector<long>>& entries) {
    std::vector<std::vector<mpz_class>> rows;
    for (const auto& r : entries) rows.emplace_back(r.begin(), r.end());
    return from_matrix(name, std::move(rows));
}

/// Seifert matrix of the (p,q) torus knot from the fiber surface of the
/// positive braid (s_1 ... s_{p-1})^q.  One generator per pair of consecutive
/// occurrences of the same braid letter ("brick"); self-linking -1 on the
/// diagonal, and linking 0/+-1 between bricks according to how their spans
/// interleave in the braid word.
inline KnotSpec torus_knot(long p, long q) {
    if (p < 2 || q < 2) throw std::invalid_argument("torus_knot: need p, q >= 2");
    if (std::gcd(p, q) != 1)
        raise(errc::not_coprime, "gcd(" + std::to_string(p) + ", " + std::to_string(q) + ") != 1");

    const long cols = p - 1;       // braid generators
    const long per_col = q - 1;    // bricks per generator
    const long n = cols * per_col;
    auto index = [&](long col, long j) { return (col - 1) * per_col + (j - 1); };
    // occurrences of s_col at word positions col, col+(p-1), ...; brick j
    // spans [col + (j-1)(p-1), col + j(p-1)]
    auto span_lo = [&](long col, long j) { return col + (j - 1) * (p - 1); };

    std::vector<std::vector<mpz_class>> v(static_cast<std::size_t>(n),
                                          std::vector<mpz_class>(static_cast<std::size_t>(n), 0));
    for (long col = 1; col <= cols; ++col) {
        for (long j = 1; j <= per_col; ++j) {
            long a = index(col, j);
            v[a][a] = -1;
            if (j + 1 <= per_col) v[a][index(col, j + 1)] = 1;  // shared band
            if (col + 1 <= cols) {
                long alo = span_lo(col, j), ahi = alo + (p - 1);
                for (long jj = 1; jj <= per_col; ++jj) {
                    long b = index(col + 1, jj);
                    long blo = span_lo(col + 1, jj), bhi = blo + (p - 1);
                    if (alo < blo && blo < ahi && bhi > ahi)
                        v[b][a] = 1;  // staircase overlap
                    else if (alo < bhi && bhi < ahi && blo < alo)
                        v[b][a] = -1;  // reverse overlap
                }
            }
        }
    }
    return from_matrix("T(" + std::to_string(p) + "," + std::to_string(q) + ")", std::move(v));
}

/// Mirror image: Seifert matrix -A^T.
inline KnotSpec mirror(const KnotSpec& k) {
    return KnotSpec{"mirror(" + k.name + ")", k.matrix.negated_transpose()};
}

/// Connected sum: block-diagonal sum of Seifert matrices.
inline KnotSpec connected_sum(const KnotSpec& k1, const KnotSpec& k2) {
    return KnotSpec{k1.name + "#" + k2.name, k1.matrix.block_sum(k2.matrix)};
}

/// Alexander polynomial in normal form: t^shift * polynomial with
/// polynomial(0) != 0, value 1 at t = 1 and palindromic coefficients.
struct LaurentNormalForm {
    IntegerPolynomial polynomial;
    long shift = 0;

    bool operator==(const LaurentNormalForm& o) const {
        return shift == o.shift && polynomial == o.polynomial;
    }
};

namespace detail {

/// Fraction-free Bareiss determinant over Z[t].
inline IntegerPolynomial bareiss_determinant_poly(std::vector<std::vector<IntegerPolynomial>> m) {
    std::size_t n = m.size();
    if (n == 0) return IntegerPolynomial::constant(1);
    int sign = 1;
    IntegerPolynomial prev = IntegerPolynomial::constant(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && m[r][k].is_zero()) ++r;
            if (r == n) return IntegerPolynomial();
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]).div_exact(prev);
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace detail

/// det(A - t A^T), normalized per LaurentNormalForm.  Exact; the sign and
/// shift ambiguity t^k is fixed by Delta(1) = 1 and the palindromic symmetry.
inline LaurentNormalForm alexander_polynomial(const KnotSpec& k) {
    const SeifertMatrix& a = k.matrix;
    std::size_t n = a.size();
    std::vector<std::vector<IntegerPolynomial>> m(n, std::vector<IntegerPolynomial>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            // A_ij - t * A_ji
            m[i][j] = IntegerPolynomial::constant(a.at(i, j)) -
                      IntegerPolynomial::monomial(1, a.at(j, i));
        }
    IntegerPolynomial det = detail::bareiss_determinant_poly(std::move(m));
    if (det.is_zero()) throw std::logic_error("alexander_polynomial: vanishing determinant");
    IntegerPolynomial poly = det.shifted_to_zero();
    if (poly.eval(mpz_class(1)) != 1)
        throw std::logic_error("alexander_polynomial: normalization failed, Delta(1) != 1");
    auto ps = poly.palindrome_sign();
    if (!ps || *ps != 1 || poly.degree() % 2 != 0)
        throw std::logic_error("alexander_polynomial: expected even palindromic form");
    return LaurentNormalForm{poly, -poly.degree() / 2};
}

/// |prod_{j=1}^{n-1} Delta(e^{2 pi i j / n})|, the order of H_1 of the n-fold
/// branched cover when finite; 0 when some Delta(zeta) vanishes.  Computed
/// exactly as |res(Delta, (t^n - 1)/(t - 1))|.
inline mpz_class branched_cover_h1_order(const KnotSpec& k, std::uint64_t n) {
    if (n < 2) throw std::invalid_argument("branched_cover_h1_order: need n >= 2");
    IntegerPolynomial delta = alexander_polynomial(k).polynomial;
    mpz_class r = resultant(ones_polynomial(n), delta);
    return abs(r);
}

}  // namespace ltsig
