#pragma once

// Shared oracles and generators for the test suites.  Everything here is
// floating-point or brute-force and deliberately independent of the
// certified evaluation paths it is used to check.

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "ltsig/ltsig.hpp"

namespace testsupport {

struct FloatSig {
    int signature = 0;
    int nullity = 0;
    double min_abs_eig = 0.0;
    double norm = 0.0;  // spectral norm
};

inline Eigen::MatrixXcd hermitian_matrix_of(const ltsig::SeifertMatrix& a, double rot) {
    std::complex<double> alpha = std::polar(1.0, 2.0 * M_PI * rot);
    std::complex<double> u = 1.0 - alpha, ubar = 1.0 - std::conj(alpha);
    Eigen::MatrixXcd h(a.size(), a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            h(static_cast<long>(i), static_cast<long>(j)) =
                u * a.at(i, j).get_d() + ubar * a.at(j, i).get_d();
    return h;
}

/// Floating eigenvalue sign count with relative zero threshold.
inline FloatSig eigen_oracle(const ltsig::SeifertMatrix& a, double rot,
                             double zero_rel = 1e-9) {
    FloatSig out;
    if (a.size() == 0) return out;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hermitian_matrix_of(a, rot),
                                                           Eigen::EigenvaluesOnly);
    Eigen::VectorXd ev = solver.eigenvalues();
    out.norm = ev.cwiseAbs().maxCoeff();
    out.min_abs_eig = ev.cwiseAbs().minCoeff();
    double thr = zero_rel * out.norm;
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

/// Brute-force cyclotomic polynomial: numeric product over the primitive
/// n-th roots of unity, coefficients rounded and verified integral.
inline ltsig::IntegerPolynomial cyclotomic_oracle(unsigned n) {
    std::vector<std::complex<double>> coeffs{1.0};
    for (unsigned k = 0; k < n; ++k) {
        if (std::gcd(k, n) != 1) continue;
        std::complex<double> root = std::polar(1.0, 2.0 * M_PI * k / n);
        coeffs.push_back(0.0);
        for (std::size_t i = coeffs.size() - 1; i > 0; --i)
            coeffs[i] = coeffs[i - 1] - root * coeffs[i];
        coeffs[0] *= -root;
    }
    std::vector<mpz_class> out;
    for (const auto& c : coeffs) {
        double r = std::round(c.real());
        if (std::abs(c.real() - r) > 1e-6 || std::abs(c.imag()) > 1e-6)
            throw std::runtime_error("cyclotomic_oracle: non-integral coefficient");
        out.emplace_back(static_cast<long>(r));
    }
    return ltsig::IntegerPolynomial(std::move(out));
}

/// All complex roots via the companion matrix.
inline std::vector<std::complex<double>> companion_roots(const ltsig::IntegerPolynomial& p) {
    long deg = p.degree();
    if (deg <= 0) return {};
    Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(deg, deg);
    double lead = p.leading().get_d();
    for (long i = 0; i < deg; ++i) {
        c(i, deg - 1) = -p.coeff(static_cast<std::size_t>(i)).get_d() / lead;
        if (i + 1 < deg) c(i + 1, i) = 1.0;
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(c, false);
    std::vector<std::complex<double>> roots;
    for (long i = 0; i < deg; ++i) roots.push_back(solver.eigenvalues()[i]);
    return roots;
}

/// Distinct roots with | |root| - 1 | <= tol, clustered by proximity.
inline std::size_t unit_circle_root_count(const ltsig::IntegerPolynomial& p,
                                          double tol = 1e-9) {
    std::vector<std::complex<double>> on_circle;
    for (const auto& r : companion_roots(p))
        if (std::abs(std::abs(r) - 1.0) <= tol) on_circle.push_back(r);
    std::vector<std::complex<double>> distinct;
    for (const auto& r : on_circle) {
        bool seen = false;
        for (const auto& d : distinct)
            if (std::abs(r - d) < 1e-6) seen = true;
        if (!seen) distinct.push_back(r);
    }
    return distinct.size();
}

/// Random Seifert matrix of genus g: a fixed symplectic upper part plus a
/// random symmetric integer matrix, so det(A - A^T) = 1 by construction.
inline ltsig::SeifertMatrix random_seifert(std::mt19937_64& rng, std::size_t genus,
                                           long entry_bound = 3) {
    std::size_t n = 2 * genus;
    std::uniform_int_distribution<long> dist(-entry_bound, entry_bound);
    std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            long v = dist(rng);
            a[i][j] = v;
            a[j][i] = v;
        }
    for (std::size_t g = 0; g < genus; ++g) {
        // keep entries within the bound after the symplectic shift
        if (a[2 * g][2 * g + 1] == entry_bound) a[2 * g][2 * g + 1] -= 1;
        a[2 * g][2 * g + 1] += 1;
    }
    return ltsig::SeifertMatrix(std::move(a));
}

inline ltsig::KnotSpec random_knot(std::mt19937_64& rng, std::size_t genus,
                                   long entry_bound = 3) {
    return ltsig::KnotSpec{"random", random_seifert(rng, genus, entry_bound)};
}

/// Random palindromic integer polynomial of even degree <= 2*max_half.
inline ltsig::IntegerPolynomial random_palindromic(std::mt19937_64& rng,
                                                   std::size_t max_half) {
    std::uniform_int_distribution<long> cdist(-4, 4);
    std::uniform_int_distribution<std::size_t> hdist(1, max_half);
    for (;;) {
        std::size_t m = hdist(rng);
        std::vector<mpz_class> c(2 * m + 1);
        for (std::size_t i = 0; i <= m; ++i) {
            c[i] = cdist(rng);
            c[2 * m - i] = c[i];
        }
        ltsig::IntegerPolynomial p{std::move(c)};
        if (!p.is_zero() && p.coeff(0) != 0) return p;
    }
}

inline ltsig::RotationNumber random_rotation(std::mt19937_64& rng, long max_den) {
    std::uniform_int_distribution<long> ddist(1, max_den);
    long den = ddist(rng);
    std::uniform_int_distribution<long> ndist(0, den - 1);
    return ltsig::RotationNumber(ndist(rng), den);
}

}  // namespace testsupport
