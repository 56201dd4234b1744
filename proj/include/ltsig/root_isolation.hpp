#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ltsig/errors.hpp"
#include "ltsig/interval.hpp"
#include "ltsig/polynomial.hpp"
#include "ltsig/rotation.hpp"

namespace ltsig {

/// An isolated root of an integer polynomial on the unit circle, described
/// either by its exact rotation number (roots of unity) or by an isolating
/// rational sub-interval of [0,1) containing exactly one root.
struct RootArc {
    enum class Kind { exact_rotation, isolated_interval };

    Kind kind;
    RotationNumber rotation;  // exact_rotation
    Rational lo, hi;          // isolated_interval

    static RootArc exact(const RotationNumber& r) {
        RootArc a;
        a.kind = Kind::exact_rotation;
        a.rotation = r;
        return a;
    }

    static RootArc interval(const Rational& lo, const Rational& hi) {
        RootArc a;
        a.kind = Kind::isolated_interval;
        a.lo = lo;
        a.hi = hi;
        return a;
    }

    bool is_exact() const { return kind == Kind::exact_rotation; }

    Rational position() const {
        return is_exact() ? rotation.as_rational() : lo;
    }
    /// Largest rational known to be <= the root.
    Rational lower_bound() const { return is_exact() ? rotation.as_rational() : lo; }
    /// Smallest rational known to be >= the root.
    Rational upper_bound() const { return is_exact() ? rotation.as_rational() : hi; }

    double approx() const {
        return is_exact() ? rotation.as_double()
                          : (lo.get_d() + hi.get_d()) / 2.0;
    }

    bool operator==(const RootArc& o) const {
        if (kind != o.kind) return false;
        return is_exact() ? rotation == o.rotation : (lo == o.lo && hi == o.hi);
    }
};

namespace detail {

// ----- rational polynomials, just enough for Sturm sequences --------------

using QPoly = std::vector<Rational>;  // lowest degree first, trimmed

inline void qp_trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline long qp_degree(const QPoly& p) { return static_cast<long>(p.size()) - 1; }

inline Rational qp_eval(const QPoly& p, const Rational& x) {
    Rational acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

inline QPoly qp_derivative(const QPoly& p) {
    QPoly r;
    for (std::size_t i = 1; i < p.size(); ++i) r.push_back(p[i] * static_cast<long>(i));
    qp_trim(r);
    return r;
}

// Scale by a positive rational so coefficients become integral and primitive;
// positive scaling preserves every sign Sturm cares about.
inline void qp_make_primitive(QPoly& p) {
    if (p.empty()) return;
    mpz_class l = 1;
    for (const auto& c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    mpz_class g = 0;
    for (auto& c : p) {
        c *= Rational(l);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
    }
    if (g > 1)
        for (auto& c : p) c /= Rational(g);
}

inline QPoly qp_remainder(const QPoly& a, const QPoly& b) {
    QPoly r = a;
    qp_trim(r);
    while (qp_degree(r) >= qp_degree(b) && !r.empty()) {
        Rational f = r.back() / b.back();
        std::size_t shift = r.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= f * b[i];
        r.pop_back();
        qp_trim(r);
    }
    return r;
}

inline QPoly qp_from_integer(const IntegerPolynomial& p) {
    QPoly q;
    for (const auto& c : p.coeffs()) q.emplace_back(c);
    return q;
}

/// p / gcd(p, p'), integral and primitive.
inline QPoly qp_squarefree_part(const QPoly& p_in) {
    QPoly a = p_in, b = qp_derivative(p_in);
    qp_make_primitive(a);
    // Euclid for gcd(p, p')
    QPoly g = a, h = b;
    while (!h.empty()) {
        QPoly r = qp_remainder(g, h);
        qp_make_primitive(r);
        g = std::move(h);
        h = std::move(r);
    }
    if (qp_degree(g) <= 0) {
        QPoly r = p_in;
        qp_make_primitive(r);
        return r;
    }
    // exact division p / g over Q
    QPoly num = p_in, quo;
    qp_trim(num);
    quo.assign(num.size() - g.size() + 1, Rational(0));
    for (std::size_t k = quo.size(); k-- > 0;) {
        Rational f = num[k + g.size() - 1] / g.back();
        quo[k] = f;
        for (std::size_t i = 0; i < g.size(); ++i) num[k + i] -= f * g[i];
    }
    qp_make_primitive(quo);
    return quo;
}

inline std::vector<QPoly> sturm_chain(const QPoly& squarefree) {
    std::vector<QPoly> chain;
    chain.push_back(squarefree);
    QPoly d = qp_derivative(squarefree);
    qp_make_primitive(d);
    if (!d.empty()) chain.push_back(d);
    while (chain.size() >= 2 && qp_degree(chain.back()) > 0) {
        QPoly r = qp_remainder(chain[chain.size() - 2], chain.back());
        for (auto& c : r) c = -c;
        qp_make_primitive(r);
        if (r.empty()) break;
        chain.push_back(std::move(r));
    }
    return chain;
}

inline int qp_sign(const Rational& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

inline int sturm_variations(const std::vector<QPoly>& chain, const Rational& x) {
    int count = 0, last = 0;
    for (const auto& p : chain) {
        int s = qp_sign(qp_eval(p, x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

/// Number of distinct roots in (a, b]; requires chain[0](a) != 0.
inline int sturm_count(const std::vector<QPoly>& chain, const Rational& a, const Rational& b) {
    return sturm_variations(chain, a) - sturm_variations(chain, b);
}

/// Point in (a,b) where p does not vanish; tries a deterministic sequence.
inline Rational nonroot_split_point(const QPoly& p, const Rational& a, const Rational& b) {
    for (long k = 1; k <= qp_degree(p) + 2; ++k) {
        Rational mid = (a * k + b) / (k + 1);
        if (qp_eval(p, mid) != 0) return mid;
    }
    throw std::logic_error("nonroot_split_point: exhausted candidates");
}

struct BracketedRoot {
    Rational xa, xb;  // sign change of the squarefree trace polynomial
};

inline void isolate_recursive(const std::vector<QPoly>& chain, const QPoly& sf,
                              const Rational& a, const Rational& b,
                              std::vector<BracketedRoot>& out) {
    int count = sturm_count(chain, a, b);
    if (count == 0) return;
    if (count == 1) {
        out.push_back({a, b});
        return;
    }
    Rational mid = nonroot_split_point(sf, a, b);
    isolate_recursive(chain, sf, a, mid, out);
    isolate_recursive(chain, sf, mid, b, out);
}

/// Halve the bracket, keeping the sign change (simple roots only).
inline void bisect_bracket(const QPoly& sf, BracketedRoot& r) {
    Rational mid = (r.xa + r.xb) / 2;
    Rational vm = qp_eval(sf, mid);
    if (vm == 0) {
        // the root is exactly mid; shrink to a symmetric sub-bracket
        Rational w = std::min(mid - r.xa, r.xb - mid) / 3;
        r.xa = mid - w;
        r.xb = mid + w;
        return;
    }
    if (qp_sign(qp_eval(sf, r.xa)) != qp_sign(vm))
        r.xb = mid;
    else
        r.xa = mid;
}

}  // namespace detail

/// All roots of p on the unit circle, as ExactRotation arcs when the root is
/// a root of unity (detected by exact divisibility by cyclotomic factors) and
/// as certified IsolatedInterval arcs of the rotation number otherwise.
///
/// The input must be palindromic up to sign and a power of t; the roots of
/// the remaining factor are isolated through the trace substitution
/// x = t + 1/t, Sturm bisection on [-2,2], and outward-rounded arccos.
inline std::vector<RootArc> isolate_unit_circle_roots(const IntegerPolynomial& p_in) {
    if (p_in.is_zero())
        throw std::invalid_argument("isolate_unit_circle_roots: zero polynomial");
    IntegerPolynomial p = p_in.shifted_to_zero();
    if (!p.palindrome_sign())
        raise(errc::not_palindromic, "polynomial is not palindromic up to sign and unit shift");

    std::vector<RootArc> exact_arcs;
    // Cyclotomic sweep; phi(n) >= sqrt(n/2) bounds the candidate levels.
    // Covers t = 1 and t = -1 (levels 1 and 2) before the substitution,
    // which is degenerate there.
    {
        long deg = p.degree();
        std::uint64_t bound = static_cast<std::uint64_t>(2 * deg * deg + 6);
        for (std::uint64_t n = 1; n <= bound && p.degree() > 0; ++n) {
            if (euler_phi(n) > static_cast<std::uint64_t>(p.degree())) continue;
            IntegerPolynomial phi = cyclotomic_polynomial(n);
            bool hit = false;
            while (phi.divides(p)) {
                p = p.div_exact(phi);
                hit = true;
            }
            if (hit)
                for (std::uint64_t k = 0; k < n; ++k)
                    if (std::gcd(k, n) == 1)
                        exact_arcs.push_back(RootArc::exact(RotationNumber(
                            static_cast<std::int64_t>(k), static_cast<std::int64_t>(n))));
        }
    }

    std::vector<RootArc> arcs = exact_arcs;

    if (p.degree() > 0) {
        // What remains is a positive palindrome of even degree with
        // p(1) != 0 and p(-1) != 0.
        auto ps = p.palindrome_sign();
        if (!ps || *ps != 1 || p.degree() % 2 != 0)
            throw std::logic_error("isolate_unit_circle_roots: unexpected residual factor");
        std::size_t m = static_cast<std::size_t>(p.degree()) / 2;

        // trace polynomial: p/t^m = c_m + sum c_{m+j} (t^j + t^-j),
        // with t^j + t^-j = V_j(x), V_0 = 2, V_1 = x, V_j = x V_{j-1} - V_{j-2}
        IntegerPolynomial trace = IntegerPolynomial::constant(p.coeff(m));
        IntegerPolynomial v_prev = IntegerPolynomial::constant(2);
        IntegerPolynomial v_cur = IntegerPolynomial::monomial(1);
        IntegerPolynomial x_mono = IntegerPolynomial::monomial(1);
        for (std::size_t j = 1; j <= m; ++j) {
            trace = trace + v_cur * p.coeff(m + j);
            IntegerPolynomial v_next = x_mono * v_cur - v_prev;
            v_prev = v_cur;
            v_cur = v_next;
        }

        detail::QPoly sf = detail::qp_squarefree_part(detail::qp_from_integer(trace));
        auto chain = detail::sturm_chain(sf);
        std::vector<detail::BracketedRoot> roots;
        detail::isolate_recursive(chain, sf, Rational(-2), Rational(2), roots);

        // Convert x-brackets to rotation intervals in (0, 1/2) and refine
        // until all intervals are pairwise disjoint, lie strictly inside
        // (0, 1/2), and exclude every exact rotation found above.
        std::vector<std::pair<Rational, Rational>> rot_intervals(roots.size());
        Rational half(1, 2);
        mpfr_prec_t prec = 96;
        bool ok = false;
        for (int iter = 0; iter < 256 && !ok; ++iter) {
            for (std::size_t i = 0; i < roots.size(); ++i) {
                // rotation is decreasing in x
                auto lo_pair = detail::rotation_enclosure(roots[i].xb, prec);
                auto hi_pair = detail::rotation_enclosure(roots[i].xa, prec);
                rot_intervals[i] = {lo_pair.first, hi_pair.second};
            }
            std::vector<bool> bad(roots.size(), false);
            for (std::size_t i = 0; i < roots.size(); ++i) {
                const auto& [lo, hi] = rot_intervals[i];
                if (!(lo > 0 && hi < half)) bad[i] = true;
                for (const auto& ea : exact_arcs) {
                    Rational r = ea.rotation.as_rational();
                    if ((lo <= r && r <= hi) || (1 - hi <= r && r <= 1 - lo))
                        bad[i] = true;
                }
            }
            for (std::size_t i = 0; i < roots.size(); ++i)
                for (std::size_t j = i + 1; j < roots.size(); ++j) {
                    const auto& a = rot_intervals[i];
                    const auto& b = rot_intervals[j];
                    if (!(a.second < b.first || b.second < a.first)) {
                        bad[i] = true;
                        bad[j] = true;
                    }
                }
            ok = true;
            for (std::size_t i = 0; i < roots.size(); ++i)
                if (bad[i]) {
                    ok = false;
                    detail::bisect_bracket(sf, roots[i]);
                }
            if (!ok && prec < (mpfr_prec_t{1} << 16)) prec *= 2;
        }
        if (!ok) throw std::logic_error("isolate_unit_circle_roots: refinement did not converge");

        // Widen each interval to simple rational bounds inside the free gap
        // between its neighbors and the exact rotations; containment and
        // one-root isolation are preserved.
        std::sort(rot_intervals.begin(), rot_intervals.end());
        std::vector<Rational> obstacles{Rational(0), half};
        for (const auto& ea : exact_arcs) {
            Rational r = ea.rotation.as_rational();
            if (r > 0 && r < half) obstacles.push_back(r);
        }
        std::sort(obstacles.begin(), obstacles.end());
        Rational prev_hi(0);
        for (std::size_t i = 0; i < rot_intervals.size(); ++i) {
            auto& [lo, hi] = rot_intervals[i];
            Rational left = prev_hi;
            for (const auto& ob : obstacles)
                if (ob < lo && ob > left) left = ob;
            Rational right = (i + 1 < rot_intervals.size()) ? rot_intervals[i + 1].first : half;
            for (const auto& ob : obstacles)
                if (ob > hi && ob < right) right = ob;
            lo = simplest_rational_between(left, lo);
            hi = simplest_rational_between(hi, right);
            prev_hi = hi;
        }

        for (const auto& [lo, hi] : rot_intervals) {
            arcs.push_back(RootArc::interval(lo, hi));
            arcs.push_back(RootArc::interval(1 - hi, 1 - lo));
        }
    }

    std::sort(arcs.begin(), arcs.end(),
              [](const RootArc& a, const RootArc& b) { return a.position() < b.position(); });
    return arcs;
}

}  // namespace ltsig
