#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "ltsig/seifert.hpp"
#include "test_support.hpp"

using namespace ltsig;

namespace {

/// (t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1)), normalized like
/// alexander_polynomial.
IntegerPolynomial torus_alexander_closed_form(long p, long q) {
    IntegerPolynomial num =
        t_pow_minus_one(static_cast<std::uint64_t>(p * q)) * IntegerPolynomial{-1, 1};
    IntegerPolynomial den = t_pow_minus_one(static_cast<std::uint64_t>(p)) *
                            t_pow_minus_one(static_cast<std::uint64_t>(q));
    IntegerPolynomial quo = num.div_exact(den);
    IntegerPolynomial base = quo.shifted_to_zero();
    if (base.eval(mpz_class(1)) < 0) base = -base;
    return base;
}

}  // namespace

TEST_CASE("from_matrix validates Seifert forms") {
    CHECK(from_matrix("unknot", std::vector<std::vector<long>>{}).matrix.size() == 0);
    KnotSpec tre = from_matrix("trefoil", std::vector<std::vector<long>>{{-1, 1}, {0, -1}});
    CHECK(tre.genus() == 1);

    try {
        from_matrix("bad", std::vector<std::vector<long>>{{1}});
        FAIL("expected OddSize");
    } catch (const Error& e) {
        CHECK(e.kind() == errc::odd_size);
    }
    try {
        from_matrix("bad", std::vector<std::vector<long>>{{0, 2}, {0, 0}});
        FAIL("expected NotUnimodular");
    } catch (const Error& e) {
        CHECK(e.kind() == errc::not_unimodular);
    }
    CHECK_THROWS_AS(from_matrix("", std::vector<std::vector<long>>{}), std::invalid_argument);
    CHECK_THROWS_AS(from_matrix("notsquare", std::vector<std::vector<long>>{{1, 2}}),
                    std::invalid_argument);
}

TEST_CASE("torus knot construction") {
    KnotSpec tre = torus_knot(2, 3);
    // the brick construction reproduces the textbook trefoil matrix
    CHECK(tre.matrix == SeifertMatrix(from_matrix("x", std::vector<std::vector<long>>{
                                                           {-1, 1}, {0, -1}})
                                          .matrix));
    CHECK(tre.name == "T(2,3)");
    CHECK(alexander_polynomial(tre).polynomial == IntegerPolynomial{1, -1, 1});

    KnotSpec t25 = torus_knot(2, 5);
    CHECK(t25.matrix.size() == 4);
    CHECK(alexander_polynomial(t25).polynomial == IntegerPolynomial{1, -1, 1, -1, 1});

    CHECK(torus_knot(3, 4).matrix.size() == 6);  // (p-1)(q-1)

    try {
        torus_knot(2, 4);
        FAIL("expected NotCoprime");
    } catch (const Error& e) {
        CHECK(e.kind() == errc::not_coprime);
    }
    CHECK_THROWS_AS(torus_knot(1, 5), std::invalid_argument);
}

TEST_CASE("torus knot alexander equals the closed form for pq <= 30") {
    for (long p = 2; p <= 15; ++p)
        for (long q = 2; q <= 15; ++q) {
            if (p * q > 30 || std::gcd(p, q) != 1) continue;
            KnotSpec k = torus_knot(p, q);
            INFO("T(" << p << "," << q << ")");
            LaurentNormalForm lnf = alexander_polynomial(k);
            CHECK(lnf.polynomial == torus_alexander_closed_form(p, q));
            CHECK(lnf.shift == -lnf.polynomial.degree() / 2);
        }
}

TEST_CASE("mirror") {
    KnotSpec unk = from_matrix("unknot", std::vector<std::vector<long>>{});
    CHECK(mirror(unk).matrix.size() == 0);

    KnotSpec tre = torus_knot(2, 3);
    KnotSpec m = mirror(tre);
    CHECK(m.matrix == SeifertMatrix(
                          from_matrix("x", std::vector<std::vector<long>>{{1, 0}, {-1, 1}})
                              .matrix));
    // involution on the underlying form
    CHECK(mirror(mirror(tre)).matrix == tre.matrix);
    for (auto [p, q] : {std::pair<long, long>{2, 5}, {3, 4}, {3, 5}})
        CHECK(mirror(mirror(torus_knot(p, q))).matrix == torus_knot(p, q).matrix);
}

TEST_CASE("connected sum") {
    KnotSpec unk = from_matrix("unknot", std::vector<std::vector<long>>{});
    KnotSpec tre = torus_knot(2, 3);
    CHECK(connected_sum(unk, tre).matrix == tre.matrix);
    CHECK(connected_sum(tre, tre).matrix.size() == 4);

    // Alexander polynomial is multiplicative; oracle: direct product
    KnotSpec t25 = torus_knot(2, 5);
    IntegerPolynomial prod =
        alexander_polynomial(tre).polynomial * alexander_polynomial(t25).polynomial;
    CHECK(alexander_polynomial(connected_sum(tre, t25)).polynomial == prod);
}

TEST_CASE("alexander polynomial normalization") {
    KnotSpec unk = from_matrix("unknot", std::vector<std::vector<long>>{});
    LaurentNormalForm u = alexander_polynomial(unk);
    CHECK(u.polynomial == IntegerPolynomial{1});
    CHECK(u.shift == 0);

    LaurentNormalForm tre = alexander_polynomial(torus_knot(2, 3));
    CHECK(tre.polynomial == IntegerPolynomial{1, -1, 1});
    CHECK(tre.shift == -1);

    for (auto [p, q] : {std::pair<long, long>{2, 3}, {2, 5}, {2, 7}, {3, 4}, {3, 5}}) {
        LaurentNormalForm lnf = alexander_polynomial(torus_knot(p, q));
        CHECK(lnf.polynomial.eval(mpz_class(1)) == 1);
        CHECK(lnf.polynomial.palindrome_sign() == 1);
        CHECK(lnf.polynomial.coeff(0) != 0);
        CHECK(alexander_polynomial(mirror(torus_knot(p, q))).polynomial == lnf.polynomial);
    }
}

TEST_CASE("alexander polynomial of random Seifert matrices is symmetric") {
    std::mt19937_64 rng(777100);
    for (int iter = 0; iter < 60; ++iter) {
        KnotSpec k = testsupport::random_knot(rng, 1 + iter % 4);
        LaurentNormalForm lnf = alexander_polynomial(k);
        CHECK(lnf.polynomial.eval(mpz_class(1)) == 1);
        CHECK(lnf.polynomial.palindrome_sign() == 1);
        CHECK(alexander_polynomial(mirror(k)).polynomial == lnf.polynomial);
    }
}

TEST_CASE("branched cover homology order") {
    KnotSpec unk = from_matrix("unknot", std::vector<std::vector<long>>{});
    for (std::uint64_t n = 2; n <= 10; ++n) CHECK(branched_cover_h1_order(unk, n) == 1);

    KnotSpec tre = torus_knot(2, 3);
    CHECK(branched_cover_h1_order(tre, 2) == 3);  // |Delta(-1)|
    CHECK(branched_cover_h1_order(torus_knot(2, 5), 3) == 1);
    // Delta(trefoil) vanishes at the primitive 6th roots
    CHECK(branched_cover_h1_order(tre, 6) == 0);

    // |H1| of the double branched cover is |Delta(-1)| in general
    for (auto [p, q] : {std::pair<long, long>{2, 5}, {2, 7}, {3, 4}, {3, 5}}) {
        KnotSpec k = torus_knot(p, q);
        mpz_class det = alexander_polynomial(k).polynomial.eval(mpz_class(-1));
        CHECK(branched_cover_h1_order(k, 2) == abs(det));
    }
    CHECK_THROWS_AS(branched_cover_h1_order(tre, 1), std::invalid_argument);
}
