#include <catch2/catch_amalgamated.hpp>

#include "ltsig/polynomial.hpp"
#include "test_support.hpp"

using namespace ltsig;

TEST_CASE("polynomial arithmetic basics") {
    IntegerPolynomial p{1, -1, 1};  // 1 - t + t^2
    IntegerPolynomial q{-1, 1};     // t - 1

    CHECK(p.degree() == 2);
    CHECK((p * q).degree() == 3);
    CHECK(p * q == IntegerPolynomial{-1, 2, -2, 1});
    CHECK(p + q == IntegerPolynomial{0, 0, 1});
    CHECK(p.eval(mpz_class(2)) == 3);
    CHECK(p.eval(Rational(1, 2)) == Rational(3, 4));
    CHECK(IntegerPolynomial{}.is_zero());
    CHECK((p - p).is_zero());
}

TEST_CASE("exact division round-trips and rejects non-divisors") {
    IntegerPolynomial a{2, 0, -3, 1};
    IntegerPolynomial b{-1, 1};
    CHECK((a * b).div_exact(b) == a);
    CHECK((a * b).div_exact(a) == b);
    CHECK_THROWS_AS(IntegerPolynomial({1, 1, 1}).div_exact(b), std::logic_error);
    CHECK(b.divides(a * b));
    CHECK(!b.divides(IntegerPolynomial{1, 1, 1}));
}

TEST_CASE("palindrome detection and reversal") {
    IntegerPolynomial pal{1, -1, 1};
    IntegerPolynomial anti{-1, 0, 1};  // t^2 - 1
    IntegerPolynomial nope{1, 2, 3};
    CHECK(pal.palindrome_sign() == 1);
    CHECK(anti.palindrome_sign() == -1);
    CHECK(!nope.palindrome_sign().has_value());
    CHECK(pal.reversed() == pal);
}

TEST_CASE("cyclotomic polynomials match definition and oracle") {
    CHECK(cyclotomic_polynomial(1) == IntegerPolynomial{-1, 1});
    // numeric brute-force product over primitive roots, rounded to integers
    CHECK(cyclotomic_polynomial(4) == testsupport::cyclotomic_oracle(4));
    CHECK(cyclotomic_polynomial(4) == IntegerPolynomial{1, 0, 1});
    CHECK(cyclotomic_polynomial(15) == testsupport::cyclotomic_oracle(15));
    CHECK(cyclotomic_polynomial(15) == IntegerPolynomial{1, -1, 0, 1, -1, 1, 0, -1, 1});
    CHECK(cyclotomic_polynomial(15).degree() == 8);
}

TEST_CASE("product of Phi_d over divisors of n is t^n - 1") {
    for (std::uint64_t n = 1; n <= 60; ++n) {
        IntegerPolynomial prod = IntegerPolynomial::constant(1);
        for (std::uint64_t d : divisors_of(n)) prod = prod * cyclotomic_polynomial(d);
        REQUIRE(prod == t_pow_minus_one(n));
    }
}

TEST_CASE("cyclotomic degree is euler phi") {
    for (std::uint64_t n : {2u, 6u, 12u, 30u, 49u}) {
        CHECK(cyclotomic_polynomial(n).degree() == static_cast<long>(euler_phi(n)));
        CHECK(cyclotomic_polynomial(n).leading() == 1);
    }
}

TEST_CASE("resultant agrees with root products") {
    // res(t - 2, t - 3) = 3 - 2
    CHECK(resultant(IntegerPolynomial{-2, 1}, IntegerPolynomial{-3, 1}) == 1);
    // res(1 + t, t^2 - t + 1) = value of the quadratic at -1
    CHECK(resultant(ones_polynomial(2), IntegerPolynomial{1, -1, 1}) == 3);
    // constant second argument: res(f, c) = c^{deg f}
    CHECK(resultant(ones_polynomial(4), IntegerPolynomial::constant(2)) == 8);
    CHECK(resultant(ones_polynomial(3), IntegerPolynomial{}) == 0);
}

TEST_CASE("prime power recognition") {
    std::uint64_t p = 0;
    CHECK(is_prime_power(2));
    CHECK(is_prime_power(9, &p));
    CHECK(p == 3);
    CHECK(is_prime_power(16));
    CHECK(is_prime_power(13));
    CHECK(!is_prime_power(1));
    CHECK(!is_prime_power(6));
    CHECK(!is_prime_power(12));
}
