#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "ltsig/root_isolation.hpp"
#include "test_support.hpp"

using namespace ltsig;

namespace {

std::vector<RotationNumber> exact_rotations(const std::vector<RootArc>& arcs) {
    std::vector<RotationNumber> out;
    for (const auto& a : arcs)
        if (a.is_exact()) out.push_back(a.rotation);
    return out;
}

}  // namespace

TEST_CASE("roots of unity are reported exactly") {
    // t^2 - t + 1 has roots e^{+-i pi/3}; numeric oracle confirms rotations
    IntegerPolynomial p{1, -1, 1};
    for (const auto& r : testsupport::companion_roots(p)) {
        double rot = std::arg(r) / (2 * M_PI);
        if (rot < 0) rot += 1.0;
        CHECK((std::abs(rot - 1.0 / 6) < 1e-9 || std::abs(rot - 5.0 / 6) < 1e-9));
    }
    auto arcs = isolate_unit_circle_roots(p);
    REQUIRE(arcs.size() == 2);
    CHECK(arcs[0] == RootArc::exact(RotationNumber(1, 6)));
    CHECK(arcs[1] == RootArc::exact(RotationNumber(5, 6)));
}

TEST_CASE("primitive tenth roots") {
    IntegerPolynomial p{1, -1, 1, -1, 1};
    auto rot = exact_rotations(isolate_unit_circle_roots(p));
    REQUIRE(rot.size() == 4);
    CHECK(rot[0] == RotationNumber(1, 10));
    CHECK(rot[1] == RotationNumber(3, 10));
    CHECK(rot[2] == RotationNumber(7, 10));
    CHECK(rot[3] == RotationNumber(9, 10));
}

TEST_CASE("constants and trivial cases") {
    CHECK(isolate_unit_circle_roots(IntegerPolynomial{1}).empty());
    CHECK(isolate_unit_circle_roots(IntegerPolynomial{-5}).empty());
    CHECK_THROWS_AS(isolate_unit_circle_roots(IntegerPolynomial{}), std::invalid_argument);
}

TEST_CASE("t = 1 and t = -1 are handled before the trace substitution") {
    // t^2 - 1, antipalindromic
    auto arcs = isolate_unit_circle_roots(IntegerPolynomial{-1, 0, 1});
    REQUIRE(arcs.size() == 2);
    CHECK(arcs[0] == RootArc::exact(RotationNumber(0, 1)));
    CHECK(arcs[1] == RootArc::exact(RotationNumber(1, 2)));
}

TEST_CASE("unit shifts are stripped") {
    IntegerPolynomial base{1, -1, 1};
    auto shifted = base.shifted_up(3);
    CHECK(isolate_unit_circle_roots(shifted) == isolate_unit_circle_roots(base));
    CHECK(isolate_unit_circle_roots(-base) == isolate_unit_circle_roots(base));
}

TEST_CASE("non-palindromic inputs are rejected") {
    try {
        isolate_unit_circle_roots(IntegerPolynomial{2, 0, 1});
        FAIL("expected NotPalindromic");
    } catch (const Error& e) {
        CHECK(e.kind() == errc::not_palindromic);
    }
}

TEST_CASE("circle roots that are not roots of unity get isolating intervals") {
    // 2t^2 - t + 2: conjugate pair at cos(theta) = 1/4, not a root of unity
    IntegerPolynomial p{2, -1, 2};
    auto arcs = isolate_unit_circle_roots(p);
    REQUIRE(arcs.size() == 2);
    REQUIRE(!arcs[0].is_exact());
    REQUIRE(!arcs[1].is_exact());
    double expected = std::acos(0.25) / (2 * M_PI);
    CHECK(arcs[0].lo.get_d() < expected);
    CHECK(arcs[0].hi.get_d() > expected);
    CHECK(arcs[1].lo.get_d() < 1 - expected);
    CHECK(arcs[1].hi.get_d() > 1 - expected);
    // mirror symmetry of the interval pair
    CHECK(arcs[1].lo == 1 - arcs[0].hi);
    CHECK(arcs[1].hi == 1 - arcs[0].lo);
}

TEST_CASE("mixed exact and interval roots stay disjoint and sorted") {
    IntegerPolynomial p = IntegerPolynomial{1, -1, 1} * IntegerPolynomial{2, -1, 2};
    auto arcs = isolate_unit_circle_roots(p);
    REQUIRE(arcs.size() == 4);
    for (std::size_t i = 0; i + 1 < arcs.size(); ++i)
        CHECK(arcs[i].upper_bound() < arcs[i + 1].lower_bound());
    // exact rotations 1/6 and 5/6 are among them
    auto rot = exact_rotations(arcs);
    REQUIRE(rot.size() == 2);
    CHECK(rot[0] == RotationNumber(1, 6));
    CHECK(rot[1] == RotationNumber(5, 6));
}

TEST_CASE("polynomials without unit-circle roots yield no arcs") {
    // t^2 - 3t + 1: real roots off the circle, palindromic
    CHECK(isolate_unit_circle_roots(IntegerPolynomial{1, -3, 1}).empty());
}

TEST_CASE("repeated factors are reported once") {
    IntegerPolynomial p = IntegerPolynomial{1, -1, 1} * IntegerPolynomial{1, -1, 1};
    auto arcs = isolate_unit_circle_roots(p);
    REQUIRE(arcs.size() == 2);
    IntegerPolynomial q = IntegerPolynomial{2, -1, 2} * IntegerPolynomial{2, -1, 2};
    CHECK(isolate_unit_circle_roots(q).size() == 2);
}

TEST_CASE("arc count matches the numeric all-roots oracle on random palindromics") {
    std::mt19937_64 rng(611953);
    for (int iter = 0; iter < 150; ++iter) {
        IntegerPolynomial p = testsupport::random_palindromic(rng, 6);
        auto arcs = isolate_unit_circle_roots(p);
        std::size_t expected = testsupport::unit_circle_root_count(p);
        INFO("polynomial " << p.str());
        CHECK(arcs.size() == expected);
    }
}
