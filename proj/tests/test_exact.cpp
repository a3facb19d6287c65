#include <catch2/catch.hpp>

#include <cmath>

#include <angmom/exact.hpp>

using namespace angmom;

TEST_CASE("factorial table") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(1) == 1);
    CHECK(factorial(20) == BigInt("2432902008176640000"));
    CHECK(factorial(30) == factorial(29) * 30);
    CHECK_THROWS_AS(factorial(-1), std::domain_error);
}

TEST_CASE("ExactCoeff canonical form is squarefree") {
    SECTION("square factors move into the rational part") {
        const ExactCoeff c(BigRational(1), BigRational(8)); // sqrt(8) = 2 sqrt(2)
        CHECK(c.rational() == BigRational(2));
        CHECK(c.radicand() == BigRational(2));
    }
    SECTION("rational radicals collapse to s = 1") {
        const ExactCoeff c(BigRational(3), BigRational(4, 9));
        CHECK(c.rational() == BigRational(2));
        CHECK(c.radicand() == BigRational(1));
    }
    SECTION("numerator and denominator are reduced independently") {
        const ExactCoeff c(BigRational(1), BigRational(18, 25)); // sqrt(18/25) = (3/5) sqrt(2)
        CHECK(c.rational() == BigRational(3, 5));
        CHECK(c.radicand() == BigRational(2));
    }
    SECTION("zero collapses to the canonical zero") {
        const ExactCoeff c(BigRational(0), BigRational(7));
        CHECK(c.rational() == 0);
        CHECK(c.radicand() == BigRational(1));
    }
    SECTION("negative radicand is rejected") {
        CHECK_THROWS_AS(ExactCoeff(BigRational(1), BigRational(-2)), std::domain_error);
    }
    SECTION("factorial-scale radicands factor completely") {
        // (10!)^2 * 2 has the square part 10!
        const ExactCoeff c(BigRational(1), BigRational(factorial(10) * factorial(10) * 2));
        CHECK(c.rational() == BigRational(factorial(10)));
        CHECK(c.radicand() == BigRational(2));
    }
}

TEST_CASE("ExactCoeff round-trips to double within 1 ulp") {
    // Long double reference: 64-bit mantissa leaves the final rounding to
    // double unambiguous at the 1 ulp level.
    const auto ld_ref = [](long double num, long double den, long double s) {
        return static_cast<double>(num / den * std::sqrt(s));
    };
    const struct {
        ExactCoeff coeff;
        double expected;
    } cases[] = {
        {ExactCoeff(BigRational(1)), 1.0},
        {ExactCoeff(BigRational(-1), BigRational(1, 2)), ld_ref(-1, 1, 0.5L)},
        {ExactCoeff(BigRational(3, 2)), 1.5},
        {ExactCoeff(BigRational(7, 3), BigRational(5)), ld_ref(7, 3, 5)},
        {ExactCoeff(BigRational(factorial(17)), BigRational(3)), ld_ref(355687428096000.0L, 1, 3)},
    };
    for (const auto& c : cases) {
        const double got = c.coeff.value();
        const double ulp = std::fabs(std::nexttoward(c.expected, INFINITY) - c.expected);
        CHECK(std::fabs(got - c.expected) <= ulp);
    }
}

TEST_CASE("ExactCoeff arithmetic recanonicalizes") {
    const ExactCoeff a(BigRational(1), BigRational(2));
    const ExactCoeff b(BigRational(1), BigRational(8));
    const ExactCoeff p = a * b; // sqrt(2)*sqrt(8) = 4
    CHECK(p.rational() == BigRational(4));
    CHECK(p.radicand() == BigRational(1));

    const ExactCoeff q = a * BigRational(-3, 2);
    CHECK(q.rational() == BigRational(-3, 2));
    CHECK(q.radicand() == BigRational(2));

    CHECK(-a == ExactCoeff(BigRational(-1), BigRational(2)));
}
