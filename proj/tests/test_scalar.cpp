#include "qjf/scalar.hpp"

#include "doctest.h"

#include <complex>

using namespace qjf;

TEST_CASE("scalar arithmetic is exact and canonical")
{
    const Scalar a(Rational(1, 3));
    const Scalar b(Rational(2, 3));
    CHECK(a + b == Scalar(1));
    CHECK(a - a == Scalar());
    CHECK((a - a).is_zero());
    CHECK(a * Scalar(3) == Scalar(1));

    const Scalar c = Scalar::c_power(1);
    CHECK((c * c) == Scalar::c_power(2));
    CHECK(c * Scalar::c_power(-1) == Scalar(1));
    CHECK((c + Scalar(1)) * (c - Scalar(1)) == Scalar::c_power(2) - Scalar(1));
}

TEST_CASE("scalar c-power bookkeeping")
{
    const Scalar s = Scalar::c_power(2, Rational(3, 7));
    CHECK(s.coeff(2) == Rational(3, 7));
    CHECK(s.coeff(0) == 0);
    CHECK_FALSE(s.is_rational());
    CHECK(s.times_c_power(-2) == Scalar(Rational(3, 7)));
    CHECK(s.inverse() == Scalar::c_power(-2, Rational(7, 3)));
    CHECK_THROWS_AS((s + Scalar(1)).inverse(), std::domain_error);
}

TEST_CASE("binomial convention: falling factorial for negative upper index")
{
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(4, 0) == 1);
    CHECK(binomial(4, 5) == 0);
    CHECK(binomial(3, -1) == 0);
    CHECK(binomial(-1, 0) == 1);
    CHECK(binomial(-1, 2) == 1);  // (-1)(-2)/2
    CHECK(binomial(-2, 3) == -4); // (-2)(-3)(-4)/6
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
}

TEST_CASE("scalar numeric substitution c = 2 pi i")
{
    const std::complex<double> two_pi_i(0.0, 2.0 * 3.14159265358979323846);
    const Scalar s = Scalar::c_power(2, Rational(1, 4)) + Scalar(1);
    const auto v = s.eval(two_pi_i);
    // c^2/4 + 1 = 1 - pi^2
    CHECK(std::abs(v - (1.0 - 3.14159265358979323846 * 3.14159265358979323846)) < 1e-12);

    const Scalar inv = Scalar::c_power(-1);
    CHECK(std::abs(inv.eval(two_pi_i) * two_pi_i - 1.0) < 1e-15);
}
