#pragma once

#include "qjf/rational.hpp"

#include <complex>
#include <map>

namespace qjf {

// Coefficient ring Q[c, c^-1]: exact rational Laurent polynomials in one
// formal constant c, which stands for 2*pi*i under numeric evaluation.
// The Q depth-expansion operators inject powers of c and the raw tau
// derivative injects c^-1, so plain rationals would not close.
class Scalar {
public:
    Scalar() = default;
    Scalar(long long n) : Scalar(Rational(n)) {} // NOLINT: implicit by design
    Scalar(const Rational& r);                   // NOLINT: implicit by design

    // q * c^exponent
    static Scalar c_power(int exponent, const Rational& q = Rational(1));

    bool is_zero() const { return coeffs_.empty(); }
    // True when the scalar is a plain rational (no c dependence).
    bool is_rational() const;
    Rational rational_value() const; // requires is_rational()

    // Coefficient of c^exponent (zero if absent).
    Rational coeff(int exponent) const;
    const std::map<int, Rational>& coeffs() const { return coeffs_; }

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar operator-() const;

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend bool operator==(const Scalar& a, const Scalar& b) = default;

    Scalar times_c_power(int exponent) const;
    // Multiplicative inverse, defined only for single-term scalars q*c^e.
    Scalar inverse() const;

    // Substitute a numeric value for c (normally 2*pi*i).
    std::complex<double> eval(const std::complex<double>& c_value) const;

private:
    void prune();
    std::map<int, Rational> coeffs_; // exponent -> nonzero rational
};

} // namespace qjf
