#include "qjf/scalar.hpp"

namespace qjf {

Scalar::Scalar(const Rational& r)
{
    if (r != 0)
        coeffs_[0] = r;
}

Scalar Scalar::c_power(int exponent, const Rational& q)
{
    Scalar s;
    if (q != 0)
        s.coeffs_[exponent] = q;
    return s;
}

bool Scalar::is_rational() const
{
    return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0);
}

Rational Scalar::rational_value() const
{
    if (!is_rational())
        throw std::logic_error("scalar has nonzero c-exponent");
    return coeffs_.empty() ? Rational(0) : coeffs_.begin()->second;
}

Rational Scalar::coeff(int exponent) const
{
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void Scalar::prune()
{
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        if (it->second == 0)
            it = coeffs_.erase(it);
        else
            ++it;
    }
}

Scalar& Scalar::operator+=(const Scalar& o)
{
    for (const auto& [e, q] : o.coeffs_)
        coeffs_[e] += q;
    prune();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o)
{
    for (const auto& [e, q] : o.coeffs_)
        coeffs_[e] -= q;
    prune();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o)
{
    std::map<int, Rational> out;
    for (const auto& [ea, qa] : coeffs_)
        for (const auto& [eb, qb] : o.coeffs_)
            out[ea + eb] += qa * qb;
    coeffs_ = std::move(out);
    prune();
    return *this;
}

Scalar Scalar::operator-() const
{
    Scalar s;
    for (const auto& [e, q] : coeffs_)
        s.coeffs_[e] = -q;
    return s;
}

Scalar Scalar::times_c_power(int exponent) const
{
    Scalar s;
    for (const auto& [e, q] : coeffs_)
        s.coeffs_[e + exponent] = q;
    return s;
}

Scalar Scalar::inverse() const
{
    if (coeffs_.size() != 1)
        throw std::domain_error("scalar inverse requires a single term q*c^e");
    const auto& [e, q] = *coeffs_.begin();
    return c_power(-e, Rational(1) / q);
}

std::complex<double> Scalar::eval(const std::complex<double>& c_value) const
{
    std::complex<double> acc(0.0, 0.0);
    for (const auto& [e, q] : coeffs_) {
        std::complex<double> p(1.0, 0.0);
        for (int i = 0; i < (e < 0 ? -e : e); ++i)
            p *= c_value;
        if (e < 0)
            p = 1.0 / p;
        acc += q.convert_to<double>() * p;
    }
    return acc;
}

} // namespace qjf
