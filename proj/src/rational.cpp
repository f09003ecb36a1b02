#include "qjf/rational.hpp"

namespace qjf {

Integer factorial(int n)
{
    if (n < 0)
        throw std::invalid_argument("factorial of negative integer");
    Integer r = 1;
    for (int i = 2; i <= n; ++i)
        r *= i;
    return r;
}

Integer binomial(long long m, long long j)
{
    if (j < 0)
        return 0;
    if (m >= 0 && j > m)
        return 0;
    Integer num = 1;
    for (long long i = 0; i < j; ++i)
        num *= Integer(m - i);
    return num / factorial(static_cast<int>(j));
}

Integer nearest_int(const Rational& x)
{
    // ceil(x - 1/2) realizes round-half-down in exact arithmetic.
    const Integer num = 2 * numerator(x) - denominator(x);
    const Integer den = 2 * denominator(x);
    Integer q = num / den;
    if (num % den != 0 && (num > 0) == (den > 0))
        ++q; // ceiling for a positive exact quotient remainder
    return q;
}

std::string to_string(const Rational& x)
{
    return x.str();
}

} // namespace qjf
