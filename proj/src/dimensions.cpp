#include "qjf/dimensions.hpp"

#include <array>
#include <stdexcept>

namespace qjf {

namespace {

std::vector<int> generator_weights(AlgebraId which)
{
    std::vector<int> w;
    for (Gen g : algebra_generators(which))
        w.push_back(kGenWeights[static_cast<int>(g)]);
    return w;
}

// Multiply the coefficient array by 1/(1 - z^w): a running prefix sum.
void divide_by_one_minus_zw(std::vector<long long>& a, int w)
{
    for (std::size_t i = static_cast<std::size_t>(w); i < a.size(); ++i)
        a[i] += a[i - static_cast<std::size_t>(w)];
}

long long count_weighted_solutions(const std::vector<int>& weights, std::size_t idx, long long rem)
{
    if (idx == weights.size())
        return rem == 0 ? 1 : 0;
    if (idx + 1 == weights.size())
        return rem % weights[idx] == 0 ? 1 : 0;
    long long count = 0;
    for (long long used = 0; used <= rem; used += weights[idx])
        count += count_weighted_solutions(weights, idx + 1, rem - used);
    return count;
}

// Exact value of the periodic pieces of the closed forms, by residue:
//   sgn  = (-1)^k
//   a4   = (P(k) + I(k) i) i^k          in {1, -1}
//   p4   = P(k) i^k                     in {1, 0, -1}
//   b3   = j^k + j^{2k}                 in {2, -1}
//   c3   = (1-j) j^k + (2+j) j^{2k}     in {3, 0, -3}
//   d3   = (2+j) j^k + (1-j) j^{2k}     in {3, -3, 0}
// with j = exp(2 pi i / 3).
struct PeriodicTerms {
    int sgn, a4, p4, b3, c3, d3;
};

PeriodicTerms periodic_terms(int r)
{
    static constexpr std::array<int, 4> a4 = {1, -1, -1, 1};
    static constexpr std::array<int, 4> p4 = {1, 0, -1, 0};
    static constexpr std::array<int, 3> b3 = {2, -1, -1};
    static constexpr std::array<int, 3> c3 = {3, 0, -3};
    static constexpr std::array<int, 3> d3 = {3, -3, 0};
    PeriodicTerms t{};
    t.sgn = r % 2 == 0 ? 1 : -1;
    t.a4 = a4[static_cast<std::size_t>(r % 4)];
    t.p4 = p4[static_cast<std::size_t>(r % 4)];
    t.b3 = b3[static_cast<std::size_t>(r % 3)];
    t.c3 = c3[static_cast<std::size_t>(r % 3)];
    t.d3 = d3[static_cast<std::size_t>(r % 3)];
    return t;
}

using Poly = std::array<Rational, 5>; // coefficients of 1, k, k^2, k^3, k^4

const std::array<Poly, 12>& thm51_polys(AlgebraId which)
{
    static const auto tables = [] {
        std::array<std::array<Poly, 12>, 4> all{};
        for (int r = 0; r < 12; ++r) {
            const PeriodicTerms t = periodic_terms(r);
            {
                Poly& p = all[static_cast<std::size_t>(AlgebraId::JS)][static_cast<std::size_t>(r)];
                p[0] = Rational(107, 288) + Rational(9 * t.sgn, 32) + Rational(t.a4, 8) + Rational(t.b3, 9);
                p[1] = Rational(3, 16) + Rational(t.sgn, 16);
                p[2] = Rational(1, 48);
            }
            {
                Poly& p = all[static_cast<std::size_t>(AlgebraId::JS0inf)][static_cast<std::size_t>(r)];
                p[0] = Rational(175, 288) + Rational(5 * t.sgn, 32) + Rational(t.p4, 8) + Rational(t.c3, 27);
                p[1] = Rational(15, 32) + Rational(t.sgn, 32);
                p[2] = Rational(5, 48);
                p[3] = Rational(1, 144);
            }
            {
                Poly& p = all[static_cast<std::size_t>(AlgebraId::JSinf0)][static_cast<std::size_t>(r)];
                p[0] = Rational(121, 288) + Rational(13 * t.sgn, 32) + Rational(t.a4, 16) + Rational(t.d3, 27);
                p[1] = Rational(55, 192) + Rational(11 * t.sgn, 64);
                p[2] = Rational(11, 192) + Rational(t.sgn, 64);
                p[3] = Rational(1, 288);
            }
            {
                Poly& p = all[static_cast<std::size_t>(AlgebraId::JSinf)][static_cast<std::size_t>(r)];
                p[0] = Rational(4267, 6912) + Rational(63 * t.sgn, 256) + Rational(t.p4, 16) + Rational(t.b3, 27);
                p[1] = Rational(55, 96) + Rational(3 * t.sgn, 32);
                p[2] = Rational(199, 1152) + Rational(t.sgn, 128);
                p[3] = Rational(1, 48);
                p[4] = Rational(1, 1152);
            }
        }
        return all;
    }();
    return tables[static_cast<std::size_t>(which)];
}

} // namespace

std::vector<long long> dims_by_series(AlgebraId which, int kmax)
{
    if (kmax < 0)
        throw std::invalid_argument("kmax must be nonnegative");
    std::vector<long long> a(static_cast<std::size_t>(kmax) + 1, 0);
    a[0] = 1;
    for (int w : generator_weights(which))
        divide_by_one_minus_zw(a, w);
    return a;
}

long long dims_by_enumeration(AlgebraId which, int k)
{
    if (k < 0)
        return 0;
    return count_weighted_solutions(generator_weights(which), 0, k);
}

long long ds_closed(long long k)
{
    const long long eta = k % 2 == 0 ? 2 : 1;
    const Rational x(Integer(k + 3 * eta) * Integer(k + 3 * eta), Integer(48));
    return nearest_int(x).convert_to<long long>();
}

long long dims_closed_thm51(AlgebraId which, long long k)
{
    if (k < 0)
        throw std::invalid_argument("weight must be nonnegative");
    const Poly& p = thm51_polys(which)[static_cast<std::size_t>(k % 12)];
    Rational acc(0);
    const Rational kk(k);
    for (int i = 4; i >= 0; --i)
        acc = acc * kk + p[static_cast<std::size_t>(i)];
    if (denominator(acc) != 1)
        throw std::logic_error("closed form did not evaluate to an integer");
    return numerator(acc).convert_to<long long>();
}

bool ds_recurrences_check(int kmax)
{
    const auto d = dims_by_series(AlgebraId::JS, kmax);
    for (long long k = 0; 2 * k + 3 <= kmax; ++k)
        if (d[static_cast<std::size_t>(2 * k + 3)] != d[static_cast<std::size_t>(2 * k)])
            return false;
    for (long long k = 0; 2 * k + 13 <= kmax; ++k)
        if (d[static_cast<std::size_t>(2 * k + 13)] != d[static_cast<std::size_t>(2 * k + 1)] + k + 5)
            return false;
    return true;
}

long long alcuin(long long n)
{
    if (n < 3)
        return 0;
    // Coefficients of z^3 / ((1-z^2)(1-z^3)(1-z^4)).
    std::vector<long long> a(static_cast<std::size_t>(n) + 1, 0);
    a[3] = 1;
    for (int w : {2, 3, 4})
        divide_by_one_minus_zw(a, w);
    return a[static_cast<std::size_t>(n)];
}

bool ds_vs_alcuin_check(int kmax)
{
    std::vector<long long> t(static_cast<std::size_t>(kmax) + 4, 0);
    t[3] = 1;
    for (int w : {2, 3, 4})
        divide_by_one_minus_zw(t, w);
    for (int k = 0; k <= kmax; ++k)
        if (ds_closed(k) != t[static_cast<std::size_t>(k) + 3])
            return false;
    return true;
}

bool compact_formula_check(int kmax)
{
    const auto d = dims_by_series(AlgebraId::JS0inf, kmax);
    for (long long k = 0; k <= kmax; ++k) {
        const Integer k3 = Integer(k) * k * k;
        const Integer cubic =
            k3 + 15 * Integer(k) * k + (k % 2 == 0 ? 72 * k + 144 : 63 * k + 65);
        const long long v1 = nearest_int(Rational(cubic, Integer(144))).convert_to<long long>();
        const Integer factored =
            Integer(k + 3) * (k % 2 == 0 ? Integer(k + 6) * (k + 6) : Integer(k + 3) * (k + 9));
        const long long v2 = nearest_int(Rational(factored, Integer(144))).convert_to<long long>();
        if (v1 != d[static_cast<std::size_t>(k)] || v2 != d[static_cast<std::size_t>(k)])
            return false;
    }
    return true;
}

long long modular_dim(long long j)
{
    long long q = j / 12;
    long long r = j % 12;
    if (r < 0) {
        r += 12;
        --q;
    }
    return q + (r == 2 ? 0 : 1);
}

long long ds_via_modular_sum(long long k)
{
    long long total = 0;
    for (long long c = 0; c <= k / 4; ++c)
        total += modular_dim(2 * k - 8 * c);
    return total;
}

std::vector<DimensionReport> dimension_table(AlgebraId which, int kmax)
{
    std::vector<DimensionReport> out;
    const auto series = dims_by_series(which, kmax);
    for (int k = 0; k <= kmax; ++k) {
        DimensionReport r;
        r.k = k;
        r.enumeration = dims_by_enumeration(which, k);
        r.series = series[static_cast<std::size_t>(k)];
        r.closed_thm51 = dims_closed_thm51(which, k);
        r.agree = r.enumeration == r.series && r.series == r.closed_thm51;
        if (which == AlgebraId::JS) {
            r.eq28 = ds_closed(k);
            r.alcuin = alcuin(k + 3);
            r.agree = r.agree && *r.eq28 == r.series && *r.alcuin == r.series;
        }
        out.push_back(r);
    }
    return out;
}

} // namespace qjf
