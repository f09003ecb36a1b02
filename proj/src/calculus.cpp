#include "qjf/calculus.hpp"

#include <array>
#include <map>
#include <mutex>
#include <stdexcept>

namespace qjf {

namespace {

Form gen(Gen g)
{
    return Form::generator(g);
}

Scalar frac(long long num, long long den)
{
    return Scalar(Rational(num, den));
}

// Leibniz extension of a generator table to the whole algebra.
Form apply_table(const Form& f, const std::array<Form, 5>& images)
{
    Form out;
    for (const auto& [m, s] : f.terms()) {
        for (int g = 0; g < 5; ++g) {
            const int e = m.e[g];
            if (e == 0 || images[g].is_zero())
                continue;
            Monomial r = m;
            r.e[g] = e - 1;
            out += (s * Scalar(Rational(e))) * (Form::monomial(r) * images[g]);
        }
    }
    return out;
}

const std::array<Form, 5>& dz_table()
{
    static const std::array<Form, 5> table = [] {
        std::array<Form, 5> t;
        t[static_cast<int>(Gen::P)] = gen(Gen::Pz);
        t[static_cast<int>(Gen::Pz)] =
            Scalar(6) * (gen(Gen::P) * gen(Gen::P)) - Scalar(30) * gen(Gen::E4);
        t[static_cast<int>(Gen::E4)] = Form();
        t[static_cast<int>(Gen::E1)] = -gen(Gen::P) - gen(Gen::E2);
        t[static_cast<int>(Gen::E2)] = Form();
        return t;
    }();
    return table;
}

const std::array<Form, 5>& dtau_table()
{
    static const std::array<Form, 5> table = [] {
        const Form p = gen(Gen::P), pz = gen(Gen::Pz), e4 = gen(Gen::E4);
        const Form e1 = gen(Gen::E1), e2 = gen(Gen::E2);
        std::array<Form, 5> t;
        t[static_cast<int>(Gen::P)] =
            frac(-1, 4) * (e1 * pz + Scalar(2) * (p * p) - Scalar(2) * (e2 * p) - Scalar(20) * e4);
        t[static_cast<int>(Gen::Pz)] =
            frac(3, 2) * ((Scalar(5) * e4 - p * p) * e1) + frac(3, 4) * ((e2 - p) * pz);
        t[static_cast<int>(Gen::E4)] =
            frac(-1, 10) * (p * p * p) + frac(1, 40) * (pz * pz) + frac(3, 2) * (p * e4) + e4 * e2;
        t[static_cast<int>(Gen::E1)] =
            frac(1, 4) * (e1 * e2 + p * e1) + frac(1, 8) * pz;
        t[static_cast<int>(Gen::E2)] =
            frac(1, 4) * (e2 * e2) + frac(-5, 4) * e4;
        return t;
    }();
    return table;
}

// Sum of k * f_k over the weight components of f.
Form weight_scaled(const Form& f, const Rational& half)
{
    Form out;
    for (const auto& [w, comp] : f.weight_components())
        out += comp.scaled(Scalar(Rational(w) * half));
    return out;
}

} // namespace

Form dz(const Form& f)
{
    return apply_table(f, dz_table());
}

Form dtau(const Form& f)
{
    return apply_table(f, dtau_table());
}

Form raw_dz(const Form& f)
{
    return dz(f);
}

Form raw_dtau(const Form& f)
{
    // dtau = (pi/2i) d/dtau and c stands for 2 pi i, so d/dtau = (-4/c) dtau.
    return dtau(f).scaled(Scalar::c_power(-1, Rational(-4)));
}

Form oberdieck(const Form& f)
{
    return Scalar(4) * dtau(f) + Form::generator(Gen::E1) * dz(f)
         - Form::generator(Gen::E2) * weight_scaled(f, Rational(1));
}

Form delta(const Form& f)
{
    return weight_scaled(f, Rational(1, 2));
}

Form theta(const Form& f)
{
    return dtau(f) - frac(1, 2) * (Form::generator(Gen::E2) * delta(f));
}

Form d_deriv(const Form& f)
{
    return dtau(f) + frac(1, 4) * (Form::generator(Gen::E1) * dz(f));
}

Form eisenstein(int k)
{
    if (k < 2 || k % 2 != 0)
        throw std::invalid_argument("eisenstein weight must be an even integer >= 2");

    static std::mutex mutex;
    static std::map<int, Form> memo;
    std::lock_guard<std::mutex> lock(mutex);

    if (memo.empty()) {
        memo[2] = gen(Gen::E2);
        memo[4] = gen(Gen::E4);
        memo[6] = e6_form();
    }
    // Fill ascending so each step only reads already-computed entries:
    //   2(2n+1) dtau(e_{2n+2}) = (n+1)(2n+1) e_{2n+2} E2 - (n+2)(2n+5) e_{2n+4}
    //                            + sum_{a+b=n, a,b>=1} (2a+1)(a-2b-1) e_{2a+2} e_{2b+2}
    // solved for e_{2n+4}.
    for (int j = 8; j <= k; j += 2) {
        if (memo.count(j))
            continue;
        const long long n = (j - 4) / 2;
        Form rhs = memo[j - 2].scaled(Scalar(Rational((n + 1) * (2 * n + 1)))) * gen(Gen::E2);
        for (long long a = 1; a <= n - 1; ++a) {
            const long long b = n - a;
            rhs += (memo[static_cast<int>(2 * a + 2)] * memo[static_cast<int>(2 * b + 2)])
                       .scaled(Scalar(Rational((2 * a + 1) * (a - 2 * b - 1))));
        }
        rhs -= dtau(memo[j - 2]).scaled(Scalar(Rational(2 * (2 * n + 1))));
        Form ej = rhs.scaled(Scalar(Rational(1, (n + 2) * (2 * n + 5))));
        if (ej.depth() != std::pair<int, int>{0, 0})
            throw std::logic_error("eisenstein recursion left depth residue");
        memo[j] = std::move(ej);
    }
    return memo[k];
}

} // namespace qjf
