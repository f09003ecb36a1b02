#include "qjf/brackets.hpp"

#include "qjf/calculus.hpp"

#include <map>
#include <stdexcept>

namespace qjf {

namespace {

using Derivation = Form (*)(const Form&);

std::vector<Form> derivative_powers(const Form& f, int n, Derivation D)
{
    std::vector<Form> p;
    p.reserve(static_cast<std::size_t>(n) + 1);
    p.push_back(f);
    for (int i = 1; i <= n; ++i)
        p.push_back(D(p.back()));
    return p;
}

// grid[i][j] = dtau^i dz^j (f) for i + j <= n.
std::vector<std::vector<Form>> mixed_derivatives(const Form& f, int n)
{
    std::vector<std::vector<Form>> grid(static_cast<std::size_t>(n) + 1);
    std::vector<Form> dzp = derivative_powers(f, n, &dz);
    for (int i = 0; i <= n; ++i) {
        grid[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(n - i) + 1);
        for (int j = 0; j + i <= n; ++j) {
            grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = dzp[static_cast<std::size_t>(j)];
        }
        if (i < n)
            for (int j = 0; j + i + 1 <= n; ++j)
                dzp[static_cast<std::size_t>(j)] = dtau(dzp[static_cast<std::size_t>(j)]);
    }
    return grid;
}

// Rankin-Cohen pattern on a single homogeneous pair of weights (k, l).
Form rc_pair(int n, int k, const std::vector<Form>& fp, int l, const std::vector<Form>& gp)
{
    Form out;
    for (int r = 0; r <= n; ++r) {
        Rational coef(binomial(k + n - 1, n - r) * binomial(l + n - 1, r));
        if (coef == 0)
            continue;
        if (r % 2 != 0)
            coef = -coef;
        out += Scalar(coef) * (fp[static_cast<std::size_t>(r)] * gp[static_cast<std::size_t>(n - r)]);
    }
    return out;
}

std::vector<Form> rc_like_list(int order, const Form& f, const Form& g, Derivation D)
{
    std::vector<Form> out(static_cast<std::size_t>(order) + 1);
    const auto fc = f.weight_components();
    const auto gc = g.weight_components();
    std::map<int, std::vector<Form>> fpow, gpow;
    for (const auto& [k, comp] : fc)
        fpow[k] = derivative_powers(comp, order, D);
    for (const auto& [l, comp] : gc)
        gpow[l] = derivative_powers(comp, order, D);
    for (int n = 0; n <= order; ++n)
        for (const auto& [k, fp] : fpow)
            for (const auto& [l, gp] : gpow)
                out[static_cast<std::size_t>(n)] += rc_pair(n, k, fp, l, gp);
    return out;
}

std::vector<Form> tv_list(int order, const Form& f, const Form& g)
{
    const auto fg = mixed_derivatives(f, order);
    const auto gg = mixed_derivatives(g, order);
    std::vector<Form> out(static_cast<std::size_t>(order) + 1);
    for (int n = 0; n <= order; ++n) {
        Form acc;
        for (int r = 0; r <= n; ++r) {
            Rational coef(binomial(n, r));
            if (r % 2 != 0)
                coef = -coef;
            acc += Scalar(coef)
                 * (fg[static_cast<std::size_t>(n - r)][static_cast<std::size_t>(r)]
                    * gg[static_cast<std::size_t>(r)][static_cast<std::size_t>(n - r)]);
        }
        out[static_cast<std::size_t>(n)] = std::move(acc);
    }
    return out;
}

} // namespace

std::vector<Form> bracket_list(BracketFamily family, int order, const Form& f, const Form& g)
{
    if (order < 0)
        throw std::invalid_argument("bracket order must be nonnegative");
    switch (family) {
    case BracketFamily::RC:
        return rc_like_list(order, f, g, &dtau);
    case BracketFamily::RCd:
        return rc_like_list(order, f, g, &d_deriv);
    case BracketFamily::TV:
        return tv_list(order, f, g);
    }
    throw std::logic_error("unknown bracket family");
}

Form bracket(BracketFamily family, int n, const Form& f, const Form& g)
{
    return bracket_list(family, n, f, g).back();
}

Form rc_bracket(int n, const Form& f, const Form& g)
{
    return bracket(BracketFamily::RC, n, f, g);
}

Form rc_d_bracket(int n, const Form& f, const Form& g)
{
    return bracket(BracketFamily::RCd, n, f, g);
}

Form transvectant(int n, const Form& f, const Form& g)
{
    return bracket(BracketFamily::TV, n, f, g);
}

StarSeries star_truncated(int order, const Form& f, const Form& g, BracketFamily family)
{
    StarSeries s;
    s.coeffs = bracket_list(family, order, f, g);
    if (family == BracketFamily::TV)
        for (int n = 2; n <= order; ++n)
            s.coeffs[static_cast<std::size_t>(n)] =
                s.coeffs[static_cast<std::size_t>(n)].scaled(Scalar(Rational(1, factorial(n))));
    return s;
}

std::vector<Form> associativity_defect(int order, const Form& f, const Form& g, const Form& h,
                                       BracketFamily family)
{
    std::vector<Form> defect(static_cast<std::size_t>(order) + 1);
    const StarSeries fg = star_truncated(order, f, g, family);
    const StarSeries gh = star_truncated(order, g, h, family);
    for (int r = 0; r <= order; ++r) {
        const StarSeries left = star_truncated(order - r, fg.at(r), h, family);
        const StarSeries right = star_truncated(order - r, f, gh.at(r), family);
        for (int m = 0; r + m <= order; ++m)
            defect[static_cast<std::size_t>(r + m)] += left.at(m) - right.at(m);
    }
    return defect;
}

Form tv_recurrence_defect(int n, const Form& f, const Form& g)
{
    if (n < 0)
        throw std::invalid_argument("order must be nonnegative");
    return transvectant(n + 1, f, g)
         - (transvectant(n, dtau(f), dz(g)) - transvectant(n, dz(f), dtau(g)));
}

Form lemma45_defect(int n, const Form& f, const Form& g)
{
    if (n < 1)
        throw std::invalid_argument("identity requires n >= 1");
    const Form e1 = Form::generator(Gen::E1);
    const Form lhs = transvectant(n, f * e1, g) - transvectant(n, f, g * e1);
    Form rhs = f * transvectant(n, e1, g);
    const Scalar sign((n - 1) % 2 == 0 ? 1 : -1);
    rhs += sign * (g * transvectant(n, e1, f));
    const auto fe = bracket_list(BracketFamily::TV, n - 1, f, e1);
    const auto ge = bracket_list(BracketFamily::TV, n - 1, g, e1);
    for (int i = 1; i <= n - 1; ++i) {
        Form inner = transvectant(n - i, fe[static_cast<std::size_t>(i)], g)
                   + sign * transvectant(n - i, ge[static_cast<std::size_t>(i)], f);
        rhs -= Scalar(Rational(binomial(n, i))) * inner;
    }
    return lhs - rhs;
}

} // namespace qjf
