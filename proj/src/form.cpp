#include "qjf/form.hpp"

#include <algorithm>
#include <stdexcept>

namespace qjf {

std::vector<Gen> algebra_generators(AlgebraId which)
{
    switch (which) {
    case AlgebraId::JS:
        return {Gen::P, Gen::Pz, Gen::E4};
    case AlgebraId::JS0inf:
        return {Gen::P, Gen::Pz, Gen::E4, Gen::E1};
    case AlgebraId::JSinf0:
        return {Gen::P, Gen::Pz, Gen::E4, Gen::E2};
    case AlgebraId::JSinf:
        return {Gen::P, Gen::Pz, Gen::E4, Gen::E1, Gen::E2};
    }
    throw std::logic_error("unknown algebra id");
}

Form::Form(const Scalar& s)
{
    if (!s.is_zero())
        terms_[Monomial{}] = s;
}

Form Form::generator(Gen g)
{
    Monomial m;
    m.e[static_cast<int>(g)] = 1;
    return monomial(m);
}

Form Form::monomial(const Monomial& m, const Scalar& coeff)
{
    Form f;
    if (!coeff.is_zero())
        f.terms_[m] = coeff;
    return f;
}

Scalar Form::coeff(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar() : it->second;
}

void Form::prune()
{
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second.is_zero())
            it = terms_.erase(it);
        else
            ++it;
    }
}

Form& Form::operator+=(const Form& o)
{
    for (const auto& [m, s] : o.terms_)
        terms_[m] += s;
    prune();
    return *this;
}

Form& Form::operator-=(const Form& o)
{
    for (const auto& [m, s] : o.terms_)
        terms_[m] -= s;
    prune();
    return *this;
}

Form operator*(const Form& a, const Form& b)
{
    Form out;
    for (const auto& [ma, sa] : a.terms_)
        for (const auto& [mb, sb] : b.terms_)
            out.terms_[ma * mb] += sa * sb;
    out.prune();
    return out;
}

Form& Form::operator*=(const Form& o)
{
    *this = *this * o;
    return *this;
}

Form Form::operator-() const
{
    Form f;
    for (const auto& [m, s] : terms_)
        f.terms_[m] = -s;
    return f;
}

Form Form::scaled(const Scalar& s) const
{
    Form f;
    if (s.is_zero())
        return f;
    for (const auto& [m, sc] : terms_)
        f.terms_[m] = sc * s;
    f.prune();
    return f;
}

Form Form::pow(int n) const
{
    if (n < 0) {
        // Only invertible scalars q*c^e admit negative powers.
        if (terms_.size() != 1 || !terms_.begin()->first.is_constant())
            throw std::domain_error("negative power of a non-invertible form");
        Scalar inv = terms_.begin()->second.inverse();
        Form f(inv);
        return f.pow(-n);
    }
    Form acc(Scalar(Rational(1)));
    Form base = *this;
    while (n > 0) {
        if (n & 1)
            acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

std::optional<int> Form::weight() const
{
    if (terms_.empty())
        return std::nullopt;
    const int w = terms_.begin()->first.weight();
    for (const auto& [m, s] : terms_)
        if (m.weight() != w)
            return std::nullopt;
    return w;
}

std::map<int, Form> Form::weight_components() const
{
    std::map<int, Form> out;
    for (const auto& [m, s] : terms_)
        out[m.weight()].terms_[m] = s;
    return out;
}

std::pair<int, int> Form::depth() const
{
    if (terms_.empty())
        throw std::invalid_argument("depth undefined for zero");
    int s1 = 0, s2 = 0;
    for (const auto& [m, s] : terms_) {
        auto [d1, d2] = m.depth();
        if (d1 > s1)
            s1 = d1;
        if (d2 > s2)
            s2 = d2;
    }
    return {s1, s2};
}

int Form::degree_in(Gen g) const
{
    int d = 0;
    for (const auto& [m, s] : terms_)
        d = std::max(d, m.exponent(g));
    return d;
}

bool Form::in_subalgebra(AlgebraId which) const
{
    switch (which) {
    case AlgebraId::JS:
        return degree_in(Gen::E2) == 0 && degree_in(Gen::E1) == 0;
    case AlgebraId::JS0inf:
        return degree_in(Gen::E2) == 0;
    case AlgebraId::JSinf0:
        return degree_in(Gen::E1) == 0;
    case AlgebraId::JSinf:
        return true;
    }
    throw std::logic_error("unknown algebra id");
}

Form Form::q_op(int j1, int j2) const
{
    if (j1 < 0 || j2 < 0)
        return Form();
    // Per monomial, the substitution E2 -> E2 - c X, E1 -> E1 + c Y gives
    //   [X^j1 Y^j2] = C(d2,j1) (-1)^j1 C(d1,j2) c^(j1+j2)
    //                 * P^a Pz^b E4^c4 E1^(d1-j2) E2^(d2-j1).
    Form out;
    for (const auto& [m, s] : terms_) {
        const int d1 = m.e[3], d2 = m.e[4];
        if (j1 > d2 || j2 > d1)
            continue;
        Rational coef = Rational(binomial(d2, j1) * binomial(d1, j2));
        if (j1 % 2 != 0)
            coef = -coef;
        Monomial r = m;
        r.e[3] = d1 - j2;
        r.e[4] = d2 - j1;
        out += Form::monomial(r, s * Scalar::c_power(j1 + j2, coef));
    }
    return out;
}

DepthProfile profile(const Form& f)
{
    DepthProfile p;
    p.depth = f.depth(); // throws on zero
    p.weight = f.weight();
    return p;
}

Form DepthExpansion::at(int j1, int j2) const
{
    auto it = coeffs.find({j1, j2});
    return it == coeffs.end() ? Form() : it->second;
}

DepthExpansion depth_expand(const Form& f)
{
    DepthExpansion ex;
    if (f.is_zero())
        return ex;
    auto [s1, s2] = f.depth();
    for (int j1 = 0; j1 <= s1; ++j1)
        for (int j2 = 0; j2 <= s2; ++j2) {
            Form q = f.q_op(j1, j2);
            if (!q.is_zero())
                ex.coeffs[{j1, j2}] = std::move(q);
        }
    return ex;
}

const Form& e6_form()
{
    static const Form e6 = [] {
        const Form p = Form::generator(Gen::P);
        const Form pz = Form::generator(Gen::Pz);
        const Form e4 = Form::generator(Gen::E4);
        return Scalar(Rational(-1) / 140) * (pz * pz)
             + Scalar(Rational(1) / 35) * (p * p * p)
             + Scalar(Rational(-3) / 7) * (p * e4);
    }();
    return e6;
}

std::vector<Monomial> basis_monomials(int k, AlgebraId which)
{
    std::vector<Monomial> out;
    if (k < 0)
        return out;
    const auto gens = algebra_generators(which);
    Monomial cur;
    // Enumerate exponent vectors with total weight k over the allowed
    // generators; recursion depth is at most 5.
    auto rec = [&](auto&& self, std::size_t idx, int rem) -> void {
        if (idx == gens.size()) {
            if (rem == 0)
                out.push_back(cur);
            return;
        }
        const int gi = static_cast<int>(gens[idx]);
        const int w = kGenWeights[gi];
        for (int e = 0; w * e <= rem; ++e) {
            cur.e[gi] = e;
            self(self, idx + 1, rem - w * e);
        }
        cur.e[gi] = 0;
    };
    rec(rec, 0, k);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// splitmix64: stable cross-platform stream, independent of any standard
// library distribution implementation.
std::uint64_t splitmix64(std::uint64_t& state)
{
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace

namespace {

Form random_combination_of(const std::vector<Monomial>& basis, std::uint64_t state)
{
    Form f;
    for (const auto& m : basis) {
        const long long num = 1 + static_cast<long long>(splitmix64(state) % 9);
        const bool neg = (splitmix64(state) & 1) != 0;
        const long long den = 1 + static_cast<long long>(splitmix64(state) % 4);
        Rational q(neg ? -num : num, den);
        f += Form::monomial(m, Scalar(q));
    }
    return f;
}

} // namespace

Form random_homogeneous(int k, AlgebraId which, std::uint64_t seed)
{
    const auto basis = basis_monomials(k, which);
    if (basis.empty())
        throw std::invalid_argument("no monomials of the requested weight in this algebra");
    const std::uint64_t state =
        seed ^ (0x51ed2701a9e5c13bULL + 0x100000001b3ULL * static_cast<std::uint64_t>(k))
             ^ (0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(which) + 1));
    return random_combination_of(basis, state);
}

Form random_homogeneous_with_depth(int k, int s1, int s2, std::uint64_t seed)
{
    std::vector<Monomial> filtered;
    bool corner = false;
    for (const auto& m : basis_monomials(k, AlgebraId::JSinf)) {
        if (m.e[4] > s1 || m.e[3] > s2)
            continue;
        corner = corner || (m.e[4] == s1 && m.e[3] == s2);
        filtered.push_back(m);
    }
    if (!corner)
        throw std::invalid_argument("no monomial of this weight attains the requested depth");
    const std::uint64_t state =
        seed ^ (0xabcb4a9e8cf57a33ULL + 31 * static_cast<std::uint64_t>(k))
             ^ (0x100000001b3ULL * (static_cast<std::uint64_t>(s1) + 17 * static_cast<std::uint64_t>(s2) + 1));
    return random_combination_of(filtered, state);
}

} // namespace qjf
