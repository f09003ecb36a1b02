#include "qjf/modular.hpp"

#include <map>
#include <stdexcept>

namespace qjf {

namespace {

std::uint64_t splitmix64(std::uint64_t& state)
{
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Form random_combination(const std::vector<Form>& basis, std::uint64_t seed)
{
    if (basis.empty())
        throw std::invalid_argument("no basis elements of the requested weight");
    std::uint64_t state = seed ^ 0xd1b54a32d192ed03ULL;
    Form f;
    for (const auto& b : basis) {
        const long long num = 1 + static_cast<long long>(splitmix64(state) % 9);
        const bool neg = (splitmix64(state) & 1) != 0;
        const long long den = 1 + static_cast<long long>(splitmix64(state) % 4);
        f += b.scaled(Scalar(Rational(neg ? -num : num, den)));
    }
    return f;
}

// Solve A x = b over the rationals; reports solvability only.
bool solvable(std::vector<std::vector<Rational>> a, std::vector<Rational> b)
{
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && a[pivot][col] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(a[pivot], a[row]);
        std::swap(b[pivot], b[row]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || a[r][col] == 0)
                continue;
            const Rational factor = a[r][col] / a[row][col];
            for (std::size_t cc = col; cc < cols; ++cc)
                a[r][cc] -= factor * a[row][cc];
            b[r] -= factor * b[row];
        }
        ++row;
    }
    for (std::size_t r = 0; r < rows; ++r) {
        bool all_zero = true;
        for (std::size_t cc = 0; cc < cols; ++cc)
            if (a[r][cc] != 0) {
                all_zero = false;
                break;
            }
        if (all_zero && b[r] != 0)
            return false;
    }
    return true;
}

// Split a form into c-exponent layers of rational-coefficient vectors over
// a shared monomial index.
std::map<int, std::map<Monomial, Rational>> c_layers(const Form& f)
{
    std::map<int, std::map<Monomial, Rational>> layers;
    for (const auto& [m, s] : f.terms())
        for (const auto& [e, q] : s.coeffs())
            layers[e][m] = q;
    return layers;
}

bool in_span_layer(const std::map<Monomial, Rational>& target, const std::vector<Form>& basis)
{
    std::map<Monomial, std::size_t> index;
    for (const auto& [m, q] : target)
        index.emplace(m, 0);
    for (const auto& b : basis)
        for (const auto& [m, s] : b.terms())
            index.emplace(m, 0);
    std::size_t next = 0;
    for (auto& [m, idx] : index)
        idx = next++;

    std::vector<std::vector<Rational>> a(index.size(), std::vector<Rational>(basis.size(), Rational(0)));
    std::vector<Rational> rhs(index.size(), Rational(0));
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (const auto& [m, s] : basis[j].terms()) {
            if (!s.is_rational())
                throw std::invalid_argument("span basis must have rational coefficients");
            a[index.at(m)][j] = s.rational_value();
        }
    for (const auto& [m, q] : target)
        rhs[index.at(m)] = q;
    return solvable(std::move(a), std::move(rhs));
}

std::vector<Form> graded_products(int k, const std::vector<std::pair<Form, int>>& gens)
{
    std::vector<Form> out;
    auto rec = [&](auto&& self, std::size_t idx, int rem, const Form& acc) -> void {
        if (idx == gens.size()) {
            if (rem == 0)
                out.push_back(acc);
            return;
        }
        const auto& [g, w] = gens[idx];
        Form cur = acc;
        for (int e = 0; w * e <= rem; ++e) {
            self(self, idx + 1, rem - w * e, cur);
            cur = cur * g;
        }
    };
    if (k >= 0)
        rec(rec, 0, k, Form(Scalar(Rational(1))));
    return out;
}

} // namespace

std::vector<Form> modular_basis(int k)
{
    return graded_products(k, {{Form::generator(Gen::E4), 4}, {e6_form(), 6}});
}

std::vector<Form> quasimodular_basis(int k)
{
    return graded_products(
        k, {{Form::generator(Gen::E2), 2}, {Form::generator(Gen::E4), 4}, {e6_form(), 6}});
}

bool in_span(const Form& f, const std::vector<Form>& basis)
{
    for (const auto& [e, layer] : c_layers(f))
        if (!in_span_layer(layer, basis))
            return false;
    return true;
}

bool is_modular(const Form& f)
{
    for (const auto& [w, comp] : f.weight_components())
        if (!in_span(comp, modular_basis(w)))
            return false;
    return true;
}

bool is_quasimodular(const Form& f)
{
    for (const auto& [w, comp] : f.weight_components())
        if (!in_span(comp, quasimodular_basis(w)))
            return false;
    return true;
}

Form random_modular(int k, std::uint64_t seed)
{
    return random_combination(modular_basis(k), seed ^ (0xe220a8397b1dcdafULL + static_cast<std::uint64_t>(k)));
}

Form random_quasimodular(int k, std::uint64_t seed)
{
    return random_combination(quasimodular_basis(k), seed ^ (0x6e789e6aa1b965f4ULL + static_cast<std::uint64_t>(k)));
}

} // namespace qjf
