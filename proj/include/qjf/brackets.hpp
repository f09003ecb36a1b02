#pragma once

#include "qjf/form.hpp"

#include <vector>

namespace qjf {

// The three bracket families:
//   RC  — Rankin-Cohen brackets built on dtau,
//   RCd — the same binomial pattern built on d = dtau + 1/4 E1 dz,
//   TV  — transvectants built on the commuting pair (dtau, dz).
// RC and RCd shift the weight by 2n, TV by 3n. In star products TV is
// normalized by 1/n!; RC and RCd enter with their coefficients as written.
enum class BracketFamily { RC, RCd, TV };

// [f,g]_n = sum_r (-1)^r C(k+n-1, n-r) C(l+n-1, r) dtau^r(f) dtau^{n-r}(g),
// extended bilinearly over weight components.
Form rc_bracket(int n, const Form& f, const Form& g);

// Same with the derivation d in place of dtau.
Form rc_d_bracket(int n, const Form& f, const Form& g);

// {f,g}_n = sum_r (-1)^r C(n,r) dtau^{n-r} dz^r(f) dtau^r dz^{n-r}(g).
Form transvectant(int n, const Form& f, const Form& g);

Form bracket(BracketFamily family, int n, const Form& f, const Form& g);

// Brackets of all orders 0..order at once (shared derivative tables).
std::vector<Form> bracket_list(BracketFamily family, int order, const Form& f, const Form& g);

// Coefficients of hbar^0..hbar^order of the truncated star product.
struct StarSeries {
    std::vector<Form> coeffs;
    const Form& at(int n) const { return coeffs.at(static_cast<std::size_t>(n)); }
    int order() const { return static_cast<int>(coeffs.size()) - 1; }
};
StarSeries star_truncated(int order, const Form& f, const Form& g, BracketFamily family);

// Per-order coefficients of (f*g)*h - f*(g*h), truncated at hbar^order.
// All zero exactly when the family is a formal deformation to that order.
std::vector<Form> associativity_defect(int order, const Form& f, const Form& g, const Form& h,
                                       BracketFamily family);

// Left minus right of the transvectant recurrence
// {f,g}_{n+1} = {dtau f, dz g}_n - {dz f, dtau g}_n.
Form tv_recurrence_defect(int n, const Form& f, const Form& g);

// Left minus right of the E1 shuffle identity for transvectants
// {f E1, g}_n - {f, g E1}_n = f {E1,g}_n + (-1)^{n-1} g {E1,f}_n
//   - sum_{i=1}^{n-1} C(n,i) ({{f,E1}_i, g}_{n-i} + (-1)^{n-1} {{g,E1}_i, f}_{n-i}).
// Requires n >= 1.
Form lemma45_defect(int n, const Form& f, const Form& g);

} // namespace qjf
