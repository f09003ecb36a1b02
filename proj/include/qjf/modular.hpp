#pragma once

#include "qjf/form.hpp"

#include <cstdint>
#include <vector>

namespace qjf {

// The algebra M of modular forms sits inside JS as C[E4, e6] with e6
// expressed through the Weierstrass relation; the algebra of quasimodular
// forms is C[E2, E4, e6]. Membership in either is a rational linear
// question in the monomial coordinates of a fixed weight.

// Expanded products E4^a * e6^b of weight k (4a + 6b = k).
std::vector<Form> modular_basis(int k);

// Expanded products E2^c * E4^a * e6^b of weight k (2c + 4a + 6b = k).
std::vector<Form> quasimodular_basis(int k);

// Exact rational-span membership test. All coefficients of f and of the
// basis forms must be c-free rationals layer by layer; f with c-powers is
// split into c-exponent layers, each of which must lie in the span.
bool in_span(const Form& f, const std::vector<Form>& basis);

bool is_modular(const Form& f);      // f in C[E4, e6], per weight component
bool is_quasimodular(const Form& f); // f in C[E2, E4, e6], per weight component

// Deterministic random elements with every basis coefficient nonzero.
// Throw when the weight admits no basis element.
Form random_modular(int k, std::uint64_t seed);
Form random_quasimodular(int k, std::uint64_t seed);

} // namespace qjf
