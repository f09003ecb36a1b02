#pragma once

#include "qjf/form.hpp"

namespace qjf {

// Derivations of the algebra of quasi-Jacobi singular forms, extended from
// their values on the five generators by the Leibniz rule. dtau is the
// normalized modular derivation (pi/2i) d/dtau; dz is d/dz. Both raise
// the weight (by 2 and 1 respectively) on homogeneous input.
Form dz(const Form& f);
Form dtau(const Form& f);

// Un-normalized derivatives, used by the Q-expansion recurrence checks:
// raw_dz = dz and raw_dtau = (-4/c) * dtau.
Form raw_dz(const Form& f);
Form raw_dtau(const Form& f);

// Oberdieck derivation: Ob*(f) = 4 dtau(f) + E1 dz(f) - k E2 f on the
// weight-k component, extended linearly.
Form oberdieck(const Form& f);

// Half-weight grading derivation: f -> (k/2) f per weight component.
Form delta(const Form& f);

// theta = 1/4 (Ob* - E1 dz) = dtau - 1/2 E2 delta.
Form theta(const Form& f);

// d = dtau + 1/4 E1 dz = 1/4 Ob* + 1/2 E2 delta.
Form d_deriv(const Form& f);

// Eisenstein form of even weight k >= 2 expressed in the generators:
// E2 and E4 themselves, e6 via the Weierstrass relation, and higher
// weights by solving the tau-derivative recursion for e_{2n+4}. Results
// for k >= 4 are E1- and E2-free. Memoized; safe for concurrent use.
Form eisenstein(int k);

} // namespace qjf
