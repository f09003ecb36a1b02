#pragma once

#include "qjf/form.hpp"

#include <optional>
#include <vector>

namespace qjf {

// Graded dimensions of the four algebras, by independent routes that must
// agree: brute-force monomial enumeration, generating-series convolution,
// quasi-polynomial closed forms (period-12 case analysis), and for JS the
// nearest-integer closed form plus recurrences and the Alcuin identity.

// Power-series coefficients 0..kmax of 1 / prod (1 - z^w) over the
// generator weights of the algebra. Exact integer convolution.
std::vector<long long> dims_by_series(AlgebraId which, int kmax);

// Number of solutions of sum w_i e_i = k; the brute-force oracle.
long long dims_by_enumeration(AlgebraId which, int k);

// Closed form for dim JS_k: ||(k + 3 eta(k))^2 / 48||, eta = 2 for even k,
// 1 for odd, nearest integer rounding halves down.
long long ds_closed(long long k);

// Quasi-polynomial closed forms for all four algebras, evaluated exactly
// by residue of k mod 12.
long long dims_closed_thm51(AlgebraId which, long long k);

// dim JS recurrences d(2k+3) = d(2k) and d(2k+13) = d(2k+1) + k + 5,
// checked for all applicable arguments <= kmax.
bool ds_recurrences_check(int kmax);

// Alcuin's sequence t(n): coefficients of z^3/((1-z^2)(1-z^3)(1-z^4)).
long long alcuin(long long n);
// dim JS_k = t(k+3) for all k <= kmax.
bool ds_vs_alcuin_check(int kmax);

// Both compact nearest-integer formulas for dim JS^{0,inf}_k, against the
// series route, for all k <= kmax.
bool compact_formula_check(int kmax);

// Dimension of weight-j modular forms, extended to all integers so that
// d(j + 12) = d(j) + 1 (combinatorial convention).
long long modular_dim(long long j);
// dim JS_k as a sum of modular dimensions; internal cross-check route.
long long ds_via_modular_sum(long long k);

struct DimensionReport {
    int k = 0;
    long long enumeration = 0;
    long long series = 0;
    long long closed_thm51 = 0;
    std::optional<long long> eq28;   // JS only
    std::optional<long long> alcuin; // JS only, t(k+3)
    bool agree = false;
};
std::vector<DimensionReport> dimension_table(AlgebraId which, int kmax);

} // namespace qjf
