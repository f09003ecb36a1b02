#pragma once

#include "qjf/scalar.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace qjf {

// The five generators of the algebra of quasi-Jacobi singular forms of
// index zero, in the fixed I/O order P, Pz, E4, E1, E2.
enum class Gen : int { P = 0, Pz = 1, E4 = 2, E1 = 3, E2 = 4 };

inline constexpr std::array<int, 5> kGenWeights = {2, 3, 4, 1, 2};
inline constexpr std::array<const char*, 5> kGenNames = {"P", "Pz", "E4", "E1", "E2"};

// Exponent vector of P^a Pz^b E4^c E1^d1 E2^d2. Ordered graded-lex:
// first by weight, then lexicographically on the exponent vector.
struct Monomial {
    std::array<int, 5> e{0, 0, 0, 0, 0};

    int weight() const
    {
        return 2 * e[0] + 3 * e[1] + 4 * e[2] + e[3] + 2 * e[4];
    }
    // (modular depth, elliptic depth) = (E2-degree, E1-degree)
    std::pair<int, int> depth() const { return {e[4], e[3]}; }
    int exponent(Gen g) const { return e[static_cast<int>(g)]; }
    bool is_constant() const { return e == std::array<int, 5>{0, 0, 0, 0, 0}; }

    friend Monomial operator*(const Monomial& a, const Monomial& b)
    {
        Monomial m;
        for (int i = 0; i < 5; ++i)
            m.e[i] = a.e[i] + b.e[i];
        return m;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) = default;
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b)
    {
        if (auto c = a.weight() <=> b.weight(); c != 0)
            return c;
        return a.e <=> b.e;
    }
};

// The four polynomial algebras of interest, identified by generator support:
//   JS      = C[P, Pz, E4]           (Jacobi singular forms)
//   JS0inf  = C[P, Pz, E4, E1]       (quasielliptic type)
//   JSinf0  = C[P, Pz, E4, E2]       (quasimodular type)
//   JSinf   = C[P, Pz, E4, E1, E2]   (all quasi-Jacobi singular forms)
enum class AlgebraId { JS, JS0inf, JSinf0, JSinf };

std::vector<Gen> algebra_generators(AlgebraId which);

// Sparse polynomial in the five generators over Q[c, c^-1]. Immutable in
// spirit: all operations return new values, stored terms are canonical
// (graded-lex monomial order, no zero coefficients).
class Form {
public:
    Form() = default;
    Form(const Scalar& s); // NOLINT: implicit constant embedding by design
    Form(long long n) : Form(Scalar(n)) {}
    static Form generator(Gen g);
    static Form monomial(const Monomial& m, const Scalar& coeff = Scalar(1));

    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Scalar>& terms() const { return terms_; }
    Scalar coeff(const Monomial& m) const;
    std::size_t term_count() const { return terms_.size(); }

    Form& operator+=(const Form& o);
    Form& operator-=(const Form& o);
    Form& operator*=(const Form& o);
    Form operator-() const;
    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }
    friend Form operator*(const Form& a, const Form& b);
    friend Form operator*(const Scalar& s, Form f) { return f.scaled(s); }
    friend bool operator==(const Form& a, const Form& b) = default;

    Form scaled(const Scalar& s) const;
    // Nonnegative exponents always work; negative ones only for invertible
    // scalar forms q*c^e.
    Form pow(int n) const;

    // Common weight of all monomials, absent when zero or inhomogeneous.
    std::optional<int> weight() const;
    // Split into homogeneous components, keyed by weight.
    std::map<int, Form> weight_components() const;
    // (max E2-degree, max E1-degree); throws on the zero form.
    std::pair<int, int> depth() const;
    int degree_in(Gen g) const;
    bool in_subalgebra(AlgebraId which) const;

    // Q_{j1,j2}(f): coefficient of X^j1 Y^j2 after substituting
    // E2 -> E2 - c*X and E1 -> E1 + c*Y.
    Form q_op(int j1, int j2) const;

private:
    void prune();
    std::map<Monomial, Scalar> terms_;
};

// Weight/double-depth classification of a nonzero form.
struct DepthProfile {
    std::optional<int> weight;  // absent iff inhomogeneous
    std::pair<int, int> depth;  // (s1, s2)
};
DepthProfile profile(const Form& f); // throws on zero form

// Full depth expansion of a form: the bivariate polynomial in formal X, Y
// whose (j1, j2) coefficient is Q_{j1,j2}(f).
struct DepthExpansion {
    std::map<std::pair<int, int>, Form> coeffs; // only nonzero entries
    Form at(int j1, int j2) const;
};
DepthExpansion depth_expand(const Form& f);

// Convenience free functions mirroring the member operations.
inline Form add(const Form& f, const Form& g) { return f + g; }
inline Form mul(const Form& f, const Form& g) { return f * g; }
inline std::optional<int> weight_of(const Form& f) { return f.weight(); }
inline std::pair<int, int> depth_of(const Form& f) { return f.depth(); }
inline Form q_op(int j1, int j2, const Form& f) { return f.q_op(j1, j2); }
inline bool in_subalgebra(const Form& f, AlgebraId which) { return f.in_subalgebra(which); }

// The weight-6 depth-(0,0) combination expressing e6 in the generators:
// e6 = -1/140 Pz^2 + 1/35 P^3 - 3/7 P*E4.
const Form& e6_form();

// All monomials of weight k supported by the given subalgebra, in canonical
// (ascending graded-lex) order.
std::vector<Monomial> basis_monomials(int k, AlgebraId which);

// Deterministic pseudo-random rational combination of basis_monomials(k).
// Every basis monomial receives a nonzero coefficient, so weight and depth
// of the result are those of the full basis. Throws when the basis is empty.
Form random_homogeneous(int k, AlgebraId which, std::uint64_t seed);

// Homogeneous weight-k form of exact depth (s1, s2): all monomials with
// E2-degree <= s1 and E1-degree <= s2 get nonzero coefficients. Throws
// when no monomial attains the corner (s1, s2) at this weight.
Form random_homogeneous_with_depth(int k, int s1, int s2, std::uint64_t seed);

} // namespace qjf
