#pragma once

#include "qjf/form.hpp"

#include <complex>
#include <span>
#include <stdexcept>
#include <utility>

namespace qjf {

using Complex = std::complex<double>;

// Raised when an evaluation point violates the convergence or pole guards.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Element (g, (lambda, mu)) of SL(2,Z) x| Z^2 with the product
// (g, L)(g', L') = (gg', Lg' + L').
struct JacobiGroupElement {
    long long a = 1, b = 0, c = 0, d = 1;
    long long lambda = 0, mu = 0;

    JacobiGroupElement() = default;
    JacobiGroupElement(long long a_, long long b_, long long c_, long long d_,
                       long long lambda_ = 0, long long mu_ = 0);

    static JacobiGroupElement identity() { return {}; }
    static JacobiGroupElement S() { return {0, -1, 1, 0}; }
    static JacobiGroupElement T() { return {1, 1, 0, 1}; }
    static JacobiGroupElement translation(long long lambda_, long long mu_)
    {
        return {1, 0, 0, 1, lambda_, mu_};
    }

    friend JacobiGroupElement operator*(const JacobiGroupElement& A, const JacobiGroupElement& B);
};

// Truncation orders, domain guards and tolerance for series evaluation.
struct NumericContext {
    int n_q = 30;               // Fourier terms of e_k
    int n_z = 20;               // Laurent terms of wp, E1
    double q_guard = 0.7;       // require |e(tau)| <= q_guard
    double z_guard_ratio = 0.8; // require |z| <= ratio * nearest lattice distance
    double pole_eps = 1e-3;     // refuse points this close to the lattice
    double tolerance = 1e-9;
};

struct SamplePoint {
    Complex tau;
    Complex z;
};

// Distance from 0 to the nearest nonzero point of Z + tau Z.
double lattice_min_distance(Complex tau);

// z = z_red + lambda*tau + mu with integer lambda, mu and |z_red| minimal
// over the nearby representatives.
struct ReducedPoint {
    Complex z_red;
    long long lambda = 0;
    long long mu = 0;
};
ReducedPoint lattice_reduce(Complex tau, Complex z);

// Fourier evaluation of the weight-k Eisenstein function (k even >= 2);
// Bernoulli numbers are exact, divisor sums direct.
Complex eval_eisenstein(int k, Complex tau, const NumericContext& ctx = {});

// Laurent evaluation of wp, dz(wp) and E1 at (tau, z). The point is first
// reduced modulo the lattice; wp and wp_z are periodic, E1 picks up the
// quasi-period correction -2 pi i lambda.
Complex eval_wp(Complex tau, Complex z, const NumericContext& ctx = {});
Complex eval_wp_z(Complex tau, Complex z, const NumericContext& ctx = {});
Complex eval_E1(Complex tau, Complex z, const NumericContext& ctx = {});

// Algebra morphism: substitute the generator values and c = 2 pi i.
Complex eval_form(const Form& f, Complex tau, Complex z, const NumericContext& ctx = {});

// Independent q,w-representation backend (w = e(z)); no lattice reduction.
// Serves as the dual oracle for the Laurent evaluations; valid in the
// strip |Im z| < Im tau.
Complex eval_wp_qw(Complex tau, Complex z, const NumericContext& ctx = {});
Complex eval_E1_qw(Complex tau, Complex z, const NumericContext& ctx = {});

// Cocycles of the weight actions: J = c tau + d, X = c/(c tau + d),
// Y = (c z + c mu - d lambda)/(c tau + d).
Complex cocycle_J(const JacobiGroupElement& A, Complex tau, Complex z);
Complex cocycle_X(const JacobiGroupElement& A, Complex tau, Complex z);
Complex cocycle_Y(const JacobiGroupElement& A, Complex tau, Complex z);

// A.(tau, z) = ((a tau + b)/(c tau + d), (z + lambda tau + mu)/(c tau + d)).
std::pair<Complex, Complex> group_action(const JacobiGroupElement& A, Complex tau, Complex z);

// Max residual over the points and the three cocycle relations
//   J(AB) = (J(A) o B) J(B),  Y(AB) = Y(A)|1 B + Y(B),  X(AB) = X(A)|2 B + X(B).
double cocycle_relation_residual(const JacobiGroupElement& A, const JacobiGroupElement& B,
                                 std::span<const SamplePoint> points);

// Max residual of the depth-expansion transformation law
//   J(A)^-k f(A.(tau,z)) = sum_{j1,j2} Q_{j1,j2}(f)(tau,z) X(A)^j1 Y(A)^j2
// for homogeneous f of weight k; throws on inhomogeneous input. The
// residual is |lhs - rhs| / max(1, |lhs|, |rhs|), so the tolerance keeps
// its meaning for forms whose values near a pole dwarf the precision of
// a double.
double transformation_residual(const Form& f, const JacobiGroupElement& A,
                               std::span<const SamplePoint> points,
                               const NumericContext& ctx = {});

enum class DualWhich { Wp, E1 };
// Max |Laurent value - q,w value| over the points.
double dual_representation_residual(DualWhich which, std::span<const SamplePoint> points,
                                    const NumericContext& ctx = {});

} // namespace qjf
