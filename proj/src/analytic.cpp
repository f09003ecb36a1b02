#include "qjf/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <vector>

namespace qjf {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kTwoPiI(0.0, 2.0 * kPi);

const Rational& bernoulli(int n)
{
    static std::mutex mutex;
    static std::vector<Rational> table;
    std::lock_guard<std::mutex> lock(mutex);
    if (table.empty())
        table.push_back(Rational(1));
    while (static_cast<int>(table.size()) <= n) {
        const int m = static_cast<int>(table.size());
        Rational acc(0);
        for (int j = 0; j < m; ++j)
            acc += Rational(binomial(m + 1, j)) * table[static_cast<std::size_t>(j)];
        table.push_back(-acc / Rational(m + 1));
    }
    return table[static_cast<std::size_t>(n)];
}

double sigma_power(int n, int k)
{
    double s = 0.0;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0)
            s += std::pow(static_cast<double>(d), static_cast<double>(k));
    return s;
}

Complex int_pow(Complex base, int e)
{
    if (e < 0)
        return 1.0 / int_pow(base, -e);
    Complex acc(1.0, 0.0);
    while (e > 0) {
        if (e & 1)
            acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

void check_tau(Complex tau)
{
    if (!(tau.imag() > 0))
        throw DomainError("tau must lie in the upper half-plane");
}

Complex mobius_q(Complex tau)
{
    return std::exp(kTwoPiI * tau);
}

} // namespace

JacobiGroupElement::JacobiGroupElement(long long a_, long long b_, long long c_, long long d_,
                                       long long lambda_, long long mu_)
    : a(a_), b(b_), c(c_), d(d_), lambda(lambda_), mu(mu_)
{
    if (a * d - b * c != 1)
        throw std::invalid_argument("matrix part must have determinant 1");
}

JacobiGroupElement operator*(const JacobiGroupElement& A, const JacobiGroupElement& B)
{
    JacobiGroupElement AB;
    AB.a = A.a * B.a + A.b * B.c;
    AB.b = A.a * B.b + A.b * B.d;
    AB.c = A.c * B.a + A.d * B.c;
    AB.d = A.c * B.b + A.d * B.d;
    // Lambda g' + Lambda'
    AB.lambda = A.lambda * B.a + A.mu * B.c + B.lambda;
    AB.mu = A.lambda * B.b + A.mu * B.d + B.mu;
    return AB;
}

double lattice_min_distance(Complex tau)
{
    check_tau(tau);
    double best = 1.0; // the point 1
    const int nmax = static_cast<int>(std::ceil(1.0 / tau.imag())) + 1;
    for (int n = 1; n <= nmax; ++n) {
        if (static_cast<double>(n) * tau.imag() > best)
            break;
        const double m0 = -static_cast<double>(n) * tau.real();
        const long long mc = std::llround(m0);
        for (long long m = mc - 2; m <= mc + 2; ++m) {
            const double dist = std::abs(static_cast<double>(m) + static_cast<double>(n) * tau);
            best = std::min(best, dist);
        }
    }
    return best;
}

ReducedPoint lattice_reduce(Complex tau, Complex z)
{
    check_tau(tau);
    const double y = z.imag() / tau.imag();
    const double x = z.real() - y * tau.real();
    const long long lam = std::llround(y);
    const long long mu = std::llround(x);
    const Complex base = z - static_cast<double>(lam) * tau - static_cast<double>(mu);
    ReducedPoint best{base, lam, mu};
    for (long long dl = -1; dl <= 1; ++dl)
        for (long long dm = -1; dm <= 1; ++dm) {
            const Complex cand = base - static_cast<double>(dl) * tau - static_cast<double>(dm);
            if (std::abs(cand) < std::abs(best.z_red))
                best = ReducedPoint{cand, lam + dl, mu + dm};
        }
    return best;
}

Complex eval_eisenstein(int k, Complex tau, const NumericContext& ctx)
{
    if (k < 2 || k % 2 != 0)
        throw std::invalid_argument("eisenstein weight must be an even integer >= 2");
    check_tau(tau);
    const Complex q = mobius_q(tau);
    if (std::abs(q) > ctx.q_guard)
        throw DomainError("|e(tau)| exceeds the convergence guard");

    // Values are memoized per (k, n_q, tau); the cache is transparent.
    using Key = std::tuple<int, int, double, double>;
    thread_local std::map<Key, Complex> cache;
    const Key key{k, ctx.n_q, tau.real(), tau.imag()};
    if (auto it = cache.find(key); it != cache.end())
        return it->second;

    const Rational lead_q = Rational(Integer(1) << k) * abs(bernoulli(k)) / Rational(factorial(k));
    const double lead = lead_q.convert_to<double>() * std::pow(kPi, k);
    const double fourier_factor = (Rational(-2 * k) / bernoulli(k)).convert_to<double>();
    Complex qs(0.0, 0.0);
    Complex qn(1.0, 0.0);
    for (int n = 1; n <= ctx.n_q; ++n) {
        qn *= q;
        qs += sigma_power(n, k - 1) * qn;
    }
    const Complex value = lead * (1.0 + fourier_factor * qs);
    if (cache.size() > 65536)
        cache.clear();
    cache.emplace(key, value);
    return value;
}

namespace {

Complex reduced_point_checked(Complex tau, Complex z, const NumericContext& ctx, long long* lambda_out)
{
    const ReducedPoint rp = lattice_reduce(tau, z);
    const double dmin = lattice_min_distance(tau);
    if (std::abs(rp.z_red) < ctx.pole_eps)
        throw DomainError("z too close to a lattice point");
    if (std::abs(rp.z_red) > ctx.z_guard_ratio * dmin)
        throw DomainError("|z| exceeds the Laurent convergence guard");
    if (lambda_out)
        *lambda_out = rp.lambda;
    return rp.z_red;
}

} // namespace

Complex eval_wp(Complex tau, Complex z, const NumericContext& ctx)
{
    const Complex zr = reduced_point_checked(tau, z, ctx, nullptr);
    Complex acc = 1.0 / (zr * zr);
    Complex z2n(1.0, 0.0);
    const Complex z2 = zr * zr;
    for (int n = 1; n <= ctx.n_z; ++n) {
        z2n *= z2;
        acc += static_cast<double>(2 * n + 1) * eval_eisenstein(2 * n + 2, tau, ctx) * z2n;
    }
    return acc;
}

Complex eval_wp_z(Complex tau, Complex z, const NumericContext& ctx)
{
    const Complex zr = reduced_point_checked(tau, z, ctx, nullptr);
    Complex acc = -2.0 / (zr * zr * zr);
    const Complex z2 = zr * zr;
    Complex zpow = zr; // z^(2n-1)
    for (int n = 1; n <= ctx.n_z; ++n) {
        acc += static_cast<double>((2 * n + 1) * 2 * n) * eval_eisenstein(2 * n + 2, tau, ctx) * zpow;
        zpow *= z2;
    }
    return acc;
}

Complex eval_E1(Complex tau, Complex z, const NumericContext& ctx)
{
    long long lambda = 0;
    const Complex zr = reduced_point_checked(tau, z, ctx, &lambda);
    Complex acc = 1.0 / zr;
    const Complex z2 = zr * zr;
    Complex zpow = zr; // z^(2n+1)
    for (int n = 0; n <= ctx.n_z; ++n) {
        acc -= eval_eisenstein(2 * n + 2, tau, ctx) * zpow;
        zpow *= z2;
    }
    // Quasi-periodicity: E1(z + lambda tau + mu) = E1(z) - 2 pi i lambda.
    return acc - kTwoPiI * static_cast<double>(lambda);
}

Complex eval_form(const Form& f, Complex tau, Complex z, const NumericContext& ctx)
{
    bool need_p = false, need_pz = false, need_e1 = false, need_e4 = false, need_e2 = false;
    for (const auto& [m, s] : f.terms()) {
        need_p |= m.e[0] > 0;
        need_pz |= m.e[1] > 0;
        need_e4 |= m.e[2] > 0;
        need_e1 |= m.e[3] > 0;
        need_e2 |= m.e[4] > 0;
    }
    std::array<Complex, 5> g{};
    if (need_p)
        g[0] = eval_wp(tau, z, ctx);
    if (need_pz)
        g[1] = eval_wp_z(tau, z, ctx);
    if (need_e4)
        g[2] = eval_eisenstein(4, tau, ctx);
    if (need_e1)
        g[3] = eval_E1(tau, z, ctx);
    if (need_e2)
        g[4] = eval_eisenstein(2, tau, ctx);

    Complex acc(0.0, 0.0);
    for (const auto& [m, s] : f.terms()) {
        Complex term = s.eval(kTwoPiI);
        for (int i = 0; i < 5; ++i)
            if (m.e[i] > 0)
                term *= int_pow(g[static_cast<std::size_t>(i)], m.e[i]);
        acc += term;
    }
    return acc;
}

Complex eval_E1_qw(Complex tau, Complex z, const NumericContext& ctx)
{
    check_tau(tau);
    const Complex q = mobius_q(tau);
    const Complex w = std::exp(kTwoPiI * z);
    const double r = std::max({std::abs(q), std::abs(q * w), std::abs(q / w)});
    if (r > ctx.q_guard)
        throw DomainError("point outside the strip of the q,w representation");
    if (std::abs(w - 1.0) < 1e-6)
        throw DomainError("z too close to an integer");
    const Complex pi_i(0.0, kPi);
    Complex acc = pi_i * (w + 1.0) / (w - 1.0);
    Complex qn(1.0, 0.0);
    for (int n = 1; n <= ctx.n_q; ++n) {
        qn *= q;
        const Complex u = qn / w;
        const Complex v = qn * w;
        acc += kTwoPiI * (u / (1.0 - u) - v / (1.0 - v));
    }
    return acc;
}

Complex eval_wp_qw(Complex tau, Complex z, const NumericContext& ctx)
{
    check_tau(tau);
    const Complex q = mobius_q(tau);
    const Complex w = std::exp(kTwoPiI * z);
    const double r = std::max({std::abs(q), std::abs(q * w), std::abs(q / w)});
    if (r > ctx.q_guard)
        throw DomainError("point outside the strip of the q,w representation");
    if (std::abs(w - 1.0) < 1e-6)
        throw DomainError("z too close to an integer");
    const Complex one(1.0, 0.0);
    Complex acc = one / 12.0 + w / ((one - w) * (one - w));
    Complex qn(1.0, 0.0);
    for (int n = 1; n <= ctx.n_q; ++n) {
        qn *= q;
        const Complex u = qn / w;
        const Complex v = qn * w;
        acc += v / ((one - v) * (one - v)) + u / ((one - u) * (one - u))
             - 2.0 * sigma_power(n, 1) * qn;
    }
    return kTwoPiI * kTwoPiI * acc;
}

Complex cocycle_J(const JacobiGroupElement& A, Complex tau, Complex)
{
    return static_cast<double>(A.c) * tau + static_cast<double>(A.d);
}

Complex cocycle_X(const JacobiGroupElement& A, Complex tau, Complex z)
{
    return static_cast<double>(A.c) / cocycle_J(A, tau, z);
}

Complex cocycle_Y(const JacobiGroupElement& A, Complex tau, Complex z)
{
    return (static_cast<double>(A.c) * z + static_cast<double>(A.c * A.mu - A.d * A.lambda))
         / cocycle_J(A, tau, z);
}

std::pair<Complex, Complex> group_action(const JacobiGroupElement& A, Complex tau, Complex z)
{
    check_tau(tau);
    const Complex j = cocycle_J(A, tau, z);
    const Complex tau2 = (static_cast<double>(A.a) * tau + static_cast<double>(A.b)) / j;
    const Complex z2 = (z + static_cast<double>(A.lambda) * tau + static_cast<double>(A.mu)) / j;
    return {tau2, z2};
}

double cocycle_relation_residual(const JacobiGroupElement& A, const JacobiGroupElement& B,
                                 std::span<const SamplePoint> points)
{
    const JacobiGroupElement AB = A * B;
    double worst = 0.0;
    for (const auto& pt : points) {
        const auto [bt, bz] = group_action(B, pt.tau, pt.z);
        const Complex jb = cocycle_J(B, pt.tau, pt.z);
        const double rj =
            std::abs(cocycle_J(AB, pt.tau, pt.z) - cocycle_J(A, bt, bz) * jb);
        const double ry =
            std::abs(cocycle_Y(AB, pt.tau, pt.z) - (cocycle_Y(A, bt, bz) / jb + cocycle_Y(B, pt.tau, pt.z)));
        const double rx =
            std::abs(cocycle_X(AB, pt.tau, pt.z) - (cocycle_X(A, bt, bz) / (jb * jb) + cocycle_X(B, pt.tau, pt.z)));
        worst = std::max({worst, rj, ry, rx});
    }
    return worst;
}

double transformation_residual(const Form& f, const JacobiGroupElement& A,
                               std::span<const SamplePoint> points, const NumericContext& ctx)
{
    const auto w = f.weight();
    if (!w)
        throw std::invalid_argument("transformation law requires a homogeneous form");
    const auto [s1, s2] = f.depth();
    std::vector<std::vector<Form>> qforms(static_cast<std::size_t>(s1) + 1);
    for (int j1 = 0; j1 <= s1; ++j1) {
        qforms[static_cast<std::size_t>(j1)].resize(static_cast<std::size_t>(s2) + 1);
        for (int j2 = 0; j2 <= s2; ++j2)
            qforms[static_cast<std::size_t>(j1)][static_cast<std::size_t>(j2)] = f.q_op(j1, j2);
    }
    double worst = 0.0;
    for (const auto& pt : points) {
        const auto [t2, z2] = group_action(A, pt.tau, pt.z);
        const Complex lhs =
            int_pow(cocycle_J(A, pt.tau, pt.z), -*w) * eval_form(f, t2, z2, ctx);
        const Complex x = cocycle_X(A, pt.tau, pt.z);
        const Complex y = cocycle_Y(A, pt.tau, pt.z);
        Complex rhs(0.0, 0.0);
        for (int j1 = 0; j1 <= s1; ++j1)
            for (int j2 = 0; j2 <= s2; ++j2) {
                const Form& qf = qforms[static_cast<std::size_t>(j1)][static_cast<std::size_t>(j2)];
                if (qf.is_zero())
                    continue;
                rhs += eval_form(qf, pt.tau, pt.z, ctx) * int_pow(x, j1) * int_pow(y, j2);
            }
        // Scale-aware residual: near poles the two sides reach 1e6 and
        // beyond, where double precision cannot certify a fixed absolute
        // difference.
        const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
        worst = std::max(worst, std::abs(lhs - rhs) / scale);
    }
    return worst;
}

double dual_representation_residual(DualWhich which, std::span<const SamplePoint> points,
                                    const NumericContext& ctx)
{
    double worst = 0.0;
    for (const auto& pt : points) {
        const Complex laurent = which == DualWhich::Wp ? eval_wp(pt.tau, pt.z, ctx)
                                                       : eval_E1(pt.tau, pt.z, ctx);
        const Complex qw = which == DualWhich::Wp ? eval_wp_qw(pt.tau, pt.z, ctx)
                                                  : eval_E1_qw(pt.tau, pt.z, ctx);
        worst = std::max(worst, std::abs(laurent - qw));
    }
    return worst;
}

} // namespace qjf
