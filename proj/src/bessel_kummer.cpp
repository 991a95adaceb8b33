#include "polyasym/bessel_kummer.hpp"

#include "polyasym/special.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>

#include <cmath>
#include <stdexcept>

namespace polyasym {

namespace {

void require_positive(const Real& v, const char* what)
{
    if (!(v > 0))
        throw std::domain_error(what);
}

std::vector<Real> real_parts(const std::vector<Complex>& v)
{
    std::vector<Real> r;
    r.reserve(v.size());
    for (const Complex& z : v)
        r.push_back(z.re);
    return r;
}

// Sum of a power series whose terms t_m are produced by `next`; stops once
// the terms have started to shrink and fall below the working epsilon.
template <class T, class Next>
T sum_series(T term, Next next, unsigned min_terms)
{
    const Real eps = working_epsilon();
    T sum = term;
    for (unsigned m = 1;; ++m) {
        term = next(term, m);
        sum += term;
        if (m >= min_terms && abs(term) <= eps * abs(sum))
            return sum;
        if (m > 1000000)
            throw std::runtime_error("series did not converge");
    }
}

}  // namespace

Real lower_incomplete_gamma(const Real& a, const Real& x)
{
    require_positive(a, "lower_incomplete_gamma needs a > 0");
    require_positive(x, "lower_incomplete_gamma needs x > 0");
    const unsigned past_peak = static_cast<unsigned>(std::ceil(x.convert_to<double>())) + 2;
    const Real s = sum_series(1 / a, [&](const Real& t, unsigned m) { return t * x / (a + Real(m)); }, past_peak);
    return pow(x, a) * exp(-x) * s;
}

std::vector<Real> lower_incomplete_gamma_sequence(const Real& a, const Real& x, unsigned K)
{
    require_positive(a, "lower_incomplete_gamma needs a > 0");
    require_positive(x, "lower_incomplete_gamma needs x > 0");
    std::vector<Real> g(K + 1);
    const Real top = a + Real(K);
    g[K] = lower_incomplete_gamma(top, x);
    Real weight = pow(x, top) * exp(-x);  // x^{a+k} e^{-x}
    for (unsigned k = K; k-- > 0;) {
        weight /= x;
        g[k] = (g[k + 1] + weight) / (a + Real(k));
    }
    return g;
}

Real incomplete_gamma_step_up(const Real& a, const Real& x, const Real& gamma_a)
{
    return a * gamma_a - pow(x, a) * exp(-x);
}

Real incomplete_gamma_step_down(const Real& a, const Real& x, const Real& gamma_a_plus_1)
{
    return (gamma_a_plus_1 + pow(x, a) * exp(-x)) / a;
}

Real upper_incomplete_gamma(const Real& s, const Real& x)
{
    require_positive(x, "upper_incomplete_gamma needs x > 0");
    // Modified Lentz on x + 1 - s - 1(1-s)/(x + 3 - s - 2(2-s)/(x + 5 - s - ...)).
    const Real eps = working_epsilon();
    const Real tiny = eps * eps;
    Real b = x + 1 - s;
    Real c = 1 / tiny;
    Real d = 1 / b;
    Real h = d;
    for (unsigned i = 1;; ++i) {
        const Real an = -Real(i) * (Real(i) - s);
        b += 2;
        d = an * d + b;
        if (abs(d) < tiny)
            d = tiny;
        c = b + an / c;
        if (abs(c) < tiny)
            c = tiny;
        d = 1 / d;
        const Real delta = d * c;
        h *= delta;
        if (abs(delta - 1) <= eps)
            break;
        if (i > 10000000)
            throw std::runtime_error("incomplete gamma continued fraction did not converge");
    }
    return exp(-x) * pow(x, s) * h;
}

namespace {

void check_bessel(const BesselParams& p)
{
    if (!(p.nu > Real(-1) / 2))
        throw std::domain_error("the incomplete gamma expansion needs nu > -1/2");
    require_positive(p.z, "Bessel expansions need z > 0");
}

ExpansionResult<Real> besseli_impl(const BesselParams& p, unsigned max_order, const Truncation* t)
{
    check_bessel(p);
    const Real half = Real(1) / 2;
    const Real x = 2 * p.z;
    const std::vector<Real> g = lower_incomplete_gamma_sequence(p.nu + half, x, max_order);
    const Real pre = exp(p.z) / (sqrt(2 * pi() * p.z) * gamma(p.nu + half));
    ExpansionResult<Real> r;
    SeriesAccumulator<Real> acc(r);
    Real coef = pre;  // (-1)^k binom(nu - 1/2, k)/(2z)^k = (1/2 - nu)_k/(k! (2z)^k)
    for (unsigned k = 0; k <= max_order; ++k) {
        if (k > 0)
            coef *= (half - p.nu + Real(k - 1)) / (Real(k) * x);
        acc.add(coef * g[k]);
        if (t && acc.settled(*t))
            break;
    }
    return r;
}

}  // namespace

ExpansionResult<Real> besseli_expand(const BesselParams& p, unsigned N) { return besseli_impl(p, N, nullptr); }

ExpansionResult<Real> besseli_expand(const BesselParams& p, const Truncation& t)
{
    return besseli_impl(p, t.max_order, &t);
}

Real besseli_series(const Real& nu, const Real& z)
{
    require_positive(z, "besseli_series needs z > 0");
    const Real q = z * z / 4;
    const unsigned past_peak = static_cast<unsigned>(std::ceil(z.convert_to<double>())) + 2;
    const Real first = pow(z / 2, nu) / gamma(nu + 1);
    return sum_series(first, [&](const Real& t, unsigned m) { return t * q / (Real(m) * (nu + Real(m))); }, past_peak);
}

std::vector<Real> u_functions(unsigned K, const Real& b, const Real& x)
{
    require_positive(x, "U-functions need x > 0");
    // The dominant solution of the relation grows like e^{2 sqrt(a x)} and U
    // decays like e^{-2 sqrt(a x)}.
    const double spread = 4 * std::sqrt(double(K) * x.convert_to<double>()) / std::log(2.0);
    const unsigned guard = 64 + static_cast<unsigned>(std::ceil(spread));
    return real_parts(escalate_precision(
        [&] {
            const Real bh = at_working_precision(b), xh = at_working_precision(x);
            std::vector<Complex> u{Complex(Real(1))};
            if (K >= 1)
                u.push_back(Complex(pow(xh, 1 - bh) * exp(xh) * upper_incomplete_gamma(bh - 1, xh)));
            for (unsigned a = 1; a < K; ++a) {
                const Real ar(a);
                const Real denom = ar * (ar - bh + 1);
                if (denom == 0)
                    throw std::domain_error("U-function recursion meets a - b + 1 = 0");
                u.push_back(Complex(-(u[a - 1].re + (bh - 2 * ar - xh) * u[a].re) / denom));
            }
            return u;
        },
        guard));
}

Real u_function(unsigned k, const Real& b, const Real& x) { return u_functions(k, b, x)[k]; }

namespace {

ExpansionResult<Real> besselk_impl(const Real& nu, const Real& z, unsigned max_order, const Truncation* t)
{
    require_positive(z, "Bessel expansions need z > 0");
    const Real half = Real(1) / 2;
    const std::vector<Real> u = u_functions(max_order, half - nu, 2 * z);
    ExpansionResult<Real> r;
    SeriesAccumulator<Real> acc(r);
    Real coef = sqrt(pi() / (2 * z)) * exp(-z);  // times (nu + 1/2)_k (nu - 1/2)_k/k!
    for (unsigned k = 0; k <= max_order; ++k) {
        if (k > 0)
            coef *= (nu + half + Real(k - 1)) * (nu - half + Real(k - 1)) / Real(k);
        acc.add(coef * u[k]);
        if (t && acc.settled(*t))
            break;
    }
    return r;
}

// Integral of f over (0, inf); the integrands here decay exponentially and
// may have an integrable singularity at 0.
template <class F>
Real half_line_integral(F f)
{
    boost::math::quadrature::exp_sinh<Real> rule;
    const Real tol = sqrt(working_epsilon());
    return rule.integrate(f, tol);
}

}  // namespace

ExpansionResult<Real> besselk_expand(const Real& nu, const Real& z, unsigned N)
{
    return besselk_impl(nu, z, N, nullptr);
}

ExpansionResult<Real> besselk_expand(const Real& nu, const Real& z, const Truncation& t)
{
    return besselk_impl(nu, z, t.max_order, &t);
}

Real besselk_quadrature(const Real& nu, const Real& z)
{
    require_positive(z, "besselk_quadrature needs z > 0");
    if (!(nu > Real(-1) / 2))
        throw std::domain_error("besselk_quadrature needs nu > -1/2");
    const Real e = nu - Real(1) / 2;
    const Real integral = half_line_integral([&](const Real& t) { return exp(-2 * z * t + e * (log(t) + log1p(t))); });
    return sqrt(pi()) * pow(2 * z, nu) * exp(-z) / gamma(nu + Real(1) / 2) * integral;
}

Real u1_quadrature(const Real& b, const Real& x)
{
    require_positive(x, "u1_quadrature needs x > 0");
    return half_line_integral([&](const Real& t) { return exp(-x * t + (b - 2) * log1p(t)); });
}

TricomiCoeffs tricomi_coeffs(const Real& kappa, const Real& lambda, unsigned N)
{
    // The factors' coefficients can be far larger than A_n when kappa is
    // large, so the convolution runs under escalation.
    const std::vector<Complex> A = escalate_precision([&] {
        const Real k = at_working_precision(kappa), l = at_working_precision(lambda);
        std::vector<Real> e(N + 1), f(N + 1), g(N + 1);
        e[0] = f[0] = g[0] = 1;
        for (unsigned n = 1; n <= N; ++n) {
            const Real nr(n);
            e[n] = e[n - 1] * 2 * k / nr;
            f[n] = -f[n - 1] * (k - l - nr + 1) / nr;  // binom(k - l, n) (-1)^n
            g[n] = g[n - 1] * (-k - l - nr + 1) / nr;  // binom(-k - l, n)
        }
        std::vector<Real> ef(N + 1);
        for (unsigned n = 0; n <= N; ++n) {
            std::vector<Real> t;
            for (unsigned j = 0; j <= n; ++j)
                t.push_back(e[j] * f[n - j]);
            ef[n] = pairwise_sum(t);
        }
        std::vector<Complex> out;
        for (unsigned n = 0; n <= N; ++n) {
            std::vector<Real> t;
            for (unsigned j = 0; j <= n; ++j)
                t.push_back(ef[j] * g[n - j]);
            out.push_back(Complex(pairwise_sum(t)));
        }
        return out;
    });
    return {kappa, lambda, real_parts(A)};
}

std::vector<Real> tricomi_coeffs_recursive(const Real& kappa, const Real& lambda, unsigned N)
{
    std::vector<Real> A{Real(1)};
    if (N >= 1)
        A.push_back(Real(0));
    for (unsigned n = 1; n + 1 <= N; ++n) {
        const Real prev2 = n >= 2 ? A[n - 2] : Real(0);
        A.push_back(((Real(n) - 1 + 2 * lambda) * A[n - 1] - 2 * kappa * prev2) / Real(n + 1));
    }
    return A;
}

Real bessel_j(const Real& mu, const Real& y)
{
    require_positive(y, "bessel_j needs y > 0");
    const double spread = 2 * y.convert_to<double>() / std::log(2.0);
    const std::vector<Complex> v = escalate_precision(
        [&] {
            const Real m = at_working_precision(mu), yh = at_working_precision(y);
            const Real q = -yh * yh / 4;
            const unsigned past_peak = static_cast<unsigned>(std::ceil(yh.convert_to<double>())) + 2;
            const Real first = pow(yh / 2, m) / gamma(m + 1);
            return std::vector<Complex>{Complex(sum_series(
                first, [&](const Real& t, unsigned k) { return t * q / (Real(k) * (m + Real(k))); }, past_peak))};
        },
        64 + static_cast<unsigned>(std::ceil(spread)));
    return v[0].re;
}

namespace {

void check_kummer(const KummerParams& p)
{
    if (p.c <= 0 && p.c == floor(p.c))
        throw std::domain_error("1F1 needs c not a nonpositive integer");
}

// sum_m w^m/(m! (c)_{n+m}) with w = -kappa z.
Complex entire_bessel(const Real& c, unsigned n, const Complex& w)
{
    const Complex first(1 / pochhammer(c, n));
    const unsigned past_peak = static_cast<unsigned>(std::ceil(sqrt(abs(w)).convert_to<double>())) + 2;
    return sum_series(
        first, [&](const Complex& t, unsigned m) { return t * w / (Real(m) * (c + Real(n + m - 1))); }, past_peak);
}

// Terms 0..max_order at the working precision, or fewer if t settles first.
std::vector<Complex> kummer_terms(const KummerParams& p, unsigned max_order, const Truncation* t)
{
    const Real c = at_working_precision(p.c), kappa = at_working_precision(p.kappa());
    const Complex z = at_working_precision(p.z);
    const std::vector<Real> A =
        t ? tricomi_coeffs_recursive(kappa, c / 2, max_order) : tricomi_coeffs(kappa, c / 2, max_order).A;
    const Complex w = -(kappa * z);
    const Complex pre = exp(z / Real(2));
    ExpansionResult<Complex> r;
    SeriesAccumulator<Complex> acc(r);
    Complex zn(1);  // (z/2)^n
    for (unsigned n = 0; n <= max_order; ++n) {
        acc.add(pre * A[n] * zn * entire_bessel(c, n, w));
        if (t && acc.settled(*t))
            break;
        zn *= z / Real(2);
    }
    return r.terms;
}

ExpansionResult<Complex> kummer_impl(const KummerParams& p, unsigned max_order, const Truncation* t)
{
    check_kummer(p);
    // The inner sums alternate with largest term about e^{2 sqrt|kappa z|};
    // the outer terms can exceed the result by a similar factor.
    const double spread =
        (2 * std::sqrt(std::abs(p.kappa().convert_to<double>()) * abs(p.z).convert_to<double>()) +
         abs(p.z).convert_to<double>()) /
        std::log(2.0);
    const unsigned guard = 64 + static_cast<unsigned>(std::ceil(spread));
    unsigned order = max_order;
    if (t) {
        PrecisionScope scout(working_bits() + guard);
        const std::size_t used = kummer_terms(p, max_order, t).size();
        order = std::min<unsigned>(max_order, static_cast<unsigned>(used) + t->quiet_terms + 8);
    }
    const std::vector<Complex> terms =
        escalate_precision([&] { return kummer_terms(p, order, nullptr); }, guard);
    ExpansionResult<Complex> r;
    SeriesAccumulator<Complex> acc(r);
    for (const Complex& term : terms) {
        acc.add(term);
        if (t && acc.settled(*t))
            break;
    }
    return r;
}

}  // namespace

ExpansionResult<Complex> kummer_expand(const KummerParams& p, unsigned N) { return kummer_impl(p, N, nullptr); }

ExpansionResult<Complex> kummer_expand(const KummerParams& p, const Truncation& t)
{
    return kummer_impl(p, t.max_order, &t);
}

Complex kummer_series(const Real& a, const Real& c, const Complex& z)
{
    if (c <= 0 && c == floor(c))
        throw std::domain_error("1F1 needs c not a nonpositive integer");
    const double spread = abs(z).convert_to<double>() / std::log(2.0);
    const std::vector<Complex> v = escalate_precision(
        [&] {
            const Real ah = at_working_precision(a), ch = at_working_precision(c);
            const Complex zh = at_working_precision(z);
            const double past = std::max(std::abs(a.convert_to<double>()), abs(z).convert_to<double>());
            const unsigned past_peak = static_cast<unsigned>(std::ceil(past)) + 2;
            Complex term(1), sum(1);
            const Real eps = working_epsilon();
            for (unsigned k = 1;; ++k) {
                term = term * zh * (ah + Real(k - 1)) / ((ch + Real(k - 1)) * Real(k));
                sum += term;
                if (term.is_zero() || (k >= past_peak && abs(term) <= eps * abs(sum)))
                    break;
            }
            return std::vector<Complex>{sum};
        },
        64 + static_cast<unsigned>(std::ceil(spread)));
    return v[0];
}

}  // namespace polyasym
