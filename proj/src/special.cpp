#include "polyasym/special.hpp"

namespace polyasym {

Real at_working_precision(const Real& v) { return Real(v, Real::default_precision()); }

Complex at_working_precision(const Complex& z)
{
    return Complex(at_working_precision(z.re), at_working_precision(z.im));
}

std::vector<Complex> escalate_precision(const std::function<std::vector<Complex>()>& compute,
                                        unsigned first_extra, unsigned max_extra)
{
    const unsigned base = working_bits();
    std::vector<Complex> prev;
    {
        PrecisionScope scope(base + first_extra);
        prev = compute();
    }
    for (unsigned extra = 2 * first_extra;; extra *= 2) {
        std::vector<Complex> cur;
        {
            PrecisionScope scope(base + extra);
            cur = compute();
        }
        bool agree = cur.size() == prev.size();
        const Real tol = ldexp(Real(1), -static_cast<int>(base) - 2);
        for (std::size_t i = 0; agree && i < cur.size(); ++i)
            agree = abs(cur[i] - prev[i]) <= tol * abs(cur[i]);
        if (agree || 2 * extra > max_extra) {
            for (Complex& z : cur)
                z = at_working_precision(z);
            return cur;
        }
        prev = std::move(cur);
    }
}

Real gamma(const Real& x)
{
    Real r;
    mpfr_gamma(r.backend().data(), x.backend().data(), MPFR_RNDN);
    return r;
}

Real lgamma_abs(const Real& x)
{
    Real r;
    int sign = 0;
    mpfr_lgamma(r.backend().data(), &sign, x.backend().data(), MPFR_RNDN);
    return r;
}

Real factorial(unsigned n)
{
    Real r;
    mpfr_fac_ui(r.backend().data(), n, MPFR_RNDN);
    return r;
}

SignedLogValue hermite_eval(unsigned n, const Real& y)
{
    if (n == 0)
        return SignedLogValue::from_real(Real(1));
    const int chunk = 512;
    Real prev(1), cur = 2 * y, scale(0);
    for (unsigned k = 1; k < n; ++k) {
        Real next = 2 * y * cur - 2 * Real(k) * prev;
        prev = std::move(cur);
        cur = std::move(next);
        if (abs(cur) > ldexp(Real(1), chunk)) {
            cur = ldexp(cur, -chunk);
            prev = ldexp(prev, -chunk);
            scale += chunk;
        }
    }
    SignedLogValue v = SignedLogValue::from_real(cur);
    if (!v.is_zero())
        v.log_mag += scale * log(Real(2));
    return v;
}

Real chebyshev_T(unsigned n, const Real& x)
{
    if (n == 0)
        return Real(1);
    Real prev(1), cur = x;
    for (unsigned k = 1; k < n; ++k) {
        Real next = 2 * x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Real chebyshev_U(unsigned n, const Real& x)
{
    Real prev(1), cur = 2 * x;
    if (n == 0)
        return prev;
    for (unsigned k = 1; k < n; ++k) {
        Real next = 2 * x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Real chebyshev_T_trig(unsigned n, const Real& x)
{
    return cos(Real(n) * acos(x));
}

Real chebyshev_U_trig(unsigned n, const Real& x)
{
    if (x == 1)
        return Real(n + 1);
    if (x == -1)
        return n % 2 ? Real(-Real(n + 1)) : Real(n + 1);
    Real t = acos(x);
    return sin(Real(n + 1) * t) / sin(t);
}

namespace {

template <class T>
std::vector<T> laguerre_terms(const T& alpha, long n, const T& y)
{
    // c[m] = binom(n + alpha, m) for m = 0..n
    std::vector<T> c(n + 1);
    c[0] = T(1);
    const T top = alpha + T(Real(n));
    for (long m = 0; m < n; ++m)
        c[m + 1] = c[m] * (top - T(Real(m))) / Real(m + 1);

    std::vector<T> terms(n + 1);
    T power(1);
    for (long k = 0; k <= n; ++k) {
        T t = c[n - k] * power;
        terms[k] = k % 2 ? T(-t) : t;
        power = power * y / Real(k + 1);
    }
    return terms;
}

template <class T>
std::vector<T> charlier_terms(const T& a, long n, const T& y)
{
    std::vector<T> neg_a_pow(n + 1);
    neg_a_pow[0] = T(1);
    for (long k = 1; k <= n; ++k)
        neg_a_pow[k] = neg_a_pow[k - 1] * (-a);

    std::vector<T> terms(n + 1);
    T falling(1);  // y(y-1)...(y-k+1)
    Real binom(1);
    for (long k = 0; k <= n; ++k) {
        terms[k] = binom * falling * neg_a_pow[n - k];
        falling = falling * (y - T(Real(k)));
        binom = binom * Real(n - k) / Real(k + 1);
    }
    return terms;
}

}  // namespace

Real laguerre_direct(const Real& alpha, long n, const Real& y)
{
    return laguerre_direct_checked(alpha, n, y).value;
}

Complex laguerre_direct(const Complex& alpha, long n, const Complex& y)
{
    return laguerre_direct_checked(alpha, n, y).value;
}

CheckedSum<Real> laguerre_direct_checked(const Real& alpha, long n, const Real& y)
{
    if (n < 0)
        return {Real(0), Real(0)};
    return checked_sum(laguerre_terms(alpha, n, y));
}

CheckedSum<Complex> laguerre_direct_checked(const Complex& alpha, long n, const Complex& y)
{
    if (n < 0)
        return {Complex(), Real(0)};
    return checked_sum(laguerre_terms(alpha, n, y));
}

Real jacobi_direct(const Real& alpha, const Real& beta, long n, const Real& x)
{
    if (n < 0)
        return Real(0);
    Real prev(1);
    if (n == 0)
        return prev;
    const Real ab = alpha + beta;
    Real cur = (alpha + 1) + (ab + 2) * (x - 1) / 2;
    for (long m = 2; m <= n; ++m) {
        const Real s = 2 * Real(m) + ab;
        const Real a1 = 2 * Real(m) * (Real(m) + ab) * (s - 2);
        const Real a2 = (s - 1) * (s * (s - 2) * x + alpha * alpha - beta * beta);
        const Real a3 = 2 * (Real(m) + alpha - 1) * (Real(m) + beta - 1) * s;
        Real next = (a2 * cur - a3 * prev) / a1;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Real charlier_direct(const Real& a, long n, const Real& y)
{
    if (n < 0)
        return Real(0);
    return pairwise_sum(charlier_terms(a, n, y));
}

Complex charlier_direct(const Complex& a, long n, const Complex& y)
{
    if (n < 0)
        return Complex();
    return pairwise_sum(charlier_terms(a, n, y));
}

}  // namespace polyasym
