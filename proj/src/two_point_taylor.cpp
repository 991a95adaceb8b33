#include "polyasym/two_point_taylor.hpp"

#include "polyasym/special.hpp"

#include <cmath>
#include <stdexcept>

namespace polyasym {

namespace {

// Cauchy product of two truncated series.
std::vector<Complex> series_product(const std::vector<Complex>& p, const std::vector<Complex>& q)
{
    std::vector<Complex> r(p.size());
    for (std::size_t m = 0; m < r.size(); ++m)
        for (std::size_t j = 0; j <= m; ++j)
            r[m] += p[j] * q[m - j];
    return r;
}

std::vector<Complex> taylor_to_derivatives(std::vector<Complex> t)
{
    Real fact(1);
    for (std::size_t m = 0; m < t.size(); ++m) {
        if (m > 0)
            fact *= Real(static_cast<unsigned long>(m));
        t[m] *= fact;
    }
    return t;
}

}  // namespace

DerivativeProvider power_product_provider(const Complex& scale, std::vector<PowerFactor> factors)
{
    return [scale, factors = std::move(factors)](const Complex& w, unsigned M) {
        std::vector<Complex> series(M + 1);
        series[0] = scale;
        for (const PowerFactor& f : factors) {
            // Taylor coefficients of (c + s w + s h)^mu in h:
            // binom(mu, m) (s / base)^m base^mu.
            const Complex base = f.c + f.s * w;
            const Complex ratio = f.s / base;
            std::vector<Complex> t(M + 1);
            t[0] = pow(base, f.mu);
            for (unsigned m = 1; m <= M; ++m)
                t[m] = t[m - 1] * ratio * (f.mu - Complex(m - 1)) / Real(m);
            series = series_product(series, t);
        }
        return taylor_to_derivatives(std::move(series));
    };
}

DerivativeProvider exp_provider(const Complex& a)
{
    return [a](const Complex& w, unsigned M) {
        std::vector<Complex> d(M + 1);
        d[0] = exp(a * w);
        for (unsigned m = 1; m <= M; ++m)
            d[m] = d[m - 1] * a;
        return d;
    };
}

DerivativeProvider polynomial_provider(std::vector<Complex> coeffs)
{
    return [coeffs = std::move(coeffs)](const Complex& w, unsigned M) {
        // Repeated synthetic division gives the Taylor coefficients at w.
        std::vector<Complex> c = coeffs;
        std::vector<Complex> t(M + 1);
        for (unsigned m = 0; m <= M && !c.empty(); ++m) {
            Complex acc;
            std::vector<Complex> quotient(c.size() > 1 ? c.size() - 1 : 0);
            for (std::size_t j = c.size(); j-- > 0;) {
                acc = acc * w + c[j];
                if (j > 0)
                    quotient[j - 1] = acc;
            }
            t[m] = acc;
            c = std::move(quotient);
        }
        return taylor_to_derivatives(std::move(t));
    };
}

std::vector<Complex> single_point_coeffs(const DerivativeProvider& f, const Complex& w0, unsigned K)
{
    std::vector<Complex> d = f(w0, K);
    Real fact(1);
    for (unsigned k = 0; k <= K; ++k) {
        if (k > 0)
            fact *= Real(k);
        d[k] /= fact;
    }
    return d;
}

TwoPointCoeffs two_point_coeffs(const DerivativeProvider& f, const Complex& w1, const Complex& w2, unsigned K)
{
    if (w1 == w2)
        throw std::domain_error("degenerate foci");
    const std::vector<Complex> d1 = f(w1, K);
    const std::vector<Complex> d2 = f(w2, K);

    TwoPointCoeffs tp{w1, w2, std::vector<Complex>(K + 1), std::vector<Complex>(K + 1)};
    const Complex h12 = w1 - w2;
    const Complex h21 = -h12;
    tp.a[0] = d2[0] / h21;
    tp.a_prime[0] = d1[0] / h12;

    for (unsigned n = 1; n <= K; ++n) {
        Complex s, sp;
        Complex p12 = pow(h12, static_cast<long>(n + 1));
        Complex p21 = pow(h21, static_cast<long>(n + 1));
        const Real sign_n = n % 2 ? Real(1) : Real(-1);  // (-1)^{n+1}
        for (unsigned k = 0; k <= n; ++k) {
            // (n+k-1)! / (k! (n-k)!)
            const Real c = factorial(n + k - 1) / (factorial(k) * factorial(n - k));
            const Real sign_k = k % 2 ? Real(-1) : Real(1);
            s += c * (sign_n * Real(n) * d2[n - k] + sign_k * Real(k) * d1[n - k]) / p12;
            sp += c * (sign_n * Real(n) * d1[n - k] + sign_k * Real(k) * d2[n - k]) / p21;
            p12 *= h12;
            p21 *= h21;
        }
        const Real nf = factorial(n);
        tp.a[n] = s / nf;
        tp.a_prime[n] = sp / nf;
    }
    return tp;
}

Complex TwoPointCoeffs::partial_sum(const Complex& w, unsigned K) const
{
    const Complex P = (w - w1) * (w - w2);
    Complex sum, power(1);
    for (unsigned k = 0; k <= K && k < a.size(); ++k) {
        sum += (a[k] * (w - w1) + a_prime[k] * (w - w2)) * power;
        power *= P;
    }
    return sum;
}

ABCoeffs to_AB(const TwoPointCoeffs& tp)
{
    ABCoeffs ab{tp.w1, tp.w2, {}, {}};
    for (std::size_t k = 0; k < tp.a.size(); ++k) {
        ab.B.push_back(tp.a[k] + tp.a_prime[k]);
        ab.A.push_back(-tp.a[k] * tp.w1 - tp.a_prime[k] * tp.w2);
    }
    return ab;
}

Complex ABCoeffs::partial_sum(const Complex& w, unsigned K) const
{
    const Complex P = (w - w1) * (w - w2);
    Complex sum, power(1);
    for (unsigned k = 0; k <= K && k < A.size(); ++k) {
        sum += (A[k] + B[k] * w) * power;
        power *= P;
    }
    return sum;
}

ABCoeffs centered_ab_coeffs(const DerivativeProvider& f, const Complex& w1, const Complex& w2, unsigned K,
                            const Real& radius)
{
    const Complex m = (w1 + w2) / Real(2);
    const Complex half = (w1 - w2) / Real(2);
    const Complex d2 = half * half;
    const Real q = abs(d2) / (radius * radius);
    if (q >= 1)
        throw std::domain_error("foci too far apart for the centred expansion");

    // Terms of the j-sums decay like C(j, k) q^j; twice the count needed for
    // q^j alone to reach the working precision leaves room for the binomials.
    unsigned J = K;
    if (q > 0) {
        double bits_per_term = -std::log2(q.convert_to<double>());
        J += 2 * static_cast<unsigned>(std::ceil((working_bits() + 32) / bits_per_term)) + 8;
    }
    const std::vector<Complex> c = single_point_coeffs(f, m, 2 * J + 1);

    ABCoeffs ab{w1, w2, std::vector<Complex>(K + 1), std::vector<Complex>(K + 1)};
    for (unsigned k = 0; k <= K; ++k) {
        Complex even, odd, power(1);
        Real binom(1);  // C(j, k)
        for (unsigned j = k; j <= J; ++j) {
            even += c[2 * j] * binom * power;
            odd += c[2 * j + 1] * binom * power;
            power *= d2;
            binom = binom * Real(j + 1) / Real(j + 1 - k);
        }
        ab.B[k] = odd;
        ab.A[k] = even - m * odd;
    }
    return ab;
}

CassiniOval cassini_region(const Complex& w1, const Complex& w2, const std::vector<Complex>& singularities)
{
    if (singularities.empty())
        throw std::invalid_argument("cassini_region needs at least one singular point");
    CassiniOval oval{w1, w2, Real(0)};
    bool first = true;
    for (const Complex& s : singularities) {
        Real level = abs(s - w1) * abs(s - w2);
        if (first || level < oval.r)
            oval.r = level;
        first = false;
    }
    return oval;
}

}  // namespace polyasym
