#include "doctest.h"

#include "polyasym/special.hpp"

#include <boost/multiprecision/gmp.hpp>

#include <algorithm>

using namespace polyasym;
using Rational = boost::multiprecision::mpq_rational;

namespace {

Real to_real(const Rational& q)
{
    return Real(Real(numerator(q).str()) / Real(denominator(q).str()));
}

Rational rbinom(const Rational& a, unsigned k)
{
    Rational r(1);
    for (unsigned i = 0; i < k; ++i)
        r = r * (a - i) / (i + 1);
    return r;
}

Rational rlaguerre(const Rational& alpha, long n, const Rational& y)
{
    Rational s(0), pw(1), fact(1);
    for (long k = 0; k <= n; ++k) {
        if (k > 0) {
            pw *= y;
            fact *= k;
        }
        Rational t = rbinom(alpha + n, static_cast<unsigned>(n - k)) * pw / fact;
        s += k % 2 ? Rational(-t) : t;
    }
    return s;
}

// Explicit sum sum_s C(n+a, n-s) C(n+b, s) ((x-1)/2)^s ((x+1)/2)^{n-s}.
Rational rjacobi(const Rational& a, const Rational& b, long n, const Rational& x)
{
    Rational s(0);
    for (long j = 0; j <= n; ++j) {
        Rational t = rbinom(a + n, static_cast<unsigned>(n - j)) * rbinom(b + n, static_cast<unsigned>(j));
        for (long i = 0; i < j; ++i)
            t *= (x - 1) / 2;
        for (long i = 0; i < n - j; ++i)
            t *= (x + 1) / 2;
        s += t;
    }
    return s;
}

Rational rcharlier(const Rational& a, long n, const Rational& y)
{
    Rational s(0);
    for (long k = 0; k <= n; ++k) {
        Rational t = rbinom(Rational(n), static_cast<unsigned>(k));
        for (long i = 0; i < k; ++i)
            t *= y - i;
        for (long i = 0; i < n - k; ++i)
            t *= -a;
        s += t;
    }
    return s;
}

Rational rhermite(unsigned n, const Rational& y)
{
    Rational prev(1), cur = 2 * y;
    if (n == 0)
        return prev;
    for (unsigned k = 1; k < n; ++k) {
        Rational next = 2 * y * cur - 2 * k * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

bool close_rel(const Real& a, const Real& b, const Real& tol)
{
    return abs(a - b) <= tol * abs(b);
}

}  // namespace

TEST_CASE("pochhammer and generalized binomial")
{
    PrecisionScope scope(PrecisionCtx::oracle());
    CHECK(pochhammer(Real("2.5"), 0) == 1);
    CHECK(pochhammer(Real(1), 5) == 120);
    CHECK(pochhammer(Real(-3), 5) == 0);
    CHECK(abs(pochhammer(Complex(Real(0), Real(1)), 2) - Complex(Real(-1), Real(1))) < Real("1e-70"));
    CHECK(binom_general(Real(5), 2) == 10);
    CHECK(binom_general(Real("0.5"), 0) == 1);
    CHECK(binom_general(Real("0.5"), 2) == Real(-1) / 8);
    CHECK(binom_general(Real(-2), 3) == -4);
}

TEST_CASE("Hermite polynomials")
{
    PrecisionScope scope(PrecisionCtx::oracle());
    CHECK(hermite_eval(0, Real(7)).to_real() == 1);
    CHECK(abs(hermite_eval(1, Real(3)).to_real() - 6) < Real("1e-70"));
    CHECK(abs(hermite_eval(2, Real(1)).to_real() - 2) < Real("1e-70"));

    // Rescaling must not change the value: compare with exact integers.
    for (unsigned n : {5u, 50u, 181u, 400u}) {
        Rational y(Rational(7) / 3);
        Rational exact = rhermite(n, y);
        SignedLogValue h = hermite_eval(n, to_real(y));
        CHECK(h.sign == (exact < 0 ? -1 : 1));
        Real log_exact = log(abs(to_real(exact)));
        CHECK(abs(h.log_mag - log_exact) < Real("1e-60") * abs(log_exact));
    }
}

TEST_CASE("Chebyshev polynomials, recurrence and trigonometric forms")
{
    PrecisionScope scope(PrecisionCtx::oracle());
    for (unsigned n : {0u, 1u, 7u, 40u})
        CHECK(chebyshev_T(n, Real(1)) == 1);
    CHECK(chebyshev_T(4, Real(0)) == 1);
    CHECK(abs(chebyshev_U(3, Real("0.5")) + 1) < Real("1e-70"));
    CHECK(abs(chebyshev_U_trig(3, Real("0.5")) + 1) < Real("1e-70"));
    for (unsigned n : {3u, 10u, 33u}) {
        for (const char* xs : {"-0.9", "-0.31", "0", "0.6", "0.999"}) {
            Real x(xs);
            CHECK(abs(chebyshev_T(n, x) - chebyshev_T_trig(n, x)) < Real("1e-65"));
            CHECK(abs(chebyshev_U(n, x) - chebyshev_U_trig(n, x)) < Real("1e-60"));
        }
    }
}

TEST_CASE("Laguerre direct sums")
{
    PrecisionScope scope(PrecisionCtx::oracle());
    Real alpha("1.7");
    CHECK(close_rel(laguerre_direct(alpha, 6, Real(0)), binom_general(alpha + 6, 6), Real("1e-70")));
    CHECK(abs(laguerre_direct(Real(0), 1, Real("2.5")) + Real("1.5")) < Real("1e-70"));
    CHECK(laguerre_direct(alpha, -1, Real(3)) == 0);

    // L_n^(1/2)(y) = (-1)^n H_{2n+1}(sqrt y) / (n! 2^{2n+1} sqrt y) with y = n x
    for (unsigned n : {5u, 10u, 20u}) {
        for (const char* xs : {"0.5", "2", "3.5"}) {
            Real y = Real(n) * Real(xs);
            SignedLogValue h = hermite_eval(2 * n + 1, sqrt(y));
            Real hermite_form = h.to_real() / (factorial(n) * pow(Real(2), 2 * n + 1) * sqrt(y));
            if (n % 2)
                hermite_form = -hermite_form;
            CHECK(close_rel(laguerre_direct(Real("0.5"), n, y), hermite_form, Real("1e-12")));
        }
    }

    Complex ca(Real("0.5"), Real("0.25")), cy(Real(2), Real(-1));
    Complex l = laguerre_direct(ca, 3, cy);
    // Independent expansion of L_3^(a)(y) in powers of y.
    Complex expect = binom_general(ca + Complex(3), 3) - binom_general(ca + Complex(3), 2) * cy +
                     binom_general(ca + Complex(3), 1) * cy * cy / Real(2) - cy * cy * cy / Real(6);
    CHECK(abs(l - expect) < Real("1e-70"));
}

TEST_CASE("Jacobi polynomials")
{
    PrecisionScope scope(PrecisionCtx::oracle());
    CHECK(jacobi_direct(Real("0.3"), Real("1.2"), 0, Real("0.4")) == 1);
    for (unsigned n : {1u, 2u, 9u, 24u}) {
        Real x("0.37");
        Real lhs = jacobi_direct(Real("-0.5"), Real("-0.5"), n, x);
        Real rhs = factorial(2 * n) / (pow(Real(2), 2 * n) * factorial(n) * factorial(n)) * chebyshev_T(n, x);
        CHECK(close_rel(lhs, rhs, Real("1e-60")));
    }
    CHECK(abs(jacobi_direct(Real("1.5"), Real("0.5"), 10, Real(0)) + Real("0.336376")) < Real("5e-7"));
    CHECK(abs(jacobi_direct(Real("1.5"), Real("0.5"), 30, Real(0)) + Real("0.201847")) < Real("5e-7"));
}

TEST_CASE("Charlier direct sums")
{
    PrecisionScope scope(PrecisionCtx::oracle());
    CHECK(charlier_direct(Real(3), 0, Real("0.7")) == 1);
    CHECK(abs(charlier_direct(Real(3), 1, Real("0.7")) - (Real("0.7") - 3)) < Real("1e-70"));

    // A printed zero of C_10^1(10 x), given to 9 decimals: the polynomial is
    // small against its size on the zero range and changes sign across it.
    Real x0("0.100006223"), scale(0);
    for (int i = 0; i <= 140; ++i)
        scale = std::max(scale, Real(abs(charlier_direct(Real(1), 10, Real(i) / 10))));
    CHECK(abs(charlier_direct(Real(1), 10, 10 * x0)) < Real("1e-8") * scale);
    CHECK(charlier_direct(Real(1), 10, 10 * (x0 - Real("1e-9"))) * charlier_direct(Real(1), 10, 10 * (x0 + Real("1e-9"))) < 0);

    Complex ca(Real(1), Real("0.5")), cy(Real(3), Real(2));
    Complex expect = cy * (cy - Complex(1)) - Real(2) * ca * cy + ca * ca;  // C_2^a(y)
    CHECK(abs(charlier_direct(ca, 2, cy) - expect) < Real("1e-70"));
}

TEST_CASE("direct evaluators agree with exact rational arithmetic")
{
    PrecisionScope scope(PrecisionCtx::oracle());
    const Real eps = working_epsilon();
    const Rational alpha = Rational(-7) / 4, y = Rational(13) / 5, a = Rational(3) / 2, x = Rational(-2) / 7;
    for (long n : {0L, 1L, 7L, 23L, 41L, 60L}) {
        CheckedSum<Real> l = laguerre_direct_checked(to_real(alpha), n, to_real(y));
        CHECK(abs(l.value - to_real(rlaguerre(alpha, n, y))) <= 8 * Real(n + 1) * eps * l.magnitude);

        Real c = charlier_direct(to_real(a), n, to_real(y));
        Real cx = to_real(rcharlier(a, n, y));
        Real cscale(0);
        for (long k = 0; k <= n; ++k)
            cscale += abs(to_real(rbinom(Rational(n), k))) * abs(pochhammer(to_real(y) - k + 1, k)) * pow(to_real(a), n - k);
        CHECK(abs(c - cx) <= 8 * Real(n + 1) * eps * cscale);

        Real j = jacobi_direct(to_real(a), to_real(alpha + 3), n, to_real(x));
        Real jx = to_real(rjacobi(a, alpha + 3, n, x));
        CHECK(abs(j - jx) <= Real(1 << 12) * Real(n + 1) * eps * (abs(jx) + 1));
    }
}

TEST_CASE("SignedLogValue arithmetic")
{
    PrecisionScope scope(PrecisionCtx::oracle());
    auto v = [](const char* s) { return SignedLogValue::from_real(Real(s)); };
    SignedLogValue a = v("-3.25e200"), b = v("7.5e-90"), c = v("-1.125e33");
    SignedLogValue l = (a * b) * c, r = a * (b * c);
    CHECK(l.sign == r.sign);
    CHECK(abs(l.log_mag - r.log_mag) <= 4 * working_epsilon() * abs(l.log_mag));
    CHECK(abs((v("2") + v("-5")).to_real() + 3) < Real("1e-70"));
    CHECK((v("2") + v("-2")).is_zero());
    CHECK(abs((v("1e300") + v("1")).log_mag - log(Real("1e300") + 1)) < Real("1e-70"));
    CHECK(SignedLogValue::from_real(Real(0)).sign == 0);
    CHECK(abs((v("6") / v("-4")).to_real() + Real("1.5")) < Real("1e-70"));
}

TEST_CASE("precision scope restores the previous default")
{
    const unsigned before = working_bits();
    {
        PrecisionScope scope(PrecisionCtx{512});
        CHECK(working_bits() >= 512);
    }
    CHECK(working_bits() == before);
    CHECK_THROWS_AS(PrecisionScope(PrecisionCtx{32}), std::invalid_argument);
}
