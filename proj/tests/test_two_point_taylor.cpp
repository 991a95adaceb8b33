#include "doctest.h"

#include "polyasym/special.hpp"
#include "polyasym/two_point_taylor.hpp"

#include <random>

using namespace polyasym;

namespace {

Complex cx(const char* re, const char* im = "0") { return Complex(Real(re), Real(im)); }

// Saddle points 1 - x/2 +- (i/2) sqrt(x(4-x)) of the Laguerre phase, 0 < x < 4.
std::pair<Complex, Complex> laguerre_foci(const Real& x)
{
    Real xi = sqrt(x * (4 - x));
    return {Complex(1 - x / 2, xi / 2), Complex(1 - x / 2, -xi / 2)};
}

// (1 - w)^beta
DerivativeProvider laguerre_f(const Real& beta)
{
    return power_product_provider(Complex(1), {PowerFactor{Complex(1), Complex(-1), Complex(beta)}});
}

}  // namespace

TEST_CASE("single-point Taylor coefficients")
{
    PrecisionScope scope(PrecisionCtx::oracle());
    Complex a = cx("0.7", "-0.2"), w0 = cx("0.3", "1.1");
    std::vector<Complex> c = single_point_coeffs(exp_provider(-a), w0, 12);
    for (unsigned k = 0; k <= 12; ++k)
        CHECK(abs(c[k] - pow(-a, static_cast<long>(k)) * exp(-a * w0) / factorial(k)) < Real("1e-70"));

    c = single_point_coeffs(polynomial_provider({cx("2.5")}), w0, 4);
    CHECK(abs(c[0] - cx("2.5")) < Real("1e-70"));
    for (unsigned k = 1; k <= 4; ++k)
        CHECK(c[k].is_zero());

    c = single_point_coeffs(polynomial_provider({Complex(0), Complex(0), Complex(1)}), Complex(1), 4);
    CHECK(c[0] == Complex(1));
    CHECK(c[1] == Complex(2));
    CHECK(c[2] == Complex(1));
    CHECK(c[3].is_zero());
}

TEST_CASE("power-product derivatives match the function and a finite-difference check")
{
    PrecisionScope scope(PrecisionCtx::oracle());
    DerivativeProvider f = power_product_provider(
        cx("1.5"), {PowerFactor{cx("1"), cx("-1"), cx("2.5")}, PowerFactor{cx("1.3"), cx("1"), cx("-0.5")}});
    Complex w = cx("0.2", "0.4");
    std::vector<Complex> d = f(w, 3);
    auto direct = [](const Complex& z) {
        return Real("1.5") * pow(Complex(1) - z, Real("2.5")) * pow(cx("1.3") + z, Real("-0.5"));
    };
    CHECK(abs(d[0] - direct(w)) < Real("1e-70"));
    Real h("1e-20");
    Complex fd = (direct(w + Complex(h)) - direct(w - Complex(h))) / (2 * h);
    CHECK(abs(d[1] - fd) < Real("1e-35"));
}

TEST_CASE("two-point coefficients: closed cases")
{
    PrecisionScope scope(PrecisionCtx::oracle());
    TwoPointCoeffs tp = two_point_coeffs(polynomial_provider({Complex(0), Complex(1)}), Complex(0), Complex(1), 3);
    CHECK(abs(tp.a[0] - Complex(1)) < Real("1e-70"));
    CHECK(abs(tp.a_prime[0]) < Real("1e-70"));
    for (const char* ws : {"0.3", "-2", "5"})
        CHECK(abs(tp.partial_sum(cx(ws), 3) - cx(ws)) < Real("1e-70"));

    Complex w1 = cx("0.2", "1"), w2 = cx("-1", "0.5"), c = cx("3", "-1");
    tp = two_point_coeffs(polynomial_provider({c}), w1, w2, 6);
    CHECK(abs(tp.a[0] - c / (w2 - w1)) < Real("1e-70"));
    CHECK(abs(tp.a_prime[0] + tp.a[0]) < Real("1e-70"));
    CHECK(abs(tp.partial_sum(cx("0.7", "0.1"), 6) - c) < Real("1e-70"));
    ABCoeffs ab = to_AB(tp);
    CHECK(abs(ab.A[0] - c) < Real("1e-70"));
    CHECK(abs(ab.B[0]) < Real("1e-70"));

    tp = two_point_coeffs(exp_provider(Complex(1)), Complex::i(), -Complex::i(), 40);
    CHECK(abs(tp.partial_sum(Complex(0), 40) - Complex(1)) < Real("1e-12"));

    CHECK_THROWS_WITH_AS(two_point_coeffs(exp_provider(Complex(1)), w1, w1, 3), "degenerate foci", std::domain_error);
}

TEST_CASE("two-point coefficients: a_0 and a'_0 from the foci values")
{
    PrecisionScope scope(PrecisionCtx::oracle());
    auto [wp, wm] = laguerre_foci(Real("3.5"));
    DerivativeProvider f = laguerre_f(Real("-0.5"));
    TwoPointCoeffs tp = two_point_coeffs(f, wp, wm, 2);
    CHECK(abs(tp.a[0] - f(wm, 0)[0] / (wm - wp)) == 0);
    CHECK(abs(tp.a_prime[0] - f(wp, 0)[0] / (wp - wm)) == 0);
}

TEST_CASE("to_AB reproduces the two-point form identically in w")
{
    PrecisionScope scope(PrecisionCtx::oracle());
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-3, 3);
    auto [wp, wm] = laguerre_foci(Real("2.6"));
    TwoPointCoeffs tp = two_point_coeffs(laguerre_f(Real("-0.5")), wp, wm, 20);
    ABCoeffs ab = to_AB(tp);
    for (unsigned K = 0; K <= 20; ++K) {
        for (int i = 0; i < 10; ++i) {
            Complex w(Real(u(rng)), Real(u(rng)));
            Complex lhs = ab.partial_sum(w, K), rhs = tp.partial_sum(w, K);
            CHECK(abs(lhs - rhs) <= Real("1e-60") * (abs(rhs) + 1));
        }
    }

    // a_0 = 1, a'_0 = 0 with foci (-i, i): B_0 = 1 and A_0 = -w1.
    TwoPointCoeffs unit{-Complex::i(), Complex::i(), {Complex(1)}, {Complex(0)}};
    ABCoeffs u_ab = to_AB(unit);
    CHECK(u_ab.B[0] == Complex(1));
    CHECK(u_ab.A[0] == Complex::i());
}

TEST_CASE("Cassini ovals of the Laguerre and Jacobi foci")
{
    PrecisionScope scope(PrecisionCtx::oracle());
    for (const char* xs : {"0.5", "0.9", "1.1", "1.5", "2", "3.5"}) {
        Real x(xs);
        auto [wp, wm] = laguerre_foci(x);
        CassiniOval oval = cassini_region(wp, wm, {Complex(1)});
        CHECK(abs(oval.r - x) < Real("1e-12"));
        CHECK(oval.contains(Complex(0)) == (x > 1));
    }
    for (const char* xs : {"0", "0.3", "-0.3", "0.8", "-0.8"}) {
        Real x(xs);
        Complex w0(Real(0), sqrt(1 - x * x));
        CassiniOval oval = cassini_region(w0, -w0, {Complex(1 - x), Complex(-1 - x)});
        CHECK(abs(oval.r - 2 * (1 - abs(x))) < Real("1e-12"));
    }
    CHECK_THROWS_AS(cassini_region(Complex(0), Complex(1), {}), std::invalid_argument);
}

TEST_CASE("reconstruction converges inside the oval and diverges outside")
{
    PrecisionScope scope(PrecisionCtx::oracle());
    auto [wp, wm] = laguerre_foci(Real("3.5"));
    CassiniOval oval = cassini_region(wp, wm, {Complex(1)});

    struct Case {
        DerivativeProvider f;
        bool has_singularity;
    };
    std::vector<Case> cases{
        {polynomial_provider({cx("1"), cx("-2"), cx("0.5"), cx("3"), cx("0", "1"), cx("0.25")}), false},
        {exp_provider(cx("0.8")), false},
        {laguerre_f(Real("-0.5")), true},
    };
    std::vector<Complex> inside{cx("0"), cx("-1", "0.5"), cx("-0.5", "-0.9"), cx("-1.4", "0.2")};
    std::vector<Complex> outside{cx("-3"), cx("1", "1"), cx("-1", "-2.2")};

    for (Case& c : cases) {
        TwoPointCoeffs tp = two_point_coeffs(c.f, wp, wm, 60);
        for (const Complex& w : inside) {
            REQUIRE(oval.level(w) <= oval.r / 2);
            CHECK(abs(tp.partial_sum(w, 40) - c.f(w, 0)[0]) < Real("1e-10"));
        }
        if (!c.has_singularity)
            continue;
        for (const Complex& w : outside) {
            REQUIRE(oval.level(w) >= Real("1.2") * oval.r);
            Real f = abs(c.f(w, 0)[0]);
            Real r20 = abs(tp.partial_sum(w, 20) - c.f(w, 0)[0]);
            Real r40 = abs(tp.partial_sum(w, 40) - c.f(w, 0)[0]);
            Real r60 = abs(tp.partial_sum(w, 60) - c.f(w, 0)[0]);
            CHECK(r40 > r20);
            CHECK(r60 > r40);
            CHECK(r60 > f);
        }
    }
}

TEST_CASE("centred coefficients agree with the two-point formulas and survive merging foci")
{
    PrecisionScope scope(PrecisionCtx::oracle());
    Real x("3.8");
    auto [wp, wm] = laguerre_foci(x);
    DerivativeProvider f = laguerre_f(Real("-0.5"));
    ABCoeffs direct = to_AB(two_point_coeffs(f, wp, wm, 8));
    ABCoeffs centred = centered_ab_coeffs(f, wp, wm, 8, x / 2);
    for (unsigned k = 0; k <= 8; ++k) {
        CHECK(abs(direct.A[k] - centred.A[k]) < Real("1e-50") * (abs(direct.A[k]) + 1));
        CHECK(abs(direct.B[k] - centred.B[k]) < Real("1e-50") * (abs(direct.B[k]) + 1));
    }

    // Coincident foci at w = -1 (x = 4): still a valid expansion of f.
    ABCoeffs merged = centered_ab_coeffs(f, Complex(-1), Complex(-1), 30, Real(2));
    CHECK(abs(merged.partial_sum(cx("-0.5", "0.3"), 30) - f(cx("-0.5", "0.3"), 0)[0]) < Real("1e-10"));
}
