#pragma once

#include "polyasym/expansion.hpp"

#include <vector>

namespace polyasym {

struct BesselParams {
    Real nu;
    Real z;  // z > 0
};

// 1F1(a, c; z) with kappa = c/2 - a and lambda = c/2.
struct KummerParams {
    Real a;
    Real c;
    Complex z;

    Real kappa() const { return c / 2 - a; }
    Real lambda() const { return c / 2; }
};

// gamma(a, x) = x^a e^{-x} sum_m x^m/(a)_{m+1}; every term is positive.
Real lower_incomplete_gamma(const Real& a, const Real& x);

// gamma(a + k, x) for k = 0..K.  The top value comes from the series and the
// rest from gamma(a, x) = (gamma(a + 1, x) + x^a e^{-x})/a, which only adds
// positive quantities.
std::vector<Real> lower_incomplete_gamma_sequence(const Real& a, const Real& x, unsigned K);

// One step of gamma(a + 1, x) = a gamma(a, x) - x^a e^{-x} in either direction.
Real incomplete_gamma_step_up(const Real& a, const Real& x, const Real& gamma_a);
Real incomplete_gamma_step_down(const Real& a, const Real& x, const Real& gamma_a_plus_1);

// Gamma(s, x) for any real s and x > 0, by the Legendre continued fraction.
Real upper_incomplete_gamma(const Real& s, const Real& x);

// I_nu(z) = e^z/(sqrt(2 pi z) Gamma(nu + 1/2))
//           * sum_k (-1)^k binom(nu - 1/2, k) gamma(nu + k + 1/2, 2z)/(2z)^k, nu > -1/2.
ExpansionResult<Real> besseli_expand(const BesselParams& p, unsigned N);
ExpansionResult<Real> besseli_expand(const BesselParams& p, const Truncation& t);

// I_nu(z) from its ascending series.
Real besseli_series(const Real& nu, const Real& z);

// U(k, b, x) for k = 0..K: U(0, b, x) = 1, U(1, b, x) = x^{1-b} e^x Gamma(b - 1, x),
// then the contiguous relation
//   U(a + 1) = -(U(a - 1) + (b - 2a - x) U(a))/(a (a - b + 1)).
// U is the recessive solution of that relation, so it runs with guard bits.
std::vector<Real> u_functions(unsigned K, const Real& b, const Real& x);
Real u_function(unsigned k, const Real& b, const Real& x);

// K_nu(z) = sqrt(pi/(2z)) e^{-z} sum_k (nu + 1/2)_k (nu - 1/2)_k/k! U(k, 1/2 - nu, 2z).
ExpansionResult<Real> besselk_expand(const Real& nu, const Real& z, unsigned N);
ExpansionResult<Real> besselk_expand(const Real& nu, const Real& z, const Truncation& t);

// K_nu(z) from sqrt(pi) (2z)^nu e^{-z}/Gamma(nu + 1/2) times the integral of
// e^{-2zt} (t(1+t))^{nu-1/2} over (0, inf), by exp-sinh quadrature.
Real besselk_quadrature(const Real& nu, const Real& z);

// Integral of e^{-xt} (1+t)^{b-2} over (0, inf), which is U(1, b, x).
Real u1_quadrature(const Real& b, const Real& x);

// e^{2 kappa z} (1 - z)^{kappa - lambda} (1 + z)^{-kappa - lambda} = sum_n A_n z^n.
struct TricomiCoeffs {
    Real kappa, lambda;
    std::vector<Real> A;
};

// A_0..A_N by convolving the three power series.
TricomiCoeffs tricomi_coeffs(const Real& kappa, const Real& lambda, unsigned N);

// The same coefficients from (n + 1) A_{n+1} = (n - 1 + 2 lambda) A_{n-1} - 2 kappa A_{n-2},
// which follows from (1 - z^2) G' = (2 lambda z - 2 kappa z^2) G.
std::vector<Real> tricomi_coeffs_recursive(const Real& kappa, const Real& lambda, unsigned N);

// J_mu(y) for real y > 0 by the ascending series.
Real bessel_j(const Real& mu, const Real& y);

// 1F1(a, c; z) = e^{z/2} Gamma(c) (kappa z)^{(1-c)/2}
//                * sum_n A_n(kappa, c/2) (z/(4 kappa))^{n/2} J_{c-1+n}(2 sqrt(kappa z)).
// Each term is evaluated as A_n (z/2)^n sum_m (-kappa z)^m/(m! (c)_{n+m}),
// which is the same product with the fractional powers cancelled, so any
// complex z, either sign of kappa z and the limit kappa = 0 are allowed.
ExpansionResult<Complex> kummer_expand(const KummerParams& p, unsigned N);
ExpansionResult<Complex> kummer_expand(const KummerParams& p, const Truncation& t);

// 1F1(a, c; z) = sum_k (a)_k/(c)_k z^k/k!.
Complex kummer_series(const Real& a, const Real& c, const Complex& z);

}  // namespace polyasym
