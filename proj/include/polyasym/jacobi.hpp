#pragma once

#include "polyasym/contour.hpp"
#include "polyasym/expansion.hpp"
#include "polyasym/two_point_taylor.hpp"

#include <utility>
#include <vector>

namespace polyasym {

// P_n^(alpha,beta)(x) = sum_k [A_k Phi_k(x, n) + B_k Psi_k(x, n)] for -1 < x < 1.
struct JacobiParams {
    Real alpha;
    Real beta;
    Real x;
    unsigned n = 1;
    Real delta = Real("1e-6");  // distance kept from x = +-1
};

// Saddle points +-w0 of log(1+w+x) + log(1-w-x) - log w.
struct JacobiSaddles {
    Complex w0;  // i sqrt(1 - x^2)
};

JacobiSaddles jacobi_saddles(const Real& x);

struct JacobiPhiPsi {
    std::vector<Real> phi, psi;
};

// Phi_0 = P_n^(-1/2,-1/2)(x) and Psi_0 = -(1-x^2)/2 P_{n-1}^(1/2,1/2)(x) from
// the Chebyshev forms, Phi_1 and Psi_1 from contiguous relations, then the
// coupled recurrences up to k = n and the
// finite sums
//   Phi_k = sum_j C(k,j) (1-x^2)^{k+j}/4^j P_{n-2j}^(2j-1/2,2j-1/2)(x),
//   Psi_k = -(1-x^2)/2 sum_j C(k,j) (1-x^2)^{k+j}/4^j P_{n-1-2j}^(2j+1/2,2j+1/2)(x)
// beyond, where the recurrences lose accuracy.
JacobiPhiPsi jacobi_phi_psi(const JacobiParams& p, unsigned K);

// The recurrences alone, for any K.
JacobiPhiPsi jacobi_phi_psi_recurrence(const JacobiParams& p, unsigned K);

std::pair<Real, Real> jacobi_phi_psi_direct(const JacobiParams& p, unsigned k);

// Phi_k = P_k Phi_0 + Q_k Psi_0 and Psi_k = R_k Phi_0 + S_k Psi_0.
struct JacobiTransfer {
    std::vector<Real> P, Q, R, S;
};

JacobiTransfer jacobi_transfer_coefficients(const JacobiParams& p, unsigned K);

// Coefficients of f(w) = ((1-w-x)/(1-x))^{alpha+1/2} ((1+w+x)/(1+x))^{beta+1/2}
// = sum_k [A_k + B_k w] (w^2 + 1 - x^2)^k.  `a` holds the unnormalised
// a_k multiplying (w - w0).
struct JacobiABCoeffs {
    std::vector<Real> A, B;
    std::vector<Complex> a;
};

// a_k from the explicit double sums; cost grows like K^3.
JacobiABCoeffs jacobi_ab_coeffs(const Real& alpha, const Real& beta, const Real& x, unsigned K);

// A_k, B_k from the recursion implied by p f' = q f with p = 1 - (w+x)^2,
// q = (beta - alpha) - (alpha + beta + 1)(w + x); linear cost in K.
JacobiABCoeffs jacobi_ab_coeffs_recursive(const Real& alpha, const Real& beta, const Real& x, unsigned K);

ExpansionResult<Real> jacobi_expand(const JacobiParams& p, unsigned N);
ExpansionResult<Real> jacobi_expand(const JacobiParams& p, const Truncation& t);

// Trapezoidal rule for the loop integrals defining Phi_k and Psi_k; the
// radius must stay below 1 - |x| so that w = -x +- 1 lie outside.
std::pair<Complex, Complex> contour_jacobi_oracle(const JacobiParams& p, unsigned k, const ContourSpec& c);

// The same loop integral with f reinstated, which is P_n^(alpha,beta)(x).
Complex contour_jacobi_polynomial(const JacobiParams& p, const ContourSpec& c);

// Convergence region of the two-point expansion: foci +-w0, branch points
// 1 - x and -1 - x.
CassiniOval jacobi_cassini(const Real& x);

}  // namespace polyasym
