#pragma once

#include "polyasym/contour.hpp"
#include "polyasym/expansion.hpp"
#include "polyasym/signed_log.hpp"

#include <utility>
#include <vector>

namespace polyasym {

// L_n^(alpha)(n x) = sum_k [A_k Phi_k(x, n) + B_k Psi_k(x, n)], convergent for |x| > 1.
struct LaguerreParams {
    Complex alpha;
    Complex x;
    unsigned n = 1;
};

// Saddle points of phi(x, w) = x w/(w - 1) - log w.
struct LaguerreSaddles {
    Complex w_plus, w_minus;
    Complex xi;  // sqrt(x(4 - x)), i sqrt(x(x - 4)) for x >= 4
};

LaguerreSaddles saddles(const Complex& x);

struct PhiPsiSequences {
    std::vector<Complex> phi, psi;

    SignedLogValue log_abs_phi(std::size_t k) const;
    SignedLogValue log_abs_psi(std::size_t k) const;
};

// Phi_0 = L_n^(1/2)(nx) and Psi_0 = L_{n-1}^(1/2)(nx) from the Hermite forms,
// then the coupled recurrences in k.  The recurrences lose accuracy once k
// passes n/2, so K is limited to 2K <= n + 6.
PhiPsiSequences phi_psi_sequences(const LaguerreParams& p, unsigned K);

// Phi_k = sum_j C(k,j) x^{k-j} L^(1/2-2j)_{n-k+j}(nx), Psi_k likewise with
// degree n-k+j-1.  Extra precision is added until the cancellation in the
// sums is covered.
std::pair<Complex, Complex> phi_psi_direct(const LaguerreParams& p, unsigned k);

// Phi_0 .. Phi_K, Psi_0 .. Psi_K: recurrence as far as it is reliable, finite
// sums beyond.
PhiPsiSequences phi_psi_hybrid(const LaguerreParams& p, unsigned K);

// Phi_k = P_k Phi_0 + Q_k Psi_0 and Psi_k = R_k Phi_0 + S_k Psi_0, obtained by
// running the recurrences from unit starting values.
struct TransferCoefficients {
    std::vector<Complex> P, Q, R, S;
};

TransferCoefficients transfer_coefficients(const LaguerreParams& p, unsigned K);

// Coefficients of (1 - w)^beta = sum_k [A_k + B_k w] ((w - w+)(w - w-))^k,
// beta = 1/2 - alpha.
struct LaguerreABCoeffs {
    Complex beta;
    std::vector<Complex> A, B;
};

// A_0, B_0 in closed form: with x = 4 sin^2(t/2), u = (t - pi)/2,
//   A_0 = (2 sin(t/2))^beta sin((2 - beta) u)/sin(2u),
//   B_0 = -(2 sin(t/2))^beta sin(beta u)/sin(2u),
// and with x = 4 cosh^2(t/2) for x > 4,
//   A_0 = (2 cosh(t/2))^beta sinh((2 - beta) t/2)/sinh t,
//   B_0 = -(2 cosh(t/2))^beta sinh(beta t/2)/sinh t.
// Off the positive axis they follow from f(w+) and f(w-).
std::pair<Complex, Complex> ab_start(const Complex& alpha, const Complex& x);

// A_0, B_0 from the trigonometric (x <= 4) or hyperbolic (x >= 4) closed
// forms and the rest from the two-term recursion in k.  The recursion divides
// by x - 4, so for |x - 4| < 1/2 the coefficients come from a re-expansion
// about the midpoint of the saddles instead.
LaguerreABCoeffs ab_coeffs(const Complex& alpha, const Complex& x, unsigned K);

// a_k from the explicit double sum; w1 = w+ carries the (w - w+) factor.
// Divides by powers of xi, so x must stay away from 4.
std::vector<Complex> ak_direct(const Complex& alpha, const Complex& x, unsigned K);
// A_k, B_k assembled from ak_direct and its mirror image in the saddles.
LaguerreABCoeffs ab_coeffs_direct(const Complex& alpha, const Complex& x, unsigned K);

ExpansionResult<Complex> laguerre_expand(const LaguerreParams& p, unsigned N);
ExpansionResult<Complex> laguerre_expand(const LaguerreParams& p, const Truncation& t);

// Trapezoidal rule for the loop integrals defining Phi_k and Psi_k.
std::pair<Complex, Complex> contour_phi_psi_oracle(const LaguerreParams& p, unsigned k, const ContourSpec& c = {});

}  // namespace polyasym
