#pragma once

#include "polyasym/contour.hpp"
#include "polyasym/expansion.hpp"
#include "polyasym/signed_log.hpp"

#include <vector>

namespace polyasym {

// Expansion of C_n^a(n x) = e^{a/(1-x)} sum_k (-a)^k/k! Phi_k(x, n).
struct CharlierParams {
    Complex a;
    Complex x;
    unsigned n = 1;
    Real delta = Real("1e-3");  // exclusion radius around the saddle at infinity, x = 1
};

struct SaddleInfo {
    Complex w0;  // 1/(x - 1), the stationary point of x log(1+w) - log w
};

SaddleInfo charlier_saddle(const CharlierParams& p);

struct PhiSequence {
    std::vector<Complex> phi;

    SignedLogValue log_abs(std::size_t k) const;
};

// Phi_0 .. Phi_K.  Phi_0 is the falling product (nx)(nx-1)...(nx-n+1), Phi_1
// follows from it and the rest from the three-term recurrence in k; a term
// whose recurrence denominator n(x-1)+k vanishes is taken from the finite
// hypergeometric sum instead.
PhiSequence phi_sequence(const CharlierParams& p, unsigned K);

// Phi_k = Phi_0 (1-x)^{-k} 2F1(-k, -n; nx-n+1; 1-x).  Where a lower parameter
// hits a nonpositive integer the limit is taken via the equivalent sum
// n! sum_j C(k,j) (1-x)^{j-k} C(nx, n-j).
Complex phi_k_hypergeometric(const CharlierParams& p, unsigned k);

// Phi_k / Phi_0 from the same recurrence started at 1; finite even where
// Phi_0 vanishes.
std::vector<Complex> phi_ratio_sequence(const CharlierParams& p, unsigned K);

ExpansionResult<Complex> charlier_expand(const CharlierParams& p, unsigned N);
ExpansionResult<Complex> charlier_expand(const CharlierParams& p, const Truncation& t = {});

// (n!/(2 pi i)) times the integral of (w - w0)^k (1+w)^{nx} w^{-n-1} on |w| = radius.
Complex contour_phi_oracle(const CharlierParams& p, unsigned k, const ContourSpec& c = {});

// All n zeros of x -> C_n^a(n x) for real a > 0, by sign changes on a grid
// followed by bisection.
std::vector<Real> charlier_zeros(const Real& a, unsigned n, const Real& tol = Real("1e-12"));

// |t_{k+1} / t_k| for the series terms t_k = (-a)^k/k! Phi_k, k in [k_begin, k_end).
std::vector<Real> term_ratio_probe(const CharlierParams& p, unsigned k_begin, unsigned k_end);

}  // namespace polyasym
