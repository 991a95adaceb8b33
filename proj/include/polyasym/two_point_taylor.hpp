#pragma once

#include "polyasym/complex.hpp"

#include <functional>
#include <vector>

namespace polyasym {

// Returns f(w), f'(w), ..., f^(M)(w).
using DerivativeProvider = std::function<std::vector<Complex>(const Complex& w, unsigned max_order)>;

// (c + s w)^mu on the principal branch.
struct PowerFactor {
    Complex c;
    Complex s;
    Complex mu;
};

// scale * prod_i (c_i + s_i w)^{mu_i}, with derivatives from the Leibniz rule.
DerivativeProvider power_product_provider(const Complex& scale, std::vector<PowerFactor> factors);
// e^{a w}
DerivativeProvider exp_provider(const Complex& a);
// sum_j coeffs[j] w^j
DerivativeProvider polynomial_provider(std::vector<Complex> coeffs);

// Taylor coefficients f^(k)(w0)/k!, k = 0..K.
std::vector<Complex> single_point_coeffs(const DerivativeProvider& f, const Complex& w0, unsigned K);

// f(w) = sum_k [a_k (w - w1) + a'_k (w - w2)] ((w - w1)(w - w2))^k
struct TwoPointCoeffs {
    Complex w1, w2;
    std::vector<Complex> a, a_prime;

    Complex partial_sum(const Complex& w, unsigned K) const;
};

TwoPointCoeffs two_point_coeffs(const DerivativeProvider& f, const Complex& w1, const Complex& w2, unsigned K);

// f(w) = sum_k [A_k + B_k w] ((w - w1)(w - w2))^k
struct ABCoeffs {
    Complex w1, w2;
    std::vector<Complex> A, B;

    Complex partial_sum(const Complex& w, unsigned K) const;
};

ABCoeffs to_AB(const TwoPointCoeffs& tp);

// A/B coefficients from the Taylor series at the midpoint m of the foci:
// with d^2 = ((w1 - w2)/2)^2, (w - m)^{2j} = (P + d^2)^j where
// P = (w - w1)(w - w2).  Stays finite as the foci merge.  `radius` is the
// distance from m to the nearest singularity of f.
ABCoeffs centered_ab_coeffs(const DerivativeProvider& f, const Complex& w1, const Complex& w2, unsigned K,
                            const Real& radius);

struct CassiniOval {
    Complex w1, w2;
    Real r;

    Real level(const Complex& w) const { return abs(w - w1) * abs(w - w2); }
    bool contains(const Complex& w) const { return level(w) < r; }
};

CassiniOval cassini_region(const Complex& w1, const Complex& w2, const std::vector<Complex>& singularities);

}  // namespace polyasym
