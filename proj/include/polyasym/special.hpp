#pragma once

#include "polyasym/complex.hpp"
#include "polyasym/signed_log.hpp"

#include <cstddef>
#include <functional>
#include <limits>
#include <vector>

namespace polyasym {

inline Real magnitude(const Real& v) { return abs(v); }
inline Real magnitude(const Complex& v) { return abs(v); }

// Rising factorial a(a+1)...(a+n-1); 1 for n = 0.
template <class T>
T pochhammer(const T& a, unsigned n)
{
    T r(1);
    for (unsigned i = 0; i < n; ++i)
        r *= a + T(i);
    return r;
}

// a(a-1)...(a-k+1)/k!, computed as a falling product so that negative
// integer upper arguments need no special handling.
template <class T>
T binom_general(const T& a, unsigned k)
{
    T r(1);
    for (unsigned i = 0; i < k; ++i) {
        r *= a - T(i);
        r /= Real(i + 1);
    }
    return r;
}

// Sums in a balanced binary tree, which bounds the rounding error growth by
// log2(size) instead of size.
template <class T>
T pairwise_sum(const std::vector<T>& v, std::size_t lo, std::size_t hi)
{
    if (hi <= lo)
        return T(0);
    if (hi - lo <= 8) {
        T s = v[lo];
        for (std::size_t i = lo + 1; i < hi; ++i)
            s += v[i];
        return s;
    }
    std::size_t mid = lo + (hi - lo) / 2;
    return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

template <class T>
T pairwise_sum(const std::vector<T>& v)
{
    return pairwise_sum(v, 0, v.size());
}

// A finite sum together with the sum of the magnitudes of its terms; the
// ratio measures how many bits were lost to cancellation.
template <class T>
struct CheckedSum {
    T value;
    Real magnitude;

    // log2(magnitude / |value|); infinite when the sum vanishes.
    Real lost_bits() const
    {
        Real v = polyasym::magnitude(value);
        if (v == 0)
            return magnitude == 0 ? Real(0) : Real(std::numeric_limits<double>::infinity());
        return log2(magnitude / v);
    }
};

template <class T>
CheckedSum<T> checked_sum(const std::vector<T>& terms)
{
    CheckedSum<T> s{pairwise_sum(terms), Real(0)};
    for (const T& t : terms)
        s.magnitude += polyasym::magnitude(t);
    return s;
}

// Copies rounded to the current working precision.
Real at_working_precision(const Real& v);
Complex at_working_precision(const Complex& z);

// Runs `compute` with increasing extra precision until two successive runs
// agree elementwise to the working precision, and returns the last run
// rounded to the working precision.  Stops at max_extra bits regardless.
std::vector<Complex> escalate_precision(const std::function<std::vector<Complex>()>& compute,
                                        unsigned first_extra = 64, unsigned max_extra = 8192);

Real gamma(const Real& x);
Real lgamma_abs(const Real& x);
Real factorial(unsigned n);

// Physicists' Hermite polynomial by the three-term recurrence, rescaled so
// that intermediate values stay near unity.
SignedLogValue hermite_eval(unsigned n, const Real& y);

Real chebyshev_T(unsigned n, const Real& x);
Real chebyshev_U(unsigned n, const Real& x);
// cos(n t) and sin((n+1) t)/sin t with x = cos t; requires |x| <= 1.
Real chebyshev_T_trig(unsigned n, const Real& x);
Real chebyshev_U_trig(unsigned n, const Real& x);

// L_n^(alpha)(y) = sum_k (-1)^k binom(n+alpha, n-k) y^k / k!; zero for n < 0.
Real laguerre_direct(const Real& alpha, long n, const Real& y);
Complex laguerre_direct(const Complex& alpha, long n, const Complex& y);
CheckedSum<Real> laguerre_direct_checked(const Real& alpha, long n, const Real& y);
CheckedSum<Complex> laguerre_direct_checked(const Complex& alpha, long n, const Complex& y);

// P_n^(alpha,beta)(x) by the three-term recurrence in n; zero for n < 0.
Real jacobi_direct(const Real& alpha, const Real& beta, long n, const Real& x);

// C_n^a(y) = sum_k binom(n,k) binom(y,k) k! (-a)^(n-k).
Real charlier_direct(const Real& a, long n, const Real& y);
Complex charlier_direct(const Complex& a, long n, const Complex& y);

}  // namespace polyasym
