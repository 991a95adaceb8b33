#include "polyasym/charlier.hpp"

#include "polyasym/special.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace polyasym {

namespace {

void check_domain(const CharlierParams& p)
{
    if (p.n == 0)
        throw std::domain_error("Charlier expansion needs n >= 1");
    if (abs(p.x - Complex(1)) < p.delta)
        throw std::domain_error("saddle at infinity: |x - 1| < delta (expansion requires x != 1)");
}

// Treats a recurrence or 2F1 denominator as zero when it is below the square
// root of the working precision relative to its natural size: the 0/0 forms
// that arise there lose half the digits.
bool near_zero(const Complex& d, const Real& size)
{
    return abs(d) <= sqrt(working_epsilon()) * size;
}

Complex falling_product(const Complex& y, unsigned n)
{
    Complex r(1);
    for (unsigned i = 0; i < n; ++i)
        r *= y - Complex(i);
    return r;
}

// n! sum_j C(k,j) (1-x)^{j-k} C(nx, n-j); finite for every x != 1.
Complex phi_k_binomial_sum(const CharlierParams& p, unsigned k)
{
    const Complex nx = Real(p.n) * p.x;
    const Complex u = Complex(1) - p.x;
    std::vector<Complex> terms;
    Real ckj(1);
    for (unsigned j = 0; j <= k && j <= p.n; ++j) {
        terms.push_back(ckj * pow(u, static_cast<long>(j) - static_cast<long>(k)) * binom_general(nx, p.n - j));
        ckj = ckj * Real(k - j) / Real(j + 1);
    }
    return factorial(p.n) * pairwise_sum(terms);
}

// Runs the recurrence in k from the two given starting values.
void run_recurrence(const CharlierParams& p, std::vector<Complex>& v, unsigned K, bool allow_fallback)
{
    const Complex xm1 = p.x - Complex(1);
    for (unsigned k = 2; k <= K; ++k) {
        const Complex denom = Real(p.n) * xm1 + Complex(k);
        if (near_zero(denom, Real(p.n) * abs(xm1) + Real(k))) {
            if (!allow_fallback)
                throw std::domain_error("recurrence denominator n(x-1)+k vanishes");
            v.push_back(phi_k_hypergeometric(p, k));
            continue;
        }
        const Real kr(k);
        const Complex c1 = (p.x * (1 - kr) - Complex(kr)) / xm1;
        const Complex c2 = p.x * (1 - kr) / (xm1 * xm1);
        v.push_back((c1 * v[k - 1] + c2 * v[k - 2]) / denom);
    }
}

}  // namespace

SaddleInfo charlier_saddle(const CharlierParams& p)
{
    check_domain(p);
    return {Complex(1) / (p.x - Complex(1))};
}

SignedLogValue PhiSequence::log_abs(std::size_t k) const
{
    return SignedLogValue::from_real(abs(phi.at(k)));
}

PhiSequence phi_sequence(const CharlierParams& p, unsigned K)
{
    check_domain(p);
    const Complex nx = Real(p.n) * p.x;
    PhiSequence s;
    s.phi.push_back(falling_product(nx, p.n));
    if (K == 0)
        return s;
    const Complex d1 = (Complex(1) - p.x) * (Real(p.n) * (p.x - Complex(1)) + Complex(1));
    const Real d1_size = Real(p.n) * abs(p.x - Complex(1)) + 1;
    s.phi.push_back(near_zero(d1, d1_size) ? phi_k_hypergeometric(p, 1) : s.phi[0] / d1);
    run_recurrence(p, s.phi, K, true);
    return s;
}

Complex phi_k_hypergeometric(const CharlierParams& p, unsigned k)
{
    check_domain(p);
    const Complex nx = Real(p.n) * p.x;
    const Complex u = Complex(1) - p.x;
    const Complex c = nx - Complex(p.n) + Complex(1);

    // Terminating 2F1(-k, -n; c; u); terms beyond min(k, n) vanish.
    std::vector<Complex> terms;
    Complex t(1), c_poch(1);
    for (unsigned j = 0; j <= k && j <= p.n; ++j) {
        if (j > 0) {
            c_poch *= c + Complex(j - 1);
            if (near_zero(c + Complex(j - 1), abs(c) + Real(j)))
                return phi_k_binomial_sum(p, k);
            t *= Real(-static_cast<long>(k) + static_cast<long>(j) - 1) * Real(-static_cast<long>(p.n) + static_cast<long>(j) - 1) *
                 u / (Real(j) * (c + Complex(j - 1)));
        }
        terms.push_back(t);
    }
    return falling_product(nx, p.n) * pow(u, -static_cast<long>(k)) * pairwise_sum(terms);
}

std::vector<Complex> phi_ratio_sequence(const CharlierParams& p, unsigned K)
{
    check_domain(p);
    std::vector<Complex> r{Complex(1)};
    if (K == 0)
        return r;
    const Complex d1 = (Complex(1) - p.x) * (Real(p.n) * (p.x - Complex(1)) + Complex(1));
    if (near_zero(d1, Real(p.n) * abs(p.x - Complex(1)) + 1))
        throw std::domain_error("recurrence denominator n(x-1)+1 vanishes");
    r.push_back(Complex(1) / d1);
    run_recurrence(p, r, K, false);
    return r;
}

namespace {

ExpansionResult<Complex> expand(const CharlierParams& p, unsigned max_order, const Truncation* t)
{
    const PhiSequence s = phi_sequence(p, max_order);
    const Complex prefactor = exp(p.a / (Complex(1) - p.x));
    ExpansionResult<Complex> r;
    SeriesAccumulator<Complex> acc(r);
    Complex coeff(1);  // (-a)^k / k!
    for (unsigned k = 0; k <= max_order; ++k) {
        acc.add(prefactor * coeff * s.phi[k]);
        if (t && acc.settled(*t))
            break;
        coeff = coeff * (-p.a) / Real(k + 1);
    }
    return r;
}

}  // namespace

ExpansionResult<Complex> charlier_expand(const CharlierParams& p, unsigned N)
{
    return expand(p, N, nullptr);
}

ExpansionResult<Complex> charlier_expand(const CharlierParams& p, const Truncation& t)
{
    return expand(p, t.max_order, &t);
}

Complex contour_phi_oracle(const CharlierParams& p, unsigned k, const ContourSpec& c)
{
    if (c.radius >= 1)
        throw std::domain_error("contour radius must be below 1 to keep w = -1 outside");
    const Complex w0 = charlier_saddle(p).w0;
    const Complex nx = Real(p.n) * p.x;
    const long n = p.n;
    auto g = [&](const Complex& w) {
        return pow(w - w0, static_cast<long>(k)) * pow(Complex(1) + w, nx) * pow(w, -n - 1);
    };
    return factorial(p.n) * cauchy_integral(g, c);
}

std::vector<Real> charlier_zeros(const Real& a, unsigned n, const Real& tol)
{
    if (!(a > 0))
        throw std::domain_error("charlier_zeros needs real a > 0");
    if (n == 0)
        return {};

    // The direct sum cancels heavily near the zeros; give it enough bits for
    // the size of its largest terms.
    const unsigned extra = 4 * n * static_cast<unsigned>(std::ceil(std::log2(n + a.convert_to<double>() + 2)));
    PrecisionScope scope(working_bits() + extra);

    const Real nr(n), ah = at_working_precision(a);
    auto f = [&](const Real& x) { return charlier_direct(ah, static_cast<long>(n), nr * x); };

    // Gershgorin bound on the eigenvalues of the Jacobi matrix of C_n^a.
    const Real upper = (nr - 1 + a + 2 * sqrt(a * nr)) / nr + 1 / nr;
    const unsigned cells = static_cast<unsigned>(std::ceil((upper * 8 * nr).convert_to<double>()));
    const Real h = upper / Real(cells);

    std::vector<Real> zeros;
    Real x_lo(0), f_lo = f(x_lo);
    for (unsigned i = 1; i <= cells; ++i) {
        Real x_hi = h * Real(i), f_hi = f(x_hi);
        if (f_lo == 0) {
            zeros.push_back(x_lo);
        } else if ((f_lo < 0) != (f_hi < 0) && f_hi != 0) {
            Real lo = x_lo, hi = x_hi, flo = f_lo;
            while (hi - lo > tol) {
                Real mid = (lo + hi) / 2, fm = f(mid);
                if (fm == 0) {
                    lo = hi = mid;
                    break;
                }
                if ((fm < 0) == (flo < 0)) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            zeros.push_back((lo + hi) / 2);
        }
        x_lo = x_hi;
        f_lo = f_hi;
    }
    if (f_lo == 0)
        zeros.push_back(x_lo);

    if (zeros.size() != n) {
        std::ostringstream msg;
        msg << "bracketing failed: found " << zeros.size() << " of " << n << " zeros on grid [0, "
            << upper.convert_to<double>() << "] with " << cells << " cells of width " << h.convert_to<double>();
        throw std::runtime_error(msg.str());
    }
    return zeros;
}

std::vector<Real> term_ratio_probe(const CharlierParams& p, unsigned k_begin, unsigned k_end)
{
    const PhiSequence s = phi_sequence(p, k_end);
    std::vector<Real> ratios;
    Complex coeff(1), prev_term;
    for (unsigned k = 0; k <= k_end; ++k) {
        Complex term = coeff * s.phi[k];
        if (k > k_begin) {
            const Real num = abs(term), den = abs(prev_term);
            ratios.push_back(den == 0 ? Real(0) : Real(num / den));
        }
        prev_term = term;
        coeff = coeff * (-p.a) / Real(k + 1);
    }
    return ratios;
}

}  // namespace polyasym
