#include "polyasym/laguerre.hpp"

#include "polyasym/special.hpp"
#include "polyasym/two_point_taylor.hpp"

#include <cmath>
#include <stdexcept>

namespace polyasym {

namespace {

void check_params(const LaguerreParams& p)
{
    if (p.n == 0)
        throw std::domain_error("Laguerre expansion needs n >= 1");
    if (p.x.is_zero())
        throw std::domain_error("x = 0: the saddle points are not defined");
}

bool is_positive_real(const Complex& z) { return z.im == 0 && z.re > 0; }

Complex csin(const Complex& z)
{
    const Complex iz = Complex::i() * z;
    return (exp(iz) - exp(-iz)) / (Complex(2) * Complex::i());
}

Complex csinh(const Complex& z) { return (exp(z) - exp(-z)) / Real(2); }

// L_n^(1/2)(nx) through H_{2n+1}(sqrt(nx)) for x > 0.
Complex laguerre_half(long m, const LaguerreParams& p)
{
    if (m < 0)
        return Complex(0);
    if (!is_positive_real(p.x))
        return laguerre_direct(Complex(Real(1) / 2), m, Real(p.n) * p.x);
    const Real y = sqrt(Real(p.n) * p.x.re);
    SignedLogValue h = hermite_eval(static_cast<unsigned>(2 * m + 1), y);
    SignedLogValue d = SignedLogValue::from_real(factorial(static_cast<unsigned>(m)) *
                                                 ldexp(Real(1), static_cast<int>(2 * m + 1)) * y);
    Real v = (h / d).to_real();
    return Complex(m % 2 == 0 ? v : Real(-v));
}

// Advances (phi, psi) from index `from` to K with the coupled recurrences.
void run_recurrence(const Complex& x, unsigned n, std::vector<Complex>& phi, std::vector<Complex>& psi,
                    unsigned from, unsigned K)
{
    const Complex x2 = x * x, x3 = x2 * x;
    for (unsigned k = from; k <= K; ++k) {
        const Real kr(k), km1(Real(k) - 1);
        const Complex a1 = km1 * (x2 - Real(2) * x - Complex(2)) - Complex(Real(1) / 2);
        const Complex a2 = km1 * x * (Complex(2) - x);
        const Complex b1 = km1 * (Complex(2) - Real(3) * x) + (Complex(1) - x) / Real(2);
        const Complex b2 = km1 * x * (Real(4) * x - x2 - Complex(2));
        const Complex c0 = (2 - 3 * kr) * x + Complex(2 * km1) + (Complex(1) - x) / Real(2);
        const Complex c1 = -km1 * x3 + Real(4) * km1 * x2 + kr * x - Complex(2 * km1) + (x - Complex(1)) / Real(2);
        const Complex c2 = -b2;
        const Complex d1 = (4 * kr - 3) * x2 + (8 - 10 * kr) * x + Complex(2 * km1) +
                           (x2 - Real(3) * x + Complex(1)) / Real(2);
        const Complex d2 = km1 * x * (x3 - Real(6) * x2 + Real(9) * x - Complex(2));

        const Complex phi2 = k >= 2 ? phi[k - 2] : Complex(0);
        const Complex psi2 = k >= 2 ? psi[k - 2] : Complex(0);
        const Real den_phi = Real(n) - 2 * kr + Real(3) / 2;
        const Real den_psi = Real(n) - 2 * kr + Real(1) / 2;
        phi.push_back((a1 * phi[k - 1] + a2 * phi2 + b1 * psi[k - 1] + b2 * psi2) / den_phi);
        psi.push_back((c0 * phi[k] + c1 * phi[k - 1] + c2 * phi2 + d1 * psi[k - 1] + d2 * psi2) / den_psi);
    }
}

unsigned recurrence_limit(unsigned n) { return (n + 6) / 2; }

struct DirectSums {
    CheckedSum<Complex> phi, psi;
};

DirectSums direct_sums(const LaguerreParams& p, unsigned k)
{
    const Complex y = Real(p.n) * p.x;
    const long n = p.n;
    std::vector<Complex> tphi, tpsi;
    Real mphi(0), mpsi(0);
    Real ckj(1);
    for (unsigned j = 0; j <= k; ++j) {
        const Complex w = ckj * pow(p.x, static_cast<long>(k - j));
        const Complex order(Real(1) / 2 - 2 * Real(j));
        const long deg = n - static_cast<long>(k) + static_cast<long>(j);
        if (deg >= 0) {
            CheckedSum<Complex> l = laguerre_direct_checked(order, deg, y);
            tphi.push_back(w * l.value);
            mphi += abs(w) * l.magnitude;
        }
        if (deg >= 1) {
            CheckedSum<Complex> l = laguerre_direct_checked(order, deg - 1, y);
            tpsi.push_back(w * l.value);
            mpsi += abs(w) * l.magnitude;
        }
        ckj = ckj * Real(k - j) / Real(j + 1);
    }
    return {{pairwise_sum(tphi), mphi}, {pairwise_sum(tpsi), mpsi}};
}

}  // namespace

LaguerreSaddles saddles(const Complex& x)
{
    if (x.is_zero())
        throw std::domain_error("saddles: x must be nonzero");
    LaguerreSaddles s;
    if (x.im == 0 && x.re >= 4)
        s.xi = Complex(Real(0), sqrt(x.re * (x.re - 4)));
    else
        s.xi = sqrt(x * (Complex(4) - x));
    const Complex m = Complex(1) - x / Real(2);
    const Complex h = Complex::i() * s.xi / Real(2);
    s.w_plus = m + h;
    s.w_minus = m - h;
    return s;
}

namespace {

// Inputs carried at the current default precision; MPFR results otherwise
// keep the precision of their operands.
LaguerreParams promoted(const LaguerreParams& p)
{
    return {at_working_precision(p.alpha), at_working_precision(p.x), p.n};
}

}  // namespace

SignedLogValue PhiPsiSequences::log_abs_phi(std::size_t k) const { return SignedLogValue::from_real(abs(phi.at(k))); }
SignedLogValue PhiPsiSequences::log_abs_psi(std::size_t k) const { return SignedLogValue::from_real(abs(psi.at(k))); }

PhiPsiSequences phi_psi_sequences(const LaguerreParams& p, unsigned K)
{
    check_params(p);
    if (K > recurrence_limit(p.n))
        throw std::domain_error("recurrence depth exceeds degree");
    // The recurrences amplify rounding errors by several bits per step.
    const std::vector<Complex> packed = escalate_precision([&] {
        const LaguerreParams q = promoted(p);
        std::vector<Complex> phi{laguerre_half(q.n, q)};
        std::vector<Complex> psi{laguerre_half(static_cast<long>(q.n) - 1, q)};
        run_recurrence(q.x, q.n, phi, psi, 1, K);
        phi.insert(phi.end(), psi.begin(), psi.end());
        return phi;
    });
    PhiPsiSequences s;
    s.phi.assign(packed.begin(), packed.begin() + K + 1);
    s.psi.assign(packed.begin() + K + 1, packed.end());
    return s;
}

std::pair<Complex, Complex> phi_psi_direct(const LaguerreParams& p, unsigned k)
{
    check_params(p);
    const unsigned base = working_bits();
    unsigned extra = 32;
    for (int attempt = 0;; ++attempt) {
        DirectSums d;
        Real lost;
        {
            PrecisionScope scope(base + extra);
            d = direct_sums(promoted(p), k);
            lost = d.phi.lost_bits();
            if (d.psi.lost_bits() > lost)
                lost = d.psi.lost_bits();
        }
        // An exact zero gives lost = inf; accept it once the precision has
        // been raised a few times.
        const bool finite = isfinite(lost);
        if ((finite && lost + 40 <= extra) || attempt >= 4)
            return {at_working_precision(d.phi.value), at_working_precision(d.psi.value)};
        extra = finite ? static_cast<unsigned>(lost.convert_to<double>()) + 64 : 2 * extra;
    }
}

PhiPsiSequences phi_psi_hybrid(const LaguerreParams& p, unsigned K)
{
    PhiPsiSequences s = phi_psi_sequences(p, std::min(K, recurrence_limit(p.n)));
    for (unsigned k = static_cast<unsigned>(s.phi.size()); k <= K; ++k) {
        auto [phi, psi] = phi_psi_direct(p, k);
        s.phi.push_back(phi);
        s.psi.push_back(psi);
    }
    return s;
}

TransferCoefficients transfer_coefficients(const LaguerreParams& p, unsigned K)
{
    check_params(p);
    std::vector<Complex> phi1{Complex(1)}, psi1{Complex(0)}, phi2{Complex(0)}, psi2{Complex(1)};
    run_recurrence(p.x, p.n, phi1, psi1, 1, K);
    run_recurrence(p.x, p.n, phi2, psi2, 1, K);
    return {phi1, phi2, psi1, psi2};
}

std::pair<Complex, Complex> ab_start(const Complex& alpha, const Complex& x)
{
    const LaguerreSaddles s = saddles(x);
    const Complex beta = Complex(Real(1) / 2) - alpha;
    const Complex two_beta = pow(Complex(2), beta);
    Complex A0, B0;
    if (is_positive_real(x) && x.re < 4) {
        const Real theta = 2 * asin(sqrt(x.re) / 2);
        const Complex u((theta - pi()) / 2);
        const Complex pre = two_beta * pow(Complex(sqrt(x.re) / 2), beta);
        const Complex den = csin(Real(2) * u);
        A0 = pre * csin((Complex(2) - beta) * u) / den;
        B0 = -pre * csin(beta * u) / den;
    } else if (is_positive_real(x) && x.re == 4) {
        A0 = two_beta * (Complex(2) - beta) / Real(2);
        B0 = -two_beta * beta / Real(2);
    } else if (is_positive_real(x)) {
        const Real c_half = sqrt(x.re) / 2;
        const Real theta = 2 * acosh(c_half);
        const Complex pre = two_beta * pow(Complex(c_half), beta);
        const Complex den = csinh(Complex(theta));
        A0 = pre * csinh((Complex(2) - beta) * theta / Real(2)) / den;
        B0 = -pre * csinh(beta * theta / Real(2)) / den;
    } else {
        const Complex fp = pow(Complex(1) - s.w_plus, beta);
        const Complex fm = pow(Complex(1) - s.w_minus, beta);
        B0 = (fp - fm) / (s.w_plus - s.w_minus);
        A0 = fp - B0 * s.w_plus;
    }
    return {A0, B0};
}

namespace {

// (1 - w)^beta expanded about the midpoint of the saddles.
void centered_coeffs(const Complex& beta, const LaguerreSaddles& s, const Complex& x, unsigned K,
                     std::vector<Complex>& A, std::vector<Complex>& B)
{
    DerivativeProvider f = power_product_provider(Complex(1), {PowerFactor{Complex(1), Complex(-1), beta}});
    ABCoeffs ab = centered_ab_coeffs(f, s.w_plus, s.w_minus, K, abs(x) / Real(2));
    A = std::move(ab.A);
    B = std::move(ab.B);
}

void recursion_coeffs(const Complex& alpha, const Complex& x, unsigned K, std::vector<Complex>& A,
                      std::vector<Complex>& B)
{
    const auto [A0, B0] = ab_start(alpha, x);
    A = {A0};
    B = {B0};

    const Complex xm4 = x - Complex(4), xm3 = x - Complex(3);
    for (unsigned k = 0; k < K; ++k) {
        const Real kr(k), k1(k + 1);
        const Complex lo = alpha - Complex(Real(1) / 2) + Complex(2 * kr);
        const Complex hi = alpha + Complex(Real(1) / 2) + Complex(2 * kr);
        const Complex Bn = (lo * A[k] - (kr * x + Complex(1)) * B[k] - hi * B[k]) / (k1 * x * xm4);
        const Complex An = (hi * B[k] + k1 * x * xm3 * Bn) / (k1 * x);
        A.push_back(An);
        B.push_back(Bn);
    }
}

}  // namespace

LaguerreABCoeffs ab_coeffs(const Complex& alpha, const Complex& x, unsigned K)
{
    const LaguerreSaddles s = saddles(x);
    LaguerreABCoeffs c;
    c.beta = Complex(Real(1) / 2) - alpha;
    const bool near_coalescence = abs(x - Complex(4)) < Real(1) / 2;

    // Both routes lose bits in proportion to K: the recursion through its
    // growing parasitic solution, the re-expansion through cancellation
    // between terms of size (4/(|x| - |x - 4|))^k relative to the result.
    unsigned first_extra = 64;
    if (near_coalescence) {
        const Real per_term = log2(Real(4) / (abs(x) - abs(x - Complex(4))));
        first_extra += static_cast<unsigned>(std::ceil((per_term * K).convert_to<double>()));
    }
    const std::vector<Complex> packed = escalate_precision(
        [&] {
            const Complex xh = at_working_precision(x), alphah = at_working_precision(alpha);
            const LaguerreSaddles sh = saddles(xh);
            const Complex beta = Complex(Real(1) / 2) - alphah;
            std::vector<Complex> A, B;
            if (near_coalescence)
                centered_coeffs(beta, sh, xh, K, A, B);
            else
                recursion_coeffs(alphah, xh, K, A, B);
            A.insert(A.end(), B.begin(), B.end());
            return A;
        },
        first_extra);
    c.A.assign(packed.begin(), packed.begin() + K + 1);
    c.B.assign(packed.begin() + K + 1, packed.end());
    return c;
}

namespace {

// a_k for the expansion with the (w - wp) factor; xi is defined by wp - wm = i xi.
std::vector<Complex> ak_formula(const Complex& alpha, const Complex& wp, const Complex& wm, const Complex& xi,
                                unsigned K)
{
    const Complex ixi = Complex::i() * xi;
    const Complex half(Real(1) / 2);
    std::vector<Complex> a{Complex::i() * pow(Complex(1) - wm, half - alpha) / xi};
    for (unsigned k = 1; k <= K; ++k) {
        Complex sum(0);
        for (unsigned j = 0; j <= k; ++j) {
            const Complex coef = factorial(k + j - 1) * pochhammer(alpha - half, k - j) /
                                 (factorial(k) * factorial(j) * factorial(k - j)) /
                                 pow(ixi, static_cast<long>(k + j + 1));
            const Complex mu = -(alpha + Complex(Real(k) - Real(j)) - half);
            const Complex first = Real(j % 2 == 0 ? 1 : -1) * Real(j) * pow(Complex(1) - wp, mu);
            const Complex second = Real(k % 2 == 0 ? 1 : -1) * Real(k) * pow(Complex(1) - wm, mu);
            sum += coef * (first - second);
        }
        a.push_back(sum);
    }
    return a;
}

}  // namespace

std::vector<Complex> ak_direct(const Complex& alpha, const Complex& x, unsigned K)
{
    const LaguerreSaddles s = saddles(x);
    if (s.xi.is_zero())
        throw std::domain_error("ak_direct: coalescing saddles (x = 4)");
    return ak_formula(alpha, s.w_plus, s.w_minus, s.xi, K);
}

LaguerreABCoeffs ab_coeffs_direct(const Complex& alpha, const Complex& x, unsigned K)
{
    const LaguerreSaddles s = saddles(x);
    if (s.xi.is_zero())
        throw std::domain_error("ab_coeffs_direct: coalescing saddles (x = 4)");
    const std::vector<Complex> a = ak_formula(alpha, s.w_plus, s.w_minus, s.xi, K);
    const std::vector<Complex> ap = ak_formula(alpha, s.w_minus, s.w_plus, -s.xi, K);
    LaguerreABCoeffs c;
    c.beta = Complex(Real(1) / 2) - alpha;
    for (unsigned k = 0; k <= K; ++k) {
        c.A.push_back(-a[k] * s.w_plus - ap[k] * s.w_minus);
        c.B.push_back(a[k] + ap[k]);
    }
    return c;
}

namespace {

ExpansionResult<Complex> expand(const LaguerreParams& p, unsigned max_order, const Truncation* t)
{
    check_params(p);
    const LaguerreABCoeffs ab = ab_coeffs(p.alpha, p.x, max_order);
    PhiPsiSequences s = phi_psi_sequences(p, std::min(max_order, recurrence_limit(p.n)));
    ExpansionResult<Complex> r;
    r.outside_proven_region = abs(p.x) <= 1;
    SeriesAccumulator<Complex> acc(r);
    for (unsigned k = 0; k <= max_order; ++k) {
        if (k >= s.phi.size()) {
            auto [phi, psi] = phi_psi_direct(p, k);
            s.phi.push_back(phi);
            s.psi.push_back(psi);
        }
        acc.add(ab.A[k] * s.phi[k] + ab.B[k] * s.psi[k]);
        if (t && acc.settled(*t))
            break;
    }
    return r;
}

}  // namespace

ExpansionResult<Complex> laguerre_expand(const LaguerreParams& p, unsigned N)
{
    return expand(p, N, nullptr);
}

ExpansionResult<Complex> laguerre_expand(const LaguerreParams& p, const Truncation& t)
{
    return expand(p, t.max_order, &t);
}

std::pair<Complex, Complex> contour_phi_psi_oracle(const LaguerreParams& p, unsigned k, const ContourSpec& c)
{
    check_params(p);
    if (c.radius >= 1)
        throw std::domain_error("contour radius must be below 1 to keep w = 1 outside");
    const LaguerreSaddles s = saddles(p.x);
    const Real n(p.n);
    const Complex mu(Real(-3) / 2);
    auto psi_integrand = [&](const Complex& w) {
        const Complex q = (w - s.w_plus) * (w - s.w_minus);
        return pow(q, static_cast<long>(k)) * exp(n * p.x * w / (w - Complex(1))) *
               pow(w, -static_cast<long>(p.n)) * pow(Complex(1) - w, mu);
    };
    auto phi_integrand = [&](const Complex& w) { return psi_integrand(w) / w; };
    return {cauchy_integral(phi_integrand, c), cauchy_integral(psi_integrand, c)};
}

}  // namespace polyasym
