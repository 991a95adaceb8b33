#include "polyasym/jacobi.hpp"

#include "polyasym/special.hpp"

#include <stdexcept>

namespace polyasym {

namespace {

void check_x(const Real& x, const Real& delta)
{
    if (!(abs(x) < 1 - delta))
        throw std::domain_error("Jacobi expansion needs |x| < 1 - delta");
}

void check_params(const JacobiParams& p)
{
    if (p.n == 0)
        throw std::domain_error("Jacobi expansion needs n >= 1");
    check_x(p.x, p.delta);
}

// 2^{-2m} (2m)!/(m!)^2 = C(2m, m)/4^m
Real central_binomial_scaled(unsigned m)
{
    Real r(1);
    for (unsigned i = 1; i <= m; ++i)
        r *= Real(2 * i - 1) / Real(2 * i);
    return r;
}

Real phi0(const Real& x, unsigned n) { return central_binomial_scaled(n) * chebyshev_T_trig(n, x); }

// -(1-x^2)/2 P_{n-1}^(1/2,1/2)(x), with P_m^(1/2,1/2) = 2^{-2m}(2m+1)!/(m!(m+1)!) U_m.
Real psi0(const Real& x, unsigned n)
{
    if (n == 0)
        return Real(0);
    const unsigned m = n - 1;
    const Real scale = central_binomial_scaled(m) * Real(2 * m + 1) / Real(m + 1);
    return -(1 - x * x) / 2 * scale * chebyshev_U_trig(m, x);
}

// Phi_1, Psi_1 from contiguous relations, in terms of Phi_0 and
// p_m = P_m^(1/2,1/2)(x) for m = n-1, n-2.
std::pair<Real, Real> first_order(const Real& x, unsigned n, const Real& phi_0)
{
    const Real half = Real(1) / 2;
    const Real u = 1 - x * x, N(n);
    const Real p0 = jacobi_direct(half, half, static_cast<long>(n) - 1, x);
    const Real p1 = jacobi_direct(half, half, static_cast<long>(n) - 2, x);
    const Real phi = u / (4 * (N + 1)) * (4 * (N + 1) * phi_0 - 2 * x * (N - 1) * p0 + (2 * N - 1) * p1);
    const Real psi = -3 * u / (4 * (N + 1) * (N + 2)) * (2 * (N + 1 - 2 * x * x * N) * p0 + x * (2 * N - 1) * p1);
    return {phi, psi};
}

void run_recurrence(const Real& x, unsigned n, std::vector<Real>& phi, std::vector<Real>& psi, unsigned K)
{
    const Real u = 1 - x * x, u2 = u * u;
    for (unsigned k = static_cast<unsigned>(phi.size()); k <= K; ++k) {
        const Real kr(k), km1 = Real(k) - 1;
        const Real a1 = u * (6 * kr - 5), a2 = -4 * km1 * u2;
        const Real b1 = -x * (4 * kr - 3), b2 = 4 * x * km1 * u;
        const Real c0 = -x * (4 * kr - 1), c1 = x * u * (8 * kr - 5), c2 = -4 * x * u2 * km1;
        const Real d1 = 3 * (2 * kr - 1) * u, d2 = -4 * u2 * km1;
        const Real phi2 = k >= 2 ? phi[k - 2] : Real(0);
        const Real psi2 = k >= 2 ? psi[k - 2] : Real(0);
        phi.push_back((a1 * phi[k - 1] + a2 * phi2 + b1 * psi[k - 1] + b2 * psi2) / (Real(n) + 2 * kr - 1));
        psi.push_back((c0 * phi[k] + c1 * phi[k - 1] + c2 * phi2 + d1 * psi[k - 1] + d2 * psi2) / (Real(n) + 2 * kr));
    }
}

// The Jacobi values that enter the finite sums; they do not depend on k.
struct JacobiTable {
    std::vector<Real> phi_terms;  // P_{n-2j}^(2j-1/2,2j-1/2)(x)
    std::vector<Real> psi_terms;  // P_{n-1-2j}^(2j+1/2,2j+1/2)(x)
};

JacobiTable jacobi_table(const Real& x, unsigned n)
{
    JacobiTable t;
    const Real half = Real(1) / 2;
    for (unsigned j = 0; 2 * j <= n; ++j) {
        const Real a = 2 * Real(j) - half;
        t.phi_terms.push_back(jacobi_direct(a, a, static_cast<long>(n) - 2 * static_cast<long>(j), x));
    }
    for (unsigned j = 0; 2 * j + 1 <= n; ++j) {
        const Real a = 2 * Real(j) + half;
        t.psi_terms.push_back(jacobi_direct(a, a, static_cast<long>(n) - 1 - 2 * static_cast<long>(j), x));
    }
    return t;
}

std::pair<Real, Real> finite_sums(const Real& x, const JacobiTable& t, unsigned k)
{
    const Real u = 1 - x * x;
    std::vector<Real> tphi, tpsi;
    Real ckj(1), w = pow(u, k);  // C(k,j) u^{k+j}/4^j
    for (unsigned j = 0; j <= k; ++j) {
        if (j >= t.phi_terms.size() && j >= t.psi_terms.size())
            break;
        if (j < t.phi_terms.size())
            tphi.push_back(ckj * w * t.phi_terms[j]);
        if (j < t.psi_terms.size())
            tpsi.push_back(ckj * w * t.psi_terms[j]);
        ckj = ckj * Real(k - j) / Real(j + 1);
        w *= u / 4;
    }
    return {pairwise_sum(tphi), -u / 2 * pairwise_sum(tpsi)};
}

// Inputs carried at the current default precision; MPFR results otherwise
// keep the precision of their operands.
JacobiParams promoted(const JacobiParams& p)
{
    return {at_working_precision(p.alpha), at_working_precision(p.beta), at_working_precision(p.x), p.n, p.delta};
}

std::vector<Real> to_real(const std::vector<Complex>& v, std::size_t lo, std::size_t hi)
{
    std::vector<Real> r;
    for (std::size_t i = lo; i < hi; ++i)
        r.push_back(v[i].re);
    return r;
}

Complex w0_of(const Real& x) { return Complex(Real(0), sqrt(1 - x * x)); }

}  // namespace

JacobiSaddles jacobi_saddles(const Real& x)
{
    if (!(abs(x) < 1))
        throw std::domain_error("jacobi_saddles needs |x| < 1");
    return {w0_of(x)};
}

JacobiPhiPsi jacobi_phi_psi_recurrence(const JacobiParams& p, unsigned K)
{
    check_params(p);
    const std::vector<Complex> packed = escalate_precision([&] {
        const JacobiParams q = promoted(p);
        std::vector<Real> phi{phi0(q.x, q.n)}, psi{psi0(q.x, q.n)};
        if (K >= 1) {
            auto [phi_1, psi_1] = first_order(q.x, q.n, phi[0]);
            phi.push_back(phi_1);
            psi.push_back(psi_1);
        }
        run_recurrence(q.x, q.n, phi, psi, K);
        std::vector<Complex> out(phi.begin(), phi.end());
        out.insert(out.end(), psi.begin(), psi.end());
        return out;
    });
    return {to_real(packed, 0, K + 1), to_real(packed, K + 1, packed.size())};
}

std::pair<Real, Real> jacobi_phi_psi_direct(const JacobiParams& p, unsigned k)
{
    check_params(p);
    const std::vector<Complex> v = escalate_precision([&] {
        const Real x = at_working_precision(p.x);
        auto [phi, psi] = finite_sums(x, jacobi_table(x, p.n), k);
        return std::vector<Complex>{Complex(phi), Complex(psi)};
    });
    return {v[0].re, v[1].re};
}

JacobiPhiPsi jacobi_phi_psi(const JacobiParams& p, unsigned K)
{
    const unsigned Kr = std::min(K, p.n);
    JacobiPhiPsi s = jacobi_phi_psi_recurrence(p, Kr);
    if (K == Kr)
        return s;
    const std::vector<Complex> packed = escalate_precision([&] {
        const Real x = at_working_precision(p.x);
        const JacobiTable t = jacobi_table(x, p.n);
        std::vector<Complex> out;
        for (unsigned k = Kr + 1; k <= K; ++k) {
            auto [phi, psi] = finite_sums(x, t, k);
            out.push_back(Complex(phi, psi));
        }
        return out;
    });
    for (const Complex& z : packed) {
        s.phi.push_back(z.re);
        s.psi.push_back(z.im);
    }
    return s;
}

JacobiTransfer jacobi_transfer_coefficients(const JacobiParams& p, unsigned K)
{
    check_params(p);
    std::vector<Real> phi1{Real(1)}, psi1{Real(0)}, phi2{Real(0)}, psi2{Real(1)};
    run_recurrence(p.x, p.n, phi1, psi1, K);
    run_recurrence(p.x, p.n, phi2, psi2, K);
    return {phi1, phi2, psi1, psi2};
}

namespace {

Complex norm_factor(const Real& alpha, const Real& beta, const Real& x)
{
    return Complex(pow(1 - x, alpha + Real(1) / 2) * pow(1 + x, beta + Real(1) / 2));
}

std::vector<Complex> a_double_sum(const Real& alpha, const Real& beta, const Real& x, unsigned K)
{
    const Complex w0 = w0_of(x);
    const Real ah = alpha + Real(1) / 2, bh = beta + Real(1) / 2;
    const Complex onemx(1 - x), onepx(1 + x);
    std::vector<Complex> a{-pow(onemx + w0, Complex(ah)) * pow(onepx - w0, Complex(bh)) / (Real(2) * w0)};

    // Powers (1-x-w0)^{ah-j}, (1+x+w0)^{bh-l} and the mirrored pair.
    std::vector<Complex> pa, pb, qa, qb;
    for (unsigned j = 0; j <= K; ++j) {
        pa.push_back(pow(onemx - w0, Complex(ah - Real(j))));
        pb.push_back(pow(onepx + w0, Complex(bh - Real(j))));
        qa.push_back(pow(onemx + w0, Complex(ah - Real(j))));
        qb.push_back(pow(onepx - w0, Complex(bh - Real(j))));
    }
    std::vector<Real> poch_a{Real(1)}, poch_b{Real(1)};  // (-ah)_j, (-bh)_j
    for (unsigned j = 1; j <= K; ++j) {
        poch_a.push_back(poch_a.back() * (-ah + Real(j - 1)));
        poch_b.push_back(poch_b.back() * (-bh + Real(j - 1)));
    }
    const Complex two_w0 = Real(2) * w0;
    for (unsigned m = 1; m <= K; ++m) {
        Complex outer(0);
        for (unsigned k = 0; k <= m; ++k) {
            const unsigned r = m - k;
            Complex inner(0);
            Real crj(1);
            for (unsigned j = 0; j <= r; ++j) {
                const Real c = crj * poch_a[j] * poch_b[r - j];
                const Real s1 = (m + j) % 2 == 0 ? Real(1) : Real(-1);
                const Real s2 = (k + j) % 2 == 0 ? Real(1) : Real(-1);
                inner += c * (Real(k) * s1 * pa[j] * pb[r - j] - Real(m) * s2 * qa[j] * qb[r - j]);
                crj = crj * Real(r - j) / Real(j + 1);
            }
            outer += factorial(m + k - 1) / (factorial(k) * factorial(r)) / pow(two_w0, static_cast<long>(m + k + 1)) *
                     inner;
        }
        a.push_back(outer / factorial(m));
    }
    return a;
}

}  // namespace

JacobiABCoeffs jacobi_ab_coeffs(const Real& alpha, const Real& beta, const Real& x, unsigned K)
{
    check_x(x, Real(0));
    const std::vector<Complex> a = escalate_precision([&] {
        return a_double_sum(at_working_precision(alpha), at_working_precision(beta), at_working_precision(x), K);
    });
    JacobiABCoeffs c;
    c.a = a;
    const Complex nf = norm_factor(alpha, beta, x);
    const Real sq = sqrt(1 - x * x);
    for (const Complex& ak : a) {
        c.A.push_back(2 * (ak * Complex(sq)).im / nf.re);
        c.B.push_back(2 * ak.re / nf.re);
    }
    return c;
}

JacobiABCoeffs jacobi_ab_coeffs_recursive(const Real& alpha_in, const Real& beta_in, const Real& x_in, unsigned K)
{
    check_x(x_in, Real(0));
    const std::vector<Complex> packed = escalate_precision([&] {
        const Real x = at_working_precision(x_in), alpha = at_working_precision(alpha_in),
                   beta = at_working_precision(beta_in);
        const Complex w0 = w0_of(x);
        const Real ah = alpha + Real(1) / 2, bh = beta + Real(1) / 2;
        const Complex nf = norm_factor(alpha, beta, x);
        auto f = [&](const Complex& w) {
            return pow(Complex(1 - x) - w, Complex(ah)) * pow(Complex(1 + x) + w, Complex(bh)) / nf;
        };
        const Complex fp = f(w0), fm = f(-w0);
        std::vector<Real> A{((fp + fm) / Real(2)).re}, B{((fp - fm) / (Real(2) * w0)).re};

        // Matching powers of P = w^2 + u in p f' = q f, with f' = sum [C_k + D_k w] P^k,
        // C_k = (2k+1) B_k - 2(k+1) u B_{k+1}, D_k = 2(k+1) A_{k+1}, leaves a 2x2
        // system for (A_{k+1}, B_{k+1}) with determinant -1.
        const Real u = 1 - x * x;
        const Real q0 = beta - alpha - (alpha + beta + 1) * x, q1 = -(alpha + beta + 1);
        for (unsigned k = 0; k < K; ++k) {
            const Real kr(k);
            const Real Ckm1 = k ? (2 * kr - 1) * B[k - 1] - 2 * kr * u * B[k] : Real(0);
            const Real Dkm1 = k ? 2 * kr * A[k] : Real(0);
            const Real Bkm1 = k ? B[k - 1] : Real(0);
            const Real R1 = q0 * B[k] + q1 * A[k] + 2 * x * (2 * kr + 1) * B[k] + Dkm1;
            const Real R2 = q0 * A[k] - q1 * u * B[k] + q1 * Bkm1 - 2 * u * (2 * kr + 1) * B[k] + Ckm1 + 2 * x * Dkm1;
            const Real r1 = R1 / (4 * u * (kr + 1)), r2 = R2 / (4 * u * (kr + 1));
            A.push_back(u * r1 + x * r2);
            B.push_back(x * r1 - r2);
        }
        std::vector<Complex> out(A.begin(), A.end());
        out.insert(out.end(), B.begin(), B.end());
        return out;
    });
    JacobiABCoeffs c;
    c.A = to_real(packed, 0, K + 1);
    c.B = to_real(packed, K + 1, packed.size());
    return c;
}

namespace {

ExpansionResult<Real> expand(const JacobiParams& p, unsigned max_order, const Truncation* t)
{
    check_params(p);
    const JacobiABCoeffs ab = jacobi_ab_coeffs_recursive(p.alpha, p.beta, p.x, max_order);
    const JacobiPhiPsi s = jacobi_phi_psi(p, max_order);
    ExpansionResult<Real> r;
    SeriesAccumulator<Real> acc(r);
    for (unsigned k = 0; k <= max_order; ++k) {
        acc.add(ab.A[k] * s.phi[k] + ab.B[k] * s.psi[k]);
        if (t && acc.settled(*t))
            break;
    }
    return r;
}

}  // namespace

ExpansionResult<Real> jacobi_expand(const JacobiParams& p, unsigned N)
{
    return expand(p, N, nullptr);
}

ExpansionResult<Real> jacobi_expand(const JacobiParams& p, const Truncation& t)
{
    return expand(p, t.max_order, &t);
}

namespace {

void check_radius(const JacobiParams& p, const ContourSpec& c)
{
    if (!(c.radius > 0) || !(c.radius < 1 - abs(p.x)))
        throw std::domain_error("contour radius must lie in (0, 1 - |x|) so that w = -x +- 1 stay outside");
}

// e^{n phi(x, w)} = ((1+w+x)(1-w-x)/w)^n
Complex exp_n_phi(const Real& x, unsigned n, const Complex& w)
{
    return pow((Complex(1 + x) + w) * (Complex(1 - x) - w) / w, static_cast<long>(n));
}

}  // namespace

std::pair<Complex, Complex> contour_jacobi_oracle(const JacobiParams& p, unsigned k, const ContourSpec& c)
{
    check_params(p);
    check_radius(p, c);
    const Real u = 1 - p.x * p.x;
    const Real pre = (p.n % 2 == 0 ? Real(1) : Real(-1)) * sqrt(u) / pow(Real(2), p.n);
    auto psi_integrand = [&](const Complex& w) {
        const Complex W = sqrt((Complex(1 - p.x) - w) * (Complex(1 + p.x) + w));
        return pow(w * w + Complex(u), static_cast<long>(k)) / W * exp_n_phi(p.x, p.n, w);
    };
    auto phi_integrand = [&](const Complex& w) { return psi_integrand(w) / w; };
    return {pre * cauchy_integral(phi_integrand, c), pre * cauchy_integral(psi_integrand, c)};
}

Complex contour_jacobi_polynomial(const JacobiParams& p, const ContourSpec& c)
{
    check_params(p);
    check_radius(p, c);
    const Real pre = (p.n % 2 == 0 ? Real(1) : Real(-1)) / pow(Real(2), p.n);
    auto integrand = [&](const Complex& w) {
        const Complex fa = pow(Complex(1) - w / Complex(1 - p.x), Complex(p.alpha));
        const Complex fb = pow(Complex(1) + w / Complex(1 + p.x), Complex(p.beta));
        return fa * fb * exp_n_phi(p.x, p.n, w) / w;
    };
    return pre * cauchy_integral(integrand, c);
}

CassiniOval jacobi_cassini(const Real& x)
{
    const Complex w0 = jacobi_saddles(x).w0;
    return cassini_region(w0, -w0, {Complex(1 - x), Complex(-1 - x)});
}

}  // namespace polyasym
