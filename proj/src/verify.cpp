#include "polyasym/verify.hpp"

#include "polyasym/bessel_kummer.hpp"
#include "polyasym/charlier.hpp"
#include "polyasym/jacobi.hpp"
#include "polyasym/laguerre.hpp"
#include "polyasym/report.hpp"
#include "polyasym/slopes.hpp"
#include "polyasym/special.hpp"
#include "polyasym/two_point_taylor.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace polyasym {

void CheckLog::record(const std::string& suite, const std::string& name, bool pass, const std::string& detail)
{
    results_.push_back({suite, name, pass, detail});
    if (out_)
        *out_ << (pass ? "PASS " : "FAIL ") << suite << ' ' << name << ' ' << detail << std::endl;
}

void CheckLog::info(const std::string& suite, const std::string& name, const std::string& detail)
{
    if (out_)
        *out_ << "INFO " << suite << ' ' << name << ' ' << detail << std::endl;
}

std::size_t CheckLog::passed() const
{
    return std::count_if(results_.begin(), results_.end(), [](const CheckResult& r) { return r.pass; });
}

std::size_t CheckLog::failed() const { return results_.size() - passed(); }

namespace {

std::string num(const Real& v) { return format_significant(v, 3); }

std::string str(const char* s) { return std::string(s); }

// |a - b| / scale, with 0 when both vanish.
Real discrepancy(const Real& diff, const Real& scale) { return scale == 0 ? diff : diff / scale; }

// Normalised magnitudes |P_k| + |Q_k| and |R_k| + |S_k| of the transfer
// coefficients, which bound |Phi_k| and |Psi_k| relative to |Phi_0| + |Psi_0|.
template <class T>
std::pair<Real, Real> transfer_magnitudes(const T& t, unsigned k)
{
    return {Real(abs(t.P[k]) + abs(t.Q[k])), Real(abs(t.R[k]) + abs(t.S[k]))};
}

std::pair<Real, Real> normalized_phi_psi(Family f, const Real& x, unsigned n, unsigned k)
{
    switch (f) {
    case Family::charlier: {
        CharlierParams p;
        p.a = Complex(1);
        p.x = Complex(x);
        p.n = n;
        const Real r = abs(phi_ratio_sequence(p, k)[k]);
        return {r, r};
    }
    case Family::laguerre:
        return transfer_magnitudes(transfer_coefficients(LaguerreParams{Complex(1), Complex(x), n}, k), k);
    case Family::jacobi:
        return transfer_magnitudes(jacobi_transfer_coefficients(JacobiParams{Real(0), Real(0), x, n}, k), k);
    }
    return {};
}

void order_family(CheckLog& checks, Family f, std::initializer_list<const char*> xs)
{
    const std::vector<unsigned> grid = order_test_grid();
    for (const char* xs_ : xs) {
        const Real x(xs_);
        for (unsigned k = 1; k <= 6; ++k) {
            const Real expected = -Real((k + 1) / 2);
            std::vector<Real> ns, phi, psi;
            for (unsigned n : grid) {
                auto [a, b] = normalized_phi_psi(f, x, n, k);
                ns.push_back(Real(n));
                phi.push_back(a);
                psi.push_back(b);
            }
            std::vector<Real> big_n{Real(12800), Real(25600)}, big_phi, big_psi;
            for (const Real& n : big_n) {
                auto [a, b] = normalized_phi_psi(f, x, n.convert_to<unsigned>(), k);
                big_phi.push_back(a);
                big_psi.push_back(b);
            }
            const bool two = f != Family::charlier;
            for (int which = 0; which < (two ? 2 : 1); ++which) {
                const std::string name = family_name(f) + (which ? "/psi" : "/phi") + "/x=" + str(xs_) +
                                         "/k=" + std::to_string(k);
                const Real slope = loglog_slope(ns, which ? psi : phi);
                checks.record("orders", name, abs(slope - expected) <= Real("0.3"),
                           "slope=" + num(slope) + " expected=" + num(expected) + " tol=0.3 n=50..800");
                const Real local = local_slopes(big_n, which ? big_psi : big_phi)[0];
                checks.info("orders", name, "local_slope(12800,25600)=" + num(local));
            }
        }
    }
}

}  // namespace

void check_orders(CheckLog& checks)
{
    PrecisionScope scope(PrecisionCtx::oracle());
    order_family(checks, Family::charlier, {"0.25", "0.5", "2"});
    order_family(checks, Family::laguerre, {"1.5", "3.5", "6"});
    order_family(checks, Family::jacobi, {"0", "0.5", "-0.5", "0.9", "-0.9"});
}

void check_triple_agreement(CheckLog& checks)
{
    PrecisionScope scope(PrecisionCtx::oracle());
    const Real tol("1e-9");
    for (const char* xs : {"0.25", "0.5", "2"}) {
        for (unsigned n : {10u, 30u}) {
            CharlierParams p;
            p.a = Complex(1);
            p.x = Complex(Real(xs));
            p.n = n;
            const PhiSequence rec = phi_sequence(p, 6);
            std::vector<Complex> hyp;
            Real largest(0);
            for (unsigned k = 0; k <= 6; ++k) {
                hyp.push_back(phi_k_hypergeometric(p, k));
                largest = std::max(largest, Real(abs(hyp.back())));
            }
            Real worst(0);
            for (unsigned k = 0; k <= 6; ++k) {
                // Phi_k vanishes identically for some k when nx is an integer below n.
                const Real scale = abs(hyp[k]) > 0 ? abs(hyp[k]) : largest;
                const Complex c = contour_phi_oracle(p, k);
                worst = std::max({worst, discrepancy(abs(rec.phi[k] - hyp[k]), scale),
                                  discrepancy(abs(c - hyp[k]), scale)});
            }
            checks.record("oracles", "charlier/triple/x=" + str(xs) + "/n=" + std::to_string(n), worst <= tol,
                       "max_rel=" + num(worst) + " tol=1e-9 k=0..6");
        }
    }
    for (const char* xs : {"1.5", "3.5", "6"}) {
        for (unsigned n : {10u, 30u}) {
            const LaguerreParams p{Complex(1), Complex(Real(xs)), n};
            const PhiPsiSequences rec = phi_psi_sequences(p, 6);
            Real worst(0);
            for (unsigned k = 0; k <= 6; ++k) {
                auto [phi, psi] = phi_psi_direct(p, k);
                auto [cphi, cpsi] = contour_phi_psi_oracle(p, k);
                worst = std::max({worst, discrepancy(abs(rec.phi[k] - phi), abs(phi)),
                                  discrepancy(abs(rec.psi[k] - psi), abs(psi)), discrepancy(abs(cphi - phi), abs(phi)),
                                  discrepancy(abs(cpsi - psi), abs(psi))});
            }
            checks.record("oracles", "laguerre/triple/x=" + str(xs) + "/n=" + std::to_string(n), worst <= tol,
                       "max_rel=" + num(worst) + " tol=1e-9 k=0..6");
        }
    }
    for (const char* xs : {"-0.9", "-0.5", "0", "0.5", "0.9"}) {
        for (unsigned n : {12u, 30u}) {
            const JacobiParams p{Real(0), Real(0), Real(xs), n};
            const JacobiPhiPsi rec = jacobi_phi_psi_recurrence(p, 6);
            const ContourSpec c{(1 - abs(p.x)) / 2, 1024};
            Real worst(0);
            for (unsigned k = 0; k <= 6; ++k) {
                auto [phi, psi] = jacobi_phi_psi_direct(p, k);
                auto [cphi, cpsi] = contour_jacobi_oracle(p, k, c);
                // Psi_k vanishes identically at x = 0 for even n.
                const Real scale = abs(phi) + abs(psi);
                worst = std::max({worst, discrepancy(abs(rec.phi[k] - phi), scale),
                                  discrepancy(abs(rec.psi[k] - psi), scale),
                                  discrepancy(abs(cphi - Complex(phi)), scale),
                                  discrepancy(abs(cpsi - Complex(psi)), scale)});
            }
            checks.record("oracles", "jacobi/triple/x=" + str(xs) + "/n=" + std::to_string(n), worst <= tol,
                       "max_rel=" + num(worst) + " tol=1e-9 k=0..6");
        }
    }
}

void check_s40_grids(CheckLog& checks)
{
    PrecisionScope scope(PrecisionCtx::oracle());
    for (const char* a : {"0.25", "0.5", "1"}) {
        for (const char* xs : {"0.25", "0.75", "1.5"}) {
            for (unsigned n : {5u, 12u, 30u}) {
                CharlierParams p;
                p.a = Complex(Real(a));
                p.x = Complex(Real(xs));
                p.n = n;
                const Real exact = exact_value(FamilyParams{Family::charlier, Real(a)}, n, Real(xs));
                const Real err = abs(charlier_expand(p, 40).value - Complex(exact)) / abs(exact);
                checks.record("oracles",
                           "charlier/S40/a=" + str(a) + "/x=" + str(xs) + "/n=" + std::to_string(n),
                           err <= Real("1e-8"), "rel_err=" + num(err) + " tol=1e-8");
            }
        }
    }
    for (auto [al, be] : {std::pair{"3", "4"}, std::pair{"1.5", "0.5"}, std::pair{"0", "0"}}) {
        for (const char* xs : {"-0.9", "-0.5", "0", "0.5", "0.9"}) {
            for (unsigned n : {10u, 20u}) {
                FamilyParams fp{Family::jacobi};
                fp.alpha = Real(al);
                fp.beta = Real(be);
                const JacobiParams p{fp.alpha, fp.beta, Real(xs), n};
                const Real err = abs(jacobi_expand(p, 40).value - exact_value(fp, n, p.x));
                checks.record("oracles",
                           "jacobi/S40/alpha=" + str(al) + "/beta=" + str(be) + "/x=" + str(xs) + "/n=" +
                               std::to_string(n),
                           err <= Real("1e-8"), "abs_err=" + num(err) + " tol=1e-8");
            }
        }
    }
}

void check_cassini_radii(CheckLog& checks)
{
    PrecisionScope scope(PrecisionCtx::oracle());
    for (const char* xs : {"0.5", "1.5", "3.5", "6", "8"}) {
        const Real x(xs);
        const LaguerreSaddles s = saddles(Complex(x));
        const CassiniOval oval = cassini_region(s.w_plus, s.w_minus, {Complex(1)});
        const Real err = abs(oval.r - x);
        checks.record("cassini", "laguerre/radius/x=" + str(xs), err <= Real("1e-12"),
                   "r=" + num(oval.r) + " expected=" + num(x) + " err=" + num(err));
        checks.record("cassini", "laguerre/contains_origin/x=" + str(xs), oval.contains(Complex(0)) == (x > 1),
                   std::string("contains_origin=") + (oval.contains(Complex(0)) ? "1" : "0"));
    }
    for (const char* xs : {"-0.9", "-0.5", "0", "0.3", "0.5", "0.9"}) {
        const Real x(xs);
        const CassiniOval oval = jacobi_cassini(x);
        const Real expected = 2 * (1 - abs(x));
        const Real err = abs(oval.r - expected);
        checks.record("cassini", "jacobi/radius/x=" + str(xs), err <= Real("1e-12"),
                   "r=" + num(oval.r) + " expected=" + num(expected) + " err=" + num(err));
    }
}

void check_convergence_regions(CheckLog& checks)
{
    PrecisionScope scope(PrecisionCtx::oracle());
    for (unsigned n : {10u, 30u}) {
        const LaguerreParams p{Complex(1), Complex(Real("0.5")), n};
        const ExpansionResult<Complex> r = laguerre_expand(p, Truncation{200, Real("1e-16"), 2});
        const Real exact = exact_value(FamilyParams{Family::laguerre, Real(1), Real(1)}, n, Real("0.5"));
        const bool grows = abs(r.terms[200]) > abs(r.terms[100]) && abs(r.terms[100]) > abs(r.terms[50]) &&
                           abs(r.terms[200]) > Real("1e10") * abs(exact);
        checks.record("cassini", "laguerre/diverges/x=0.5/n=" + std::to_string(n), !r.converged && grows,
                   "|t_50|=" + num(abs(r.terms[50])) + " |t_100|=" + num(abs(r.terms[100])) +
                       " |t_200|=" + num(abs(r.terms[200])) + " |exact|=" + num(abs(exact)));
    }
    for (const char* xs : {"1.5", "3.5", "6"}) {
        for (const char* al : {"0", "1", "2.5"}) {
            for (unsigned n : {10u, 30u}) {
                const LaguerreParams p{Complex(Real(al)), Complex(Real(xs)), n};
                const ExpansionResult<Complex> r = laguerre_expand(p, Truncation{400, Real("1e-14"), 2});
                const Real exact = exact_value(FamilyParams{Family::laguerre, Real(1), Real(al)}, n, Real(xs));
                const Real err = abs(r.value - Complex(exact)) / abs(exact);
                checks.record("cassini",
                           "laguerre/converges/x=" + str(xs) + "/alpha=" + str(al) + "/n=" + std::to_string(n),
                           r.converged && err <= Real("1e-12"),
                           "terms=" + std::to_string(r.order + 1) + " rel_err=" + num(err) + " tol=1e-12");
            }
        }
    }
    for (auto [al, be] : {std::pair{"3", "4"}, std::pair{"1.5", "0.5"}, std::pair{"0", "0"}}) {
        for (const char* xs : {"-0.9", "-0.5", "0", "0.5", "0.9"}) {
            for (unsigned n : {10u, 20u}) {
                FamilyParams fp{Family::jacobi};
                fp.alpha = Real(al);
                fp.beta = Real(be);
                const JacobiParams p{fp.alpha, fp.beta, Real(xs), n};
                const ExpansionResult<Real> r = jacobi_expand(p, Truncation{4000, Real("1e-30"), 4});
                const Real err = abs(r.value - exact_value(fp, n, p.x));
                checks.record("cassini",
                           "jacobi/converges/alpha=" + str(al) + "/beta=" + str(be) + "/x=" + str(xs) + "/n=" +
                               std::to_string(n),
                           r.converged && err <= Real("1e-8"),
                           "terms=" + std::to_string(r.order + 1) + " abs_err=" + num(err) + " tol=1e-8");
            }
        }
    }
}

void check_two_point_reconstruction(CheckLog& checks)
{
    PrecisionScope scope(PrecisionCtx::oracle());
    // Laguerre foci at x = 3.5; the oval has radius 3.5 around them.
    const LaguerreSaddles s = saddles(Complex(Real("3.5")));
    const CassiniOval oval = cassini_region(s.w_plus, s.w_minus, {Complex(1)});
    auto cx = [](const char* re, const char* im) { return Complex(Real(re), Real(im)); };

    struct Case {
        const char* name;
        DerivativeProvider f;
        bool singular;
    };
    const std::vector<Case> cases{
        {"polynomial",
         polynomial_provider({cx("1", "0"), cx("-2", "0"), cx("0.5", "0"), cx("3", "0"), cx("0", "1"), cx("0.25", "0")}),
         false},
        {"exp", exp_provider(cx("0.8", "0")), false},
        {"power", power_product_provider(Complex(1), {PowerFactor{Complex(1), Complex(-1), Complex(Real("-0.5"))}}),
         true},
    };
    const std::vector<Complex> inside{cx("0", "0"), cx("-1", "0.5"), cx("-0.5", "-0.9"), cx("-1.4", "0.2")};
    const std::vector<Complex> outside{cx("-3", "0"), cx("1", "1"), cx("-1", "-2.2")};

    for (const Case& c : cases) {
        const TwoPointCoeffs tp = two_point_coeffs(c.f, s.w_plus, s.w_minus, 60);
        Real worst(0), worst_level(0);
        for (const Complex& w : inside) {
            worst = std::max(worst, Real(abs(tp.partial_sum(w, 40) - c.f(w, 0)[0])));
            worst_level = std::max(worst_level, oval.level(w) / oval.r);
        }
        checks.record("cassini", std::string("two_point/inside/") + c.name, worst < Real("1e-10"),
                   "max_residual=" + num(worst) + " K=40 tol=1e-10 max_level/r=" + num(worst_level));
        if (!c.singular)
            continue;
        for (const Complex& w : outside) {
            const Complex f = c.f(w, 0)[0];
            const Real r20 = abs(tp.partial_sum(w, 20) - f), r40 = abs(tp.partial_sum(w, 40) - f),
                       r60 = abs(tp.partial_sum(w, 60) - f);
            std::ostringstream where;
            where << w;
            checks.record("cassini", std::string("two_point/outside/") + c.name + "/w=" + where.str(),
                       r40 > r20 && r60 > r40 && r60 > abs(f),
                       "level/r=" + num(oval.level(w) / oval.r) + " residual_K20=" + num(r20) +
                           " residual_K40=" + num(r40) + " residual_K60=" + num(r60));
        }
    }
}

void check_special_functions(CheckLog& checks)
{
    PrecisionScope scope(PrecisionCtx::oracle());
    const Real half = Real(1) / 2;

    // Incomplete gamma.
    {
        const Real g = lower_incomplete_gamma(Real(3), Real(50));
        checks.record("section6", "gamma/limit", abs(g - 2) < Real("1e-12"), "gamma(3,50)-2=" + num(g - 2));
        Real worst(0);
        for (const char* xs : {"0.1", "1", "7.5"})
            worst = std::max(worst, Real(abs(lower_incomplete_gamma(Real(1), Real(xs)) - (1 - exp(-Real(xs))))));
        checks.record("section6", "gamma/a=1", worst < Real("1e-60"), "max_err=" + num(worst));
        const Real a = Real(1) + Real(200) + half, x(2);
        const Real ratio = lower_incomplete_gamma(a, x) / (exp(-x) * pow(x, a) / a);
        checks.record("section6", "gamma/large_order", abs(ratio - 1) < Real(3) / 200,
                   "ratio-1=" + num(ratio - 1) + " bound=3/k k=200");
        const Real a0("2.7"), x0("1.3");
        const Real g0 = lower_incomplete_gamma(a0, x0);
        const Real back = incomplete_gamma_step_down(a0, x0, incomplete_gamma_step_up(a0, x0, g0));
        const Real ulps = abs(back - g0) / (abs(g0) * working_epsilon());
        checks.record("section6", "gamma/step_round_trip", ulps <= 8, "ulps=" + num(ulps));
    }

    // Bessel I.
    for (const char* zs : {"0.5", "1", "5", "10"}) {
        const Real z(zs);
        const Real exact = sqrt(2 / (pi() * z)) * sinh(z);
        const Real err = abs(besseli_expand(BesselParams{half, z}, 5).value - exact) / exact;
        checks.record("section6", "besseli/closed_form/nu=0.5/z=" + str(zs), err <= Real("1e-10"),
                   "rel_err=" + num(err) + " tol=1e-10");
    }
    for (const char* nus : {"0", "0.5", "1", "2.3"}) {
        for (const char* zs : {"0.5", "1", "5", "10"}) {
            const Real nu(nus), z(zs);
            const Real exact = besseli_series(nu, z);
            const Real err = abs(besseli_expand(BesselParams{nu, z}, 20000).value - exact) / exact;
            checks.record("section6", "besseli/series/nu=" + str(nus) + "/z=" + str(zs), err <= Real("1e-10"),
                       "rel_err=" + num(err) + " tol=1e-10 N=20000");
        }
    }
    {
        const ExpansionResult<Real> e = besseli_expand(BesselParams{Real(1), Real(2)}, 400);
        std::vector<Real> ks, ts;
        for (unsigned k : {100u, 150u, 200u, 300u, 400u}) {
            ks.push_back(Real(k));
            ts.push_back(abs(e.terms[k]));
        }
        const Real slope = loglog_slope(ks, ts);
        checks.record("section6", "besseli/term_slope/nu=1/z=2", abs(slope + Real("2.5")) <= Real("0.3"),
                   "slope=" + num(slope) + " expected=-2.5 tol=0.3 k=100..400");
    }
    for (const char* nus : {"0", "1", "2.3"}) {
        const ExpansionResult<Real> a = besseli_expand(BesselParams{Real(nus), Real(20)}, 10);
        const ExpansionResult<Real> b = besseli_expand(BesselParams{Real(nus), Real(40)}, 10);
        Real largest(0), drift(0);
        for (unsigned k = 0; k < 10; ++k) {
            const Real ra = abs(a.terms[k + 1] / a.terms[k]);
            const Real rb = abs(b.terms[k + 1] / b.terms[k]);
            largest = std::max(largest, ra);
            drift = std::max(drift, Real(abs(rb * 40 / (ra * 20) - 1)));
        }
        checks.record("section6", "besseli/first_ratios/nu=" + str(nus) + "/z=20", largest < Real("0.1"),
                   "max_ratio=" + num(largest) + " threshold=0.1 k=0..9");
        checks.info("section6", "besseli/ratio_scaling/nu=" + str(nus),
                 "max|ratio(40)*40/(ratio(20)*20)-1|=" + num(drift));
    }

    // Bessel K and the U-functions.
    for (const char* zs : {"0.5", "1", "5", "10"}) {
        const Real z(zs);
        const Real exact = sqrt(pi() / (2 * z)) * exp(-z);
        const Real err = abs(besselk_expand(half, z, 6).value - exact) / exact;
        checks.record("section6", "besselk/closed_form/nu=0.5/z=" + str(zs), err <= Real("1e-10"),
                   "rel_err=" + num(err) + " tol=1e-10");
    }
    for (const char* nus : {"0", "0.5", "1", "2.3"}) {
        for (const char* zs : {"0.5", "1", "5", "10"}) {
            const Real nu(nus), z(zs);
            const Real exact = besselk_quadrature(nu, z);
            const Real err = abs(besselk_expand(nu, z, 600).value - exact) / exact;
            checks.record("section6", "besselk/quadrature/nu=" + str(nus) + "/z=" + str(zs), err <= Real("1e-10"),
                       "rel_err=" + num(err) + " tol=1e-10 N=600");
        }
    }
    {
        const Real k0 = besselk_expand(Real(0), Real(1), 200).value;
        checks.record("section6", "besselk/K0(1)", abs(k0 - Real("0.421024")) < Real("1e-6"), "value=" + num(k0));
        const Real u1 = u_function(1, Real(0), Real(2));
        const Real q = u1_quadrature(Real(0), Real(2));
        checks.record("section6", "u/U(1,0,2)", abs(u1 - q) <= Real("1e-20") * abs(q),
                   "rel_diff=" + num(abs(u1 - q) / abs(q)) + " tol=1e-20");
        // k! U(k, 1/2, 2) against e^{-2 sqrt(2k)} k^alpha; alpha is only reported.
        const std::vector<Real> u = u_functions(200, half, Real(2));
        std::vector<Real> ks, ys;
        for (unsigned k = 50; k <= 200; k += 10) {
            ks.push_back(log(Real(k)));
            ys.push_back(log(factorial(k) * u[k]) + 2 * sqrt(Real(2 * k)));
        }
        Real sx(0), sy(0), sxx(0), sxy(0);
        const Real m(static_cast<unsigned>(ks.size()));
        for (std::size_t i = 0; i < ks.size(); ++i) {
            sx += ks[i];
            sy += ys[i];
            sxx += ks[i] * ks[i];
            sxy += ks[i] * ys[i];
        }
        checks.info("section6", "u/growth", "fitted_alpha=" + num((m * sxy - sx * sy) / (m * sxx - sx * sx)));
    }
    for (auto [nus, zs] : {std::pair{"1", "1"}, std::pair{"2.3", "1"}, std::pair{"2.3", "5"}, std::pair{"0", "5"}}) {
        const Real nu(nus), z(zs), tol("1e-10");
        auto needed = [&](const std::vector<Real>& sums, const Real& exact) {
            for (unsigned n = 0; n < sums.size(); ++n) {
                bool stays = true;
                for (unsigned m = n; m < sums.size() && stays; ++m)
                    stays = abs(sums[m] - exact) <= tol * abs(exact);
                if (stays)
                    return n;
            }
            return static_cast<unsigned>(sums.size());
        };
        const unsigned nk = needed(besselk_expand(nu, z, 600).partial_sums, besselk_quadrature(nu, z));
        const unsigned ni = needed(besseli_expand(BesselParams{nu, z}, 8000).partial_sums, besseli_series(nu, z));
        checks.record("section6", "besselk/faster_than_i/nu=" + str(nus) + "/z=" + str(zs), nk < ni,
                   "terms_K=" + std::to_string(nk) + " terms_I=" + std::to_string(ni) + " tol=1e-10");
    }

    // Tricomi coefficients.
    for (auto [ks, ls] : {std::pair{"1.3", "0.7"}, std::pair{"-2.25", "1.5"}, std::pair{"0", "1"}}) {
        const Real kappa(ks), lambda(ls), z("0.3");
        const TricomiCoeffs c = tricomi_coeffs(kappa, lambda, 30);
        Real sum(0), zn(1);
        for (const Real& a : c.A) {
            sum += a * zn;
            zn *= z;
        }
        const Real g = exp(2 * kappa * z) * pow(1 - z, kappa - lambda) * pow(1 + z, -kappa - lambda);
        const Real err = abs(sum - g);
        checks.record("section6", "tricomi/generating/kappa=" + str(ks) + "/lambda=" + str(ls),
                   c.A[0] == 1 && c.A[1] == 0 && err < Real("1e-12") * (1 + abs(g)),
                   "A0=" + num(c.A[0]) + " A1=" + num(c.A[1]) + " residual=" + num(err) + " z=0.3 N=30");
    }

    // 1F1.
    {
        const Complex v = kummer_expand(KummerParams{Real("0.3"), Real("2.5"), Complex(0)}, 10).value;
        checks.record("section6", "kummer/z=0", abs(v - Complex(1)) < Real("1e-60"), "err=" + num(abs(v - Complex(1))));
        const Real e1 = exp(Real(1)) - 1;
        const Real err = abs(kummer_expand(KummerParams{Real(1), Real(2), Complex(1)}, 30).value - Complex(e1)) / e1;
        checks.record("section6", "kummer/a=1/c=2/z=1", err <= Real("1e-10"), "rel_err=" + num(err) + " tol=1e-10 N=30");
        const KummerParams big{Real(-20), Real(1), Complex(half)};
        const Real berr = abs(kummer_expand(big, 3).value - kummer_series(big.a, big.c, big.z));
        checks.record("section6", "kummer/large_kappa/a=-20/c=1/z=0.5", berr < Real("1e-4"),
                   "abs_err=" + num(berr) + " tol=1e-4 N=3");
    }
    for (auto [as, cs] : {std::pair{"0.3", "2.5"}, std::pair{"-2.7", "1.5"}, std::pair{"4", "0.5"}}) {
        std::vector<std::pair<std::string, Complex>> zs;
        for (const char* z : {"-10", "-3", "-0.5", "0.5", "2", "8", "25"})
            zs.push_back({z, Complex(Real(z))});
        zs.push_back({"1+2i", Complex(Real(1), Real(2))});
        zs.push_back({"-3+0.5i", Complex(Real(-3), Real("0.5"))});
        for (const auto& [label, z] : zs) {
            const KummerParams p{Real(as), Real(cs), z};
            const ExpansionResult<Complex> r = kummer_expand(p, Truncation{2000, Real("1e-30"), 3});
            const Complex exact = kummer_series(p.a, p.c, p.z);
            const Real err = abs(r.value - exact) / abs(exact);
            checks.record("section6", "kummer/a=" + str(as) + "/c=" + str(cs) + "/z=" + label,
                       r.converged && err <= Real("1e-10"),
                       "terms=" + std::to_string(r.order + 1) + " rel_err=" + num(err) + " tol=1e-10");
        }
    }
}

std::vector<std::string> verify_suite_names() { return {"orders", "oracles", "cassini", "section6", "all"}; }

void run_verify_suite(const std::string& suite, CheckLog& checks)
{
    const bool all = suite == "all";
    if (!all && suite != "orders" && suite != "oracles" && suite != "cassini" && suite != "section6")
        throw std::invalid_argument("unknown suite: " + suite);
    if (all || suite == "orders")
        check_orders(checks);
    if (all || suite == "oracles") {
        check_triple_agreement(checks);
        check_s40_grids(checks);
    }
    if (all || suite == "cassini") {
        check_cassini_radii(checks);
        check_convergence_regions(checks);
        check_two_point_reconstruction(checks);
    }
    if (all || suite == "section6")
        check_special_functions(checks);
}

}  // namespace polyasym
