#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace polyasym {

struct CheckResult {
    std::string suite;
    std::string name;
    bool pass;
    std::string detail;
};

// Collects check outcomes and, when given a stream, writes each as it is
// recorded:
//   PASS <suite> <name> <detail>
//   FAIL <suite> <name> <detail>
//   INFO <suite> <name> <detail>      (diagnostics, never counted)
class CheckLog {
public:
    explicit CheckLog(std::ostream* out = nullptr) : out_(out) {}

    void record(const std::string& suite, const std::string& name, bool pass, const std::string& detail);
    void info(const std::string& suite, const std::string& name, const std::string& detail);

    const std::vector<CheckResult>& results() const { return results_; }
    std::size_t passed() const;
    std::size_t failed() const;
    bool all_passed() const { return failed() == 0; }

private:
    std::ostream* out_;
    std::vector<CheckResult> results_;
};

// Log-log slopes of the normalised Phi_k, Psi_k over n = 50..800 for k = 1..6
// in all three families, with the local slope at n = 12800 -> 25600 as a
// diagnostic.
void check_orders(CheckLog& log);

// Recurrence, finite sums and contour quadrature for k <= 6.
void check_triple_agreement(CheckLog& log);

// S_40 against the polynomial on the Charlier and Jacobi grids.
void check_s40_grids(CheckLog& log);

// Cassini radii of the Laguerre (x) and Jacobi (2(1 - |x|)) expansions.
void check_cassini_radii(CheckLog& log);

// Laguerre divergence at x = 0.5 and convergence at x = 1.5, 3.5, 6; Jacobi
// convergence over -0.9..0.9.
void check_convergence_regions(CheckLog& log);

// Two-point Taylor reconstruction inside and outside the oval.
void check_two_point_reconstruction(CheckLog& log);

// Bessel I and K, U-functions, Tricomi coefficients and the 1F1 expansion.
void check_special_functions(CheckLog& log);

std::vector<std::string> verify_suite_names();  // orders, oracles, cassini, section6, all

// Runs a suite; throws std::invalid_argument for an unknown name.
void run_verify_suite(const std::string& suite, CheckLog& log);

}  // namespace polyasym
