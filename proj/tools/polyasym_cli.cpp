#include "polyasym/charlier.hpp"
#include "polyasym/report.hpp"
#include "polyasym/verify.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

using namespace polyasym;

namespace {

struct Options {
    unsigned bits = 256;
    std::string format = "csv";
    std::string delta = "1e-6";

    std::string family;
    std::string a = "1", alpha = "0", beta = "0", x;
    std::vector<unsigned> n;
    unsigned N = 5;

    unsigned degree = 10;
    std::string x_min, x_max, clip;
    unsigned count = 41;

    std::string suite;
};

OutputFormat output_format(const std::string& s) { return s == "md" ? OutputFormat::markdown : OutputFormat::csv; }

FamilyParams family_params(const Options& o)
{
    FamilyParams p;
    p.family = parse_family(o.family);
    p.a = Real(o.a);
    p.alpha = Real(o.alpha);
    p.beta = Real(o.beta);
    p.delta = Real(o.delta);
    return p;
}

void add_family_options(CLI::App* cmd, Options& o)
{
    cmd->add_option("family", o.family, "charlier, laguerre or jacobi")
        ->required()
        ->check(CLI::IsMember({"charlier", "laguerre", "jacobi"}));
    cmd->add_option("--a", o.a, "Charlier parameter a");
    cmd->add_option("--alpha", o.alpha, "Laguerre or Jacobi alpha");
    cmd->add_option("--beta", o.beta, "Jacobi beta");
}

}  // namespace

int main(int argc, char** argv)
{
    Options o;
    CLI::App app{"Convergent expansions of Charlier, Laguerre and Jacobi polynomials"};
    app.require_subcommand(1);
    app.add_option("--bits", o.bits, "mantissa bits of the working precision")->check(CLI::Range(64u, 65536u));
    app.add_option("--format", o.format, "csv or md")->check(CLI::IsMember({"csv", "md"}));
    app.add_option("--delta", o.delta, "distance kept from x = 1 (Charlier) and x = +-1 (Jacobi)");

    CLI::App* table = app.add_subcommand("table", "partial sums S_0..S_N against the polynomial")->fallthrough();
    add_family_options(table, o);
    table->add_option("--x", o.x, "point x; the polynomial is evaluated at n x for Charlier and Laguerre")->required();
    table->add_option("--n", o.n, "comma-separated degrees")->delimiter(',')->required();
    table->add_option("--N", o.N, "highest order of the partial sums");

    CLI::App* zeros = app.add_subcommand("zeros", "zeros of C_n^a(n x)")->fallthrough();
    zeros->add_option("--a", o.a, "Charlier parameter a > 0");
    zeros->add_option("--n", o.degree, "degree")->required()->check(CLI::PositiveNumber);

    CLI::App* figure = app.add_subcommand("figure", "polynomial and first-order approximation on a grid")->fallthrough();
    add_family_options(figure, o);
    figure->add_option("--n", o.degree, "degree")->required()->check(CLI::PositiveNumber);
    figure->add_option("--min", o.x_min, "first grid point")->required();
    figure->add_option("--max", o.x_max, "last grid point")->required();
    figure->add_option("--count", o.count, "number of grid points")->check(CLI::Range(2u, 1000000u));
    figure->add_option("--clip", o.clip, "magnitude above which rows are flagged (default 10 x IQR of exact)");

    CLI::App* verify = app.add_subcommand("verify", "run a property suite")->fallthrough();
    verify->add_option("suite", o.suite, "orders, oracles, cassini, section6 or all")
        ->required()
        ->check(CLI::IsMember(verify_suite_names()));

    CLI11_PARSE(app, argc, argv);

    try {
        PrecisionScope scope(o.bits);
        const OutputFormat format = output_format(o.format);
        if (*table) {
            TableSpec spec;
            spec.params = family_params(o);
            spec.x = Real(o.x);
            spec.n = o.n;
            spec.N = o.N;
            spec.format = format;
            write_table(std::cout, spec, compute_table(spec));
        } else if (*zeros) {
            write_zeros(std::cout, charlier_zeros(Real(o.a), o.degree), format);
        } else if (*figure) {
            FigureSpec spec;
            spec.params = family_params(o);
            spec.n = o.degree;
            spec.x_min = Real(o.x_min);
            spec.x_max = Real(o.x_max);
            spec.count = o.count;
            if (!o.clip.empty())
                spec.clip = Real(o.clip);
            spec.format = format;
            write_figure(std::cout, spec, compute_figure(spec));
        } else if (*verify) {
            CheckLog log(&std::cout);
            run_verify_suite(o.suite, log);
            std::cout << "SUMMARY " << o.suite << " passed=" << log.passed() << " failed=" << log.failed() << std::endl;
            return log.all_passed() ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
