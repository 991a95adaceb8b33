#pragma once

#include "polyasym/precision.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace polyasym {

enum class Family { charlier, laguerre, jacobi };
enum class OutputFormat { csv, markdown };

Family parse_family(const std::string& name);
std::string family_name(Family f);

// Parameters shared by the table and figure commands.  Charlier reads a,
// Laguerre reads alpha, Jacobi reads alpha and beta.  delta is the distance
// kept from x = 1 (Charlier) or x = +-1 (Jacobi).
struct FamilyParams {
    Family family = Family::charlier;
    Real a = 1;
    Real alpha = 0;
    Real beta = 0;
    Real delta = Real("1e-6");
};

struct TableSpec {
    FamilyParams params;
    Real x;
    std::vector<unsigned> n;
    unsigned N = 5;
    OutputFormat format = OutputFormat::csv;
};

struct TableRow {
    unsigned n;
    Real exact;
    std::vector<Real> sums;  // S_0 .. S_N
};

std::vector<TableRow> compute_table(const TableSpec& spec);

// Header view,n,exact,S_0..S_N.  Jacobi rows are absolute; Charlier and
// Laguerre rows are followed by the same rows divided by the exact value.
void write_table(std::ostream& out, const TableSpec& spec, const std::vector<TableRow>& rows);

void write_zeros(std::ostream& out, const std::vector<Real>& zeros, OutputFormat format);

struct FigureSpec {
    FamilyParams params;
    unsigned n = 10;
    Real x_min, x_max;
    unsigned count = 2;
    std::optional<Real> clip;  // default: 10 times the interquartile range of the exact values
    OutputFormat format = OutputFormat::csv;
};

struct FigurePoint {
    Real x;
    Real exact;
    std::optional<Real> first_order;  // empty where the approximation is undefined
    bool clipped = false;
};

// x_i = x_min + i (x_max - x_min)/(count - 1); exact is the polynomial and
// first_order the leading term of the expansion.
std::vector<FigurePoint> compute_figure(const FigureSpec& spec);

// Header x,exact,first_order,clipped.
void write_figure(std::ostream& out, const FigureSpec& spec, const std::vector<FigurePoint>& points);

// The polynomial itself, evaluated with enough guard bits for the
// cancellation in its explicit sum.
Real exact_value(const FamilyParams& p, unsigned n, const Real& x);

// Fixed and significant-digit formatting used by every report.
std::string format_significant(const Real& v, int digits);
std::string format_fixed(const Real& v, int decimals);

}  // namespace polyasym
