#include "polyasym/report.hpp"

#include "polyasym/charlier.hpp"
#include "polyasym/jacobi.hpp"
#include "polyasym/laguerre.hpp"
#include "polyasym/special.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyasym {

Family parse_family(const std::string& name)
{
    if (name == "charlier")
        return Family::charlier;
    if (name == "laguerre")
        return Family::laguerre;
    if (name == "jacobi")
        return Family::jacobi;
    throw std::invalid_argument("unknown family: " + name);
}

std::string family_name(Family f)
{
    switch (f) {
    case Family::charlier:
        return "charlier";
    case Family::laguerre:
        return "laguerre";
    case Family::jacobi:
        return "jacobi";
    }
    return "";
}

std::string format_significant(const Real& v, int digits)
{
    if (v == 0)
        return "0";
    return v.str(digits, std::ios_base::fmtflags(0));
}

std::string format_fixed(const Real& v, int decimals) { return v.str(decimals, std::ios_base::fixed); }

Real exact_value(const FamilyParams& p, unsigned n, const Real& x)
{
    const std::vector<Complex> v = escalate_precision([&] {
        const Real xh = at_working_precision(x);
        Real r;
        switch (p.family) {
        case Family::charlier:
            r = charlier_direct(at_working_precision(p.a), n, Real(n) * xh);
            break;
        case Family::laguerre:
            r = laguerre_direct(at_working_precision(p.alpha), n, Real(n) * xh);
            break;
        case Family::jacobi:
            r = jacobi_direct(at_working_precision(p.alpha), at_working_precision(p.beta), n, xh);
            break;
        }
        return std::vector<Complex>{Complex(r)};
    });
    return v[0].re;
}

namespace {

void check_domain(const FamilyParams& p, const Real& x)
{
    switch (p.family) {
    case Family::charlier:
        if (abs(x - 1) < p.delta)
            throw std::domain_error("charlier: the expansion needs x != 1 (|x - 1| >= delta)");
        break;
    case Family::laguerre:
        if (abs(x) <= 1)
            throw std::domain_error("laguerre: the expansion converges only for |x| > 1");
        break;
    case Family::jacobi:
        if (abs(x) >= 1 - p.delta)
            throw std::domain_error("jacobi: the expansion needs -1 < x < 1 (|x| <= 1 - delta)");
        break;
    }
}

// S_0 .. S_N as real numbers.
std::vector<Real> partial_sums(const FamilyParams& p, unsigned n, const Real& x, unsigned N)
{
    std::vector<Real> s;
    switch (p.family) {
    case Family::charlier: {
        CharlierParams q;
        q.a = Complex(p.a);
        q.x = Complex(x);
        q.n = n;
        q.delta = p.delta;
        for (const Complex& v : charlier_expand(q, N).partial_sums)
            s.push_back(v.re);
        break;
    }
    case Family::laguerre:
        for (const Complex& v : laguerre_expand(LaguerreParams{Complex(p.alpha), Complex(x), n}, N).partial_sums)
            s.push_back(v.re);
        break;
    case Family::jacobi:
        s = jacobi_expand(JacobiParams{p.alpha, p.beta, x, n, p.delta}, N).partial_sums;
        break;
    }
    return s;
}

void write_row(std::ostream& out, OutputFormat format, const std::vector<std::string>& cells)
{
    if (format == OutputFormat::markdown)
        out << "| ";
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i)
            out << (format == OutputFormat::csv ? "," : " | ");
        out << cells[i];
    }
    if (format == OutputFormat::markdown)
        out << " |";
    out << '\n';
}

void write_header(std::ostream& out, OutputFormat format, const std::vector<std::string>& cells)
{
    write_row(out, format, cells);
    if (format == OutputFormat::markdown)
        write_row(out, format, std::vector<std::string>(cells.size(), "---"));
}

// Quantile by linear interpolation between order statistics.
Real quantile(const std::vector<Real>& sorted, const Real& q)
{
    const Real pos = q * Real(static_cast<unsigned>(sorted.size() - 1));
    const std::size_t lo = static_cast<std::size_t>(floor(pos).convert_to<double>());
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    return sorted[lo] + (pos - Real(static_cast<unsigned>(lo))) * (sorted[hi] - sorted[lo]);
}

}  // namespace

std::vector<TableRow> compute_table(const TableSpec& spec)
{
    if (spec.n.empty())
        throw std::invalid_argument("table needs at least one degree n");
    check_domain(spec.params, spec.x);
    std::vector<TableRow> rows;
    for (unsigned n : spec.n) {
        if (n == 0)
            throw std::invalid_argument("table needs degrees n >= 1");
        rows.push_back({n, exact_value(spec.params, n, spec.x), partial_sums(spec.params, n, spec.x, spec.N)});
    }
    return rows;
}

void write_table(std::ostream& out, const TableSpec& spec, const std::vector<TableRow>& rows)
{
    std::vector<std::string> header{"view", "n", "exact"};
    for (unsigned k = 0; k <= spec.N; ++k)
        header.push_back("S_" + std::to_string(k));
    write_header(out, spec.format, header);

    auto emit = [&](const char* view, bool normalized) {
        for (const TableRow& row : rows) {
            const Real scale = normalized ? row.exact : Real(1);
            std::vector<std::string> cells{view, std::to_string(row.n), format_significant(row.exact / scale, 6)};
            for (const Real& s : row.sums)
                cells.push_back(format_significant(s / scale, 6));
            write_row(out, spec.format, cells);
        }
    };
    emit("absolute", false);
    if (spec.params.family != Family::jacobi)
        emit("normalized", true);
}

void write_zeros(std::ostream& out, const std::vector<Real>& zeros, OutputFormat format)
{
    write_header(out, format, {"index", "zero"});
    for (std::size_t i = 0; i < zeros.size(); ++i)
        write_row(out, format, {std::to_string(i + 1), format_fixed(zeros[i], 9)});
}

std::vector<FigurePoint> compute_figure(const FigureSpec& spec)
{
    if (spec.count < 2)
        throw std::invalid_argument("figure needs at least two grid points");
    if (!(spec.x_min < spec.x_max))
        throw std::invalid_argument("figure needs x_min < x_max");
    if (spec.n == 0)
        throw std::invalid_argument("figure needs n >= 1");

    std::vector<FigurePoint> points;
    const Real step = (spec.x_max - spec.x_min) / Real(spec.count - 1);
    for (unsigned i = 0; i < spec.count; ++i) {
        FigurePoint pt;
        pt.x = spec.x_min + Real(i) * step;
        pt.exact = exact_value(spec.params, spec.n, pt.x);
        try {
            if (spec.params.family == Family::jacobi || spec.params.family == Family::charlier)
                check_domain(spec.params, pt.x);
            pt.first_order = partial_sums(spec.params, spec.n, pt.x, 0)[0];
        } catch (const std::domain_error&) {
            pt.first_order.reset();
        }
        points.push_back(pt);
    }

    Real threshold;
    if (spec.clip) {
        threshold = *spec.clip;
    } else {
        std::vector<Real> values;
        for (const FigurePoint& pt : points)
            values.push_back(pt.exact);
        std::sort(values.begin(), values.end());
        threshold = 10 * (quantile(values, Real("0.75")) - quantile(values, Real("0.25")));
    }
    for (FigurePoint& pt : points)
        pt.clipped = abs(pt.exact) > threshold || !pt.first_order || abs(*pt.first_order) > threshold;
    return points;
}

void write_figure(std::ostream& out, const FigureSpec& spec, const std::vector<FigurePoint>& points)
{
    write_header(out, spec.format, {"x", "exact", "first_order", "clipped"});
    for (const FigurePoint& pt : points)
        write_row(out, spec.format,
                  {format_significant(pt.x, 10), format_significant(pt.exact, 10),
                   pt.first_order ? format_significant(*pt.first_order, 10) : "nan", pt.clipped ? "1" : "0"});
}

}  // namespace polyasym
