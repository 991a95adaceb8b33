#include "polyasym/slopes.hpp"

#include <stdexcept>

namespace polyasym {

Real loglog_slope(const std::vector<Real>& n, const std::vector<Real>& v)
{
    if (n.size() != v.size() || n.size() < 2)
        throw std::invalid_argument("loglog_slope needs two or more matching points");
    const Real m(static_cast<unsigned>(n.size()));
    Real sx(0), sy(0), sxx(0), sxy(0);
    for (std::size_t i = 0; i < n.size(); ++i) {
        const Real lx = log(n[i]), ly = log(abs(v[i]));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

std::vector<Real> local_slopes(const std::vector<Real>& n, const std::vector<Real>& v)
{
    if (n.size() != v.size())
        throw std::invalid_argument("local_slopes needs matching points");
    std::vector<Real> s;
    for (std::size_t i = 1; i < n.size(); ++i)
        s.push_back(log(abs(v[i]) / abs(v[i - 1])) / log(n[i] / n[i - 1]));
    return s;
}

std::vector<unsigned> order_test_grid() { return {50, 100, 200, 400, 800}; }

}  // namespace polyasym
