#pragma once

#include "polyasym/precision.hpp"

#include <vector>

namespace polyasym {

// Least-squares slope of log|v_i| against log n_i.
Real loglog_slope(const std::vector<Real>& n, const std::vector<Real>& v);

// Slopes between consecutive points of the same data.
std::vector<Real> local_slopes(const std::vector<Real>& n, const std::vector<Real>& v);

// The n grid of the order tests: 50, 100, 200, 400, 800.
std::vector<unsigned> order_test_grid();

}  // namespace polyasym
