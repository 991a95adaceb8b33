#pragma once

#include "polyasym/complex.hpp"

#include <functional>

namespace polyasym {

struct ContourSpec {
    Real radius = 0.5;
    unsigned nodes = 512;
};

// (1/(2 pi i)) times the integral of g(w) dw around |w| = radius, by the
// trapezoidal rule in the angle.  Converges geometrically in the node count
// when g is analytic in an annulus around the circle.
Complex cauchy_integral(const std::function<Complex(const Complex&)>& g, const ContourSpec& c);

}  // namespace polyasym
