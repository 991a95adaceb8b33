#include "polyasym/contour.hpp"

#include <stdexcept>

namespace polyasym {

Complex cauchy_integral(const std::function<Complex(const Complex&)>& g, const ContourSpec& c)
{
    if (c.nodes == 0 || c.radius <= 0)
        throw std::invalid_argument("contour needs a positive radius and node count");
    // With w = r e^{it}, dw = i w dt, so the integral is the mean of g(w) w.
    const Real step = 2 * pi() / Real(c.nodes);
    Complex total;
    for (unsigned j = 0; j < c.nodes; ++j) {
        Complex w = polar(c.radius, step * Real(j));
        total += g(w) * w;
    }
    return total / Real(c.nodes);
}

}  // namespace polyasym
