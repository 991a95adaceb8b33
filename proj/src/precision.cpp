#include "polyasym/precision.hpp"

#include <cmath>
#include <stdexcept>

namespace polyasym {

namespace {

unsigned digits10_for_bits(unsigned bits)
{
    return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120));
}

}  // namespace

PrecisionScope::PrecisionScope(PrecisionCtx ctx) : saved_digits10_(Real::default_precision())
{
    if (ctx.mantissa_bits < 64)
        throw std::invalid_argument("precision must be at least 64 mantissa bits");
    Real::default_precision(digits10_for_bits(ctx.mantissa_bits));
}

PrecisionScope::~PrecisionScope()
{
    Real::default_precision(saved_digits10_);
}

unsigned working_bits()
{
    Real probe;
    return static_cast<unsigned>(mpfr_get_prec(probe.backend().data()));
}

Real pi()
{
    Real r;
    mpfr_const_pi(r.backend().data(), MPFR_RNDN);
    return r;
}

Real euler_gamma()
{
    Real r;
    mpfr_const_euler(r.backend().data(), MPFR_RNDN);
    return r;
}

Real working_epsilon()
{
    return ldexp(Real(1), -static_cast<int>(working_bits()));
}

}  // namespace polyasym
