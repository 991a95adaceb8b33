#pragma once

#include <boost/multiprecision/mpfr.hpp>

namespace polyasym {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

struct PrecisionCtx {
    unsigned mantissa_bits = 256;

    static PrecisionCtx oracle() { return {256}; }
    static PrecisionCtx fast() { return {64}; }
};

// Sets the precision of newly created Real values for the lifetime of the
// object and restores the previous default afterwards.  MPFR precision in
// Boost.Multiprecision is a process-wide default, so scopes opened on
// different threads must request the same precision.
class PrecisionScope {
public:
    explicit PrecisionScope(PrecisionCtx ctx);
    explicit PrecisionScope(unsigned mantissa_bits) : PrecisionScope(PrecisionCtx{mantissa_bits}) {}
    ~PrecisionScope();

    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    unsigned saved_digits10_;
};

// Mantissa bits used for Real values created at this point.
unsigned working_bits();

Real pi();
Real euler_gamma();

// 2^-bits at the current working precision.
Real working_epsilon();

}  // namespace polyasym
