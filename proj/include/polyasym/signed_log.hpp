#pragma once

#include "polyasym/precision.hpp"

#include <ostream>

namespace polyasym {

// Sign and natural log of the magnitude of a real number.  The magnitude is
// meaningless when sign == 0.
struct SignedLogValue {
    int sign = 0;
    Real log_mag = 0;

    static SignedLogValue zero() { return {}; }
    static SignedLogValue from_real(const Real& v);
    static SignedLogValue from_log(int sign, const Real& log_mag) { return {sign, log_mag}; }

    Real to_real() const;
    bool is_zero() const { return sign == 0; }
};

SignedLogValue operator*(const SignedLogValue& a, const SignedLogValue& b);
SignedLogValue operator/(const SignedLogValue& a, const SignedLogValue& b);
SignedLogValue operator+(const SignedLogValue& a, const SignedLogValue& b);
SignedLogValue operator-(const SignedLogValue& a);
inline SignedLogValue operator-(const SignedLogValue& a, const SignedLogValue& b) { return a + (-b); }

std::ostream& operator<<(std::ostream& os, const SignedLogValue& v);

}  // namespace polyasym
