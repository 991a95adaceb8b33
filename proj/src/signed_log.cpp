#include "polyasym/signed_log.hpp"

#include <stdexcept>

namespace polyasym {

SignedLogValue SignedLogValue::from_real(const Real& v)
{
    if (v == 0)
        return zero();
    return {v < 0 ? -1 : 1, log(abs(v))};
}

Real SignedLogValue::to_real() const
{
    if (sign == 0)
        return Real(0);
    Real m = exp(log_mag);
    return sign < 0 ? Real(-m) : m;
}

SignedLogValue operator*(const SignedLogValue& a, const SignedLogValue& b)
{
    if (a.sign == 0 || b.sign == 0)
        return SignedLogValue::zero();
    return {a.sign * b.sign, a.log_mag + b.log_mag};
}

SignedLogValue operator/(const SignedLogValue& a, const SignedLogValue& b)
{
    if (b.sign == 0)
        throw std::domain_error("division by zero SignedLogValue");
    if (a.sign == 0)
        return SignedLogValue::zero();
    return {a.sign * b.sign, a.log_mag - b.log_mag};
}

SignedLogValue operator+(const SignedLogValue& a, const SignedLogValue& b)
{
    if (a.sign == 0)
        return b;
    if (b.sign == 0)
        return a;
    const bool a_big = a.log_mag >= b.log_mag;
    const SignedLogValue& hi = a_big ? a : b;
    const SignedLogValue& lo = a_big ? b : a;
    Real s = hi.sign + lo.sign * exp(lo.log_mag - hi.log_mag);
    if (s == 0)
        return SignedLogValue::zero();
    return {s < 0 ? -1 : 1, hi.log_mag + log(abs(s))};
}

SignedLogValue operator-(const SignedLogValue& a)
{
    return {-a.sign, a.log_mag};
}

std::ostream& operator<<(std::ostream& os, const SignedLogValue& v)
{
    if (v.sign == 0)
        return os << "0";
    return os << (v.sign < 0 ? "-" : "+") << "exp(" << v.log_mag << ")";
}

}  // namespace polyasym
