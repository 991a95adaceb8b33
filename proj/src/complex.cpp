#include "polyasym/complex.hpp"

namespace polyasym {

Complex& Complex::operator*=(const Complex& o)
{
    Real r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
}

Complex& Complex::operator/=(const Complex& o)
{
    // Scale by the larger component to keep the denominator well conditioned.
    if (abs(o.re) >= abs(o.im)) {
        Real t = o.im / o.re;
        Real d = o.re + o.im * t;
        Real r = (re + im * t) / d;
        im = (im - re * t) / d;
        re = std::move(r);
    } else {
        Real t = o.re / o.im;
        Real d = o.re * t + o.im;
        Real r = (re * t + im) / d;
        im = (im * t - re) / d;
        re = std::move(r);
    }
    return *this;
}

Real abs(const Complex& z)
{
    return hypot(z.re, z.im);
}

Real arg(const Complex& z)
{
    if (z.im == 0)
        return z.re < 0 ? pi() : Real(0);
    return atan2(z.im, z.re);
}

Complex exp(const Complex& z)
{
    return polar(exp(z.re), z.im);
}

Complex log(const Complex& z)
{
    return Complex(log(abs(z)), arg(z));
}

Complex sqrt(const Complex& z)
{
    if (z.is_zero())
        return Complex();
    Real r = abs(z);
    if (z.re >= 0) {
        Real t = sqrt((r + z.re) / 2);
        return Complex(t, z.im / (2 * t));
    }
    Real t = sqrt((r - z.re) / 2);
    Real a = abs(z.im) / (2 * t);
    return Complex(a, z.im < 0 ? Real(-t) : t);
}

Complex pow(const Complex& z, const Complex& p)
{
    if (p.is_zero())
        return Complex(1);
    if (z.is_zero())
        return Complex();
    return exp(p * log(z));
}

Complex pow(const Complex& z, const Real& p)
{
    if (p == 0)
        return Complex(1);
    if (z.is_zero())
        return Complex();
    if (p == floor(p) && abs(p) < 1 << 30)
        return pow(z, p.convert_to<long>());
    return polar(pow(abs(z), p), p * arg(z));
}

Complex pow(const Complex& z, long n)
{
    if (n < 0)
        return Complex(1) / pow(z, -n);
    Complex result(1), base = z;
    while (n) {
        if (n & 1)
            result *= base;
        n >>= 1;
        if (n)
            base *= base;
    }
    return result;
}

std::ostream& operator<<(std::ostream& os, const Complex& z)
{
    return os << '(' << z.re << ", " << z.im << ')';
}

}  // namespace polyasym
