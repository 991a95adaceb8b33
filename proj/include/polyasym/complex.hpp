#pragma once

#include "polyasym/precision.hpp"

#include <ostream>

namespace polyasym {

// Complex number over Real.  Multivalued functions use the principal branch
// with argument in (-pi, pi]; a zero imaginary part counts as +0 so that the
// negative real axis maps to arg = pi.
struct Complex {
    Real re;
    Real im;

    Complex() : re(0), im(0) {}
    Complex(const Real& r) : re(r), im(0) {}
    Complex(const Real& r, const Real& i) : re(r), im(i) {}
    Complex(int r) : re(r), im(0) {}
    Complex(long r) : re(r), im(0) {}
    Complex(unsigned r) : re(r), im(0) {}
    Complex(unsigned long r) : re(r), im(0) {}
    Complex(double r) : re(r), im(0) {}

    static Complex i() { return Complex(Real(0), Real(1)); }

    Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
    Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
    Complex& operator*=(const Complex& o);
    Complex& operator/=(const Complex& o);
    Complex& operator*=(const Real& s) { re *= s; im *= s; return *this; }
    Complex& operator/=(const Real& s) { re /= s; im /= s; return *this; }

    bool is_zero() const { return re == 0 && im == 0; }
};

inline Complex operator-(const Complex& a) { return Complex(-a.re, -a.im); }
inline Complex operator+(Complex a, const Complex& b) { return a += b; }
inline Complex operator-(Complex a, const Complex& b) { return a -= b; }
inline Complex operator*(Complex a, const Complex& b) { return a *= b; }
inline Complex operator/(Complex a, const Complex& b) { return a /= b; }
inline Complex operator*(Complex a, const Real& s) { return a *= s; }
inline Complex operator*(const Real& s, Complex a) { return a *= s; }
inline Complex operator/(Complex a, const Real& s) { return a /= s; }
inline bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }

inline Complex conj(const Complex& z) { return Complex(z.re, -z.im); }
Real abs(const Complex& z);
Real arg(const Complex& z);
inline Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }
inline Complex polar(const Real& r, const Real& theta) { return Complex(r * cos(theta), r * sin(theta)); }

Complex exp(const Complex& z);
Complex log(const Complex& z);
Complex sqrt(const Complex& z);
Complex pow(const Complex& z, const Complex& p);
Complex pow(const Complex& z, const Real& p);
Complex pow(const Complex& z, long n);

std::ostream& operator<<(std::ostream& os, const Complex& z);

}  // namespace polyasym
