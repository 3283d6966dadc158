#pragma once

#include "abelweb/poly.hpp"

#include <mpfr.h>

#include <string>

namespace abelweb {

// MPFR value carrying its own precision. Binary operations produce a result
// at the larger operand precision; nothing depends on a global default.
class Real {
public:
    explicit Real(mpfr_prec_t prec = 128);
    Real(long v, mpfr_prec_t prec);
    Real(const Rational &q, mpfr_prec_t prec);
    Real(const std::string &decimal, mpfr_prec_t prec);
    Real(const Real &o);
    Real(Real &&o) noexcept;
    Real &operator=(const Real &o);
    Real &operator=(Real &&o) noexcept;
    ~Real();

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    Real with_prec(mpfr_prec_t p) const;

    Real &operator+=(const Real &o);
    Real &operator-=(const Real &o);
    Real &operator*=(const Real &o);
    Real &operator/=(const Real &o);
    friend Real operator+(Real a, const Real &b) { return a += b; }
    friend Real operator-(Real a, const Real &b) { return a -= b; }
    friend Real operator*(Real a, const Real &b) { return a *= b; }
    friend Real operator/(Real a, const Real &b) { return a /= b; }
    Real operator-() const;

    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    friend bool operator<(const Real &a, const Real &b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const Real &a, const Real &b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const Real &a, const Real &b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long exponent() const { return is_zero() ? -(1L << 30) : mpfr_get_exp(v_); }
    // Scientific notation with the given number of significant digits.
    std::string to_string(int digits) const;

    static Real pi(mpfr_prec_t p);
    static Real log2(mpfr_prec_t p);
    static Real zeta3(mpfr_prec_t p);
    static Real pow2(long e, mpfr_prec_t p);

private:
    mpfr_t v_;
};

Real abs(const Real &a);
Real sqrt(const Real &a);
Real log(const Real &a);
Real exp(const Real &a);
Real atan2(const Real &y, const Real &x);
Real max(const Real &a, const Real &b);

struct Complex {
    Real re, im;

    explicit Complex(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    Complex(const Rational &r, const Rational &i, mpfr_prec_t prec) : re(r, prec), im(i, prec) {}

    mpfr_prec_t prec() const { return re.prec(); }
    Complex &operator+=(const Complex &o);
    Complex &operator-=(const Complex &o);
    Complex &operator*=(const Complex &o);
    Complex &operator*=(const Real &o);
    Complex &operator/=(const Complex &o);
    friend Complex operator+(Complex a, const Complex &b) { return a += b; }
    friend Complex operator-(Complex a, const Complex &b) { return a -= b; }
    friend Complex operator*(Complex a, const Complex &b) { return a *= b; }
    friend Complex operator*(Complex a, const Real &b) { return a *= b; }
    friend Complex operator/(Complex a, const Complex &b) { return a /= b; }
    Complex operator-() const { return Complex(-re, -im); }
    Complex conj() const { return Complex(re, -im); }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }
};

Real abs(const Complex &z);
// Principal logarithm, arg in (-pi, pi].
Complex log_principal(const Complex &z);
// Logarithm on the cut plane minus the downward imaginary half-axis: arg in (-pi/2, 3pi/2].
Complex log_omega(const Complex &z);
Complex sqrt_principal(const Complex &z);
Complex exp(const Complex &z);
// Principal atanh(z) = (log(1+z) - log(1-z)) / 2.
Complex atanh_principal(const Complex &z);

} // namespace abelweb
