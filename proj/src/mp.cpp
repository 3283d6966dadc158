#include "abelweb/mp.hpp"

#include <algorithm>
#include <cstdlib>
#include <vector>

namespace abelweb {

Real::Real(mpfr_prec_t prec)
{
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
}

Real::Real(long v, mpfr_prec_t prec)
{
    mpfr_init2(v_, prec);
    mpfr_set_si(v_, v, MPFR_RNDN);
}

Real::Real(const Rational &q, mpfr_prec_t prec)
{
    mpfr_init2(v_, prec);
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const std::string &decimal, mpfr_prec_t prec)
{
    mpfr_init2(v_, prec);
    mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN);
}

Real::Real(const Real &o)
{
    mpfr_init2(v_, o.prec());
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real &&o) noexcept
{
    mpfr_init2(v_, o.prec());
    mpfr_swap(v_, o.v_);
}

Real &Real::operator=(const Real &o)
{
    if (this != &o) {
        mpfr_set_prec(v_, o.prec());
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

Real &Real::operator=(Real &&o) noexcept
{
    mpfr_swap(v_, o.v_);
    return *this;
}

Real::~Real()
{
    mpfr_clear(v_);
}

Real Real::with_prec(mpfr_prec_t p) const
{
    Real r(p);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

namespace {

void widen(Real &a, const Real &b)
{
    if (b.prec() > a.prec())
        mpfr_prec_round(a.get(), b.prec(), MPFR_RNDN);
}

} // namespace

Real &Real::operator+=(const Real &o)
{
    widen(*this, o);
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real &Real::operator-=(const Real &o)
{
    widen(*this, o);
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real &Real::operator*=(const Real &o)
{
    widen(*this, o);
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real &Real::operator/=(const Real &o)
{
    widen(*this, o);
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real Real::operator-() const
{
    Real r(*this);
    mpfr_neg(r.v_, r.v_, MPFR_RNDN);
    return r;
}

std::string Real::to_string(int digits) const
{
    std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Re", std::max(digits - 1, 0), v_);
    return buf.data();
}

Real Real::pi(mpfr_prec_t p)
{
    Real r(p);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

Real Real::log2(mpfr_prec_t p)
{
    Real r(p);
    mpfr_const_log2(r.v_, MPFR_RNDN);
    return r;
}

Real Real::zeta3(mpfr_prec_t p)
{
    Real r(p);
    mpfr_zeta_ui(r.v_, 3, MPFR_RNDN);
    return r;
}

Real Real::pow2(long e, mpfr_prec_t p)
{
    Real r(1L, p);
    mpfr_mul_2si(r.v_, r.v_, e, MPFR_RNDN);
    return r;
}

Real abs(const Real &a)
{
    Real r(a);
    mpfr_abs(r.get(), r.get(), MPFR_RNDN);
    return r;
}

Real sqrt(const Real &a)
{
    Real r(a.prec());
    mpfr_sqrt(r.get(), a.get(), MPFR_RNDN);
    return r;
}

Real log(const Real &a)
{
    Real r(a.prec());
    mpfr_log(r.get(), a.get(), MPFR_RNDN);
    return r;
}

Real exp(const Real &a)
{
    Real r(a.prec());
    mpfr_exp(r.get(), a.get(), MPFR_RNDN);
    return r;
}

Real atan2(const Real &y, const Real &x)
{
    Real r(std::max(y.prec(), x.prec()));
    mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
    return r;
}

Real max(const Real &a, const Real &b)
{
    return a < b ? b : a;
}

Complex &Complex::operator+=(const Complex &o)
{
    re += o.re;
    im += o.im;
    return *this;
}

Complex &Complex::operator-=(const Complex &o)
{
    re -= o.re;
    im -= o.im;
    return *this;
}

Complex &Complex::operator*=(const Complex &o)
{
    Real r = re * o.re - im * o.im;
    Real i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

Complex &Complex::operator*=(const Real &o)
{
    re *= o;
    im *= o;
    return *this;
}

Complex &Complex::operator/=(const Complex &o)
{
    Real d = o.re * o.re + o.im * o.im;
    Real r = (re * o.re + im * o.im) / d;
    Real i = (im * o.re - re * o.im) / d;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

Real abs(const Complex &z)
{
    Real r(z.prec());
    mpfr_hypot(r.get(), z.re.get(), z.im.get(), MPFR_RNDN);
    return r;
}

Complex log_principal(const Complex &z)
{
    return Complex(log(abs(z)), atan2(z.im, z.re));
}

Complex log_omega(const Complex &z)
{
    Complex l = log_principal(z);
    // Points in the third quadrant (re < 0, im < 0) get arg + 2 pi.
    if (z.re.sign() < 0 && z.im.sign() < 0)
        l.im += Real::pi(z.prec()) * Real(2L, z.prec());
    return l;
}

Complex sqrt_principal(const Complex &z)
{
    mpfr_prec_t p = z.prec();
    Real m = abs(z);
    Real half(Rational(1, 2), p);
    Real r = sqrt((m + z.re) * half);
    Real i = sqrt((m - z.re) * half);
    if (z.im.sign() < 0)
        i = -i;
    return Complex(r, i);
}

Complex exp(const Complex &z)
{
    Real e = exp(z.re);
    Real c(z.prec()), s(z.prec());
    mpfr_sin_cos(s.get(), c.get(), z.im.get(), MPFR_RNDN);
    return Complex(e * c, e * s);
}

Complex atanh_principal(const Complex &z)
{
    mpfr_prec_t p = z.prec();
    Complex one(Real(1L, p), Real(p));
    Complex l = log_principal(one + z) - log_principal(one - z);
    Real half(Rational(1, 2), p);
    return l * half;
}

} // namespace abelweb
