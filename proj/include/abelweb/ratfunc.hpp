#pragma once

#include "abelweb/poly.hpp"

#include <array>
#include <string>
#include <utility>

namespace abelweb {

// Reduced quotient num/den: gcd removed, leading coefficient of den equal to 1.
class RatFunc {
public:
    RatFunc() : den_(1) {}
    RatFunc(const Rational &c) : num_(c), den_(1) {}
    RatFunc(long c) : RatFunc(Rational(c)) {}
    RatFunc(const BivarPoly &p) : num_(p), den_(1) {}
    RatFunc(const BivarPoly &num, const BivarPoly &den);
    static RatFunc var_x() { return RatFunc(BivarPoly::var_x()); }
    static RatFunc var_y() { return RatFunc(BivarPoly::var_y()); }

    const BivarPoly &num() const { return num_; }
    const BivarPoly &den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    // Requires is_constant().
    Rational constant_value() const;

    RatFunc operator-() const;
    RatFunc inverse() const;
    friend RatFunc operator+(const RatFunc &a, const RatFunc &b);
    friend RatFunc operator-(const RatFunc &a, const RatFunc &b);
    friend RatFunc operator*(const RatFunc &a, const RatFunc &b);
    friend RatFunc operator/(const RatFunc &a, const RatFunc &b);
    RatFunc &operator+=(const RatFunc &o) { return *this = *this + o; }
    RatFunc &operator-=(const RatFunc &o) { return *this = *this - o; }
    RatFunc &operator*=(const RatFunc &o) { return *this = *this * o; }
    RatFunc &operator/=(const RatFunc &o) { return *this = *this / o; }
    bool operator==(const RatFunc &o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc &o) const { return !(*this == o); }
    RatFunc pow(int n) const;

    // Printed with full parentheses: "(num)/(den)" or "(num)".
    std::string to_string(const std::string &vx = "x", const std::string &vy = "y") const;

private:
    struct NoReduce {};
    RatFunc(BivarPoly num, BivarPoly den, NoReduce) : num_(std::move(num)), den_(std::move(den)) {}
    BivarPoly num_;
    BivarPoly den_;
};

RatFunc parse_ratfunc(const std::string &text, const std::array<std::string, 2> &vars = {"x", "y"});

RatFunc derivative(const RatFunc &f, int var);
// Squarefree primitive numerator of f_x g_y - f_y g_x, leading coefficient positive.
BivarPoly jacobian_numerator(const RatFunc &f, const RatFunc &g);
// f_x g_y - f_y g_x as a reduced rational function.
RatFunc jacobian(const RatFunc &f, const RatFunc &g);
// Throws PoleAtCenter if the denominator vanishes.
Rational evaluate(const RatFunc &f, const Rational &x, const Rational &y);
// f(mx, my).
RatFunc substitute(const RatFunc &f, const std::pair<RatFunc, RatFunc> &map);

} // namespace abelweb
