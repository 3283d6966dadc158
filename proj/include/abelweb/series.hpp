#pragma once

#include "abelweb/ratfunc.hpp"

#include <vector>

namespace abelweb {

// Truncated bivariate Taylor expansion in (X, Y) = (x - cx, y - cy); every
// coefficient of total degree <= order is stored (dense triangle).
class SeriesJet {
public:
    SeriesJet() = default;
    SeriesJet(Rational cx, Rational cy, int order);

    const Rational &center_x() const { return cx_; }
    const Rational &center_y() const { return cy_; }
    int order() const { return order_; }

    const Rational &at(int a, int b) const { return c_[index(a, b)]; }
    Rational &at(int a, int b) { return c_[index(a, b)]; }

    SeriesJet operator*(const SeriesJet &o) const;
    SeriesJet operator+(const SeriesJet &o) const;
    SeriesJet truncated(int k) const;
    bool operator==(const SeriesJet &o) const;

    static int index(int a, int b)
    {
        int d = a + b;
        return d * (d + 1) / 2 + b;
    }

private:
    Rational cx_, cy_;
    int order_ = 0;
    std::vector<Rational> c_;
};

SeriesJet taylor(const RatFunc &f, const Rational &cx, const Rational &cy, int order);

} // namespace abelweb
