#include "abelweb/series.hpp"

#include "abelweb/errors.hpp"

namespace abelweb {

SeriesJet::SeriesJet(Rational cx, Rational cy, int order)
    : cx_(std::move(cx)), cy_(std::move(cy)), order_(order), c_(static_cast<std::size_t>((order + 1) * (order + 2) / 2))
{
}

SeriesJet SeriesJet::operator*(const SeriesJet &o) const
{
    int k = std::min(order_, o.order_);
    SeriesJet r(cx_, cy_, k);
    for (int d1 = 0; d1 <= k; ++d1)
        for (int b1 = 0; b1 <= d1; ++b1) {
            const Rational &u = at(d1 - b1, b1);
            if (u == 0)
                continue;
            for (int d2 = 0; d1 + d2 <= k; ++d2)
                for (int b2 = 0; b2 <= d2; ++b2) {
                    const Rational &v = o.at(d2 - b2, b2);
                    if (v != 0)
                        r.at(d1 - b1 + d2 - b2, b1 + b2) += u * v;
                }
        }
    return r;
}

SeriesJet SeriesJet::operator+(const SeriesJet &o) const
{
    int k = std::min(order_, o.order_);
    SeriesJet r(cx_, cy_, k);
    for (int d = 0; d <= k; ++d)
        for (int b = 0; b <= d; ++b)
            r.at(d - b, b) = at(d - b, b) + o.at(d - b, b);
    return r;
}

SeriesJet SeriesJet::truncated(int k) const
{
    SeriesJet r(cx_, cy_, std::min(k, order_));
    for (int d = 0; d <= r.order_; ++d)
        for (int b = 0; b <= d; ++b)
            r.at(d - b, b) = at(d - b, b);
    return r;
}

bool SeriesJet::operator==(const SeriesJet &o) const
{
    return cx_ == o.cx_ && cy_ == o.cy_ && order_ == o.order_ && c_ == o.c_;
}

SeriesJet taylor(const RatFunc &f, const Rational &cx, const Rational &cy, int order)
{
    BivarPoly n = f.num().shifted(cx, cy);
    BivarPoly d = f.den().shifted(cx, cy);
    Rational d0 = d.coeff(0, 0);
    if (d0 == 0)
        throw Error(ErrorKind::PoleAtCenter, "denominator vanishes at the expansion center");
    Rational inv = 1 / d0;
    SeriesJet r(cx, cy, order);
    for (int deg = 0; deg <= order; ++deg)
        for (int b = 0; b <= deg; ++b) {
            int a = deg - b;
            Rational s = n.coeff(a, b);
            for (const auto &[e, c] : d.terms()) {
                if (e.total() == 0 || e.x > a || e.y > b)
                    continue;
                s -= c * r.at(a - e.x, b - e.y);
            }
            r.at(a, b) = s * inv;
        }
    return r;
}

} // namespace abelweb
