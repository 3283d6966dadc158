#pragma once

#include "abelweb/ratfunc.hpp"

#include <cstdint>
#include <random>

namespace abelweb::testing {

inline constexpr int kInstances = 100;

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    Rational rational(long span = 9, long maxden = 7)
    {
        Rational q(integer(-span, span), integer(1, maxden));
        q.canonicalize();
        return q;
    }
    Rational nonzero_rational(long span = 9, long maxden = 7)
    {
        for (;;) {
            Rational q = rational(span, maxden);
            if (q != 0)
                return q;
        }
    }
    BivarPoly poly(int max_deg = 3, long span = 5)
    {
        BivarPoly p;
        for (int a = 0; a <= max_deg; ++a)
            for (int b = 0; a + b <= max_deg; ++b)
                if (integer(0, 2) == 0)
                    p.add_term(Rational(integer(-span, span)), a, b);
        return p;
    }
    BivarPoly nonconstant_poly(int max_deg = 3, long span = 5)
    {
        for (;;) {
            BivarPoly p = poly(max_deg, span);
            if (!p.is_constant())
                return p;
        }
    }
    RatFunc ratfunc(int max_deg = 2)
    {
        BivarPoly den;
        while (den.is_zero())
            den = poly(max_deg);
        return RatFunc(poly(max_deg), den);
    }
    // Rational function with a finite value at (cx, cy).
    RatFunc ratfunc_regular_at(const Rational &cx, const Rational &cy, int max_deg = 2)
    {
        for (;;) {
            RatFunc f = ratfunc(max_deg);
            if (f.den().evaluate(cx, cy) != 0)
                return f;
        }
    }
    std::mt19937_64 &engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

} // namespace abelweb::testing
