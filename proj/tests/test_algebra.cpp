#include "abelweb/errors.hpp"
#include "abelweb/linalg.hpp"
#include "abelweb/series.hpp"
#include "support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace abelweb;
using abelweb::testing::Gen;
using abelweb::testing::kInstances;

namespace {

Rational factorial(int n)
{
    Rational r(1);
    for (int k = 2; k <= n; ++k)
        r *= k;
    return r;
}

} // namespace

TEST_CASE("parser examples", "[algebra]")
{
    RatFunc f = parse_ratfunc("(1-y)/(1-x)");
    CHECK(evaluate(f, Rational(1, 3), Rational(1, 2)) == Rational(3, 4));
    CHECK(parse_ratfunc("x^2 - 2*x*y + y^2") == parse_ratfunc("(x-y)^2"));
    CHECK(parse_ratfunc("x/y") * parse_ratfunc("y") == RatFunc::var_x());
    CHECK(parse_ratfunc("3/6") == RatFunc(Rational(1, 2)));
    CHECK_THROWS_AS(parse_ratfunc("x +* y"), ParseError);
    CHECK_THROWS_AS(parse_ratfunc("x/(y-y)"), Error);
    CHECK(parse_ratfunc("u*v", {"u", "v"}) == parse_ratfunc("x*y"));
}

TEST_CASE("parser round-trip", "[algebra][property]")
{
    Gen g(101);
    for (int n = 0; n < kInstances; ++n) {
        RatFunc f = g.ratfunc(3);
        INFO(f.to_string());
        CHECK(parse_ratfunc(f.to_string()) == f);
        BivarPoly p = g.poly(4, 20);
        CHECK(parse_ratfunc(p.to_string()) == RatFunc(p));
    }
}

TEST_CASE("field axioms on random rational functions", "[algebra][property]")
{
    Gen g(102);
    for (int n = 0; n < kInstances; ++n) {
        RatFunc a = g.ratfunc(), b = g.ratfunc(), c = g.ratfunc();
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a - a == RatFunc(0));
        if (!a.is_zero())
            CHECK(a * a.inverse() == RatFunc(1));
        // Reduced form: gcd(num, den) is constant, den leading coefficient 1.
        CHECK(gcd(a.num(), a.den()).is_constant());
        CHECK(a.den().leading_coeff() == 1);
    }
}

TEST_CASE("Leibniz rule", "[algebra][property]")
{
    Gen g(103);
    for (int n = 0; n < kInstances; ++n) {
        RatFunc f = g.ratfunc(3), h = g.ratfunc(3);
        for (int v = 0; v < 2; ++v) {
            CHECK(derivative(f * h, v) == derivative(f, v) * h + f * derivative(h, v));
            if (!h.is_zero())
                CHECK(derivative(f / h, v) == (derivative(f, v) * h - f * derivative(h, v)) / (h * h));
        }
        CHECK(derivative(derivative(f, 0), 1) == derivative(derivative(f, 1), 0));
    }
}

TEST_CASE("Taylor coefficients agree with iterated derivatives", "[algebra][property]")
{
    Gen g(104);
    for (int n = 0; n < kInstances; ++n) {
        Rational cx = g.rational(3, 4), cy = g.rational(3, 4);
        RatFunc f = g.ratfunc_regular_at(cx, cy);
        const int order = 4;
        SeriesJet s = taylor(f, cx, cy, order);
        for (int a = 0; a <= order; ++a) {
            RatFunc da = f;
            for (int k = 0; k < a; ++k)
                da = derivative(da, 0);
            for (int b = 0; a + b <= order; ++b) {
                RatFunc dab = da;
                for (int k = 0; k < b; ++k)
                    dab = derivative(dab, 1);
                CHECK(s.at(a, b) == evaluate(dab, cx, cy) / (factorial(a) * factorial(b)));
            }
        }
    }
}

TEST_CASE("jet product truncation", "[algebra][property]")
{
    Gen g(105);
    for (int n = 0; n < kInstances; ++n) {
        Rational cx = g.rational(3, 4), cy = g.rational(3, 4);
        RatFunc f = g.ratfunc_regular_at(cx, cy), h = g.ratfunc_regular_at(cx, cy);
        int order = static_cast<int>(g.integer(1, 6));
        SeriesJet sf = taylor(f, cx, cy, order), sh = taylor(h, cx, cy, order);
        CHECK(sf * sh == taylor(f * h, cx, cy, order));
        CHECK(sf + sh == taylor(f + h, cx, cy, order));
        int k = static_cast<int>(g.integer(0, order));
        CHECK(sf.truncated(k) == taylor(f, cx, cy, k));
        CHECK((sf * sh).truncated(k) == sf.truncated(k) * sh.truncated(k));
    }
}

TEST_CASE("Taylor expansion at a pole", "[algebra]")
{
    CHECK_THROWS_AS(taylor(parse_ratfunc("1/(x-y)"), Rational(1), Rational(1), 3), Error);
}

TEST_CASE("polynomial gcd and exact division", "[algebra][property]")
{
    Gen g(106);
    for (int n = 0; n < kInstances; ++n) {
        BivarPoly a = g.nonconstant_poly(2), b = g.nonconstant_poly(2), c = g.nonconstant_poly(2);
        BivarPoly ac = a * c, bc = b * c;
        BivarPoly d = gcd(ac, bc);
        CHECK(divides(c.primitive(), d));
        CHECK(divides(d, ac));
        CHECK(divides(d, bc));
        CHECK(divide_exact(ac, a) == c);
        // Squarefree part has the same zero set and no repeated factor.
        BivarPoly s = squarefree_part(a * a * c);
        CHECK(divides(s, a * c));
        CHECK(s == squarefree_part(a * c));
    }
    CHECK(gcd(BivarPoly(), BivarPoly()).is_zero());
}

TEST_CASE("coprime basis", "[algebra][property]")
{
    Gen g(107);
    for (int n = 0; n < kInstances; ++n) {
        BivarPoly a = g.nonconstant_poly(2), b = g.nonconstant_poly(2), c = g.nonconstant_poly(2);
        auto basis = coprime_basis({a * c, b * c});
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = i + 1; j < basis.size(); ++j)
                CHECK(gcd(basis[i], basis[j]).is_constant());
        // Every factor of the inputs is covered by the basis.
        BivarPoly prod(1);
        for (auto &f : basis)
            prod = prod * f;
        for (auto &p : {a, b, c})
            CHECK(divides(squarefree_part(p), prod));
    }
}

TEST_CASE("exact linear algebra", "[algebra][property]")
{
    Gen g(108);
    for (int n = 0; n < kInstances; ++n) {
        std::size_t rows = static_cast<std::size_t>(g.integer(1, 6)), cols = static_cast<std::size_t>(g.integer(1, 7));
        QMatrix m(rows, QVector(cols));
        for (auto &r : m)
            for (auto &e : r)
                e = g.integer(0, 2) == 0 ? Rational(0) : g.rational(3, 3);
        auto ker = nullspace(m, cols);
        CHECK(rank(m, cols) + ker.size() == cols);
        for (auto &v : ker)
            for (auto &r : m) {
                Rational s(0);
                for (std::size_t j = 0; j < cols; ++j)
                    s += r[j] * v[j];
                CHECK(s == 0);
            }
    }
}
