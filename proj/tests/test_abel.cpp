#include "abelweb/abel.hpp"
#include "abelweb/errors.hpp"
#include "abelweb/jet.hpp"
#include "abelweb/special.hpp"
#include "abelweb/webio.hpp"
#include "support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace abelweb;
using abelweb::testing::Gen;
using abelweb::testing::kInstances;

namespace {

RatFunc P(const char *s) { return parse_ratfunc(s); }

RatFunc U(const char *s) { return parse_ratfunc(s, {"v", "y"}); }

// The printed fourth-order ODE for the first Rogers foliation, variable v.
UnivarODE rogers_ode()
{
    return UnivarODE{{RatFunc(0), U("(4*v-2)/(v^4-2*v^3+v^2)"), U("(14*v^2-14*v+2)/(v^4-2*v^3+v^2)"),
                      U("(8*v-4)/(v^2-v)"), RatFunc(1)}};
}

HyperlogExpr W(const char *s) { return HyperlogExpr::word(parse_word(s)); }

ErrorKind kind_of(const std::function<void()> &f)
{
    try {
        f();
    } catch (const Error &e) {
        return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::Format;
}

} // namespace

TEST_CASE("level field and normalized derivation", "[abel]")
{
    auto f = level_field(P("x/y"));
    CHECK(f.apply(P("x/y")).is_zero());
    CHECK(f.apply(P("x^2/y^2+3")).is_zero());
    CHECK(kind_of([] { level_field(P("5")); }) == ErrorKind::ConstantInput);
    std::vector<RatFunc> inner = {P("x"), P("y"), P("x/y")};
    auto d = normalized_derivation(inner, 0, 1);
    CHECK(d.apply(P("x")).is_zero());
    CHECK(d.apply(P("y")) == RatFunc(1));
    CHECK(kind_of([] { normalized_derivation({P("x"), P("2*x"), P("y")}, 0, 1); }) == ErrorKind::DegeneratePair);
}

TEST_CASE("derivation contract on random pairs", "[abel][property]")
{
    Gen g(401);
    int done = 0;
    while (done < kInstances) {
        RatFunc a = g.ratfunc(2), b = g.ratfunc(2);
        if (a.is_constant() || b.is_constant() || same_foliation(a, b))
            continue;
        auto lf = level_field(a);
        CHECK(lf.apply(a).is_zero());
        CHECK(lf.apply(a * a + RatFunc(Rational(1, 2)) * a).is_zero());
        auto d = normalized_derivation({a, b}, 0, 1);
        CHECK(d.apply(a).is_zero());
        CHECK(d.apply(b) == RatFunc(1));
        // Chain rule: Y(h(V_c)) = h'(V_c).
        CHECK(d.apply(b * b) == RatFunc(2) * b);
        ++done;
    }
}

TEST_CASE("Adfe bookkeeping and one reduction step", "[abel]")
{
    Web rogers = named_web("rogers");
    Adfe e = Adfe::from_web(rogers);
    CHECK(e.type_string() == "(0,0,0,0,0)");
    CHECK(e.active_count() == 5);
    Adfe r = reduce_step(e, 1, 0);
    CHECK(r.type_string() == "(1,-,1,1,1)");
    CHECK(r.active_count() == 4);
    CHECK_FALSE(r.active(1));
    // Normalizing twice changes nothing.
    CHECK(normalize_equation(r).to_string() == normalize_equation(normalize_equation(r)).to_string());
}

TEST_CASE("Cauchy equation", "[abel]")
{
    auto res = derive_lde(named_web("cauchy"), 0);
    auto ode = res.ode.normalized();
    REQUIRE(ode.order() == 2);
    CHECK(ode.coeffs[2] == RatFunc(1));
    CHECK(ode.coeffs[1] == RatFunc(1) / RatFunc::var_x());
    CHECK(ode.coeffs[0].is_zero());
    CHECK(ode_check(res.ode, W("x0")));
    CHECK(ode_check(res.ode, HyperlogExpr(Constant(1))));
    CHECK_FALSE(ode_check(res.ode, W("x1")));
}

TEST_CASE("Rogers equation", "[abel]")
{
    Web w = named_web("rogers");
    UnivarODE expected = rogers_ode();
    for (std::size_t target : {0u, 4u}) {
        auto res = derive_lde(w, target);
        auto got = res.ode.normalized();
        REQUIRE(got.order() == 4);
        for (int j = 0; j <= 4; ++j)
            CHECK(got.coeffs[static_cast<std::size_t>(j)] == expected.coeffs[static_cast<std::size_t>(j)]);
    }
    auto traced = derive_lde(w, 0);
    CHECK(traced.trace.size() == 4);
    CHECK(traced.trace.back().type_after == "(4,-,-,-,-)");
}

TEST_CASE("Rogers equation solutions", "[abel]")
{
    UnivarODE ode = rogers_ode();
    CHECK(ode_check(ode, HyperlogExpr(Constant(1))));
    CHECK(ode_check(ode, W("x0")));
    CHECK(ode_check(ode, W("x1")));
    CHECK(ode_check(ode, *special("d").expr));
    CHECK(ode_check(ode, HyperlogExpr()));
    CHECK_FALSE(ode_check(ode, W("x0x0")));
    CHECK_FALSE(ode_check(ode, W("x0x1")));
}

TEST_CASE("Rogers equation annihilates the jet kernel", "[abel]")
{
    Web w = named_web("rogers");
    auto base = pick_generic_point(w, 0, std::pair{Rational(1, 3), Rational(1, 2)});
    REQUIRE_FALSE(base.inverted[0]);
    auto r = abelian_rank(w, base);
    const int K = r.basis.order;
    const Rational t0 = base.images[0];
    UnivarODE ode = rogers_ode();
    std::vector<SeriesJet> a;
    for (auto &c : ode.coeffs)
        a.push_back(taylor(c, t0, Rational(0), K));
    for (auto &v : r.basis.vectors) {
        // f(t) = sum_k c_k (t - t0)^k; the equation is checked to degree K - 5.
        std::vector<Rational> f(static_cast<std::size_t>(K) + 1);
        for (int k = 1; k <= K; ++k)
            f[static_cast<std::size_t>(k)] = v[r.basis.column(0, k)];
        for (int m = 0; m + 4 < K; ++m) {
            Rational s(0);
            for (int j = 0; j <= 4; ++j)
                for (int p = 0; p <= m; ++p) {
                    int k = m - p + j; // f^(j) has coefficient (k)_j c_k at degree k - j
                    Rational fall(1);
                    for (int q = 0; q < j; ++q)
                        fall *= k - q;
                    s += a[static_cast<std::size_t>(j)].at(p, 0) * fall * f[static_cast<std::size_t>(k)];
                }
            CHECK(s == 0);
        }
    }
}

TEST_CASE("generic three-web has only constant solutions", "[abel]")
{
    Web w({P("x"), P("y"), P("x+y^3+x^2*y")});
    CHECK(kind_of([&] { derive_lde(w, 0); }) == ErrorKind::TrivialEquation);
    CHECK(genericity_certificate(w).generic);
    CHECK_FALSE(genericity_certificate(named_web("rogers")).generic);
}

TEST_CASE("re-expression through a first integral", "[abel]")
{
    RatFunc u = P("x/y");
    CHECK(depends_only_on(P("(x^2+y^2)/(x*y)"), u));
    CHECK_FALSE(depends_only_on(P("x"), u));
    CHECK(reexpress(P("(x^2+y^2)/(x*y)"), u) == P("(x^2+1)/x"));
    CHECK(reexpress(P("(1-y)^2/(1-x)^2 + 1"), P("(1-y)/(1-x)")) == P("x^2+1"));
    CHECK(kind_of([&] { reexpress(P("x"), u); }) == ErrorKind::NoRationalExpression);
}

TEST_CASE("re-expression of random compositions", "[abel][property]")
{
    Gen g(402);
    const std::vector<RatFunc> integrals = {P("x/y"), P("(1-y)/(1-x)"), P("x*y"), P("x+y^2")};
    for (int n = 0; n < kInstances; ++n) {
        RatFunc u = integrals[static_cast<std::size_t>(n) % integrals.size()];
        BivarPoly a, b;
        for (int k = 0; k <= 2; ++k) {
            a.add_term(g.rational(4, 3), k, 0);
            b.add_term(g.rational(4, 3), k, 0);
        }
        if (b.is_zero())
            b = BivarPoly(1);
        RatFunc h(a, b);
        RatFunc f = substitute(h, {u, u});
        if (f.is_constant())
            continue;
        CHECK(depends_only_on(f, u));
        CHECK(reexpress(f, u) == h);
    }
}
