#include "abelweb/config.hpp"
#include "abelweb/errors.hpp"
#include "abelweb/webio.hpp"
#include "support.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

using namespace abelweb;
using abelweb::testing::Gen;
using abelweb::testing::kInstances;

namespace {

RatFunc P(const char *s) { return parse_ratfunc(s); }
BivarPoly B(const char *s) { return parse_ratfunc(s).num(); }

std::vector<BivarPoly> sorted(std::vector<BivarPoly> v)
{
    std::sort(v.begin(), v.end(), canonical_less);
    return v;
}

RatFunc random_moebius(Gen &g, const RatFunc &u)
{
    for (;;) {
        Rational a = g.rational(4, 3), b = g.rational(4, 3), c = g.rational(4, 3), d = g.rational(4, 3);
        if (a * d - b * c != 0)
            return (a * u + b) / (c * u + d);
    }
}

ProjMatrix random_projective(Gen &g)
{
    for (;;) {
        ProjMatrix m;
        for (auto &r : m)
            for (auto &e : r)
                e = g.integer(-3, 3);
        Rational det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                       m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                       m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        if (det != 0)
            return m;
    }
}

const std::vector<std::string> kSmallWebs = {"cauchy", "arctan", "rogers", "lines5"};

} // namespace

TEST_CASE("web invariants", "[web]")
{
    CHECK_THROWS_AS(Web({P("x"), P("y")}), Error);
    CHECK_THROWS_AS(Web({P("x"), P("y"), P("3")}), Error);
    CHECK_THROWS_AS(Web({P("x"), P("y"), P("x/y"), P("y/x")}), Error);
    CHECK(Web({P("x"), P("y"), P("x+y")}).size() == 3);
}

TEST_CASE("same foliation", "[web]")
{
    CHECK(same_foliation(P("x/y"), P("y/x")));
    CHECK_FALSE(same_foliation(P("x"), P("y")));
    CHECK(same_foliation(P("x*(1-y)/(y*(1-x))"), P("y*(1-x)/(x*(1-y))")));
    CHECK(same_foliation(P("x+y"), P("(x+y)^2")));
}

TEST_CASE("printed singular loci", "[web][sigma]")
{
    SECTION("Cauchy")
    {
        auto r = verify_sigma_factors(named_web("cauchy"), {B("x"), B("y")});
        CHECK(r.all_divide);
        CHECK(r.product_equal);
        auto neg = verify_sigma_factors(named_web("cauchy"), {B("x+y")});
        CHECK_FALSE(neg.all_divide);
        CHECK_FALSE(neg.entries[0].divides);
    }
    SECTION("Arctan")
    {
        auto r = verify_sigma_factors(named_web("arctan"), {B("1-x*y"), B("1+x^2"), B("1+y^2")});
        CHECK(r.all_divide);
        CHECK(r.product_equal);
    }
    SECTION("Rogers")
    {
        auto r = verify_sigma_factors(named_web("rogers"), {B("x"), B("y"), B("1-x"), B("1-y"), B("x-y")});
        CHECK(r.all_divide);
        CHECK(r.product_equal);
    }
    SECTION("Spence-Kummer")
    {
        auto r = verify_sigma_factors(named_web("sk"), {B("x"), B("y"), B("1-x"), B("1-y"), B("x-y"), B("1+y"),
                                                        B("1+x"), B("1-x*y"), B("2-x-y"), B("x*y-2*y+1"),
                                                        B("2*x*y-y-x")});
        CHECK(r.all_divide);
        // The printed list omits the tangency curve of x/y and (1-y)/(y(x-1)).
        CHECK_FALSE(r.product_equal);
        REQUIRE(r.unmatched_components.size() == 1);
        CHECK(r.unmatched_components[0] == B("x*y-2*x+1"));
        CHECK(jacobian_numerator(P("x/y"), P("(1-y)/(y*(x-1))")) == B("x*y-2*x+1"));
    }
}

TEST_CASE("generic points", "[web]")
{
    auto rogers = pick_generic_point(named_web("rogers"), 0, std::pair{Rational(1, 3), Rational(1, 2)});
    CHECK(rogers.x == Rational(1, 3));
    CHECK(rogers.y == Rational(1, 2));
    CHECK(rogers.images[3] == Rational(3, 4));
    auto cauchy = pick_generic_point(named_web("cauchy"), 0, std::pair{Rational(0), Rational(0)});
    CHECK_FALSE((cauchy.x == 0 && cauchy.y == 0));
    auto sk = pick_generic_point(named_web("sk"), 0, std::pair{Rational(1, 3), Rational(1, 2)});
    CHECK(sk.x == Rational(1, 3));
    // A foliation with a pole at the point is replaced by its reciprocal.
    Web w({P("x"), P("y"), P("1/(x-y)")});
    auto b = pick_generic_point(w, 0, std::pair{Rational(1), Rational(1)});
    CHECK_FALSE((b.x == 1 && b.y == 1));
}

TEST_CASE("generic points avoid the singular locus", "[web][property]")
{
    for (int n = 0; n < kInstances; ++n) {
        Web w = named_web(kSmallWebs[n % kSmallWebs.size()]);
        auto sigma = singular_locus(w);
        auto b = pick_generic_point(w, sigma, static_cast<std::uint64_t>(n));
        for (auto &c : sigma.curve_components)
            CHECK(c.evaluate(b.x, b.y) != 0);
        CHECK(is_generic_point(w, sigma, b.x, b.y));
    }
}

TEST_CASE("condition C, local form", "[web]")
{
    CHECK(condition_C_local(named_web("cauchy")).holds);
    CHECK(condition_C_local(named_web("rogers")).holds);
}

TEST_CASE("subwebs", "[web]")
{
    Web sk = named_web("sk");
    CHECK(same_web(subweb(sk, {0, 1, 2, 3, 4}), named_web("rogers")));
    CHECK(subweb_complement(sk, {5, 8}).size() == 7);
    CHECK(hat_name({5, 8}) == "^6^9");
    CHECK_THROWS_AS(subweb(sk, {0, 1}), Error);
    CHECK(same_web(subweb(sk, {0, 1, 2, 3, 4, 5, 6, 7, 8}), sk));
}

TEST_CASE("pullbacks", "[web]")
{
    Web bol = named_web("bol");
    CHECK(same_web(pullback_web(bol, {RatFunc::var_y(), RatFunc::var_x()}), bol));
    CHECK(same_web(pullback_web(bol, {RatFunc::var_x(), RatFunc::var_y()}), bol));
    CHECK_THROWS_AS(pullback_web(Web({P("x"), P("y"), P("x+y")}), {RatFunc::var_x(), RatFunc::var_x()}), Error);
}

TEST_CASE("singular locus invariant under Moebius reparametrization", "[web][property]")
{
    Gen g(201);
    for (int n = 0; n < kInstances; ++n) {
        Web w = named_web(kSmallWebs[n % kSmallWebs.size()]);
        auto ints = w.integrals();
        std::size_t i = static_cast<std::size_t>(g.integer(0, static_cast<long>(ints.size()) - 1));
        ints[i] = random_moebius(g, ints[i]);
        Web w2(ints);
        CHECK(sorted(singular_locus(w).tangency_components) == sorted(singular_locus(w2).tangency_components));
    }
}

TEST_CASE("singular locus independent of foliation order", "[web][property]")
{
    Gen g(202);
    for (int n = 0; n < kInstances; ++n) {
        Web w = named_web(kSmallWebs[n % kSmallWebs.size()]);
        auto ints = w.integrals();
        std::shuffle(ints.begin(), ints.end(), g.engine());
        auto a = singular_locus(w), b = singular_locus(Web(ints));
        CHECK(a.curve_components == b.curve_components);
        CHECK(a.tangency_components == b.tangency_components);
    }
}

TEST_CASE("projective pullback and its inverse", "[web][property]")
{
    Gen g(203);
    for (int n = 0; n < kInstances; ++n) {
        Web w = named_web(kSmallWebs[n % kSmallWebs.size()]);
        ProjMatrix m = random_projective(g);
        Web pulled = pullback_web(w, chart_map(m));
        Web back = pullback_web(pulled, chart_map(inverse(m)));
        auto match = match_foliations(w, back);
        for (std::size_t i = 0; i < w.size(); ++i)
            CHECK(match[i] == std::optional<std::size_t>(i));
        // Tangency curves are carried to tangency curves.
        auto sigma = singular_locus(pulled);
        BivarPoly prod = sigma.product();
        for (auto &c : singular_locus(w).tangency_components) {
            RatFunc image = substitute(RatFunc(c), chart_map(m));
            BivarPoly num = squarefree_part(image.num());
            if (!num.is_constant())
                CHECK(divides(num, prod));
        }
    }
}

TEST_CASE("web file format", "[web][io]")
{
    auto f = parse_web_file("# comment\nname: t\npoint: 1/3 1/2\nU: x\nU: y\nU: x/y\n");
    CHECK(f.web.name() == "t");
    REQUIRE(f.point);
    CHECK(f.point->first == Rational(1, 3));
    auto again = parse_web_file(format_web_file(f.web, f.point));
    CHECK(same_web(again.web, f.web));
    CHECK(again.point == f.point);
    CHECK_THROWS_AS(parse_web_file("U: x\nfoo: y\n"), Error);
    CHECK_THROWS_AS(named_web("nope"), Error);
    for (const auto &name : {"cauchy", "arctan", "bol", "sk", "wc"}) {
        auto file = load_web_file(std::string(ABELWEB_FIXTURES) + "/" + name + ".web");
        CHECK(same_web(file.web, named_web(name)));
    }
}
