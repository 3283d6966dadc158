#include "abelweb/config.hpp"
#include "abelweb/errors.hpp"
#include "abelweb/jet.hpp"
#include "abelweb/webio.hpp"
#include "support.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

using namespace abelweb;
using abelweb::testing::Gen;
using abelweb::testing::kInstances;

namespace {

RatFunc P(const char *s) { return parse_ratfunc(s); }

ProjPoint pt(long x, long y, long z) { return ProjPoint(x, y, z); }

Configuration cfg(std::vector<ProjPoint> pts) { return Configuration{"t", std::move(pts)}; }

// One sample per stratum, affine points (a, b) as [a:b:1].
Configuration stratum_sample(int label)
{
    switch (label) {
    case 0: return cfg({pt(0, 0, 1), pt(1, 0, 1), pt(0, 1, 1), pt(2, 3, 1), pt(-1, 3, 1)});
    case 1: return cfg({pt(0, 0, 1), pt(1, 1, 1), pt(2, 2, 1), pt(1, 0, 1), pt(0, 3, 1)});
    case 2: return cfg({pt(0, 0, 1), pt(1, 0, 1), pt(2, 0, 1), pt(3, 0, 1), pt(0, 1, 1)});
    case 3: return cfg({pt(0, 0, 1), pt(1, 1, 1), pt(2, 2, 1), pt(1, -1, 1), pt(2, -2, 1)});
    default: return cfg({pt(0, 0, 1), pt(1, 0, 1), pt(2, 0, 1), pt(3, 0, 1), pt(5, 0, 1)});
    }
}

ProjMatrix random_projective(Gen &g)
{
    for (;;) {
        ProjMatrix m;
        for (auto &r : m)
            for (auto &e : r)
                e = g.integer(-3, 3);
        try {
            inverse(m);
            return m;
        } catch (const Error &) {
        }
    }
}

Configuration random_configuration(Gen &g, std::size_t n)
{
    for (;;) {
        std::vector<ProjPoint> pts;
        for (std::size_t i = 0; i < n; ++i) {
            Rational z = g.integer(0, 4) == 0 ? Rational(0) : Rational(1);
            Rational x = g.integer(-3, 3), y = g.integer(-3, 3);
            if (x == 0 && y == 0 && z == 0)
                continue;
            pts.emplace_back(x, y, z);
        }
        Configuration c{"r", pts};
        try {
            c.validate();
            if (pts.size() == n)
                return c;
        } catch (const Error &) {
        }
    }
}

std::size_t rank_of(const Web &w, std::uint64_t seed = 0) { return abelian_rank(w, pick_generic_point(w, seed)).rank; }

} // namespace

TEST_CASE("collinearity", "[config]")
{
    CHECK(collinear(pt(1, 0, 0), pt(0, 1, 0), pt(1, 1, 0)));
    CHECK_FALSE(collinear(pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)));
    CHECK(collinear(pt(1, 1, 1), pt(-1, -1, 1), pt(0, 0, 1)));
    CHECK(ProjPoint(2, 4, 6) == ProjPoint(1, 2, 3));
    CHECK(ProjPoint(0, -2, 4).to_string() == "[0:1:-2]");
}

TEST_CASE("strata and foliation counts", "[config]")
{
    const std::size_t counts[5] = {10, 8, 5, 6, 5};
    for (int label = 0; label < 5; ++label) {
        Configuration c = stratum_sample(label);
        INFO("S" << label);
        CHECK(classify_stratum(c).label == label);
        CHECK(web_from_configuration(c).web.size() == counts[label]);
    }
    auto s3 = classify_stratum(stratum_sample(3));
    REQUIRE(s3.pivot);
    CHECK(*s3.pivot == 0);
    auto c = named_configuration("c");
    auto sc = classify_stratum(c);
    CHECK(sc.label == 1);
    REQUIRE(sc.witnesses.size() == 1);
    CHECK(sc.witnesses[0] == std::array<std::size_t, 3>{2, 3, 4});
    CHECK(classify_stratum(load_configuration(std::string(ABELWEB_FIXTURES) + "/s3.cfg")).label == 3);
}

TEST_CASE("pencils", "[config]")
{
    CHECK(same_foliation(line_pencil(pt(0, 0, 1)), P("y/x")));
    CHECK(same_foliation(line_pencil(pt(1, 0, 0)), P("y")));
    CHECK(same_foliation(line_pencil(pt(0, 1, 0)), P("x")));
    CHECK(same_foliation(line_pencil(pt(2, 3, 1)), P("(y-3)/(x-2)")));
    CHECK(same_foliation(conic_pencil(pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1), pt(1, 1, 1)),
                         P("y*(1-x)/(x*(1-y))")));
    CHECK_THROWS_AS(conic_pencil(pt(0, 0, 1), pt(1, 1, 1), pt(2, 2, 1), pt(1, 0, 1)), Error);
}

TEST_CASE("named configurations and their webs", "[config]")
{
    auto b = named_configuration("b");
    CHECK(b.size() == 4);
    CHECK(collinear_triples(b).empty());
    Web wb = web_from_configuration(b).web;
    auto match = match_foliations(named_web("rogers"), wb);
    CHECK(wb.size() == 5);
    CHECK(std::all_of(match.begin(), match.end(), [](auto &m) { return m.has_value(); }));
    CHECK(same_web(web_from_configuration(named_configuration("c")).web, named_web("wc")));
    CHECK(same_web(web_from_configuration(cfg({pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)})).web, named_web("cauchy")));
    auto ca = named_configuration("c_a", Rational(2));
    CHECK(ca.points[4] == ProjPoint(2, 2, -1));
    CHECK(classify_stratum(ca).label == 1);
    CHECK(web_from_configuration(ca).web.size() == 8);
    CHECK_THROWS_AS(named_configuration("c_a", Rational(0)), Error);
    CHECK_THROWS_AS(named_configuration("c_a", Rational(1)), Error);
    CHECK_THROWS_AS(named_configuration("zz"), Error);
    CHECK_THROWS_AS(cfg({pt(1, 0, 0), pt(2, 0, 0), pt(0, 0, 1)}).validate(), Error);
}

TEST_CASE("Cremona correspondence", "[config]")
{
    auto r7 = prop7_check();
    CHECK(r7.match);
    REQUIRE(r7.matching.size() == 9);
    std::vector<std::size_t> image;
    for (auto &m : r7.matching) {
        REQUIRE(m);
        image.push_back(*m);
    }
    CHECK(image == std::vector<std::size_t>{1, 0, 6, 3, 2, 7, 4, 5, 8});
    CHECK(prop8_check().match);
    auto neg = compare_with_configuration(named_web("sk"), named_configuration("b"));
    CHECK_FALSE(neg.match);
    CHECK(neg.config_size == 5);
    CHECK(neg.web_size == 9);
}

TEST_CASE("maximal rank of small configuration webs", "[config]")
{
    CHECK(rank_of(web_from_configuration(cfg({pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)})).web) == 1);
    CHECK(rank_of(web_from_configuration(named_configuration("b")).web) == 6);
    for (int label = 1; label <= 4; ++label) {
        Web w = web_from_configuration(stratum_sample(label)).web;
        INFO("S" << label);
        CHECK(rank_of(w) == bol_bound(w.size()));
    }
}

TEST_CASE("Theorem C for random configurations of three and four points", "[config][property]")
{
    Gen g(501);
    for (int n = 0; n < kInstances; ++n) {
        Configuration c = random_configuration(g, n % 2 ? 4 : 3);
        auto cw = web_from_configuration(c);
        INFO(c.points[0].to_string() << c.points[1].to_string() << c.points[2].to_string());
        CHECK(rank_of(cw.web, static_cast<std::uint64_t>(n)) == bol_bound(cw.web.size()));
    }
}

TEST_CASE("projective equivariance of configuration webs", "[config][property]")
{
    Gen g(502);
    for (int n = 0; n < kInstances; ++n) {
        Configuration c = random_configuration(g, static_cast<std::size_t>(3 + n % 3));
        ProjMatrix m = random_projective(g);
        Configuration moved{"m", {}};
        for (auto &p : c.points)
            moved.points.push_back(abelweb::apply(m, p));
        Web direct = web_from_configuration(moved).web;
        Web pulled = pullback_web(web_from_configuration(c).web, chart_map(inverse(m)));
        CHECK(same_web(direct, pulled));
        if (c.size() == 5) {
            CHECK(classify_stratum(moved).label == classify_stratum(c).label);
            Configuration shuffled = c;
            std::shuffle(shuffled.points.begin(), shuffled.points.end(), g.engine());
            CHECK(classify_stratum(shuffled).label == classify_stratum(c).label);
        }
    }
}

TEST_CASE("stratum invariance on five-point samples", "[config][property]")
{
    Gen g(503);
    for (int n = 0; n < kInstances; ++n) {
        int label = n % 5;
        Configuration c = stratum_sample(label);
        ProjMatrix m = random_projective(g);
        Configuration moved{"m", {}};
        for (auto &p : c.points)
            moved.points.push_back(abelweb::apply(m, p));
        std::shuffle(moved.points.begin(), moved.points.end(), g.engine());
        CHECK(classify_stratum(moved).label == label);
        CHECK(web_from_configuration(moved).web.size() == web_from_configuration(c).web.size());
    }
}

TEST_CASE("configuration file format", "[config][io]")
{
    auto c = parse_configuration("name: t\n# pts\n1 0 0\n0 1 0\n1/2 1/2 1/2\n");
    CHECK(c.name == "t");
    CHECK(c.size() == 3);
    CHECK(c.points[2] == pt(1, 1, 1));
    CHECK_THROWS_AS(parse_configuration("1 0\n"), Error);
    for (const auto &name : {"b", "q", "c"}) {
        auto f = load_configuration(std::string(ABELWEB_FIXTURES) + "/" + name + ".cfg");
        auto expected = named_configuration(name);
        CHECK(std::equal(f.points.begin(), f.points.end(), expected.points.begin(), expected.points.end()));
    }
}
