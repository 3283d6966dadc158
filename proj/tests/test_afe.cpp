#include "abelweb/afe.hpp"
#include "abelweb/errors.hpp"
#include "support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace abelweb;
using abelweb::testing::kInstances;

namespace {

AfeInstance fixture(const std::string &name) { return load_afe(std::string(ABELWEB_FIXTURES) + "/" + name + ".afe"); }

const std::vector<ConstantCandidate> &candidates()
{
    static const std::vector<ConstantCandidate> c = {
        {"0", parse_constant("0")},
        {"pi^2/6", parse_constant("pi^2/6")},
        {"pi^2/6 - log2^2/2", parse_constant("pi^2/6 - log2^2/2")},
        {"zeta3", parse_constant("zeta3")},
    };
    return c;
}

} // namespace

TEST_CASE("afe file format", "[afe][io]")
{
    auto a = parse_afe("name: t\ndomain: 0<x<y<1\nrhs: 0\nterm: 1 ; L[x0] ; x\nterm: 1 ; L[x0] ; y\n"
                       "term: -1 ; L[x0] ; x*y\n");
    CHECK(a.size() == 3);
    CHECK(a.multipliers == std::vector<long>{1, 1, -1});
    CHECK(a.domain == Domain::Ordered);
    CHECK(parse_domain(domain_to_string(Domain::Hyperbolic)) == Domain::Hyperbolic);
    CHECK_THROWS_AS(parse_afe("term: 1 ; Li2\n"), Error);
    CHECK_THROWS_AS(parse_afe("term: 1 ; NoSuchFunction ; x\n"), Error);
    CHECK_THROWS_AS(parse_afe("rhs: nope\nterm: 1 ; Li2 ; x\nterm: 1 ; Li2 ; y\n"), Error);
    auto c = parse_component("2*L[x0x1] - pi^2/6 + Lt[x1x0]");
    CHECK(parse_component(c.to_string()).to_string() == c.to_string());
}

TEST_CASE("domain samplers stay inside their domains", "[afe][property]")
{
    auto inside = [](Domain d, const SamplePoint &s) {
        switch (d) {
        case Domain::Ordered: return s.x_re > 0 && s.x_re < s.y_re && s.y_re < 1 && s.x_im == 0 && s.y_im == 0;
        case Domain::UnitSquare: return s.x_re > 0 && s.x_re < 1 && s.y_re > 0 && s.y_re < 1;
        case Domain::Hyperbolic: return s.x_re * s.y_re < 1 && abs(s.x_re) < 4 && abs(s.y_re) < 4;
        case Domain::Complex: return true;
        }
        return false;
    };
    for (Domain d : {Domain::Ordered, Domain::UnitSquare, Domain::Hyperbolic, Domain::Complex}) {
        auto pts = sample_domain(d, kInstances, 7);
        REQUIRE(pts.size() == static_cast<std::size_t>(kInstances));
        for (auto &s : pts)
            CHECK(inside(d, s));
        // Seeded: the same seed gives the same points.
        CHECK(sample_domain(d, 3, 7)[2].to_string() == pts[2].to_string());
    }
}

TEST_CASE("numeric identities", "[afe]")
{
    for (const auto &name : {"schaffer", "sk", "newman", "arctan", "fiveterm"}) {
        INFO(name);
        auto rep = verify_afe_numeric(fixture(name), 3, 50, 1e-40, 11);
        CHECK(rep.pass);
        CHECK(rep.max_residual.to_double() < 1e-40);
    }
    auto ft = five_term_check(3, 50, 1e-40, 12);
    CHECK(ft.pass);
}

TEST_CASE("a broken identity fails", "[afe]")
{
    AfeInstance a = fixture("sk");
    a.multipliers[0] = 1;
    CHECK_FALSE(verify_afe_numeric(a, 2, 30, 1e-20, 13).pass);
    AfeInstance s = fixture("schaffer");
    s.rhs = "0";
    CHECK_FALSE(verify_afe_numeric(s, 2, 30, 1e-20, 13).pass);
}

TEST_CASE("constants of functional equations", "[afe]")
{
    auto g21 = constancy_check(fixture("g21"), 4, 40, candidates(), 14);
    CHECK(g21.best == "pi^2/6 - log2^2/2");
    CHECK(g21.matched_digits >= 30);
    auto rogers = constancy_check(fixture("rogers"), 4, 40, candidates(), 15);
    CHECK(rogers.best == "0");
    CHECK(rogers.matched_digits >= 30);
    auto cauchy = parse_afe("domain: 0<x<y<1\nterm: 1 ; log ; x\nterm: -1 ; log ; y\nterm: -1 ; log ; x/y\n");
    CHECK(constancy_check(cauchy, 4, 40, candidates(), 16).best == "0");
    auto not_const = parse_afe("domain: 0<x<y<1\nterm: 1 ; Li2 ; x\nterm: 1 ; Li2 ; y\n");
    CHECK_THROWS_AS(constancy_check(not_const, 4, 40, candidates(), 17), Error);
}
