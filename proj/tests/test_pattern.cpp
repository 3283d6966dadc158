#include "abelweb/errors.hpp"
#include "abelweb/pattern.hpp"
#include "abelweb/special.hpp"
#include "abelweb/webio.hpp"
#include "sk_germs.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace abelweb;

namespace {

const std::pair<Rational, Rational> kOmega{Rational(1, 3), Rational(1, 2)};

} // namespace

TEST_CASE("pattern syntax", "[pattern]")
{
    Pattern p = parse_pattern("{1,2,3,4}{5} : 1,-1,-1,-1,1", 5);
    CHECK(p.classes.size() == 2);
    CHECK(p.multipliers == std::vector<long>{1, -1, -1, -1, 1});
    CHECK(parse_pattern(p.to_string(), 5).to_string() == p.to_string());
    CHECK(parse_pattern("1,-1,-1,-1,1", 5).classes.size() == 1);
    CHECK_THROWS_AS(parse_pattern("{1,2}{2,3} : 1,1,1", 3), Error);
    CHECK_THROWS_AS(parse_pattern("{1,2,3} : 1,0,1", 3), Error);
    CHECK_THROWS_AS(parse_pattern("{1,2,3} : 1,1", 3), Error);
}

TEST_CASE("single unknown on the Rogers web", "[pattern]")
{
    Web w = named_web("rogers");
    auto base = pick_generic_point(w, 0, kOmega);
    auto r = constrained_rank(w, parse_pattern("1,-1,-1,-1,1", 5), base);
    CHECK(r.dim == 1);
    CHECK(r.stable);
    REQUIRE(r.basis.size() == 1);
    REQUIRE(r.blocks.size() == 1);
    // The jet of the solution at U1(omega) = 1/3 is proportional to the jet of d.
    const int order = 8;
    mpfr_prec_t prec = 200;
    auto got = block_taylor(r, r.basis[0], 0, Rational(1, 3), order);
    const auto &dexpr = *special("d").expr;
    std::vector<Word> words = dexpr.words();
    auto tw = taylor_words(words, Complex(Rational(1, 3), Rational(0), prec), order, prec);
    std::vector<Complex> want(order + 1, Complex(prec));
    for (std::size_t k = 0; k < words.size(); ++k) {
        Complex c = dexpr.coefficient(words[k]).numeric(prec);
        for (int j = 0; j <= order; ++j)
            want[static_cast<std::size_t>(j)] += c * tw[k][static_cast<std::size_t>(j)];
    }
    Complex ratio = got[1] / want[1];
    for (int j = 1; j <= order; ++j)
        CHECK(abs(got[static_cast<std::size_t>(j)] - ratio * want[static_cast<std::size_t>(j)]).to_double() < 1e-40);
}

TEST_CASE("two unknowns on the Rogers web", "[pattern]")
{
    Web w = named_web("rogers");
    auto r = constrained_rank(w, parse_pattern("{1,2,3,4}{5} : 1,-1,-1,-1,1", 5), pick_generic_point(w, 0, kOmega));
    CHECK(r.dim == 1);
    CHECK(r.stable);
}

TEST_CASE("single unknown on the Spence-Kummer web", "[pattern]")
{
    std::size_t oracle = oracle::sk_pattern_oracle();
    CHECK(oracle == 2);
    Web w = named_web("sk");
    auto r = constrained_rank(w, parse_pattern("2,2,-1,2,2,-1,2,2,-1", 9), pick_generic_point(w, 0, kOmega));
    CHECK(r.stable);
    CHECK(r.dim == oracle);
}

TEST_CASE("a pattern with no solution", "[pattern]")
{
    Web w = named_web("rogers");
    auto r = constrained_rank(w, parse_pattern("1,1,1,1,1", 5), pick_generic_point(w, 0, kOmega));
    CHECK(r.dim == 0);
}
