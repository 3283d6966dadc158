#include "abelweb/errors.hpp"
#include "abelweb/hyperlog.hpp"
#include "abelweb/special.hpp"
#include "support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace abelweb;
using abelweb::testing::Gen;
using abelweb::testing::kInstances;

namespace {

HyperlogExpr W(const char *s) { return HyperlogExpr::word(parse_word(s)); }

double dist(const Complex &a, const Complex &b) { return abs(a - b).to_double(); }

Complex cx(const Rational &re, const Rational &im, mpfr_prec_t p) { return Complex(re, im, p); }

Rational frac(long n, long d)
{
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::vector<Word> all_words(int max_weight)
{
    std::vector<Word> out, layer{Word{}};
    for (int w = 1; w <= max_weight; ++w) {
        std::vector<Word> next;
        for (auto &u : layer)
            for (int a : {-1, 0, 1}) {
                Word v{Rational(a)};
                v.insert(v.end(), u.begin(), u.end());
                next.push_back(v);
            }
        out.insert(out.end(), next.begin(), next.end());
        layer = next;
    }
    return out;
}

Word random_word(Gen &g, int min_weight, int max_weight)
{
    Word w;
    int n = static_cast<int>(g.integer(min_weight, max_weight));
    for (int k = 0; k < n; ++k)
        w.push_back(Rational(g.integer(-1, 1)));
    return w;
}

// A point of the cut plane with positive imaginary part, away from the letters.
Complex random_point(Gen &g, mpfr_prec_t p)
{
    for (;;) {
        Rational re = frac(g.integer(-16, 16), 8), im = frac(g.integer(1, 12), 8);
        if (re == -1 || re == 0 || re == 1)
            continue;
        return cx(re, im, p);
    }
}

// Independent oracle: sum_{k >= 1} z^k / k^n.
Complex polylog_series(int n, const Complex &z, int terms)
{
    mpfr_prec_t p = z.prec();
    Complex s(p), zk(Real(1L, p), Real(p));
    for (long k = 1; k <= terms; ++k) {
        zk = zk * z;
        Real kn(1L, p);
        for (int j = 0; j < n; ++j)
            kn *= Real(k, p);
        s += zk * (Real(1L, p) / kn);
    }
    return s;
}

} // namespace

TEST_CASE("word syntax", "[hyperlog]")
{
    CHECK(parse_word("x0x1") == make_word({0, 1}));
    CHECK(parse_word("x0^2x1") == make_word({0, 0, 1}));
    CHECK(word_to_string(parse_word("x-1x0")) == "x-1x0");
    CHECK(parse_word("").empty());
    CHECK(parse_word("x{1/2}x0")[0] == Rational(1, 2));
    CHECK_THROWS_AS(parse_word("y0"), Error);
    for (auto &w : all_words(3))
        CHECK(parse_word(word_to_string(w)) == w);
    CHECK(kernel_sign(Rational(1)) == -1);
    CHECK(kernel_sign(Rational(0)) == 1);
}

TEST_CASE("constants", "[hyperlog]")
{
    Constant i = Constant::i(), pi = Constant::pi();
    CHECK(i * i == Constant(-1));
    CHECK(two_pi_i() * two_pi_i() == Constant(-4) * pi * pi);
    CHECK((pi * pi).pow(2) == pi.pow(4));
    CHECK(i.conj() == -i);
    mpfr_prec_t p = 200;
    Real pi2_6 = Real::pi(p) * Real::pi(p) / Real(6L, p);
    CHECK(dist(parse_constant("pi^2/6").numeric(p), Complex(pi2_6, Real(p))) < 1e-55);
    CHECK(parse_constant("pi^2/6 - log2^2/2") == Rational(1, 6) * pi * pi - Rational(1, 2) * Constant::log2().pow(2));
}

TEST_CASE("shuffle product", "[hyperlog]")
{
    CHECK(abelweb::shuffle(Word{}, parse_word("x0x1")) == W("x0x1"));
    CHECK(abelweb::shuffle(parse_word("x0"), parse_word("x1")) == W("x0x1") + W("x1x0"));
    CHECK(abelweb::shuffle(parse_word("x0"), parse_word("x0")) == HyperlogExpr::word(parse_word("x0x0"), Constant(2)));
    CHECK_THROWS_AS(abelweb::shuffle(parse_word("x0"), parse_word("x-1"), Alphabet{0, 1}), Error);
    Gen g(601);
    for (int n = 0; n < kInstances; ++n) {
        Word u = random_word(g, 0, 3), v = random_word(g, 0, 3);
        CHECK(abelweb::shuffle(u, v) == abelweb::shuffle(v, u));
    }
}

TEST_CASE("evaluation examples", "[hyperlog]")
{
    const int digits = 50;
    mpfr_prec_t p = digits_to_bits(digits) + 32;
    Complex half = cx(Rational(1, 2), 0, p);
    Real l2 = Real::log2(p), pi = Real::pi(p);
    Complex li2_half(pi * pi / Real(12L, p) - l2 * l2 / Real(2L, p), Real(p));
    auto v = eval_word(parse_word("x0x1"), half, digits);
    CHECK(dist(v.value, li2_half) < 1e-50);
    CHECK(dist(polylog_series(2, half, 400), li2_half) < 1e-50);
    CHECK(dist(eval_word(parse_word("x1"), half, digits).value, Complex(l2, Real(p))) < 1e-50);
    CHECK(dist(eval_word(parse_word("x0"), cx(1, 0, p), digits).value, Complex(p)) < 1e-50);
    CHECK_THROWS_AS(eval_word(parse_word("x1"), cx(1, 0, p), digits), Error);
    CHECK_THROWS_AS(eval_word(parse_word("x0"), cx(0, -1, p), digits), Error);
}

TEST_CASE("polylogarithms against their series", "[hyperlog][property]")
{
    Gen g(602);
    mpfr_prec_t p = 180;
    for (int n = 0; n < kInstances; ++n) {
        // |z| <= 0.6
        Complex z = cx(frac(g.integer(-40, 40), 100), frac(g.integer(-40, 40), 100), p);
        if (z.re.is_zero() && z.im.sign() <= 0)
            continue;
        auto v = eval_words_raw({parse_word("x0x1"), parse_word("x0x0x1")}, z, p);
        CHECK(dist(v[0], polylog_series(2, z, 260)) < 1e-45);
        CHECK(dist(v[1], polylog_series(3, z, 260)) < 1e-45);
    }
}

TEST_CASE("shuffle is multiplicative under evaluation", "[hyperlog][property]")
{
    Gen g(603);
    mpfr_prec_t p = 140;
    for (int n = 0; n < kInstances; ++n) {
        Word u = random_word(g, 1, 2), v = random_word(g, 1, 2);
        Complex z = random_point(g, p);
        auto vals = eval_words_raw({u, v}, z, p);
        Complex prod = eval_raw(abelweb::shuffle(u, v), z, p);
        INFO(word_to_string(u) << " " << word_to_string(v) << " at " << z.re.to_double() << "+" << z.im.to_double() << "i");
        CHECK(dist(vals[0] * vals[1], prod) < 1e-30);
    }
}

TEST_CASE("derivatives", "[hyperlog]")
{
    RatFunc x = RatFunc::var_x();
    HyperlogFunction li2;
    li2.add(parse_word("x1"), ConstMono{}, RatFunc(1) / x);
    CHECK(hyper_derivative(W("x0x1")).to_string() == li2.to_string());
    HyperlogFunction lg;
    lg.add(Word{}, ConstMono{}, RatFunc(1) / x);
    CHECK(hyper_derivative(W("x0")).to_string() == lg.to_string());
    // Leibniz on L[x0] L[x1].
    HyperlogFunction leib;
    leib.add(parse_word("x1"), ConstMono{}, RatFunc(1) / x);
    leib.add(parse_word("x0"), ConstMono{}, RatFunc(1) / (RatFunc(1) - x));
    CHECK(hyper_derivative(abelweb::shuffle(parse_word("x0"), parse_word("x1"))).to_string() == leib.to_string());
    CHECK(hyper_derivative(HyperlogExpr(Constant::pi())).is_zero());
}

TEST_CASE("derivative against central differences", "[hyperlog][property]")
{
    Gen g(604);
    mpfr_prec_t p = 200;
    for (int n = 0; n < kInstances; ++n) {
        Word w = random_word(g, 1, 3);
        HyperlogExpr e = HyperlogExpr::word(w);
        Complex z = random_point(g, p);
        Complex exact = eval_raw(hyper_derivative(e), z, p);
        auto err = [&](long k) {
            Complex h(Real::pow2(-k, p), Real(p));
            Complex fd = (eval_raw(e, z + h, p) - eval_raw(e, z - h, p)) * Real::pow2(k - 1, p);
            return dist(fd, exact);
        };
        double e1 = err(20), e2 = err(21);
        INFO(word_to_string(w));
        CHECK(e1 < 1e-9);
        // Second-order method: halving h divides the error by about 4.
        CHECK(e1 / e2 > 3.5);
        CHECK(e1 / e2 < 4.5);
    }
}

TEST_CASE("precision doubling stays within the reported error", "[hyperlog][property]")
{
    Gen g(605);
    for (int n = 0; n < kInstances; ++n) {
        Word w = random_word(g, 1, 3);
        Complex z = random_point(g, 120);
        auto mf = eval_word(w, z, 30);
        Complex ref = eval_words_raw({w}, Complex(z.re.with_prec(400), z.im.with_prec(400)), 400)[0];
        double bound = std::max(mf.error.to_double(), 1e-30);
        CHECK(dist(mf.value, ref) <= 2 * bound);
    }
}

TEST_CASE("monodromy examples", "[hyperlog]")
{
    CHECK(monodromy(W("x0"), 0) == W("x0") + HyperlogExpr(two_pi_i()));
    CHECK(monodromy(W("x1"), 0) == W("x1"));
    CHECK(monodromy(W("x0x1"), 1) == W("x0x1") - two_pi_i() * W("x0"));
    CHECK(monodromy(HyperlogExpr(Constant(3)), 1) == HyperlogExpr(Constant(3)));
}

TEST_CASE("monodromy respects the shuffle product", "[hyperlog][property]")
{
    Gen g(606);
    for (int n = 0; n < kInstances; ++n) {
        // Path constants are implemented up to weight 2, so the product has weight <= 3.
        Word u = random_word(g, 1, 1), v = random_word(g, 1, 2);
        Letter a(g.integer(-1, 1));
        CHECK(monodromy(abelweb::shuffle(u, v), a) == monodromy(HyperlogExpr::word(u), a) * monodromy(HyperlogExpr::word(v), a));
    }
}

TEST_CASE("symbolic monodromy matches numeric continuation", "[hyperlog][property]")
{
    // Every word of weight <= 3 over {-1, 0, 1}, around each letter: 39 x 3 instances.
    const mpfr_prec_t p = 160;
    std::vector<Word> words = all_words(3);
    Complex z = cx(Rational(3, 10), Rational(1, 5), p);
    Complex s0 = path_start(words, p);
    auto base = default_path(words, z, p);
    Real pi = Real::pi(p);
    const int steps = 32;
    for (int a : {-1, 0, 1}) {
        std::vector<Complex> path{s0};
        auto circle = [&](const Complex &center, const Real &r, const Real &th0) {
            for (int k = 1; k <= steps; ++k) {
                Real th = th0 + pi * Real(Rational(2 * k, steps), p);
                Real c(p), s(p);
                mpfr_sin_cos(s.get(), c.get(), th.get(), MPFR_RNDN);
                path.push_back(Complex(center.re + r * c, center.im + r * s));
            }
        };
        if (a == 0) {
            // Circle through the start point i*h.
            circle(Complex(p), s0.im, pi * Real(Rational(1, 2), p));
        } else {
            Real e(Rational(1, 4), p);
            Real start = a > 0 ? pi : Real(p);
            path.push_back(Complex(Real(Rational(a), p) + (a > 0 ? -e : e), Real(p)));
            circle(cx(a, 0, p), e, start);
            path.push_back(s0);
        }
        for (std::size_t k = 1; k < base.size(); ++k)
            path.push_back(base[k]);
        auto num = continue_along(words, path, p);
        for (std::size_t k = 0; k < words.size(); ++k) {
            auto m = monodromy(HyperlogExpr::word(words[k]), Rational(a));
            INFO("letter " << a << " word " << word_to_string(words[k]) << " M = " << m.to_string());
            CHECK(dist(eval_raw(m, z, p), num[k]) < 1e-30);
        }
    }
}

TEST_CASE("special function registry", "[hyperlog][special]")
{
    auto d = special("d");
    REQUIRE(d.expr);
    // d = L[x0x1] - L[x1x0] - pi^2/6 with L[x1x0] based at 1, i.e. L[x1x0] + pi^2/6 based at 0.
    CHECK(*d.expr == W("x0x1") - W("x1x0") - HyperlogExpr(Rational(1, 3) * Constant::pi().pow(2)));
    REQUIRE(special("g").expr);
    CHECK(*special("g").expr == HyperlogExpr::word(parse_word("x0x0x1"), Constant(2)) - W("x0x1x0") - W("x1x0x0") -
                                    HyperlogExpr(Rational(2, 3) * Constant::zeta3()));
    CHECK_THROWS_AS(special("nope"), Error);
    mpfr_prec_t p = 160;
    Gen g(607);
    for (int n = 0; n < kInstances; ++n) {
        Complex z = random_point(g, p);
        CHECK(dist(bloch_wigner(z.conj(), p), -bloch_wigner(z, p)) < 1e-40);
    }
    // Points on the lines Re z = 0 and Re z = 1, including the cuts.
    for (long re : {0L, 1L})
        for (long im : {-2L, -1L, 1L, 2L}) {
            Complex z = cx(re, frac(im, 3), p);
            CHECK(dist(bloch_wigner(z.conj(), p), -bloch_wigner(z, p)) < 1e-40);
            Complex nudge = cx(frac(re * 1000000 + 1, 1000000), frac(im, 3), p);
            CHECK(dist(bloch_wigner(z, p), bloch_wigner(nudge, p)) < 1e-4);
        }
    // Rogers-normalized dilogarithm: L(1/2) = pi^2/12 - pi^2/6.
    Real pi = Real::pi(p);
    CHECK(dist(special("rogers").evaluate(cx(Rational(1, 2), 0, p), p),
               Complex(-pi * pi / Real(12L, p), Real(p))) < 1e-40);
}
