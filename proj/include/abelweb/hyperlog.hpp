#pragma once

#include "abelweb/mp.hpp"
#include "abelweb/ratfunc.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace abelweb {

// A letter is a ramification point; x0, x1, x-1 are the points 0, 1, -1.
using Letter = Rational;
// Letters are listed outermost first: L_{a w}(z) = int_0^z k_a(s) L_w(s) ds.
using Word = std::vector<Letter>;
using Alphabet = std::vector<Letter>;

Word make_word(std::initializer_list<int> letters);
// Accepts "x0x1x-1", "x0^2x1", "x{1/2}x0"; the empty string is the empty word.
Word parse_word(const std::string &text);
std::string word_to_string(const Word &w);
int weight(const Word &w);

// Sign s_a in the kernel k_a(s) = s_a / (s - a): +1 for a <= 0, -1 for a > 0.
// This makes L_{x0} = log, L_{x1} = -log(1 - z), L_{x-1} = log(1 + z) and
// L_{x0^{n-1}x1} = Li_n.
int kernel_sign(const Letter &a);

struct ConstMono {
    int i = 0; // 0 or 1 after reduction
    int pi = 0;
    int log2 = 0;
    int zeta3 = 0;
    auto operator<=>(const ConstMono &) const = default;
};

// Q[i, pi, log 2, zeta(3)] with i^2 = -1 as the only relation.
class Constant {
public:
    Constant() = default;
    Constant(long q) : Constant(Rational(q)) {}
    Constant(const Rational &q);
    static Constant i();
    static Constant pi();
    static Constant log2();
    static Constant zeta3();
    static Constant monomial(const ConstMono &m, const Rational &c);

    const std::map<ConstMono, Rational> &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    Rational rational_part() const;
    Constant conj() const;

    Constant &operator+=(const Constant &o);
    Constant &operator-=(const Constant &o);
    friend Constant operator+(Constant a, const Constant &b) { return a += b; }
    friend Constant operator-(Constant a, const Constant &b) { return a -= b; }
    friend Constant operator*(const Constant &a, const Constant &b);
    Constant operator-() const;
    Constant pow(int e) const;
    friend bool operator==(const Constant &a, const Constant &b) { return a.terms_ == b.terms_; }

    Complex numeric(mpfr_prec_t prec) const;
    std::string to_string() const;

private:
    void add(const ConstMono &m, const Rational &c);
    std::map<ConstMono, Rational> terms_;
};

// 2 pi i
Constant two_pi_i();

class HyperlogExpr {
public:
    HyperlogExpr() = default;
    HyperlogExpr(const Constant &c);
    static HyperlogExpr word(const Word &w, const Constant &c = Constant(1));

    const std::map<Word, Constant> &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int weight() const;
    Alphabet alphabet() const;
    std::vector<Word> words() const;
    Constant coefficient(const Word &w) const;

    HyperlogExpr &operator+=(const HyperlogExpr &o);
    HyperlogExpr &operator-=(const HyperlogExpr &o);
    friend HyperlogExpr operator+(HyperlogExpr a, const HyperlogExpr &b) { return a += b; }
    friend HyperlogExpr operator-(HyperlogExpr a, const HyperlogExpr &b) { return a -= b; }
    // Shuffle product.
    friend HyperlogExpr operator*(const HyperlogExpr &a, const HyperlogExpr &b);
    friend HyperlogExpr operator*(const Constant &c, const HyperlogExpr &e);
    HyperlogExpr operator-() const;
    friend bool operator==(const HyperlogExpr &a, const HyperlogExpr &b) { return a.terms_ == b.terms_; }

    std::string to_string() const;

private:
    void add(const Word &w, const Constant &c);
    std::map<Word, Constant> terms_;
};

HyperlogExpr shuffle(const Word &u, const Word &v);
// Same, but every letter must belong to the alphabet (AlphabetMismatch otherwise).
HyperlogExpr shuffle(const Word &u, const Word &v, const Alphabet &alphabet);

// Sum over words of (constant x univariate rational function in x) times L_w.
class HyperlogFunction {
public:
    using Coeff = std::map<ConstMono, RatFunc>;

    HyperlogFunction() = default;
    HyperlogFunction(const HyperlogExpr &e);

    const std::map<Word, Coeff> &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add(const Word &w, const ConstMono &m, const RatFunc &r);

    HyperlogFunction &operator+=(const HyperlogFunction &o);
    friend HyperlogFunction operator+(HyperlogFunction a, const HyperlogFunction &b) { return a += b; }
    friend HyperlogFunction operator*(const RatFunc &r, const HyperlogFunction &f);

    std::string to_string() const;

private:
    std::map<Word, Coeff> terms_;
};

HyperlogFunction hyper_derivative(const HyperlogExpr &e);
HyperlogFunction hyper_derivative(const HyperlogFunction &f);

// Linear ODE sum_j coeffs[j] * f^{(j)} = 0 in the variable x.
struct UnivarODE {
    std::vector<RatFunc> coeffs;

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
    UnivarODE normalized() const; // leading coefficient 1
    std::string to_string(const std::string &var = "t") const;
};

// Symbolic zero test in the word basis, backed by a numeric check at three points.
bool ode_check(const UnivarODE &ode, const HyperlogExpr &e);

struct MultiFloat {
    Complex value;
    Real error; // absolute error estimate from precision doubling
    mpfr_prec_t prec = 0;
};

mpfr_prec_t digits_to_bits(int digits);

// Values of the words at z, continued from 0 along a path inside the cut domain.
std::vector<Complex> eval_words_raw(const std::vector<Word> &words, const Complex &z, mpfr_prec_t prec);
// Taylor coefficients (order + 1 of them) of each word at z.
std::vector<std::vector<Complex>> taylor_words(const std::vector<Word> &words, const Complex &z, int order,
                                               mpfr_prec_t prec);
// Continuation along an explicit polyline that starts at the first waypoint,
// which must lie in the disc where the expansion at 0 is used. No cut checks.
std::vector<Complex> continue_along(const std::vector<Word> &words, const std::vector<Complex> &waypoints,
                                    mpfr_prec_t prec);
// First waypoint used by eval_words_raw for these words (i * h).
Complex path_start(const std::vector<Word> &words, mpfr_prec_t prec);
std::vector<Complex> default_path(const std::vector<Word> &words, const Complex &z, mpfr_prec_t prec);

std::vector<MultiFloat> eval_words(const std::vector<Word> &words, const Complex &z, int digits);
MultiFloat eval_word(const Word &w, const Complex &z, int digits);
Complex eval_raw(const HyperlogExpr &e, const Complex &z, mpfr_prec_t prec);
MultiFloat eval(const HyperlogExpr &e, const Complex &z, int digits);
Complex eval_raw(const HyperlogFunction &f, const Complex &z, mpfr_prec_t prec);

// Numeric value of a rational function at complex arguments.
Complex evaluate_numeric(const RatFunc &f, const Complex &x, const Complex &y);

// Continuation around a positively oriented loop at the letter a, based at 0.
HyperlogExpr monodromy(const HyperlogExpr &e, const Letter &a);

} // namespace abelweb
