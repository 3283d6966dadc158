#include "abelweb/hyperlog.hpp"

#include "abelweb/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

namespace abelweb {

// ---------------------------------------------------------------- words

Word make_word(std::initializer_list<int> letters)
{
    Word w;
    for (int a : letters)
        w.emplace_back(a);
    return w;
}

Word parse_word(const std::string &text)
{
    Word w;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
    };
    skip();
    while (i < text.size()) {
        if (text[i] != 'x')
            throw ParseError(i, "expected 'x' in word");
        ++i;
        Rational letter;
        if (i < text.size() && text[i] == '{') {
            std::size_t close = text.find('}', i);
            if (close == std::string::npos)
                throw ParseError(i, "unterminated letter");
            try {
                letter = Rational(text.substr(i + 1, close - i - 1));
                letter.canonicalize();
            } catch (const std::invalid_argument &) {
                throw ParseError(i, "bad rational letter");
            }
            if (letter.get_den() == 0)
                throw ParseError(i, "bad rational letter");
            i = close + 1;
        } else {
            std::size_t start = i;
            if (i < text.size() && text[i] == '-')
                ++i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                ++i;
            if (i == start || (i == start + 1 && text[start] == '-'))
                throw ParseError(start, "expected letter index");
            letter = Rational(text.substr(start, i - start));
        }
        int reps = 1;
        if (i < text.size() && text[i] == '^') {
            std::size_t start = ++i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                ++i;
            if (i == start)
                throw ParseError(start, "expected exponent");
            reps = std::stoi(text.substr(start, i - start));
        }
        for (int r = 0; r < reps; ++r)
            w.push_back(letter);
        skip();
    }
    return w;
}

std::string word_to_string(const Word &w)
{
    std::string s;
    for (const auto &a : w) {
        if (a.get_den() == 1)
            s += "x" + a.get_num().get_str();
        else
            s += "x{" + a.get_str() + "}";
    }
    return s;
}

int weight(const Word &w)
{
    return static_cast<int>(w.size());
}

int kernel_sign(const Letter &a)
{
    return a > 0 ? -1 : 1;
}

// ---------------------------------------------------------------- constants

Constant::Constant(const Rational &q)
{
    if (q != 0)
        terms_[ConstMono{}] = q;
}

Constant Constant::monomial(const ConstMono &m, const Rational &c)
{
    Constant r;
    r.add(m, c);
    return r;
}

Constant Constant::i() { return monomial(ConstMono{1, 0, 0, 0}, 1); }
Constant Constant::pi() { return monomial(ConstMono{0, 1, 0, 0}, 1); }
Constant Constant::log2() { return monomial(ConstMono{0, 0, 1, 0}, 1); }
Constant Constant::zeta3() { return monomial(ConstMono{0, 0, 0, 1}, 1); }

void Constant::add(const ConstMono &m, const Rational &c)
{
    if (c == 0)
        return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second == 0)
        terms_.erase(it);
}

bool Constant::is_rational() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == ConstMono{});
}

Rational Constant::rational_part() const
{
    auto it = terms_.find(ConstMono{});
    return it == terms_.end() ? Rational(0) : it->second;
}

Constant Constant::conj() const
{
    Constant r;
    for (const auto &[m, c] : terms_)
        r.add(m, m.i ? Rational(-c) : c);
    return r;
}

Constant &Constant::operator+=(const Constant &o)
{
    for (const auto &[m, c] : o.terms_)
        add(m, c);
    return *this;
}

Constant &Constant::operator-=(const Constant &o)
{
    for (const auto &[m, c] : o.terms_)
        add(m, -c);
    return *this;
}

Constant operator*(const Constant &a, const Constant &b)
{
    Constant r;
    for (const auto &[ma, ca] : a.terms_)
        for (const auto &[mb, cb] : b.terms_) {
            ConstMono m{ma.i + mb.i, ma.pi + mb.pi, ma.log2 + mb.log2, ma.zeta3 + mb.zeta3};
            Rational c = ca * cb;
            if (m.i == 2) {
                m.i = 0;
                c = -c;
            }
            r.add(m, c);
        }
    return r;
}

Constant Constant::operator-() const
{
    Constant r;
    for (const auto &[m, c] : terms_)
        r.add(m, -c);
    return r;
}

Constant Constant::pow(int e) const
{
    Constant r(1);
    for (int k = 0; k < e; ++k)
        r = r * *this;
    return r;
}

Complex Constant::numeric(mpfr_prec_t prec) const
{
    Complex out(prec);
    Real pi = Real::pi(prec), l2 = Real::log2(prec), z3 = Real::zeta3(prec);
    for (const auto &[m, c] : terms_) {
        Real v(c, prec);
        for (int k = 0; k < m.pi; ++k)
            v *= pi;
        for (int k = 0; k < m.log2; ++k)
            v *= l2;
        for (int k = 0; k < m.zeta3; ++k)
            v *= z3;
        if (m.i)
            out.im += v;
        else
            out.re += v;
    }
    return out;
}

namespace {

std::string mono_string(const ConstMono &m)
{
    std::string s;
    auto put = [&](const char *name, int e) {
        if (e == 0)
            return;
        if (!s.empty())
            s += "*";
        s += name;
        if (e > 1)
            s += "^" + std::to_string(e);
    };
    put("i", m.i);
    put("pi", m.pi);
    put("log2", m.log2);
    put("zeta3", m.zeta3);
    return s;
}

} // namespace

std::string Constant::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string s;
    for (const auto &[m, c] : terms_) {
        std::string ms = mono_string(m);
        Rational a = abs(c);
        std::string term;
        if (ms.empty())
            term = rational_to_string(a);
        else if (a == 1)
            term = ms;
        else
            term = rational_to_string(a) + "*" + ms;
        if (s.empty())
            s = (c < 0 ? "-" : "") + term;
        else
            s += (c < 0 ? " - " : " + ") + term;
    }
    return s;
}

Constant two_pi_i()
{
    return Constant(2) * Constant::pi() * Constant::i();
}

// ---------------------------------------------------------------- expressions

HyperlogExpr::HyperlogExpr(const Constant &c)
{
    if (!c.is_zero())
        terms_.emplace(Word{}, c);
}

HyperlogExpr HyperlogExpr::word(const Word &w, const Constant &c)
{
    HyperlogExpr e;
    e.add(w, c);
    return e;
}

void HyperlogExpr::add(const Word &w, const Constant &c)
{
    if (c.is_zero())
        return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero())
        terms_.erase(it);
}

int HyperlogExpr::weight() const
{
    int m = 0;
    for (const auto &[w, c] : terms_)
        m = std::max(m, abelweb::weight(w));
    return m;
}

Alphabet HyperlogExpr::alphabet() const
{
    std::set<Letter> s;
    for (const auto &[w, c] : terms_)
        s.insert(w.begin(), w.end());
    return Alphabet(s.begin(), s.end());
}

std::vector<Word> HyperlogExpr::words() const
{
    std::vector<Word> out;
    for (const auto &[w, c] : terms_)
        out.push_back(w);
    return out;
}

Constant HyperlogExpr::coefficient(const Word &w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? Constant() : it->second;
}

HyperlogExpr &HyperlogExpr::operator+=(const HyperlogExpr &o)
{
    for (const auto &[w, c] : o.terms_)
        add(w, c);
    return *this;
}

HyperlogExpr &HyperlogExpr::operator-=(const HyperlogExpr &o)
{
    for (const auto &[w, c] : o.terms_)
        add(w, -c);
    return *this;
}

HyperlogExpr operator*(const HyperlogExpr &a, const HyperlogExpr &b)
{
    HyperlogExpr r;
    for (const auto &[wa, ca] : a.terms_)
        for (const auto &[wb, cb] : b.terms_) {
            Constant c = ca * cb;
            for (const auto &[w, m] : shuffle(wa, wb).terms_)
                r.add(w, c * m);
        }
    return r;
}

HyperlogExpr operator*(const Constant &c, const HyperlogExpr &e)
{
    HyperlogExpr r;
    for (const auto &[w, k] : e.terms_)
        r.add(w, c * k);
    return r;
}

HyperlogExpr HyperlogExpr::operator-() const
{
    return Constant(-1) * *this;
}

std::string HyperlogExpr::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string s;
    for (const auto &[w, c] : terms_) {
        std::string cs = c.to_string();
        bool simple = c.terms().size() == 1;
        std::string term;
        if (w.empty())
            term = simple ? cs : "(" + cs + ")";
        else if (c == Constant(1))
            term = "L(" + word_to_string(w) + ")";
        else if (c == Constant(-1))
            term = "-L(" + word_to_string(w) + ")";
        else
            term = (simple ? cs : "(" + cs + ")") + "*L(" + word_to_string(w) + ")";
        if (s.empty())
            s = term;
        else if (term[0] == '-')
            s += " - " + term.substr(1);
        else
            s += " + " + term;
    }
    return s;
}

HyperlogExpr shuffle(const Word &u, const Word &v)
{
    // Choose the positions of u's letters among |u| + |v| slots.
    std::size_t n = u.size() + v.size();
    std::map<Word, long> counts;
    std::vector<bool> mask(n, false);
    std::fill(mask.begin(), mask.begin() + static_cast<long>(u.size()), true);
    do {
        Word w;
        std::size_t iu = 0, iv = 0;
        for (std::size_t k = 0; k < n; ++k)
            w.push_back(mask[k] ? u[iu++] : v[iv++]);
        ++counts[w];
    } while (std::prev_permutation(mask.begin(), mask.end()));
    HyperlogExpr r;
    for (const auto &[w, c] : counts)
        r += HyperlogExpr::word(w, Constant(c));
    return r;
}

HyperlogExpr shuffle(const Word &u, const Word &v, const Alphabet &alphabet)
{
    for (const Word *w : {&u, &v})
        for (const auto &a : *w)
            if (std::find(alphabet.begin(), alphabet.end(), a) == alphabet.end())
                throw Error(ErrorKind::AlphabetMismatch, "letter " + a.get_str() + " is not in the alphabet");
    return shuffle(u, v);
}

// ---------------------------------------------------------------- differentiation

namespace {

RatFunc kernel(const Letter &a)
{
    return RatFunc(Rational(kernel_sign(a))) / (RatFunc::var_x() - RatFunc(a));
}

} // namespace

HyperlogFunction::HyperlogFunction(const HyperlogExpr &e)
{
    for (const auto &[w, c] : e.terms())
        for (const auto &[m, q] : c.terms())
            add(w, m, RatFunc(q));
}

void HyperlogFunction::add(const Word &w, const ConstMono &m, const RatFunc &r)
{
    if (r.is_zero())
        return;
    auto &coeff = terms_[w];
    auto it = coeff.find(m);
    if (it == coeff.end())
        coeff.emplace(m, r);
    else {
        it->second += r;
        if (it->second.is_zero())
            coeff.erase(it);
    }
    if (coeff.empty())
        terms_.erase(w);
}

HyperlogFunction &HyperlogFunction::operator+=(const HyperlogFunction &o)
{
    for (const auto &[w, coeff] : o.terms_)
        for (const auto &[m, r] : coeff)
            add(w, m, r);
    return *this;
}

HyperlogFunction operator*(const RatFunc &r, const HyperlogFunction &f)
{
    HyperlogFunction out;
    if (r.is_zero())
        return out;
    for (const auto &[w, coeff] : f.terms_)
        for (const auto &[m, c] : coeff)
            out.add(w, m, r * c);
    return out;
}

std::string HyperlogFunction::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string s;
    for (const auto &[w, coeff] : terms_)
        for (const auto &[m, r] : coeff) {
            if (!s.empty())
                s += " + ";
            std::string ms = mono_string(m);
            s += r.to_string();
            if (!ms.empty())
                s += "*" + ms;
            if (!w.empty())
                s += "*L(" + word_to_string(w) + ")";
        }
    return s;
}

HyperlogFunction hyper_derivative(const HyperlogFunction &f)
{
    HyperlogFunction out;
    for (const auto &[w, coeff] : f.terms()) {
        for (const auto &[m, r] : coeff) {
            out.add(w, m, derivative(r, 0));
            if (!w.empty())
                out.add(Word(w.begin() + 1, w.end()), m, r * kernel(w.front()));
        }
    }
    return out;
}

HyperlogFunction hyper_derivative(const HyperlogExpr &e)
{
    return hyper_derivative(HyperlogFunction(e));
}

UnivarODE UnivarODE::normalized() const
{
    UnivarODE r = *this;
    if (coeffs.empty() || coeffs.back().is_zero())
        return r;
    RatFunc lead = coeffs.back();
    for (auto &c : r.coeffs)
        c = c / lead;
    return r;
}

std::string UnivarODE::to_string(const std::string &var) const
{
    std::string s;
    for (int j = order(); j >= 0; --j) {
        const RatFunc &c = coeffs[static_cast<std::size_t>(j)];
        if (c.is_zero())
            continue;
        if (!s.empty())
            s += " + ";
        s += c.to_string(var, "y");
        if (j > 0)
            s += "*D^" + std::to_string(j);
    }
    return s.empty() ? "0" : s;
}

bool ode_check(const UnivarODE &ode, const HyperlogExpr &e)
{
    HyperlogFunction f(e), acc;
    std::vector<HyperlogFunction> derivs;
    for (std::size_t j = 0; j < ode.coeffs.size(); ++j) {
        derivs.push_back(f);
        acc += ode.coeffs[j] * f;
        f = hyper_derivative(f);
    }
    if (!acc.is_zero())
        return false;
    // Numeric backing of the symbolic zero at three seeded points of (0, 1).
    std::mt19937_64 rng(0x5eed);
    int done = 0;
    const mpfr_prec_t prec = 160;
    for (int attempt = 0; attempt < 200 && done < 3; ++attempt) {
        Rational t(static_cast<long>(rng() % 997) + 1, 1000);
        t.canonicalize();
        bool pole = false;
        for (const auto &c : ode.coeffs)
            if (c.den().evaluate(t, 0) == 0)
                pole = true;
        if (pole)
            continue;
        Complex z(t, Rational(0), prec);
        Complex sum(prec);
        Real scale(1L, prec);
        for (std::size_t j = 0; j < ode.coeffs.size(); ++j) {
            Complex term = Complex(Real(evaluate(ode.coeffs[j], t, 0), prec), Real(prec)) * eval_raw(derivs[j], z, prec);
            scale = max(scale, abs(term));
            sum += term;
        }
        if (!(abs(sum) < scale * Real::pow2(-100, prec)))
            throw Error(ErrorKind::EvaluationFailure, "symbolic zero not confirmed numerically at t = " + t.get_str());
        ++done;
    }
    return true;
}

// ---------------------------------------------------------------- numeric evaluation

mpfr_prec_t digits_to_bits(int digits)
{
    return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 24;
}

Complex evaluate_numeric(const RatFunc &f, const Complex &x, const Complex &y)
{
    mpfr_prec_t prec = std::max(x.prec(), y.prec());
    auto poly = [&](const BivarPoly &p) {
        Complex acc(prec);
        std::vector<Complex> xp{Complex(Real(1L, prec), Real(prec))}, yp{Complex(Real(1L, prec), Real(prec))};
        for (const auto &[e, c] : p.terms()) {
            while (static_cast<int>(xp.size()) <= e.x)
                xp.push_back(xp.back() * x);
            while (static_cast<int>(yp.size()) <= e.y)
                yp.push_back(yp.back() * y);
            acc += xp[static_cast<std::size_t>(e.x)] * yp[static_cast<std::size_t>(e.y)] * Real(c, prec);
        }
        return acc;
    };
    Complex d = poly(f.den());
    if (d.is_zero())
        throw Error(ErrorKind::PoleAtCenter, "denominator vanishes at the evaluation point");
    return poly(f.num()) / d;
}

namespace {

struct WordSet {
    std::vector<Word> words; // suffix closed, by length; words[0] is empty
    std::vector<int> parent;
    std::vector<int> first;  // index into letters
    std::vector<int> zeros;  // number of letters equal to 0
    std::vector<Letter> letters;
    std::vector<int> input_index;
    int max_weight = 0;
    bool has_zero = false;
};

WordSet build_word_set(const std::vector<Word> &input)
{
    std::set<Word> all{Word{}};
    std::set<Letter> letters;
    for (const auto &w : input)
        for (std::size_t k = 0; k <= w.size(); ++k) {
            all.insert(Word(w.begin() + static_cast<long>(k), w.end()));
            if (k < w.size())
                letters.insert(w[k]);
        }
    WordSet ws;
    ws.letters.assign(letters.begin(), letters.end());
    ws.has_zero = letters.count(Rational(0)) > 0;
    std::vector<Word> sorted(all.begin(), all.end());
    std::stable_sort(sorted.begin(), sorted.end(), [](const Word &a, const Word &b) { return a.size() < b.size(); });
    std::map<Word, int> index;
    for (const auto &w : sorted) {
        int id = static_cast<int>(ws.words.size());
        index[w] = id;
        ws.words.push_back(w);
        if (w.empty()) {
            ws.parent.push_back(-1);
            ws.first.push_back(-1);
            ws.zeros.push_back(0);
        } else {
            int p = index.at(Word(w.begin() + 1, w.end()));
            ws.parent.push_back(p);
            ws.first.push_back(static_cast<int>(std::find(ws.letters.begin(), ws.letters.end(), w.front()) - ws.letters.begin()));
            ws.zeros.push_back(ws.zeros[static_cast<std::size_t>(p)] + (w.front() == 0 ? 1 : 0));
        }
        ws.max_weight = std::max(ws.max_weight, static_cast<int>(w.size()));
    }
    for (const auto &w : input)
        ws.input_index.push_back(index.at(w));
    return ws;
}

// Radius of the disc around 0 free of nonzero letters (0 if there are none).
Rational nonzero_radius(const WordSet &ws)
{
    Rational r = 0;
    for (const auto &a : ws.letters)
        if (a != 0 && (r == 0 || abs(a) < r))
            r = abs(a);
    return r;
}

Rational path_height(const WordSet &ws)
{
    std::set<Letter> pts(ws.letters.begin(), ws.letters.end());
    pts.insert(Rational(0));
    Rational h = nonzero_radius(ws);
    if (h == 0)
        return Rational(1, 2);
    Rational prev;
    bool first = true;
    for (const auto &a : pts) {
        if (!first && a - prev < h)
            h = a - prev;
        prev = a;
        first = false;
    }
    return h / 2;
}

class Engine {
public:
    Engine(const WordSet &ws, mpfr_prec_t prec)
        : ws_(ws), prec_(prec), terms_(static_cast<int>(prec) + 10 * (ws.max_weight + 2)), c_(prec)
    {
        for (const auto &a : ws_.letters) {
            letters_.emplace_back(a, prec);
            signs_.push_back(kernel_sign(a));
        }
    }

    // Values at s from the logarithmic expansion at 0; |s| must be at most half the
    // distance from 0 to the nearest nonzero letter.
    void start(const Complex &s)
    {
        build_zero_series();
        values_.assign(ws_.words.size(), Complex(prec_));
        std::size_t nw = ws_.words.size();
        Complex ell(prec_);
        if (ws_.has_zero)
            ell = log_omega(s);
        std::vector<Complex> sp{Complex(Real(1L, prec_), Real(prec_))};
        for (int n = 1; n <= terms_; ++n)
            sp.push_back(sp.back() * s);
        for (std::size_t w = 0; w < nw; ++w) {
            Complex acc(prec_);
            Complex lp(Real(1L, prec_), Real(prec_));
            for (std::size_t j = 0; j < zero_series_[w].size(); ++j) {
                Complex pj(prec_);
                const auto &coef = zero_series_[w][j];
                for (int n = 0; n <= terms_; ++n)
                    if (!coef[static_cast<std::size_t>(n)].is_zero())
                        pj += sp[static_cast<std::size_t>(n)] * coef[static_cast<std::size_t>(n)];
                acc += pj * lp;
                lp *= ell;
            }
            values_[w] = std::move(acc);
        }
        c_ = s;
    }

    void walk_to(const Complex &target)
    {
        Real half(Rational(1, 2), prec_);
        for (int guard = 0; guard < 100000; ++guard) {
            Complex delta = target - c_;
            Real len = abs(delta);
            if (len.is_zero())
                return;
            Real rho = nearest_letter(c_);
            Real step = rho * half;
            if (len <= step) {
                advance(delta);
                return;
            }
            advance(delta * (step / len));
        }
        throw Error(ErrorKind::EvaluationFailure, "path continuation did not terminate");
    }

    // Taylor coefficients at the current point for every word in the set.
    std::vector<std::vector<Complex>> expansion(int order) const
    {
        std::size_t nw = ws_.words.size();
        std::vector<std::vector<Complex>> s(nw);
        std::size_t len = static_cast<std::size_t>(order) + 1;
        std::vector<Complex> inv;
        for (std::size_t k = 0; k < letters_.size(); ++k) {
            Complex d = c_ - Complex(letters_[k], Real(prec_));
            Complex one(Real(static_cast<long>(signs_[k]), prec_), Real(prec_));
            inv.push_back(one / d);
        }
        s[0].assign(len, Complex(prec_));
        s[0][0] = Complex(Real(1L, prec_), Real(prec_));
        for (std::size_t w = 1; w < nw; ++w) {
            const auto &su = s[static_cast<std::size_t>(ws_.parent[w])];
            const Complex &iv = inv[static_cast<std::size_t>(ws_.first[w])];
            int sign = signs_[static_cast<std::size_t>(ws_.first[w])];
            // (c - a + t) g = s_a * s_u, with iv = s_a / (c - a):
            // g_n = iv * (s_u[n] - s_a * g_{n-1}).
            auto &sw = s[w];
            sw.assign(len, Complex(prec_));
            sw[0] = values_[w];
            Complex g(prec_);
            for (std::size_t n = 0; n + 1 < len; ++n) {
                Complex t = su[n];
                if (n > 0) {
                    if (sign > 0)
                        t -= g;
                    else
                        t += g;
                }
                g = t * iv;
                Complex q = g;
                Real div(static_cast<long>(n + 1), prec_);
                q.re /= div;
                q.im /= div;
                sw[n + 1] = std::move(q);
            }
        }
        return s;
    }

    const std::vector<Complex> &values() const { return values_; }

private:
    Real nearest_letter(const Complex &c) const
    {
        Real best(prec_);
        bool any = false;
        for (const auto &a : letters_) {
            Real d = abs(c - Complex(a, Real(prec_)));
            if (!any || d < best) {
                best = d;
                any = true;
            }
        }
        if (!any)
            return Real(1L << 20, prec_);
        return best;
    }

    void advance(const Complex &h)
    {
        auto s = expansion(terms_);
        std::vector<Complex> hp{Complex(Real(1L, prec_), Real(prec_))};
        for (int n = 1; n <= terms_; ++n)
            hp.push_back(hp.back() * h);
        for (std::size_t w = 1; w < ws_.words.size(); ++w) {
            Complex acc(prec_);
            for (int n = 0; n <= terms_; ++n)
                acc += s[w][static_cast<std::size_t>(n)] * hp[static_cast<std::size_t>(n)];
            values_[w] = std::move(acc);
        }
        values_[0] = Complex(Real(1L, prec_), Real(prec_));
        c_ += h;
    }

    void build_zero_series()
    {
        if (!zero_series_.empty())
            return;
        std::size_t nw = ws_.words.size();
        std::size_t len = static_cast<std::size_t>(terms_) + 1;
        zero_series_.resize(nw);
        zero_series_[0].assign(1, std::vector<Real>(len, Real(prec_)));
        zero_series_[0][0][0] = Real(1L, prec_);
        for (std::size_t w = 1; w < nw; ++w) {
            const auto &au = zero_series_[static_cast<std::size_t>(ws_.parent[w])];
            std::size_t jmax = static_cast<std::size_t>(ws_.zeros[w]);
            auto &aw = zero_series_[w];
            aw.assign(jmax + 1, std::vector<Real>(len, Real(prec_)));
            const Letter &a = ws_.words[w].front();
            for (std::size_t j = 0; j < au.size(); ++j) {
                // Integrand coefficients g[m] of ell^j s^m.
                std::vector<Real> g(len, Real(prec_));
                int shift; // power of s after integration is m + shift
                if (a == 0) {
                    shift = 0;
                    for (std::size_t m = 0; m < len; ++m)
                        g[m] = au[j][m];
                    // the s^{-1} term integrates to ell^{j+1}/(j+1)
                    if (!g[0].is_zero())
                        aw[j + 1][0] += g[0] / Real(static_cast<long>(j + 1), prec_);
                } else {
                    shift = 1;
                    Real ar(a, prec_);
                    Real sg(static_cast<long>(kernel_sign(a)), prec_);
                    Real prev(prec_);
                    for (std::size_t m = 0; m < len; ++m) {
                        prev = (prev - sg * au[j][m]) / ar;
                        g[m] = prev;
                    }
                }
                for (std::size_t m = 0; m < len; ++m) {
                    if (g[m].is_zero())
                        continue;
                    long p = static_cast<long>(m) + shift; // resulting power of s
                    if (p == 0 || p >= static_cast<long>(len))
                        continue;
                    // int ell^j s^{p-1} ds = s^p sum_i (-1)^i j!/(j-i)! ell^{j-i} / p^{i+1}
                    Real f = g[m] / Real(p, prec_);
                    for (std::size_t i = 0; i <= j; ++i) {
                        aw[j - i][static_cast<std::size_t>(p)] += f;
                        f = -f * Real(static_cast<long>(j - i), prec_) / Real(p, prec_);
                    }
                }
            }
        }
    }

    const WordSet &ws_;
    mpfr_prec_t prec_;
    int terms_;
    Complex c_;
    std::vector<Real> letters_;
    std::vector<int> signs_;
    std::vector<Complex> values_;
    std::vector<std::vector<std::vector<Real>>> zero_series_;
};

bool real_equal(const Real &a, const Letter &q)
{
    return mpfr_cmp_q(a.get(), q.get_mpq_t()) == 0;
}

void check_domain(const WordSet &ws, const Complex &z)
{
    for (const auto &a : ws.letters) {
        if (!real_equal(z.re, a))
            continue;
        int s = z.im.sign();
        bool on_cut = a > 0 ? s >= 0 : s <= 0;
        if (on_cut)
            throw Error(ErrorKind::OnCut, "point lies on the cut of letter " + a.get_str());
    }
}

std::vector<Complex> make_path(const WordSet &ws, const Complex &z, mpfr_prec_t prec)
{
    Rational hq = path_height(ws);
    Real h(hq, prec);
    std::vector<Complex> pts{Complex(Real(prec), h)};
    const Real &xt = z.re;
    int dir = xt.sign();
    std::vector<Letter> crossed;
    for (const auto &a : ws.letters) {
        if (a == 0)
            continue;
        int c = mpfr_cmp_q(xt.get(), a.get_mpq_t());
        if ((dir > 0 && a > 0 && c >= 0) || (dir < 0 && a < 0 && c <= 0))
            crossed.push_back(a);
    }
    if (dir < 0)
        std::reverse(crossed.begin(), crossed.end());
    int side = 1;
    Rational prev = 0;
    for (const auto &a : crossed) {
        int need = a > 0 ? -1 : 1;
        if (need != side) {
            Real xm((prev + a) / 2, prec);
            pts.emplace_back(xm, side > 0 ? h : -h);
            pts.emplace_back(xm, need > 0 ? h : -h);
            side = need;
        }
        prev = a;
    }
    pts.emplace_back(xt, side > 0 ? h : -h);
    pts.push_back(z);
    return pts;
}

bool in_zero_disc(const WordSet &ws, const Complex &z)
{
    Rational r = nonzero_radius(ws);
    if (r == 0)
        return true;
    return abs(z) <= Real(r / 2, z.prec());
}

} // namespace

Complex path_start(const std::vector<Word> &words, mpfr_prec_t prec)
{
    WordSet ws = build_word_set(words);
    return Complex(Real(prec), Real(path_height(ws), prec));
}

std::vector<Complex> default_path(const std::vector<Word> &words, const Complex &z, mpfr_prec_t prec)
{
    WordSet ws = build_word_set(words);
    check_domain(ws, z);
    return make_path(ws, Complex(z.re.with_prec(prec), z.im.with_prec(prec)), prec);
}

namespace {

Engine run_to(const WordSet &ws, const Complex &z0, mpfr_prec_t prec)
{
    Complex z(z0.re.with_prec(prec), z0.im.with_prec(prec));
    check_domain(ws, z);
    for (const auto &a : ws.letters)
        if (real_equal(z.re, a) && z.im.is_zero())
            throw Error(ErrorKind::OnCut, "point is a ramification point");
    Engine eng(ws, prec);
    if (in_zero_disc(ws, z) && !(ws.has_zero && z.is_zero())) {
        eng.start(z);
        return eng;
    }
    auto pts = make_path(ws, z, prec);
    eng.start(pts[0]);
    for (std::size_t k = 1; k < pts.size(); ++k)
        eng.walk_to(pts[k]);
    return eng;
}

} // namespace

std::vector<Complex> eval_words_raw(const std::vector<Word> &words, const Complex &z, mpfr_prec_t prec)
{
    WordSet ws = build_word_set(words);
    Engine eng = run_to(ws, z, prec);
    std::vector<Complex> out;
    for (int id : ws.input_index)
        out.push_back(eng.values()[static_cast<std::size_t>(id)]);
    return out;
}

std::vector<std::vector<Complex>> taylor_words(const std::vector<Word> &words, const Complex &z, int order,
                                               mpfr_prec_t prec)
{
    WordSet ws = build_word_set(words);
    Engine eng = run_to(ws, z, prec);
    auto s = eng.expansion(order);
    std::vector<std::vector<Complex>> out;
    for (int id : ws.input_index)
        out.push_back(s[static_cast<std::size_t>(id)]);
    return out;
}

std::vector<Complex> continue_along(const std::vector<Word> &words, const std::vector<Complex> &waypoints,
                                    mpfr_prec_t prec)
{
    if (waypoints.empty())
        throw Error(ErrorKind::InvalidParameter, "empty path");
    WordSet ws = build_word_set(words);
    Complex s0(waypoints[0].re.with_prec(prec), waypoints[0].im.with_prec(prec));
    if (!in_zero_disc(ws, s0) || (ws.has_zero && s0.is_zero()))
        throw Error(ErrorKind::InvalidParameter, "path must start inside the disc of the expansion at 0");
    Engine eng(ws, prec);
    eng.start(s0);
    for (std::size_t k = 1; k < waypoints.size(); ++k)
        eng.walk_to(Complex(waypoints[k].re.with_prec(prec), waypoints[k].im.with_prec(prec)));
    std::vector<Complex> out;
    for (int id : ws.input_index)
        out.push_back(eng.values()[static_cast<std::size_t>(id)]);
    return out;
}

std::vector<MultiFloat> eval_words(const std::vector<Word> &words, const Complex &z, int digits)
{
    mpfr_prec_t p1 = digits_to_bits(digits), p2 = 2 * p1;
    auto v1 = eval_words_raw(words, z, p1);
    auto v2 = eval_words_raw(words, z, p2);
    std::vector<MultiFloat> out;
    Real tol = Real(Rational(1), p2);
    for (int k = 0; k < digits; ++k)
        tol /= Real(10L, p2);
    for (std::size_t k = 0; k < words.size(); ++k) {
        Real err = abs(v1[k] - v2[k]) + abs(v2[k]) * Real::pow2(-static_cast<long>(p1), p2);
        if (!(err <= tol * max(Real(1L, p2), abs(v2[k]))))
            throw Error(ErrorKind::PrecisionNotReached, "word " + word_to_string(words[k]) + " did not reach " +
                                                            std::to_string(digits) + " digits");
        out.push_back(MultiFloat{v2[k], err, p2});
    }
    return out;
}

MultiFloat eval_word(const Word &w, const Complex &z, int digits)
{
    return eval_words({w}, z, digits).front();
}

Complex eval_raw(const HyperlogExpr &e, const Complex &z, mpfr_prec_t prec)
{
    auto words = e.words();
    Complex sum(prec);
    if (words.empty())
        return sum;
    auto vals = eval_words_raw(words, z, prec);
    for (std::size_t k = 0; k < words.size(); ++k)
        sum += e.terms().at(words[k]).numeric(prec) * vals[k];
    return sum;
}

MultiFloat eval(const HyperlogExpr &e, const Complex &z, int digits)
{
    mpfr_prec_t p1 = digits_to_bits(digits), p2 = 2 * p1;
    Complex v1 = eval_raw(e, z, p1), v2 = eval_raw(e, z, p2);
    Real err = abs(v1 - v2) + abs(v2) * Real::pow2(-static_cast<long>(p1), p2);
    return MultiFloat{v2, err, p2};
}

Complex eval_raw(const HyperlogFunction &f, const Complex &z, mpfr_prec_t prec)
{
    std::vector<Word> words;
    for (const auto &[w, c] : f.terms())
        words.push_back(w);
    Complex sum(prec);
    if (words.empty())
        return sum;
    auto vals = eval_words_raw(words, z, prec);
    Complex zero(prec);
    for (std::size_t k = 0; k < words.size(); ++k)
        for (const auto &[m, r] : f.terms().at(words[k])) {
            Complex c = Constant::monomial(m, 1).numeric(prec) * evaluate_numeric(r, z, zero);
            sum += c * vals[k];
        }
    return sum;
}

// ---------------------------------------------------------------- monodromy

namespace {

// Regularized value of L_u at the letter a along the straight path from 0
// (reaching -1 through the upper half plane).
Constant path_value(const Word &u, const Letter &a)
{
    if (u.empty())
        return Constant(1);
    if (a == 0)
        return Constant();
    if (std::all_of(u.begin(), u.end(), [&](const Letter &b) { return b == a; }))
        return Constant();
    bool small = std::all_of(u.begin(), u.end(), [](const Letter &b) { return b == 0 || b == 1 || b == -1; });
    if (!small || u.size() > 2 || (a != 1 && a != -1))
        throw Error(ErrorKind::InvalidParameter,
                    "monodromy constants unavailable for " + word_to_string(u) + " at " + a.get_str());
    const Constant pi = Constant::pi(), l2 = Constant::log2(), i = Constant::i();
    const Constant pi2 = pi * pi, l22 = l2 * l2;
    auto key = [&](int p, int q) { return u.size() == 2 && u[0] == p && u[1] == q; };
    if (a == 1) {
        if (u.size() == 1)
            return u[0] == -1 ? l2 : Constant();
        if (key(0, 1))
            return Rational(1, 6) * pi2;
        if (key(1, 0))
            return Rational(-1, 6) * pi2;
        if (key(0, -1))
            return Rational(1, 12) * pi2;
        if (key(-1, 0))
            return Rational(-1, 12) * pi2;
        if (key(-1, -1))
            return Rational(1, 2) * l22;
        if (key(-1, 1))
            return Rational(1, 12) * pi2 - Rational(1, 2) * l22;
        if (key(1, -1))
            return Rational(1, 2) * l22 - Rational(1, 12) * pi2;
        return Constant(); // 00
    }
    if (u.size() == 1)
        return u[0] == 0 ? i * pi : (u[0] == 1 ? -l2 : Constant());
    if (key(0, 0))
        return Rational(-1, 2) * pi2;
    if (key(0, 1))
        return Rational(-1, 12) * pi2;
    if (key(1, 0))
        return Rational(1, 12) * pi2 - i * pi * l2;
    if (key(1, 1))
        return Rational(1, 2) * l22;
    if (key(0, -1))
        return Rational(-1, 6) * pi2;
    if (key(-1, 0))
        return Rational(1, 6) * pi2;
    if (key(1, -1))
        return Rational(1, 12) * pi2 - Rational(1, 2) * l22;
    if (key(-1, 1))
        return Rational(1, 2) * l22 - Rational(1, 12) * pi2;
    return Constant();
}

Constant loop_value(const Word &v, const Letter &a)
{
    Constant total = v.empty() ? Constant(1) : Constant();
    Constant c = Constant(kernel_sign(a)) * two_pi_i();
    std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
        // v2 = v[i, j) made of the letter a
        Rational fact = 1;
        Constant ck(1);
        for (std::size_t j = i + 1; j <= n; ++j) {
            if (v[j - 1] != a)
                break;
            std::size_t k = j - i;
            fact *= static_cast<long>(k);
            ck = ck * c;
            Word v1(v.begin(), v.begin() + static_cast<long>(i));
            Word v3(v.begin() + static_cast<long>(j), v.end());
            Word r1(v1.rbegin(), v1.rend());
            Constant z1 = path_value(r1, a);
            if (v1.size() % 2 == 1)
                z1 = -z1;
            Constant z3 = path_value(v3, a);
            if (z1.is_zero() || z3.is_zero())
                continue;
            total += z1 * ck * Constant(1 / fact) * z3;
        }
    }
    return total;
}

} // namespace

HyperlogExpr monodromy(const HyperlogExpr &e, const Letter &a)
{
    HyperlogExpr out;
    for (const auto &[w, c] : e.terms())
        for (std::size_t k = 0; k <= w.size(); ++k) {
            Word u(w.begin(), w.begin() + static_cast<long>(k));
            Word v(w.begin() + static_cast<long>(k), w.end());
            Constant lv = loop_value(v, a);
            if (!lv.is_zero())
                out += HyperlogExpr::word(u, c * lv);
        }
    return out;
}

} // namespace abelweb
