#include "abelweb/special.hpp"

#include "abelweb/errors.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace abelweb {

namespace {

HyperlogExpr W(const char *w, const Constant &c = Constant(1))
{
    return HyperlogExpr::word(parse_word(w), c);
}

Complex one(mpfr_prec_t p)
{
    return Complex(Real(1L, p), Real(p));
}

Complex i_unit(mpfr_prec_t p)
{
    return Complex(Real(p), Real(1L, p));
}

Complex arctan_principal(const Complex &z, mpfr_prec_t p)
{
    Complex iz = i_unit(p) * z;
    Complex l = log_principal(one(p) + iz) - log_principal(one(p) - iz);
    // divide by 2i
    return Complex(l.im, -l.re) * Real(Rational(1, 2), p);
}

// On the cut of L[x0] (downward from 0) or of L[x1] (upward from 1). The
// conjugate point is then off both cuts.
bool on_cut01(const Complex &z)
{
    int s = z.im.sign();
    return (mpfr_cmp_si(z.re.get(), 0) == 0 && s < 0) || (mpfr_cmp_si(z.re.get(), 1) == 0 && s > 0);
}

Complex zagier_l3(const Complex &z, mpfr_prec_t p)
{
    if (z.is_zero())
        return Complex(p);
    if (mpfr_cmp_si(z.re.get(), 1) == 0 && z.im.is_zero())
        return Complex(Real::zeta3(p), Real(p));
    if (on_cut01(z))
        return zagier_l3(z.conj(), p); // L3 is even under conjugation
    auto v = eval_words_raw({parse_word("x0x0x1"), parse_word("x0x1"), parse_word("x1")}, z, p);
    Real lz = log(abs(z));
    Real third(Rational(1, 3), p);
    Complex s = v[0] - v[1] * lz + v[2] * (lz * lz * third);
    return Complex(s.re, Real(p));
}

const std::map<std::string, SpecialFunction> &registry()
{
    static const std::map<std::string, SpecialFunction> reg = [] {
        Constant pi = Constant::pi(), I = Constant::i();
        Constant pi2 = pi * pi;
        HyperlogExpr L10t = W("x1x0") + HyperlogExpr(Rational(1, 6) * pi2);
        HyperlogExpr g = W("x0x0x1", 2) - W("x0x1x0") - W("x1x0x0") + HyperlogExpr(Rational(-2, 3) * Constant::zeta3());
        HyperlogExpr h = W("x0x0x1") - W("x1x0x0");
        std::map<std::string, SpecialFunction> r;
        auto word_fn = [&](const std::string &n, const std::string &desc, const HyperlogExpr &e) {
            r[n] = SpecialFunction{n, desc, e, {}};
        };
        auto native_fn = [&](const std::string &n, const std::string &desc, NativeFn f) {
            r[n] = SpecialFunction{n, desc, std::nullopt, std::move(f)};
        };
        word_fn("log", "L[x0]", W("x0"));
        word_fn("Li1", "-log(1-z) = L[x1]", W("x1"));
        word_fn("Li2", "L[x0x1]", W("x0x1"));
        word_fn("Li3", "L[x0x0x1]", W("x0x0x1"));
        word_fn("d", "L[x0x1] - Lt[x1x0] - pi^2/6", W("x0x1") - L10t - HyperlogExpr(Rational(1, 6) * pi2));
        word_fn("rogers", "Li2 + log(z)log(1-z)/2 - pi^2/6",
                W("x0x1", Rational(1, 2)) - W("x1x0", Rational(1, 2)) - HyperlogExpr(Rational(1, 6) * pi2));
        word_fn("g", "2L[x0x0x1] - L[x0x1x0] - L[x1x0x0] - 2zeta3/3", g);
        word_fn("ghat", "g + i pi L[x0x1] - 4 i pi Lt[x1x0] - pi^2 L[x1] + 2 i pi^3",
                g + (I * pi) * W("x0x1") - (Constant(4) * I * pi) * L10t - pi2 * W("x1") +
                    HyperlogExpr(Constant(2) * I * pi * pi2));
        word_fn("h", "L[x0x0x1] - L[x1x0x0]", h);
        word_fn("hhat", "h - i pi L[x0x1] + 2 i pi Lt[x1x0] + pi^2 L[x1]/2 - i pi^3/3",
                h - (I * pi) * W("x0x1") + (Constant(2) * I * pi) * L10t + (Rational(1, 2) * pi2) * W("x1") -
                    HyperlogExpr(Rational(1, 3) * I * pi * pi2));
        native_fn("Id", "z", [](const Complex &z, mpfr_prec_t p) {
            return Complex(z.re.with_prec(p), z.im.with_prec(p));
        });
        native_fn("Inv", "1/z", [](const Complex &z, mpfr_prec_t p) {
            if (z.is_zero())
                throw Error(ErrorKind::EvaluationFailure, "Inv at 0");
            return one(p) / Complex(z.re.with_prec(p), z.im.with_prec(p));
        });
        native_fn("a", "artanh(sqrt(z)), principal branches", [](const Complex &z, mpfr_prec_t p) {
            Complex w(z.re.with_prec(p), z.im.with_prec(p));
            return atanh_principal(sqrt_principal(w));
        });
        native_fn("Arc", "arctan(z), principal branch", [](const Complex &z, mpfr_prec_t p) {
            return arctan_principal(Complex(z.re.with_prec(p), z.im.with_prec(p)), p);
        });
        native_fn("BlochWigner", "Im(Li2(z)) + arg(1-z) log|z|", [](const Complex &z, mpfr_prec_t p) {
            return bloch_wigner(z, p);
        });
        native_fn("L3", "Re(Li3(z) - log|z| Li2(z) - log^2|z| log(1-z)/3)", [](const Complex &z, mpfr_prec_t p) {
            return zagier_l3(Complex(z.re.with_prec(p), z.im.with_prec(p)), p);
        });
        return r;
    }();
    return reg;
}

Complex clog(const Complex &z)
{
    return log_principal(z);
}

} // namespace

Complex SpecialFunction::evaluate(const Complex &z, mpfr_prec_t prec) const
{
    if (expr)
        return eval_raw(*expr, z, prec);
    return native(z, prec);
}

const SpecialFunction &special(const std::string &name)
{
    const auto &reg = registry();
    auto it = reg.find(name);
    if (it == reg.end())
        throw Error(ErrorKind::UnknownName, "no special function named '" + name + "'");
    return it->second;
}

std::vector<std::string> special_names()
{
    std::vector<std::string> out;
    for (const auto &kv : registry())
        out.push_back(kv.first);
    return out;
}

namespace {

const std::map<std::string, BivarFn> &rhs_registry()
{
    static const std::map<std::string, BivarFn> reg = [] {
        std::map<std::string, BivarFn> r;
        r["0"] = [](const Complex &, const Complex &, mpfr_prec_t p) { return Complex(p); };
        // log(y) log((1-y)/(1-x)) - pi^2/6
        r["Schaffer"] = [](const Complex &x, const Complex &y, mpfr_prec_t p) {
            Complex ly = clog(y);
            Complex q = clog((one(p) - y) / (one(p) - x));
            Real pi = Real::pi(p);
            return ly * q - Complex(pi * pi / Real(6L, p), Real(p));
        };
        // 2 zeta3 - log^2 y log((1-y)/(1-x)) + pi^2/3 log y + log^3 y / 3
        r["R3"] = [](const Complex &x, const Complex &y, mpfr_prec_t p) {
            Complex ly = clog(y);
            Complex q = clog((one(p) - y) / (one(p) - x));
            Real pi = Real::pi(p);
            Complex s(Real::zeta3(p) * Real(2L, p), Real(p));
            s -= ly * ly * q;
            s += ly * (pi * pi / Real(3L, p));
            s += ly * ly * ly * Real(Rational(1, 3), p);
            return s;
        };
        return r;
    }();
    return reg;
}

} // namespace

const BivarFn &rhs_function(const std::string &name)
{
    const auto &reg = rhs_registry();
    auto it = reg.find(name);
    if (it == reg.end())
        throw Error(ErrorKind::UnknownName, "no right-hand side named '" + name + "'");
    return it->second;
}

std::vector<std::string> rhs_names()
{
    std::vector<std::string> out;
    for (const auto &kv : rhs_registry())
        out.push_back(kv.first);
    return out;
}

Complex cross_ratio(const Complex &a, const Complex &b, const Complex &c, const Complex &d)
{
    return ((a - c) * (b - d)) / ((a - d) * (b - c));
}

Complex bloch_wigner(const Complex &z0, mpfr_prec_t p)
{
    Complex z(z0.re.with_prec(p), z0.im.with_prec(p));
    if (z.im.is_zero())
        return Complex(p); // real axis, including 0, 1
    if (on_cut01(z))
        return -bloch_wigner(z.conj(), p);
    auto v = eval_words_raw({parse_word("x0x1"), parse_word("x1")}, z, p);
    Complex s = v[0] - v[1] * log(abs(z));
    return Complex(s.im, Real(p));
}

// ---- component expressions

Complex Component::evaluate(const Complex &z, mpfr_prec_t prec) const
{
    HyperlogExpr nonconst = words;
    Constant c0 = words.coefficient(Word{});
    nonconst -= HyperlogExpr(c0);
    Complex s = c0.numeric(prec);
    if (!nonconst.is_zero())
        s += eval_raw(nonconst, z, prec);
    for (const auto &[c, name] : natives)
        s += c.numeric(prec) * special(name).evaluate(z, prec);
    return s;
}

std::string Component::to_string() const
{
    // Same syntax as parse_component.
    std::ostringstream os;
    bool first = true;
    for (const auto &[w, c] : words.terms()) {
        if (!first)
            os << " + ";
        os << "(" << c.to_string() << ")";
        if (!w.empty())
            os << "*L[" << word_to_string(w) << "]";
        first = false;
    }
    for (const auto &[c, name] : natives) {
        if (!first)
            os << " + ";
        os << "(" << c.to_string() << ")*" << name;
        first = false;
    }
    if (first)
        os << "0";
    return os.str();
}

namespace {

class ComponentParser {
public:
    explicit ComponentParser(const std::string &s) : s_(s) {}

    Component parse()
    {
        Component c = expr();
        skip();
        if (pos_ != s_.size())
            fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return c;
    }

private:
    [[noreturn]] void fail(const std::string &what) const { throw ParseError(pos_, what); }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool eat(char ch)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == ch) {
            ++pos_;
            return true;
        }
        return false;
    }

    static bool is_const(const Component &c)
    {
        if (!c.natives.empty())
            return false;
        for (const auto &kv : c.words.terms())
            if (!kv.first.empty())
                return false;
        return true;
    }

    static Constant const_value(const Component &c)
    {
        return c.words.coefficient(Word{});
    }

    static Component from_const(const Constant &k)
    {
        Component c;
        c.words = HyperlogExpr(k);
        return c;
    }

    static Component scale(const Constant &k, const Component &c)
    {
        Component r;
        r.words = k * c.words;
        for (const auto &[m, n] : c.natives)
            if (!(k * m).is_zero())
                r.natives.emplace_back(k * m, n);
        return r;
    }

    static Component add(const Component &a, const Component &b, int sign)
    {
        Component r = a;
        r.words = sign > 0 ? a.words + b.words : a.words - b.words;
        for (const auto &[m, n] : b.natives) {
            Constant k = sign > 0 ? m : -m;
            bool merged = false;
            for (auto &e : r.natives)
                if (e.second == n) {
                    e.first += k;
                    merged = true;
                }
            if (!merged)
                r.natives.emplace_back(k, n);
        }
        std::erase_if(r.natives, [](const auto &e) { return e.first.is_zero(); });
        return r;
    }

    Component multiply(const Component &a, const Component &b)
    {
        if (is_const(a))
            return scale(const_value(a), b);
        if (is_const(b))
            return scale(const_value(b), a);
        if (a.natives.empty() && b.natives.empty()) {
            Component r;
            r.words = a.words * b.words;
            return r;
        }
        fail("product of two non-constant atoms is only supported for words");
    }

    Component expr()
    {
        skip();
        int sign = 1;
        if (eat('-'))
            sign = -1;
        else
            eat('+');
        Component acc = term();
        if (sign < 0)
            acc = scale(Constant(-1), acc);
        for (;;) {
            if (eat('+'))
                acc = add(acc, term(), 1);
            else if (eat('-'))
                acc = add(acc, term(), -1);
            else
                return acc;
        }
    }

    Component term()
    {
        Component acc = power();
        for (;;) {
            if (eat('*')) {
                acc = multiply(acc, power());
            } else if (eat('/')) {
                Component d = power();
                if (!is_const(d) || !const_value(d).is_rational() || const_value(d).rational_part() == 0)
                    fail("division only by nonzero rational numbers");
                acc = scale(Constant(1 / const_value(d).rational_part()), acc);
            } else {
                return acc;
            }
        }
    }

    Component power()
    {
        Component base = primary();
        if (!eat('^'))
            return base;
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected exponent");
        int e = std::stoi(s_.substr(start, pos_ - start));
        Component r = from_const(Constant(1));
        for (int k = 0; k < e; ++k)
            r = multiply(r, base);
        return r;
    }

    Component primary()
    {
        skip();
        if (pos_ >= s_.size())
            fail("unexpected end of input");
        char ch = s_[pos_];
        if (ch == '(') {
            ++pos_;
            Component c = expr();
            if (!eat(')'))
                fail("expected ')'");
            return c;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            return from_const(Constant(Rational(s_.substr(start, pos_ - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string id = s_.substr(start, pos_ - start);
            if ((id == "L" || id == "Lt") && pos_ < s_.size() && s_[pos_] == '[') {
                std::size_t close = s_.find(']', pos_);
                if (close == std::string::npos)
                    fail("expected ']'");
                std::string w = s_.substr(pos_ + 1, close - pos_ - 1);
                pos_ = close + 1;
                Word word = parse_word(w);
                Component c;
                c.words = HyperlogExpr::word(word);
                if (id == "Lt") {
                    Constant pi2 = Constant::pi() * Constant::pi();
                    if (word == make_word({1, 0}))
                        c.words += HyperlogExpr(Rational(1, 6) * pi2);
                    else if (word == make_word({-1, 0}))
                        c.words += HyperlogExpr(Rational(1, 12) * pi2);
                    else
                        fail("table convention only defined for x1x0 and x-1x0");
                }
                return c;
            }
            if (id == "pi")
                return from_const(Constant::pi());
            if (id == "i")
                return from_const(Constant::i());
            if (id == "log2")
                return from_const(Constant::log2());
            if (id == "zeta3")
                return from_const(Constant::zeta3());
            const SpecialFunction &f = special(id);
            Component c;
            if (f.expr)
                c.words = *f.expr;
            else
                c.natives.emplace_back(Constant(1), id);
            return c;
        }
        fail("unexpected '" + std::string(1, ch) + "'");
    }

    std::string s_;
    std::size_t pos_ = 0;
};

} // namespace

Component parse_component(const std::string &text)
{
    return ComponentParser(text).parse();
}

Constant parse_constant(const std::string &text)
{
    Component c = parse_component(text);
    if (!c.natives.empty())
        throw Error(ErrorKind::Format, "not a constant: " + text);
    for (const auto &kv : c.words.terms())
        if (!kv.first.empty())
            throw Error(ErrorKind::Format, "not a constant: " + text);
    return c.words.coefficient(Word{});
}

} // namespace abelweb
