#include "abelweb/ratfunc.hpp"

#include "abelweb/errors.hpp"

#include <cctype>

namespace abelweb {

namespace {

void normalize_lc(BivarPoly &num, BivarPoly &den)
{
    Rational lc = den.leading_coeff();
    if (lc != 1) {
        Rational inv = 1 / lc;
        num *= inv;
        den *= inv;
    }
}

} // namespace

RatFunc::RatFunc(const BivarPoly &num, const BivarPoly &den)
{
    if (den.is_zero())
        throw Error(ErrorKind::DivisionByZero, "rational function with zero denominator");
    if (num.is_zero()) {
        den_ = BivarPoly(1);
        return;
    }
    if (den.is_constant()) {
        num_ = num * Rational(1 / den.leading_coeff());
        den_ = BivarPoly(1);
        return;
    }
    BivarPoly g = gcd(num, den);
    if (g.is_constant()) {
        num_ = num;
        den_ = den;
    } else {
        num_ = divide_exact(num, g);
        den_ = divide_exact(den, g);
    }
    normalize_lc(num_, den_);
}

Rational RatFunc::constant_value() const
{
    if (num_.is_zero())
        return 0;
    return num_.leading_coeff() / den_.leading_coeff();
}

RatFunc RatFunc::operator-() const
{
    return RatFunc(-num_, den_, NoReduce{});
}

RatFunc RatFunc::inverse() const
{
    if (num_.is_zero())
        throw Error(ErrorKind::DivisionByZero, "inverse of zero rational function");
    BivarPoly n = den_, d = num_;
    normalize_lc(n, d);
    return RatFunc(std::move(n), std::move(d), NoReduce{});
}

RatFunc operator+(const RatFunc &a, const RatFunc &b)
{
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    if (a.den_ == b.den_)
        return RatFunc(a.num_ + b.num_, a.den_);
    if (a.den_.is_constant())
        return RatFunc(a.num_ * b.den_ + b.num_, b.den_, RatFunc::NoReduce{});
    if (b.den_.is_constant())
        return RatFunc(a.num_ + b.num_ * a.den_, a.den_, RatFunc::NoReduce{});
    BivarPoly g = gcd(a.den_, b.den_);
    if (g.is_constant()) {
        BivarPoly n = a.num_ * b.den_ + b.num_ * a.den_;
        BivarPoly d = a.den_ * b.den_;
        if (n.is_zero())
            return RatFunc();
        normalize_lc(n, d);
        return RatFunc(std::move(n), std::move(d), RatFunc::NoReduce{});
    }
    BivarPoly bd = divide_exact(b.den_, g), ad = divide_exact(a.den_, g);
    BivarPoly n = a.num_ * bd + b.num_ * ad;
    if (n.is_zero())
        return RatFunc();
    BivarPoly h = gcd(n, g);
    BivarPoly d = a.den_ * bd;
    if (!h.is_constant()) {
        n = divide_exact(n, h);
        d = divide_exact(d, h);
    }
    normalize_lc(n, d);
    return RatFunc(std::move(n), std::move(d), RatFunc::NoReduce{});
}

RatFunc operator-(const RatFunc &a, const RatFunc &b)
{
    return a + (-b);
}

RatFunc operator*(const RatFunc &a, const RatFunc &b)
{
    if (a.is_zero() || b.is_zero())
        return RatFunc();
    BivarPoly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
    BivarPoly g1 = gcd(an, bd);
    if (!g1.is_constant()) {
        an = divide_exact(an, g1);
        bd = divide_exact(bd, g1);
    }
    BivarPoly g2 = gcd(bn, ad);
    if (!g2.is_constant()) {
        bn = divide_exact(bn, g2);
        ad = divide_exact(ad, g2);
    }
    BivarPoly n = an * bn, d = ad * bd;
    normalize_lc(n, d);
    return RatFunc(std::move(n), std::move(d), RatFunc::NoReduce{});
}

RatFunc operator/(const RatFunc &a, const RatFunc &b)
{
    return a * b.inverse();
}

RatFunc RatFunc::pow(int n) const
{
    if (n < 0)
        return inverse().pow(-n);
    BivarPoly nn = num_.pow(static_cast<unsigned>(n)), dd = den_.pow(static_cast<unsigned>(n));
    if (nn.is_zero())
        return RatFunc();
    normalize_lc(nn, dd);
    return RatFunc(std::move(nn), std::move(dd), NoReduce{});
}

std::string RatFunc::to_string(const std::string &vx, const std::string &vy) const
{
    if (den_.is_constant() && den_.leading_coeff() == 1)
        return num_.to_string(vx, vy);
    return "(" + num_.to_string(vx, vy) + ")/(" + den_.to_string(vx, vy) + ")";
}

// expr  := term { ('+' | '-') term }
// term  := unary { ('*' | '/') unary }
// unary := ('+' | '-') unary | power
// power := atom [ '^' integer ]
// atom  := number | variable | '(' expr ')'
namespace {

class Parser {
public:
    Parser(const std::string &s, const std::array<std::string, 2> &vars) : s_(s), vars_(vars) {}

    RatFunc parse()
    {
        RatFunc r = expr();
        skip();
        if (pos_ != s_.size())
            throw ParseError(pos_, std::string("unexpected character '") + s_[pos_] + "'");
        return r;
    }

private:
    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool accept(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    RatFunc expr()
    {
        RatFunc r = term();
        for (;;) {
            if (accept('+'))
                r = r + term();
            else if (accept('-'))
                r = r - term();
            else
                return r;
        }
    }

    RatFunc term()
    {
        RatFunc r = unary();
        for (;;) {
            if (accept('*')) {
                r = r * unary();
            } else if (accept('/')) {
                std::size_t at = pos_;
                RatFunc d = unary();
                if (d.is_zero())
                    throw ParseError(at, "division by the zero polynomial");
                r = r / d;
            } else {
                return r;
            }
        }
    }

    RatFunc unary()
    {
        if (accept('-'))
            return -unary();
        if (accept('+'))
            return unary();
        return power();
    }

    RatFunc power()
    {
        RatFunc base = atom();
        if (accept('^')) {
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            if (start == pos_)
                throw ParseError(start, "expected nonnegative integer exponent");
            if (pos_ - start > 4)
                throw ParseError(start, "exponent too large");
            int e = std::stoi(s_.substr(start, pos_ - start));
            return base.pow(e);
        }
        return base;
    }

    RatFunc atom()
    {
        skip();
        if (pos_ >= s_.size())
            throw ParseError(pos_, "unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            RatFunc r = expr();
            if (!accept(')'))
                throw ParseError(pos_, "expected ')'");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.')
            return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            if (name == vars_[0])
                return RatFunc::var_x();
            if (name == vars_[1])
                return RatFunc::var_y();
            throw ParseError(start, "unknown variable '" + name + "'");
        }
        throw ParseError(pos_, std::string("unexpected character '") + c + "'");
    }

    RatFunc number()
    {
        std::size_t start = pos_;
        std::string digits;
        int frac = -1;
        while (pos_ < s_.size()) {
            char c = s_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                digits += c;
                if (frac >= 0)
                    ++frac;
            } else if (c == '.' && frac < 0) {
                frac = 0;
            } else {
                break;
            }
            ++pos_;
        }
        if (digits.empty())
            throw ParseError(start, "malformed number");
        Integer n(digits);
        Integer d = 1;
        for (int i = 0; i < std::max(frac, 0); ++i)
            d *= 10;
        Rational q(n, d);
        q.canonicalize();
        return RatFunc(q);
    }

    const std::string &s_;
    std::array<std::string, 2> vars_;
    std::size_t pos_ = 0;
};

} // namespace

RatFunc parse_ratfunc(const std::string &text, const std::array<std::string, 2> &vars)
{
    return Parser(text, vars).parse();
}

RatFunc derivative(const RatFunc &f, int var)
{
    const BivarPoly &p = f.num(), &q = f.den();
    if (q.is_constant())
        return RatFunc(p.derivative(var) * Rational(1 / q.leading_coeff()));
    return RatFunc(p.derivative(var) * q - p * q.derivative(var), q * q);
}

RatFunc jacobian(const RatFunc &f, const RatFunc &g)
{
    return derivative(f, 0) * derivative(g, 1) - derivative(f, 1) * derivative(g, 0);
}

BivarPoly jacobian_numerator(const RatFunc &f, const RatFunc &g)
{
    if (f.is_constant() || g.is_constant())
        throw Error(ErrorKind::ConstantInput, "jacobian_numerator of a constant function");
    RatFunc j = jacobian(f, g);
    if (j.is_zero())
        return BivarPoly();
    return squarefree_part(j.num());
}

Rational evaluate(const RatFunc &f, const Rational &x, const Rational &y)
{
    Rational d = f.den().evaluate(x, y);
    if (d == 0)
        throw Error(ErrorKind::PoleAtCenter, "denominator vanishes at (" + x.get_str() + ", " + y.get_str() + ")");
    return f.num().evaluate(x, y) / d;
}

namespace {

// Homogenized composition: sum c a^i b^(D1-i) c^j d^(D2-j) for map = (a/b, c/d).
BivarPoly compose_poly(const BivarPoly &p, const std::vector<BivarPoly> &ax, const std::vector<BivarPoly> &bx,
                       const std::vector<BivarPoly> &ay, const std::vector<BivarPoly> &by, int dx, int dy)
{
    BivarPoly r;
    for (const auto &[e, c] : p.terms())
        r += (ax[e.x] * bx[dx - e.x]) * (ay[e.y] * by[dy - e.y]) * c;
    return r;
}

std::vector<BivarPoly> powers(const BivarPoly &p, int n)
{
    std::vector<BivarPoly> v(n + 1);
    v[0] = BivarPoly(1);
    for (int i = 1; i <= n; ++i)
        v[i] = v[i - 1] * p;
    return v;
}

} // namespace

RatFunc substitute(const RatFunc &f, const std::pair<RatFunc, RatFunc> &map)
{
    int dx = std::max({f.num().degree_x(), f.den().degree_x(), 0});
    int dy = std::max({f.num().degree_y(), f.den().degree_y(), 0});
    auto ax = powers(map.first.num(), dx), bx = powers(map.first.den(), dx);
    auto ay = powers(map.second.num(), dy), by = powers(map.second.den(), dy);
    BivarPoly n = compose_poly(f.num(), ax, bx, ay, by, dx, dy);
    BivarPoly d = compose_poly(f.den(), ax, bx, ay, by, dx, dy);
    if (d.is_zero())
        throw Error(ErrorKind::IdenticallySingular, "composed denominator vanishes identically");
    return RatFunc(n, d);
}

} // namespace abelweb
