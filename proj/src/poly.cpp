#include "abelweb/poly.hpp"

#include "abelweb/errors.hpp"
#include "zpoly.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace abelweb {

std::string rational_to_string(const Rational &q)
{
    return q.get_str();
}

BivarPoly::BivarPoly(const Rational &c)
{
    if (c != 0)
        terms_.emplace(Exp{0, 0}, c);
}

BivarPoly BivarPoly::monomial(const Rational &c, int ex, int ey)
{
    BivarPoly p;
    if (c != 0)
        p.terms_.emplace(Exp{ex, ey}, c);
    return p;
}

bool BivarPoly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.total() == 0);
}

Rational BivarPoly::coeff(int ex, int ey) const
{
    auto it = terms_.find(Exp{ex, ey});
    return it == terms_.end() ? Rational(0) : it->second;
}

void BivarPoly::add_term(const Rational &c, int ex, int ey)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(Exp{ex, ey}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

int BivarPoly::total_degree() const
{
    return terms_.empty() ? -1 : terms_.begin()->first.total();
}

int BivarPoly::degree_x() const
{
    int d = -1;
    for (const auto &[e, c] : terms_)
        d = std::max(d, e.x);
    return d;
}

int BivarPoly::degree_y() const
{
    int d = -1;
    for (const auto &[e, c] : terms_)
        d = std::max(d, e.y);
    return d;
}

BivarPoly BivarPoly::operator-() const
{
    BivarPoly r = *this;
    for (auto &[e, c] : r.terms_)
        c = -c;
    return r;
}

BivarPoly &BivarPoly::operator+=(const BivarPoly &o)
{
    for (const auto &[e, c] : o.terms_)
        add_term(c, e.x, e.y);
    return *this;
}

BivarPoly &BivarPoly::operator-=(const BivarPoly &o)
{
    for (const auto &[e, c] : o.terms_)
        add_term(-c, e.x, e.y);
    return *this;
}

BivarPoly &BivarPoly::operator*=(const Rational &c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &[e, v] : terms_)
        v *= c;
    return *this;
}

BivarPoly operator*(const BivarPoly &a, const BivarPoly &b)
{
    BivarPoly r;
    if (a.is_zero() || b.is_zero())
        return r;
    Rational t;
    for (const auto &[ea, ca] : a.terms_) {
        for (const auto &[eb, cb] : b.terms_) {
            t = ca * cb;
            Exp e{ea.x + eb.x, ea.y + eb.y};
            auto [it, inserted] = r.terms_.emplace(e, t);
            if (!inserted)
                it->second += t;
        }
    }
    std::erase_if(r.terms_, [](const auto &kv) { return kv.second == 0; });
    return r;
}

bool BivarPoly::operator==(const BivarPoly &o) const
{
    if (terms_.size() != o.terms_.size())
        return false;
    auto it = o.terms_.begin();
    for (const auto &[e, c] : terms_) {
        if (!(it->first == e) || it->second != c)
            return false;
        ++it;
    }
    return true;
}

BivarPoly BivarPoly::pow(unsigned n) const
{
    BivarPoly r(1), b = *this;
    while (n) {
        if (n & 1)
            r = r * b;
        n >>= 1;
        if (n)
            b = b * b;
    }
    return r;
}

BivarPoly BivarPoly::derivative(int var) const
{
    BivarPoly r;
    for (const auto &[e, c] : terms_) {
        int k = var == 0 ? e.x : e.y;
        if (k == 0)
            continue;
        if (var == 0)
            r.terms_.emplace(Exp{e.x - 1, e.y}, c * k);
        else
            r.terms_.emplace(Exp{e.x, e.y - 1}, c * k);
    }
    return r;
}

Rational BivarPoly::evaluate(const Rational &x, const Rational &y) const
{
    int dx = std::max(degree_x(), 0), dy = std::max(degree_y(), 0);
    std::vector<Rational> px(dx + 1), py(dy + 1);
    px[0] = 1;
    py[0] = 1;
    for (int i = 1; i <= dx; ++i)
        px[i] = px[i - 1] * x;
    for (int i = 1; i <= dy; ++i)
        py[i] = py[i - 1] * y;
    Rational s = 0;
    for (const auto &[e, c] : terms_)
        s += c * px[e.x] * py[e.y];
    return s;
}

BivarPoly BivarPoly::shifted(const Rational &x0, const Rational &y0) const
{
    // Binomial expansion, variable by variable.
    int dx = std::max(degree_x(), 0), dy = std::max(degree_y(), 0);
    std::vector<Rational> px(dx + 1), py(dy + 1);
    px[0] = 1;
    py[0] = 1;
    for (int i = 1; i <= dx; ++i)
        px[i] = px[i - 1] * x0;
    for (int i = 1; i <= dy; ++i)
        py[i] = py[i - 1] * y0;
    int dm = std::max(dx, dy);
    std::vector<std::vector<Integer>> binom(dm + 1, std::vector<Integer>(dm + 1));
    for (int n = 0; n <= dm; ++n) {
        binom[n][0] = 1;
        for (int k = 1; k <= n; ++k)
            binom[n][k] = binom[n - 1][k - 1] + (k <= n - 1 ? binom[n - 1][k] : Integer(0));
    }
    BivarPoly r;
    for (const auto &[e, c] : terms_)
        for (int i = 0; i <= e.x; ++i)
            for (int j = 0; j <= e.y; ++j)
                r.add_term(c * Rational(binom[e.x][i]) * px[e.x - i] * Rational(binom[e.y][j]) * py[e.y - j], i, j);
    return r;
}

BivarPoly BivarPoly::swapped() const
{
    BivarPoly r;
    for (const auto &[e, c] : terms_)
        r.terms_.emplace(Exp{e.y, e.x}, c);
    return r;
}

Rational BivarPoly::content() const
{
    if (terms_.empty())
        return 0;
    Integer g = 0, l = 1;
    for (const auto &[e, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    }
    Rational r(g, l);
    r.canonicalize();
    if (leading_coeff() < 0)
        r = -r;
    return r;
}

BivarPoly BivarPoly::primitive() const
{
    if (terms_.empty())
        return *this;
    Rational c = content();
    BivarPoly r = *this;
    Rational inv = 1 / c;
    for (auto &[e, v] : r.terms_)
        v *= inv;
    return r;
}

BivarPoly BivarPoly::monic() const
{
    if (terms_.empty())
        return *this;
    return *this * Rational(1 / leading_coeff());
}

std::vector<std::vector<Integer>> BivarPoly::to_dense_zxy() const
{
    std::vector<std::vector<Integer>> d(std::max(degree_y(), -1) + 1);
    for (const auto &[e, c] : terms_) {
        auto &row = d[e.y];
        if (static_cast<int>(row.size()) <= e.x)
            row.resize(e.x + 1);
        row[e.x] = c.get_num();
    }
    return d;
}

BivarPoly BivarPoly::from_dense_zxy(const std::vector<std::vector<Integer>> &d)
{
    BivarPoly r;
    for (std::size_t j = 0; j < d.size(); ++j)
        for (std::size_t i = 0; i < d[j].size(); ++i)
            if (d[j][i] != 0)
                r.terms_.emplace(Exp{static_cast<int>(i), static_cast<int>(j)}, Rational(d[j][i]));
    return r;
}

namespace {

void append_monomial(std::ostringstream &os, int ex, int ey, const std::string &vx, const std::string &vy, bool &first_factor)
{
    auto put = [&](const std::string &v, int k) {
        if (k == 0)
            return;
        if (!first_factor)
            os << '*';
        os << v;
        if (k > 1)
            os << '^' << k;
        first_factor = false;
    };
    put(vx, ex);
    put(vy, ey);
}

} // namespace

std::string BivarPoly::to_string(const std::string &vx, const std::string &vy) const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[e, c] : terms_) {
        Rational a = abs(c);
        if (first) {
            if (c < 0)
                os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool first_factor = true;
        if (a != 1 || e.total() == 0) {
            os << a.get_str();
            first_factor = false;
        }
        append_monomial(os, e.x, e.y, vx, vy, first_factor);
    }
    return os.str();
}

std::size_t BivarPoly::hash() const
{
    std::size_t h = 0;
    for (const auto &[e, c] : terms_) {
        h = h * 1000003u + std::hash<int>()(e.x * 7919 + e.y);
        h = h * 1000003u + std::hash<std::string>()(c.get_str());
    }
    return h;
}

bool try_divide(const BivarPoly &a, const BivarPoly &b, BivarPoly &q)
{
    if (b.is_zero())
        throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
    q = BivarPoly();
    if (a.is_zero())
        return true;
    if (b.is_constant()) {
        q = a * Rational(1 / b.leading_coeff());
        return true;
    }
    BivarPoly r = a;
    Exp lb = b.leading_exp();
    Rational ilb = 1 / b.leading_coeff();
    int dxb = b.degree_x(), dyb = b.degree_y();
    if (r.degree_x() < dxb || r.degree_y() < dyb)
        return false;
    while (!r.is_zero()) {
        Exp lr = r.leading_exp();
        if (lr.x < lb.x || lr.y < lb.y)
            return false;
        Rational c = r.leading_coeff() * ilb;
        int ex = lr.x - lb.x, ey = lr.y - lb.y;
        q.add_term(c, ex, ey);
        for (const auto &[e, v] : b.terms())
            r.add_term(-c * v, e.x + ex, e.y + ey);
    }
    return true;
}

BivarPoly divide_exact(const BivarPoly &a, const BivarPoly &b)
{
    BivarPoly q;
    if (!try_divide(a, b, q))
        throw Error(ErrorKind::DivisionByZero, "inexact polynomial division");
    return q;
}

bool divides(const BivarPoly &d, const BivarPoly &p)
{
    if (d.is_zero())
        return p.is_zero();
    BivarPoly q;
    return try_divide(p, d, q);
}

BivarPoly gcd(const BivarPoly &a, const BivarPoly &b)
{
    if (a.is_zero() && b.is_zero())
        return BivarPoly();
    if (a.is_zero())
        return b.primitive();
    if (b.is_zero())
        return a.primitive();
    if (a.is_constant() || b.is_constant())
        return BivarPoly(1);
    BivarPoly pa = a.primitive(), pb = b.primitive();
    if (pa == pb)
        return pa;
    auto g = detail::gcd(pa.to_dense_zxy(), pb.to_dense_zxy());
    return BivarPoly::from_dense_zxy(g).primitive();
}

BivarPoly squarefree_part(const BivarPoly &p)
{
    if (p.is_zero())
        return p;
    if (p.is_constant())
        return BivarPoly(1);
    BivarPoly g = gcd(gcd(p, p.derivative(0)), p.derivative(1));
    return divide_exact(p, g).primitive();
}

bool canonical_less(const BivarPoly &a, const BivarPoly &b)
{
    if (a.total_degree() != b.total_degree())
        return a.total_degree() < b.total_degree();
    if (a.size() != b.size())
        return a.size() < b.size();
    auto ia = a.terms().begin();
    auto ib = b.terms().begin();
    for (; ia != a.terms().end(); ++ia, ++ib) {
        if (!(ia->first == ib->first))
            return GrLexGreater()(ia->first, ib->first);
        if (ia->second != ib->second)
            return ia->second < ib->second;
    }
    return false;
}

std::vector<BivarPoly> coprime_basis(const std::vector<BivarPoly> &polys)
{
    std::vector<BivarPoly> basis;
    for (const auto &p0 : polys) {
        if (p0.is_zero() || p0.is_constant())
            continue;
        std::vector<BivarPoly> pending{squarefree_part(p0)};
        while (!pending.empty()) {
            BivarPoly p = pending.back();
            pending.pop_back();
            if (p.is_constant())
                continue;
            bool merged = false;
            for (std::size_t i = 0; i < basis.size(); ++i) {
                BivarPoly g = gcd(p, basis[i]);
                if (g.is_constant())
                    continue;
                BivarPoly b = basis[i];
                basis.erase(basis.begin() + static_cast<long>(i));
                pending.push_back(g);
                pending.push_back(squarefree_part(divide_exact(b, g)));
                pending.push_back(squarefree_part(divide_exact(p, g)));
                merged = true;
                break;
            }
            if (!merged)
                basis.push_back(p.primitive());
        }
    }
    std::sort(basis.begin(), basis.end(), canonical_less);
    return basis;
}

} // namespace abelweb
