#include "abelweb/abel.hpp"

#include "abelweb/errors.hpp"
#include "abelweb/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace abelweb {

RatFunc DerivationField::apply(const RatFunc &f) const
{
    RatFunc r;
    if (!cx.is_zero())
        r += cx * derivative(f, 0);
    if (!cy.is_zero())
        r += cy * derivative(f, 1);
    return r;
}

std::string DerivationField::to_string() const
{
    return "[" + cx.to_string() + "] d/dx + [" + cy.to_string() + "] d/dy";
}

DerivationField level_field(const RatFunc &u)
{
    DerivationField f{derivative(u, 1), -derivative(u, 0)};
    if (f.cx.is_zero() && f.cy.is_zero())
        throw Error(ErrorKind::ConstantInput, "level field of a constant");
    return f;
}

DerivationField normalized_derivation(const std::vector<RatFunc> &inner, std::size_t i, std::size_t c)
{
    if (i == c || i >= inner.size() || c >= inner.size())
        throw Error(ErrorKind::DegeneratePair, "pivot and companion must be distinct indices");
    DerivationField x = level_field(inner[i]);
    RatFunc s = x.apply(inner[c]);
    if (s.is_zero())
        throw Error(ErrorKind::DegeneratePair,
                    "V_" + std::to_string(i + 1) + " and V_" + std::to_string(c + 1) + " are functionally dependent");
    RatFunc inv = s.inverse();
    return {x.cx * inv, x.cy * inv};
}

// ---------------------------------------------------------------- Adfe

Adfe Adfe::from_web(const Web &w)
{
    Adfe e;
    e.inner = w.integrals();
    e.coeffs.assign(w.size(), std::vector<RatFunc>{RatFunc(1)});
    return e;
}

std::vector<int> Adfe::type_vector() const
{
    std::vector<int> t;
    for (const auto &c : coeffs)
        t.push_back(static_cast<int>(c.size()) - 1);
    return t;
}

std::size_t Adfe::active_count() const
{
    std::size_t n = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        n += active(i);
    return n;
}

std::string Adfe::type_string() const
{
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        os << (first ? "" : ",");
        first = false;
        if (active(i))
            os << coeffs[i].size() - 1;
        else
            os << "-";
    }
    os << ")";
    return os.str();
}

std::string Adfe::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        for (std::size_t j = 0; j < coeffs[i].size(); ++j) {
            if (coeffs[i][j].is_zero())
                continue;
            os << (first ? "" : " + ") << coeffs[i][j].to_string() << " * G" << i + 1 << "^(" << j << ")";
            first = false;
        }
    return first ? "0" : os.str();
}

namespace {

void prune(std::vector<RatFunc> &v)
{
    while (!v.empty() && v.back().is_zero())
        v.pop_back();
}

BivarPoly lcm(const BivarPoly &a, const BivarPoly &b)
{
    if (a.is_constant())
        return b;
    if (b.is_constant())
        return a;
    return divide_exact(a, gcd(a, b)) * b;
}

int max_degree(const Adfe &e)
{
    int d = 0;
    for (const auto &c : e.coeffs)
        for (const auto &a : c)
            d = std::max({d, a.num().total_degree(), a.den().total_degree()});
    return d;
}

} // namespace

Adfe normalize_equation(const Adfe &e)
{
    BivarPoly l(1);
    for (const auto &c : e.coeffs)
        for (const auto &a : c)
            if (!a.is_zero())
                l = lcm(l, a.den());
    std::vector<std::vector<BivarPoly>> nums(e.coeffs.size());
    BivarPoly g;
    for (std::size_t i = 0; i < e.coeffs.size(); ++i)
        for (const auto &a : e.coeffs[i]) {
            BivarPoly p = a.is_zero() ? BivarPoly() : a.num() * divide_exact(l, a.den());
            if (!p.is_zero())
                g = g.is_zero() ? p.primitive() : gcd(g, p);
            nums[i].push_back(std::move(p));
        }
    Adfe out;
    out.inner = e.inner;
    out.coeffs.resize(e.coeffs.size());
    if (g.is_zero())
        return out;
    for (std::size_t i = 0; i < nums.size(); ++i) {
        for (const auto &p : nums[i])
            out.coeffs[i].push_back(p.is_zero() ? RatFunc() : RatFunc(divide_exact(p, g)));
        prune(out.coeffs[i]);
    }
    return out;
}

Adfe reduce_step(const Adfe &e, std::size_t i, std::size_t c)
{
    if (i >= e.coeffs.size() || !e.active(i))
        throw Error(ErrorKind::ZeroPivotCoefficient, "unknown " + std::to_string(i + 1) + " is absent");
    const RatFunc &lead = e.coeffs[i].back();
    if (lead.is_zero())
        throw Error(ErrorKind::ZeroPivotCoefficient, "leading coefficient of the pivot vanishes");
    DerivationField y = normalized_derivation(e.inner, i, c);
    RatFunc inv = lead.inverse();
    Adfe out;
    out.inner = e.inner;
    out.coeffs.resize(e.coeffs.size());
    std::size_t m = e.coeffs[i].size() - 1;
    for (std::size_t j = 0; j < m; ++j)
        out.coeffs[i].push_back(y.apply(e.coeffs[i][j] * inv));
    prune(out.coeffs[i]);
    for (std::size_t k = 0; k < e.coeffs.size(); ++k) {
        if (k == i || !e.active(k))
            continue;
        std::vector<RatFunc> b;
        for (const auto &a : e.coeffs[k])
            b.push_back(a * inv);
        RatFunc dv = y.apply(e.inner[k]);
        auto &nk = out.coeffs[k];
        nk.resize(b.size() + 1);
        for (std::size_t j = 0; j < b.size(); ++j)
            nk[j] = y.apply(b[j]);
        for (std::size_t j = 0; j < b.size(); ++j)
            nk[j + 1] += b[j] * dv;
        prune(nk);
    }
    return normalize_equation(out);
}

// ---------------------------------------------------------------- one-unknown stage

namespace {

using Operator = std::vector<RatFunc>; // sum_j op[j] D^j

int order_of(const Operator &op) { return static_cast<int>(op.size()) - 1; }

Operator monic(Operator op)
{
    prune(op);
    if (op.empty())
        return op;
    RatFunc inv = op.back().inverse();
    for (auto &a : op)
        a *= inv;
    return op;
}

// D o op, where D acts through the derivation y.
Operator left_d(const Operator &op, const DerivationField &y)
{
    Operator out(op.size() + 1);
    for (std::size_t j = 0; j < op.size(); ++j) {
        out[j] += y.apply(op[j]);
        out[j + 1] += op[j];
    }
    prune(out);
    return out;
}

Operator right_remainder(Operator l, const Operator &r, const DerivationField &y)
{
    prune(l);
    int m = order_of(r);
    std::vector<Operator> shifts{r};
    while (!l.empty() && order_of(l) >= m) {
        std::size_t s = static_cast<std::size_t>(order_of(l) - m);
        while (shifts.size() <= s)
            shifts.push_back(left_d(shifts.back(), y));
        RatFunc c = l.back();
        const Operator &p = shifts[s];
        for (std::size_t j = 0; j < p.size(); ++j)
            l[j] -= c * p[j];
        l.back() = RatFunc();
        prune(l);
    }
    return l;
}

std::string op_summary(const Operator &op)
{
    int d = 0;
    for (const auto &a : op)
        d = std::max({d, a.num().total_degree(), a.den().total_degree()});
    return "order " + std::to_string(order_of(op)) + ", max degree " + std::to_string(d);
}

} // namespace

LdeResult derive_lde(const Web &w, std::size_t target)
{
    if (target >= w.size())
        throw Error(ErrorKind::InvalidParameter, "target index out of range");
    LdeResult res;
    res.target = target;
    Adfe e = Adfe::from_web(w);
    res.intermediates.push_back(e);
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (k == target)
            continue;
        while (e.active(k)) {
            e = reduce_step(e, k, target);
            res.intermediates.push_back(e);
            res.trace.push_back({"eliminate", k, target, e.type_string(),
                                 "max degree " + std::to_string(max_degree(e))});
        }
    }
    Operator op = monic(e.coeffs[target]);
    if (op.empty())
        throw Error(ErrorKind::TrivialEquation, "the equation cancels identically");
    res.bivariate_order = order_of(op);

    // Corollary-1 stage: d/dU at fixed V lowers the order; right remainders
    // keep the set of equations equivalent.
    std::size_t u = w.size();
    for (std::size_t k = 0; k < w.size() && u == w.size(); ++k)
        if (k != target && !jacobian(w.integral(k), w.integral(target)).is_zero())
            u = k;
    DerivationField dv = normalized_derivation(e.inner, u, target);
    DerivationField du = normalized_derivation(e.inner, target, u);
    std::vector<Operator> eqs{op};
    for (;;) {
        std::sort(eqs.begin(), eqs.end(), [](const Operator &a, const Operator &b) { return a.size() < b.size(); });
        const Operator r = eqs.front();
        if (order_of(r) <= 1 && (r.empty() || r[0].is_zero()))
            throw Error(ErrorKind::TrivialEquation, "reduction ends with G' = 0: only constant solutions");
        Operator d;
        for (const auto &a : r)
            d.push_back(du.apply(a));
        d = monic(d);
        if (!d.empty()) {
            res.trace.push_back({"differentiate", u, target, "(" + std::to_string(order_of(d)) + ")", op_summary(d)});
            eqs.push_back(std::move(d));
            continue;
        }
        bool added = false;
        for (std::size_t k = 1; k < eqs.size() && !added; ++k) {
            Operator rem = monic(right_remainder(eqs[k], r, dv));
            if (!rem.empty()) {
                res.trace.push_back({"remainder", u, target, "(" + std::to_string(order_of(rem)) + ")", op_summary(rem)});
                eqs[k] = std::move(rem);
                added = true;
            }
        }
        if (!added) {
            eqs.resize(1);
            break;
        }
    }
    for (const auto &a : eqs.front())
        res.ode.coeffs.push_back(reexpress(a, w.integral(target)));
    return res;
}

// ---------------------------------------------------------------- reexpression

bool depends_only_on(const RatFunc &f, const RatFunc &u)
{
    return level_field(u).apply(f).is_zero();
}

namespace {

std::optional<RatFunc> reexpress_at(const RatFunc &f, const RatFunc &u, int deg)
{
    const BivarPoly &n = u.num(), &d = u.den();
    std::vector<BivarPoly> npow{BivarPoly(1)}, dpow{BivarPoly(1)};
    for (int k = 1; k <= deg; ++k) {
        npow.push_back(npow.back() * n);
        dpow.push_back(dpow.back() * d);
    }
    // Columns p_0..p_deg, q_0..q_deg of  num_f * Q(U) d^deg - den_f * P(U) d^deg = 0.
    std::vector<BivarPoly> cols;
    for (int k = 0; k <= deg; ++k)
        cols.push_back(-(f.den() * npow[k] * dpow[deg - k]));
    for (int k = 0; k <= deg; ++k)
        cols.push_back(f.num() * npow[k] * dpow[deg - k]);
    std::map<Exp, std::size_t, GrLexGreater> rows;
    for (const auto &c : cols)
        for (const auto &t : c.terms())
            rows.emplace(t.first, 0);
    std::size_t r = 0;
    for (auto &kv : rows)
        kv.second = r++;
    QMatrix m(rows.size(), QVector(cols.size(), Rational(0)));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (const auto &t : cols[j].terms())
            m[rows[t.first]][j] = t.second;
    auto ker = nullspace(m, cols.size());
    if (ker.empty())
        return std::nullopt;
    const auto &v = ker.front();
    BivarPoly p, q;
    for (int k = 0; k <= deg; ++k) {
        p.add_term(v[static_cast<std::size_t>(k)], k, 0);
        q.add_term(v[static_cast<std::size_t>(deg + 1 + k)], k, 0);
    }
    if (q.is_zero())
        return std::nullopt;
    RatFunc g(p, q);
    if (substitute(g, {u, u}) != f)
        return std::nullopt;
    return g;
}

} // namespace

RatFunc reexpress(const RatFunc &f, const RatFunc &u, std::optional<int> degree_bound)
{
    if (f.is_constant())
        return f;
    if (!depends_only_on(f, u))
        throw Error(ErrorKind::NoRationalExpression, "function is not constant on the level curves");
    int cap = degree_bound ? *degree_bound : 2 * std::max(f.num().total_degree(), f.den().total_degree());
    cap = std::max(cap, 1);
    for (int round = 0; round < 3; ++round, cap *= 2)
        for (int deg = round == 0 ? 1 : cap / 2 + 1; deg <= cap; ++deg)
            if (auto g = reexpress_at(f, u, deg))
                return *g;
    throw Error(ErrorKind::NoRationalExpression,
                "no rational expression of degree <= " + std::to_string(cap / 2) + " (the coefficient may be algebraic)");
}

// ---------------------------------------------------------------- genericity

GenericityVerdict genericity_certificate(const Web &w)
{
    GenericityVerdict v;
    std::size_t target = w.size() - 1;
    try {
        LdeResult r = derive_lde(w, target);
        v.generic = false;
        v.detail = "NOT-CERTIFIED: foliation " + std::to_string(target + 1) + " satisfies an equation of order " +
                   std::to_string(r.ode.order()) + " (" + r.ode.to_string("v") + ")";
    } catch (const Error &e) {
        if (e.kind() == ErrorKind::TrivialEquation) {
            v.generic = true;
            v.detail = "GENERIC: only constant solutions";
            v.witnesses.push_back(e.what());
        } else if (e.kind() == ErrorKind::NoRationalExpression || e.kind() == ErrorKind::NotPurelyUnivariate) {
            v.generic = false;
            v.detail = std::string("NOT-CERTIFIED: ") + e.what();
        } else {
            throw;
        }
    }
    return v;
}

} // namespace abelweb
