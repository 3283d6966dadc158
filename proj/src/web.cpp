#include "abelweb/web.hpp"

#include "abelweb/errors.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace abelweb {

Web::Web(std::vector<RatFunc> integrals, std::string name) : name_(std::move(name))
{
    if (integrals.size() < 3)
        throw Error(ErrorKind::InvalidWeb, "a web needs at least 3 foliations");
    for (std::size_t i = 0; i < integrals.size(); ++i) {
        if (integrals[i].is_constant())
            throw Error(ErrorKind::InvalidWeb, "integral " + std::to_string(i + 1) + " is constant");
        for (std::size_t j = 0; j < i; ++j)
            if (same_foliation(integrals[i], integrals[j]))
                throw Error(ErrorKind::InvalidWeb,
                            "integrals " + std::to_string(j + 1) + " and " + std::to_string(i + 1) + " define the same foliation");
    }
    for (auto &u : integrals)
        foliations_.push_back(Foliation{std::move(u)});
}

std::vector<RatFunc> Web::integrals() const
{
    std::vector<RatFunc> v;
    for (const auto &f : foliations_)
        v.push_back(f.integral);
    return v;
}

bool same_foliation(const RatFunc &f, const RatFunc &g)
{
    return jacobian(f, g).is_zero();
}

RatFunc finite_integral(const RatFunc &u, const Rational &x, const Rational &y, bool *inverted)
{
    if (inverted)
        *inverted = false;
    if (u.den().evaluate(x, y) != 0)
        return u;
    if (u.num().evaluate(x, y) == 0)
        throw Error(ErrorKind::PoleAtCenter, "point is an indeterminacy point of " + u.to_string());
    if (inverted)
        *inverted = true;
    return u.inverse();
}

BivarPoly SingularLocus::product() const
{
    BivarPoly p(1);
    for (const auto &c : curve_components)
        p = p * c;
    return p;
}

bool SingularLocus::contains_point(const Rational &x, const Rational &y) const
{
    for (const auto &c : curve_components)
        if (c.evaluate(x, y) == 0)
            return true;
    return false;
}

namespace {

// Polynomial 1-form Q dP - P dQ divided by the gcd of its components.
struct OneForm {
    BivarPoly a, b; // a dx + b dy
    BivarPoly critical;
};

OneForm reduced_form(const RatFunc &u)
{
    const BivarPoly &p = u.num(), &q = u.den();
    BivarPoly a = q * p.derivative(0) - p * q.derivative(0);
    BivarPoly b = q * p.derivative(1) - p * q.derivative(1);
    BivarPoly g = gcd(a, b);
    OneForm f;
    if (!g.is_constant()) {
        a = divide_exact(a, g);
        b = divide_exact(b, g);
        f.critical = g;
    }
    f.a = a;
    f.b = b;
    return f;
}

bool divides_any(const BivarPoly &c, const std::vector<BivarPoly> &polys)
{
    for (const auto &p : polys)
        if (divides(c, p))
            return true;
    return false;
}

} // namespace

SingularLocus singular_locus(const Web &w)
{
    std::size_t n = w.size();
    std::vector<OneForm> forms;
    for (const auto &f : w.foliations())
        forms.push_back(reduced_form(f.integral));

    std::vector<BivarPoly> invariant, poles;
    for (std::size_t i = 0; i < n; ++i) {
        if (!forms[i].critical.is_zero())
            invariant.push_back(forms[i].critical);
        for (std::size_t j = i + 1; j < n; ++j) {
            BivarPoly t = forms[i].a * forms[j].b - forms[i].b * forms[j].a;
            if (!t.is_constant())
                invariant.push_back(squarefree_part(t));
        }
        const RatFunc &u = w.integral(i);
        if (!u.den().is_constant())
            poles.push_back(squarefree_part(u.den()));
    }

    SingularLocus s;
    std::vector<BivarPoly> all = invariant;
    all.insert(all.end(), poles.begin(), poles.end());
    s.curve_components = coprime_basis(all);
    for (const auto &c : s.curve_components) {
        if (divides_any(c, invariant))
            s.tangency_components.push_back(c);
        else
            s.pole_components.push_back(c);
    }
    for (const auto &f : w.foliations())
        if (!f.integral.num().is_constant() && !f.integral.den().is_constant())
            s.indeterminacy.emplace_back(f.integral.num(), f.integral.den());
    return s;
}

SigmaFactorReport verify_sigma_factors(const Web &w, const std::vector<BivarPoly> &candidates)
{
    SingularLocus s = singular_locus(w);
    BivarPoly prod = s.product();
    SigmaFactorReport r;
    r.all_divide = true;
    BivarPoly cprod(1);
    for (const auto &c : candidates) {
        SigmaFactorReport::Entry e{c, divides(c, prod)};
        r.all_divide = r.all_divide && e.divides;
        r.entries.push_back(e);
        cprod = cprod * c;
    }
    r.product_equal = cprod.primitive() == prod.primitive();
    for (const auto &comp : s.curve_components) {
        bool hit = false;
        for (const auto &c : candidates)
            if (!gcd(comp, c).is_constant())
                hit = true;
        if (!hit)
            r.unmatched_components.push_back(comp);
    }
    return r;
}

bool is_generic_point(const Web &w, const SingularLocus &sigma, const Rational &x, const Rational &y)
{
    if (sigma.contains_point(x, y))
        return false;
    for (const auto &f : w.foliations())
        if (f.integral.num().evaluate(x, y) == 0 && f.integral.den().evaluate(x, y) == 0)
            return false;
    return true;
}

namespace {

BasePoint make_base_point(const Web &w, const Rational &x, const Rational &y)
{
    BasePoint b{x, y, {}, {}};
    for (const auto &f : w.foliations()) {
        bool inv = false;
        RatFunc u = finite_integral(f.integral, x, y, &inv);
        b.images.push_back(evaluate(u, x, y));
        b.inverted.push_back(inv);
    }
    return b;
}

} // namespace

BasePoint pick_generic_point(const Web &w, const SingularLocus &sigma, std::uint64_t seed,
                             const std::optional<std::pair<Rational, Rational>> &preferred)
{
    if (preferred && is_generic_point(w, sigma, preferred->first, preferred->second))
        return make_base_point(w, preferred->first, preferred->second);
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < kGenericPointAttempts; ++attempt) {
        long dx = static_cast<long>(rng() % 9) + 2, dy = static_cast<long>(rng() % 9) + 2;
        long nx = static_cast<long>(rng() % static_cast<std::uint64_t>(4 * dx + 1)) - 2 * dx;
        long ny = static_cast<long>(rng() % static_cast<std::uint64_t>(4 * dy + 1)) - 2 * dy;
        Rational x(nx, dx), y(ny, dy);
        x.canonicalize();
        y.canonicalize();
        if (is_generic_point(w, sigma, x, y))
            return make_base_point(w, x, y);
    }
    throw Error(ErrorKind::SearchExhausted, "no generic point found after " + std::to_string(kGenericPointAttempts) + " candidates");
}

BasePoint pick_generic_point(const Web &w, std::uint64_t seed, const std::optional<std::pair<Rational, Rational>> &preferred)
{
    return pick_generic_point(w, singular_locus(w), seed, preferred);
}

Web pullback_web(const Web &w, const std::pair<RatFunc, RatFunc> &map)
{
    std::vector<RatFunc> out;
    for (const auto &f : w.foliations()) {
        RatFunc u = substitute(f.integral, map);
        if (u.is_constant())
            throw Error(ErrorKind::DegenerateMap, "pulled-back integral is constant");
        for (const auto &v : out)
            if (same_foliation(u, v))
                throw Error(ErrorKind::DegenerateMap, "two pulled-back foliations coincide");
        out.push_back(u);
    }
    return Web(std::move(out), w.name());
}

ConditionCReport condition_C_local(const Web &w)
{
    SingularLocus s = singular_locus(w);
    BivarPoly prod = s.product();
    ConditionCReport r;
    r.holds = true;
    for (std::size_t i = 0; i < w.size(); ++i) {
        std::vector<std::size_t> partners;
        for (std::size_t l = 0; l < w.size(); ++l) {
            if (l == i)
                continue;
            BivarPoly j = jacobian_numerator(w.integral(i), w.integral(l));
            if (j.is_zero())
                continue;
            bool ok = true;
            for (const auto &c : coprime_basis({j}))
                if (!divides(c, prod))
                    ok = false;
            if (ok)
                partners.push_back(l);
        }
        r.holds = r.holds && !partners.empty();
        r.partners.push_back(std::move(partners));
    }
    return r;
}

Web subweb(const Web &w, const std::vector<std::size_t> &indices)
{
    if (indices.size() < 3)
        throw Error(ErrorKind::TooFewFoliations, "a subweb needs at least 3 foliations");
    std::vector<RatFunc> u;
    for (auto i : indices) {
        if (i >= w.size())
            throw Error(ErrorKind::InvalidParameter, "subweb index out of range");
        u.push_back(w.integral(i));
    }
    return Web(std::move(u));
}

std::string hat_name(const std::vector<std::size_t> &removed)
{
    std::string s;
    for (auto i : removed)
        s += "^" + std::to_string(i + 1);
    return s;
}

Web subweb_complement(const Web &w, const std::vector<std::size_t> &removed)
{
    std::set<std::size_t> r(removed.begin(), removed.end());
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (!r.count(i))
            keep.push_back(i);
    Web s = subweb(w, keep);
    s.set_name(w.name() + hat_name(removed));
    return s;
}

std::vector<std::optional<std::size_t>> match_foliations(const Web &a, const Web &b)
{
    std::vector<std::optional<std::size_t>> m;
    for (const auto &f : a.foliations()) {
        std::optional<std::size_t> hit;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (same_foliation(f.integral, b.integral(j))) {
                hit = j;
                break;
            }
        m.push_back(hit);
    }
    return m;
}

bool same_web(const Web &a, const Web &b)
{
    if (a.size() != b.size())
        return false;
    auto m = match_foliations(a, b);
    std::set<std::size_t> used;
    for (const auto &x : m) {
        if (!x)
            return false;
        used.insert(*x);
    }
    return used.size() == b.size();
}

} // namespace abelweb
