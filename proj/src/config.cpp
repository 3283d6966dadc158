#include "abelweb/config.hpp"

#include "abelweb/errors.hpp"

#include <fstream>
#include <sstream>

namespace abelweb {

ProjPoint::ProjPoint(const Rational &x, const Rational &y, const Rational &z) : c_{x, y, z}
{
    std::size_t k = 0;
    while (k < 3 && c_[k] == 0)
        ++k;
    if (k == 3)
        throw Error(ErrorKind::InvalidParameter, "point [0:0:0]");
    Rational s = c_[k];
    for (auto &v : c_)
        v /= s;
}

std::string ProjPoint::to_string() const
{
    return "[" + c_[0].get_str() + ":" + c_[1].get_str() + ":" + c_[2].get_str() + "]";
}

void Configuration::validate() const
{
    if (points.size() < 3)
        throw Error(ErrorKind::InvalidParameter, "a configuration needs at least 3 points");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j])
                throw Error(ErrorKind::InvalidParameter, "points " + std::to_string(i + 1) + " and " +
                                                             std::to_string(j + 1) + " coincide");
}

namespace {

Rational det3(const ProjPoint &p, const ProjPoint &q, const ProjPoint &r)
{
    return p[0] * (q[1] * r[2] - q[2] * r[1]) - p[1] * (q[0] * r[2] - q[2] * r[0]) + p[2] * (q[0] * r[1] - q[1] * r[0]);
}

// Linear form through two points, restricted to z = 1.
RatFunc line_through(const ProjPoint &p, const ProjPoint &q)
{
    Rational a = p[1] * q[2] - p[2] * q[1], b = p[2] * q[0] - p[0] * q[2], c = p[0] * q[1] - p[1] * q[0];
    BivarPoly f;
    f.add_term(a, 1, 0);
    f.add_term(b, 0, 1);
    f.add_term(c, 0, 0);
    return RatFunc(f);
}

RatFunc positive(const RatFunc &f)
{
    return f.num().leading_coeff() < 0 ? -f : f;
}

} // namespace

bool collinear(const ProjPoint &p, const ProjPoint &q, const ProjPoint &r)
{
    return det3(p, q, r) == 0;
}

std::vector<std::array<std::size_t, 3>> collinear_triples(const Configuration &c)
{
    std::vector<std::array<std::size_t, 3>> out;
    std::size_t n = c.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                if (collinear(c.points[i], c.points[j], c.points[k]))
                    out.push_back({i, j, k});
    return out;
}

Stratum classify_stratum(const Configuration &c)
{
    if (c.size() != 5)
        throw Error(ErrorKind::InvalidParameter, "strata are defined for 5 points");
    c.validate();
    Stratum s;
    s.witnesses = collinear_triples(c);
    auto on_line = [&](std::size_t i, std::size_t j) {
        std::size_t n = 0;
        for (std::size_t k = 0; k < 5; ++k)
            n += (k == i || k == j || collinear(c.points[i], c.points[j], c.points[k]));
        return n;
    };
    std::size_t most = 2;
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i + 1; j < 5; ++j)
            most = std::max(most, on_line(i, j));
    if (most == 5) {
        s.label = 4;
        return s;
    }
    if (most == 4) {
        s.label = 2;
        return s;
    }
    if (s.witnesses.empty()) {
        s.label = 0;
        return s;
    }
    std::vector<std::size_t> pivots;
    for (std::size_t j = 0; j < 5; ++j) {
        bool all = true;
        for (std::size_t i = 0; i < 5 && all; ++i) {
            if (i == j)
                continue;
            bool found = false;
            for (std::size_t k = 0; k < 5 && !found; ++k)
                found = k != i && k != j && collinear(c.points[i], c.points[j], c.points[k]);
            all = found;
        }
        if (all)
            pivots.push_back(j);
    }
    if (pivots.size() == 1) {
        s.label = 3;
        s.pivot = pivots.front();
    } else {
        s.label = 1;
    }
    return s;
}

RatFunc line_pencil(const ProjPoint &p)
{
    RatFunc x = RatFunc::var_x(), y = RatFunc::var_y();
    if (p[2] != 0) {
        Rational a = p[0] / p[2], b = p[1] / p[2];
        return (y - RatFunc(b)) / (x - RatFunc(a));
    }
    return positive(RatFunc(p[1]) * x - RatFunc(p[0]) * y);
}

RatFunc conic_pencil(const ProjPoint &a, const ProjPoint &b, const ProjPoint &c, const ProjPoint &d)
{
    if (collinear(a, b, c) || collinear(a, b, d) || collinear(a, c, d) || collinear(b, c, d))
        throw Error(ErrorKind::DegenerateQuadruple, "three of the four points are collinear");
    return (line_through(a, b) * line_through(c, d)) / (line_through(a, c) * line_through(b, d));
}

ConfigurationWeb web_from_configuration(const Configuration &c)
{
    c.validate();
    std::vector<RatFunc> ints;
    ConfigurationWeb out;
    auto add = [&](const RatFunc &u, std::vector<std::size_t> src) {
        for (const auto &v : ints)
            if (same_foliation(u, v))
                return;
        ints.push_back(u);
        out.sources.push_back(std::move(src));
    };
    std::size_t n = c.size();
    for (std::size_t i = 0; i < n; ++i)
        add(line_pencil(c.points[i]), {i});
    // Cubic pencils would need 8 points, so conics are the last degree for n <= 7.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                for (std::size_t l = k + 1; l < n; ++l) {
                    const auto &p = c.points;
                    if (collinear(p[i], p[j], p[k]) || collinear(p[i], p[j], p[l]) || collinear(p[i], p[k], p[l]) ||
                        collinear(p[j], p[k], p[l]))
                        continue;
                    add(conic_pencil(p[i], p[j], p[k], p[l]), {i, j, k, l});
                }
    out.web = Web(ints, c.name.empty() ? "configuration" : "W_" + c.name);
    return out;
}

Configuration named_configuration(const std::string &name, std::optional<Rational> a)
{
    ProjPoint b1(1, 0, 0), b2(0, 1, 0), b3(1, 1, 1), b4(0, 0, 1);
    ProjPoint q3(-1, -1, 1), q5(-1, 0, 1), q6(0, -1, 1);
    Configuration c;
    c.name = name;
    if (name == "b")
        c.points = {b1, b2, b3, b4};
    else if (name == "q")
        c.points = {b1, b2, q3, b4, q5, q6};
    else if (name == "c")
        c.points = {b1, b2, b3, b4, q3};
    else if (name == "c_a") {
        if (!a)
            throw Error(ErrorKind::InvalidParameter, "c_a needs the parameter a");
        if (*a == 0 || *a == 1 || *a == -1)
            throw Error(ErrorKind::InvalidParameter, "c_a needs a outside {0, 1, -1}");
        c.points = {b1, b2, b3, b4, ProjPoint(*a, *a, -1)};
        c.name = "c_a(" + a->get_str() + ")";
    } else
        throw Error(ErrorKind::UnknownName, "unknown configuration '" + name + "'");
    c.validate();
    return c;
}

std::vector<std::string> configuration_names()
{
    return {"b", "q", "c", "c_a"};
}

Web cremona_image(const Web &w)
{
    RatFunc one(1);
    Web out = pullback_web(w, {one + RatFunc::var_x().inverse(), one + RatFunc::var_y().inverse()});
    out.set_name("C(" + w.name() + ")");
    return out;
}

Web spence_kummer_web()
{
    std::vector<RatFunc> u;
    for (const char *s : {"x", "y", "x/y", "(1-y)/(1-x)", "x*(1-y)/(y*(1-x))", "x*y", "x*(1-y)/(x-1)",
                          "(1-y)/(y*(x-1))", "x*(1-y)^2/(y*(1-x)^2)"})
        u.push_back(parse_ratfunc(s));
    return Web(u, "SK");
}

Prop7Report compare_with_configuration(const Web &w, const Configuration &c)
{
    Prop7Report r;
    Web img = cremona_image(w);
    Web cw = web_from_configuration(c).web;
    r.web_size = img.size();
    r.config_size = cw.size();
    r.matching = match_foliations(img, cw);
    std::vector<int> hit(cw.size(), 0);
    bool all = true;
    for (const auto &m : r.matching) {
        if (m)
            ++hit[*m];
        else
            all = false;
    }
    bool onto = true;
    for (int h : hit)
        onto = onto && h == 1;
    r.match = all && onto && r.web_size == r.config_size;
    std::ostringstream os;
    if (r.match) {
        os << "MATCH:";
        for (std::size_t i = 0; i < r.matching.size(); ++i)
            os << " " << i + 1 << "->" << *r.matching[i] + 1;
    } else {
        os << "MISMATCH: " << r.web_size << " image foliations vs " << r.config_size << " configuration foliations";
    }
    r.detail = os.str();
    return r;
}

Prop7Report prop7_check()
{
    return compare_with_configuration(spence_kummer_web(), named_configuration("q"));
}

Prop7Report prop8_check()
{
    // The surviving line pencils are those of q1, q2, q3, q4 and q6.
    Configuration q = named_configuration("q");
    q.points.erase(q.points.begin() + 4);
    q.name = "q1,q2,q3,q4,q6";
    return compare_with_configuration(subweb_complement(spence_kummer_web(), {5, 6, 8}), q);
}

Configuration parse_configuration(const std::string &text)
{
    Configuration c;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        auto colon = line.find(':');
        if (colon != std::string::npos) {
            std::string key = line.substr(0, colon);
            key.erase(0, key.find_first_not_of(" \t"));
            key.erase(key.find_last_not_of(" \t") + 1);
            if (key != "name")
                throw Error(ErrorKind::Format, "line " + std::to_string(lineno) + ": unknown key '" + key + "'");
            std::string v = line.substr(colon + 1);
            v.erase(0, v.find_first_not_of(" \t"));
            v.erase(v.find_last_not_of(" \t\r") + 1);
            c.name = v;
            continue;
        }
        std::istringstream ls(line);
        std::string tok;
        std::vector<Rational> v;
        while (ls >> tok) {
            Rational q;
            if (q.set_str(tok, 10) != 0)
                throw Error(ErrorKind::Format, "line " + std::to_string(lineno) + ": bad rational '" + tok + "'");
            q.canonicalize();
            v.push_back(q);
        }
        if (v.size() != 3)
            throw Error(ErrorKind::Format, "line " + std::to_string(lineno) + ": expected 'X Y Z'");
        try {
            c.points.emplace_back(v[0], v[1], v[2]);
        } catch (const Error &e) {
            throw Error(ErrorKind::Format, "line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    c.validate();
    return c;
}

Configuration load_configuration(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::Format, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_configuration(ss.str());
}

ProjPoint apply(const ProjMatrix &g, const ProjPoint &p)
{
    Rational v[3];
    for (int i = 0; i < 3; ++i)
        v[i] = g[i][0] * p[0] + g[i][1] * p[1] + g[i][2] * p[2];
    return ProjPoint(v[0], v[1], v[2]);
}

std::pair<RatFunc, RatFunc> chart_map(const ProjMatrix &g)
{
    auto row = [&](int i) {
        BivarPoly f;
        f.add_term(g[i][0], 1, 0);
        f.add_term(g[i][1], 0, 1);
        f.add_term(g[i][2], 0, 0);
        return RatFunc(f);
    };
    RatFunc z = row(2);
    return {row(0) / z, row(1) / z};
}

ProjMatrix inverse(const ProjMatrix &g)
{
    ProjMatrix adj;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
            adj[i][j] = g[r0][c0] * g[r1][c1] - g[r0][c1] * g[r1][c0];
        }
    Rational det = g[0][0] * adj[0][0] + g[0][1] * adj[1][0] + g[0][2] * adj[2][0];
    if (det == 0)
        throw Error(ErrorKind::DegenerateMap, "singular projective matrix");
    for (auto &r : adj)
        for (auto &v : r)
            v /= det;
    return adj;
}

} // namespace abelweb
