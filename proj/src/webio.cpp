#include "abelweb/webio.hpp"

#include "abelweb/config.hpp"
#include "abelweb/errors.hpp"

#include <fstream>
#include <sstream>

namespace abelweb {

namespace {

std::string trim(const std::string &s)
{
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos)
        return {};
    return s.substr(a, s.find_last_not_of(" \t\r") - a + 1);
}

Rational parse_rational(const std::string &tok)
{
    Rational q;
    if (q.set_str(tok, 10) != 0)
        throw Error(ErrorKind::Format, "bad rational '" + tok + "'");
    q.canonicalize();
    return q;
}

Web web_of(std::initializer_list<const char *> ints, const std::string &name)
{
    std::vector<RatFunc> u;
    for (const char *s : ints)
        u.push_back(parse_ratfunc(s));
    return Web(u, name);
}

} // namespace

WebFile parse_web_file(const std::string &text)
{
    WebFile f;
    std::vector<RatFunc> ints;
    std::string name;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw Error(ErrorKind::Format, "line " + std::to_string(lineno) + ": expected 'key: value'");
        std::string key = trim(line.substr(0, colon)), value = trim(line.substr(colon + 1));
        try {
            if (key == "name") {
                name = value;
            } else if (key == "U") {
                ints.push_back(parse_ratfunc(value));
            } else if (key == "point") {
                std::istringstream ps(value);
                std::string a, b, extra;
                if (!(ps >> a >> b) || (ps >> extra))
                    throw Error(ErrorKind::Format, "point needs two rationals");
                f.point = std::make_pair(parse_rational(a), parse_rational(b));
            } else {
                throw Error(ErrorKind::Format, "unknown key '" + key + "'");
            }
        } catch (const Error &e) {
            throw Error(ErrorKind::Format, "line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    f.web = Web(ints, name);
    return f;
}

WebFile load_web_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::Format, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_web_file(ss.str());
}

std::string format_web_file(const Web &w, const std::optional<std::pair<Rational, Rational>> &point)
{
    std::ostringstream os;
    if (!w.name().empty())
        os << "name: " << w.name() << "\n";
    if (point)
        os << "point: " << point->first.get_str() << " " << point->second.get_str() << "\n";
    for (const auto &u : w.integrals())
        os << "U: " << u.to_string() << "\n";
    return os.str();
}

Web all_lines_web(std::size_t n)
{
    std::vector<RatFunc> u;
    for (std::size_t k = 0; k < n; ++k) {
        long a = static_cast<long>(k);
        u.push_back(line_pencil(ProjPoint(Rational(a), Rational(a * a), Rational(1))));
    }
    return Web(u, "lines" + std::to_string(n));
}

Web named_web(const std::string &name)
{
    if (name == "cauchy")
        return web_of({"x", "y", "x/y"}, name);
    if (name == "arctan")
        return web_of({"x", "y", "(x+y)/(1-x*y)"}, name);
    if (name == "rogers" || name == "bol")
        return web_of({"x", "y", "x/y", "(1-y)/(1-x)", "x*(1-y)/(y*(1-x))"}, name);
    if (name == "sk")
        return spence_kummer_web();
    if (name == "wc")
        return web_of({"x", "y", "x/y", "(1-y)/(1-x)", "x*(1-y)/(y*(1-x))", "(1+x)/(1+y)", "x*(1+y)/(y*(1+x))",
                       "(1-y)*(1+x)/((1-x)*(1+y))"},
                      name);
    if (name.rfind("lines", 0) == 0 && name.size() > 5)
        return all_lines_web(std::stoul(name.substr(5)));
    throw Error(ErrorKind::UnknownName, "unknown web '" + name + "'");
}

std::vector<std::string> web_names()
{
    return {"cauchy", "arctan", "rogers", "bol", "sk", "wc", "lines5", "lines6"};
}

} // namespace abelweb
