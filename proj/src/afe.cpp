#include "abelweb/afe.hpp"

#include "abelweb/errors.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

namespace abelweb {

namespace {

Real real_from_double(double v, mpfr_prec_t p)
{
    Real r(p);
    mpfr_set_d(r.get(), v, MPFR_RNDN);
    return r;
}

} // namespace

Domain parse_domain(const std::string &text)
{
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            t += c;
    if (t == "0<x<y<1")
        return Domain::Ordered;
    if (t == "0<x<1,0<y<1")
        return Domain::UnitSquare;
    if (t == "xy<1")
        return Domain::Hyperbolic;
    if (t == "complex")
        return Domain::Complex;
    throw Error(ErrorKind::Format, "unknown domain '" + text + "'");
}

std::string domain_to_string(Domain d)
{
    switch (d) {
    case Domain::Ordered:
        return "0<x<y<1";
    case Domain::UnitSquare:
        return "0<x<1,0<y<1";
    case Domain::Hyperbolic:
        return "xy<1";
    case Domain::Complex:
        return "complex";
    }
    return "?";
}

void AfeInstance::validate() const
{
    if (inner.empty())
        throw Error(ErrorKind::InvalidParameter, "AFE without terms");
    if (components.size() != inner.size() || multipliers.size() != inner.size())
        throw Error(ErrorKind::InvalidParameter, "AFE term lists have different lengths");
    rhs_function(rhs);
}

std::string SamplePoint::to_string() const
{
    auto c = [](const Rational &re, const Rational &im) {
        std::string s = re.get_str();
        if (im != 0)
            s += (im > 0 ? "+" : "") + im.get_str() + "i";
        return s;
    };
    return "(" + c(x_re, x_im) + ", " + c(y_re, y_im) + ")";
}

std::vector<SamplePoint> sample_domain(Domain d, int count, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    auto uniform = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
    auto frac = [](long a, long q) {
        Rational r(a, q);
        r.canonicalize();
        return r;
    };
    std::vector<SamplePoint> out;
    while (static_cast<int>(out.size()) < count) {
        SamplePoint s;
        long q = uniform(20, 400);
        switch (d) {
        case Domain::Ordered: {
            long a = uniform(1, q - 2), b = uniform(a + 1, q - 1);
            s.x_re = frac(a, q);
            s.y_re = frac(b, q);
            break;
        }
        case Domain::UnitSquare: {
            long a = uniform(1, q - 1), b = uniform(1, q - 1);
            if (a == b)
                continue;
            s.x_re = frac(a, q);
            s.y_re = frac(b, q);
            break;
        }
        case Domain::Hyperbolic: {
            long a = uniform(-4 * q + 1, 4 * q - 1), b = uniform(-4 * q + 1, 4 * q - 1);
            s.x_re = frac(a, q);
            s.y_re = frac(b, q);
            if (a == 0 || b == 0 || s.x_re * s.y_re > Rational(9, 10))
                continue;
            break;
        }
        case Domain::Complex: {
            s.x_re = frac(uniform(-2 * q, 2 * q), q);
            s.x_im = frac(uniform(-2 * q, 2 * q), q);
            s.y_re = frac(uniform(-2 * q, 2 * q), q);
            s.y_im = frac(uniform(-2 * q, 2 * q), q);
            if (s.x_im == 0 || s.y_im == 0 || (s.x_re == s.y_re && s.x_im == s.y_im))
                continue;
            break;
        }
        }
        out.push_back(s);
    }
    return out;
}

Complex afe_value(const AfeInstance &a, const SamplePoint &s, mpfr_prec_t prec)
{
    Complex x(s.x_re, s.x_im, prec), y(s.y_re, s.y_im, prec);
    bool real = s.x_im == 0 && s.y_im == 0;
    Complex sum(prec);
    for (std::size_t i = 0; i < a.size(); ++i) {
        Complex u(prec);
        if (real)
            u = Complex(evaluate(a.inner[i], s.x_re, s.y_re), Rational(0), prec);
        else
            u = evaluate_numeric(a.inner[i], x, y);
        sum += a.components[i].evaluate(u, prec) * Real(a.multipliers[i], prec);
    }
    return sum - rhs_function(a.rhs)(x, y, prec);
}

AfeReport verify_afe_numeric(const AfeInstance &a, int samples, int digits, double tolerance, std::uint64_t seed)
{
    a.validate();
    AfeReport r;
    r.name = a.name;
    r.digits = digits;
    r.prec = digits_to_bits(digits);
    r.tolerance = tolerance;
    mpfr_prec_t p2 = 2 * r.prec;
    r.max_residual = Real(p2);
    Real tol = real_from_double(tolerance, p2);
    r.pass = true;
    for (const auto &s : sample_domain(a.domain, samples, seed)) {
        Complex v1(r.prec), v2(p2);
        try {
            v1 = afe_value(a, s, r.prec);
            v2 = afe_value(a, s, p2);
        } catch (const Error &e) {
            throw Error(ErrorKind::EvaluationFailure, "at " + s.to_string() + ": " + e.what());
        }
        SampleResidual sr{s, abs(v2), abs(v1 - v2)};
        r.max_residual = max(r.max_residual, sr.residual);
        if (!(sr.residual < tol) || !(sr.precision_error < tol))
            r.pass = false;
        r.samples.push_back(std::move(sr));
    }
    return r;
}

ConstancyReport constancy_check(const AfeInstance &a, int samples, int digits,
                                const std::vector<ConstantCandidate> &candidates, std::uint64_t seed)
{
    a.validate();
    mpfr_prec_t p = 2 * digits_to_bits(digits);
    ConstancyReport r;
    r.name = a.name;
    r.mean = Complex(p);
    for (const auto &s : sample_domain(a.domain, samples, seed)) {
        r.values.push_back(afe_value(a, s, p));
        r.mean += r.values.back();
    }
    r.mean *= Real(1L, p) / Real(static_cast<long>(r.values.size()), p);
    r.spread = Real(p);
    for (const auto &v : r.values)
        r.spread = max(r.spread, abs(v - r.mean));
    Real scale = max(Real(1L, p), abs(r.mean));
    Real limit = Real(1L, p);
    for (int k = 0; k < digits / 2; ++k)
        limit /= Real(10L, p);
    if (!(r.spread <= limit * scale))
        throw Error(ErrorKind::NotConstant,
                    a.name + ": sample values differ by " + r.spread.to_string(5) + " relative to " + scale.to_string(5));
    r.best_residual = Real(p);
    bool have = false;
    for (const auto &c : candidates) {
        Real d = abs(r.mean - c.value.numeric(p));
        if (!have || d < r.best_residual) {
            r.best = c.name;
            r.best_residual = d;
            have = true;
        }
    }
    if (have) {
        Real rel = r.best_residual / scale;
        if (rel.is_zero())
            r.matched_digits = static_cast<int>(static_cast<double>(p) * 0.30103);
        else
            r.matched_digits = static_cast<int>(std::floor((-log(rel) / log(Real(10L, p))).to_double()));
    }
    return r;
}

FiveTermReport five_term_check(int samples, int digits, double tolerance, std::uint64_t seed)
{
    mpfr_prec_t p = digits_to_bits(digits);
    std::mt19937_64 rng(seed);
    auto coord = [&]() {
        long q = std::uniform_int_distribution<long>(20, 400)(rng);
        Rational r(std::uniform_int_distribution<long>(-3 * q, 3 * q)(rng), q);
        r.canonicalize();
        return r;
    };
    FiveTermReport rep;
    rep.max_residual = Real(p);
    rep.pass = true;
    Real tol = real_from_double(tolerance, p);
    for (int s = 0; s < samples; ++s) {
        std::vector<Complex> z;
        for (int k = 0; k < 5; ++k)
            z.emplace_back(coord(), coord(), p);
        Complex sum(p);
        for (int i = 0; i < 5; ++i) {
            std::vector<Complex> rest;
            for (int k = 0; k < 5; ++k)
                if (k != i)
                    rest.push_back(z[static_cast<std::size_t>(k)]);
            Complex d = bloch_wigner(cross_ratio(rest[0], rest[1], rest[2], rest[3]), p);
            if (i % 2)
                sum -= d;
            else
                sum += d;
        }
        Real res = abs(sum);
        rep.max_residual = max(rep.max_residual, res);
        if (!(res < tol))
            rep.pass = false;
        rep.residuals.push_back(res);
    }
    return rep;
}

namespace {

std::string trim(const std::string &s)
{
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos)
        return {};
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string &s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep))
        out.push_back(trim(cur));
    return out;
}

} // namespace

AfeInstance parse_afe(const std::string &text)
{
    AfeInstance a;
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
                a.name = value;
            } else if (key == "domain") {
                a.domain = parse_domain(value);
            } else if (key == "rhs") {
                a.rhs = value;
            } else if (key == "term") {
                auto parts = split(value, ';');
                if (parts.size() != 3)
                    throw Error(ErrorKind::Format, "term needs 'multiplier ; component ; inner'");
                a.multipliers.push_back(std::stol(parts[0]));
                a.components.push_back(parse_component(parts[1]));
                a.inner.push_back(parse_ratfunc(parts[2]));
            } else {
                throw Error(ErrorKind::Format, "unknown key '" + key + "'");
            }
        } catch (const Error &e) {
            throw Error(ErrorKind::Format, "line " + std::to_string(lineno) + ": " + e.what());
        } catch (const std::logic_error &e) {
            throw Error(ErrorKind::Format, "line " + std::to_string(lineno) + ": bad number");
        }
    }
    a.validate();
    return a;
}

AfeInstance load_afe(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::Format, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_afe(ss.str());
}

} // namespace abelweb
