#pragma once

#include "abelweb/web.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace abelweb {

// Homogeneous [X:Y:Z], scaled so that the first nonzero coordinate is 1.
class ProjPoint {
public:
    ProjPoint() = default;
    ProjPoint(const Rational &x, const Rational &y, const Rational &z);

    const Rational &operator[](std::size_t k) const { return c_[k]; }
    bool operator==(const ProjPoint &o) const { return c_ == o.c_; }
    std::string to_string() const;

private:
    std::array<Rational, 3> c_{};
};

struct Configuration {
    std::string name;
    std::vector<ProjPoint> points;

    std::size_t size() const { return points.size(); }
    // Throws InvalidParameter for fewer than 3 or repeated points.
    void validate() const;
};

bool collinear(const ProjPoint &p, const ProjPoint &q, const ProjPoint &r);
// 0-based index triples (i < j < k).
std::vector<std::array<std::size_t, 3>> collinear_triples(const Configuration &c);

struct Stratum {
    int label = 0; // 0..4
    std::vector<std::array<std::size_t, 3>> witnesses;
    std::optional<std::size_t> pivot; // S3 only
    std::string name() const { return "S" + std::to_string(label); }
};

Stratum classify_stratum(const Configuration &c);

RatFunc line_pencil(const ProjPoint &p);
// Throws DegenerateQuadruple when three of the points are collinear.
RatFunc conic_pencil(const ProjPoint &a, const ProjPoint &b, const ProjPoint &c, const ProjPoint &d);

struct ConfigurationWeb {
    Web web;
    // Generating points (0-based) of each foliation: one for a line pencil, four for a conic pencil.
    std::vector<std::vector<std::size_t>> sources;
};

ConfigurationWeb web_from_configuration(const Configuration &c);

// b, q, c, or "c_a" with parameter a.
Configuration named_configuration(const std::string &name, std::optional<Rational> a = std::nullopt);
std::vector<std::string> configuration_names();

// Image of a web under the Cremona map (x, y) -> (1/(x-1), 1/(y-1)).
Web cremona_image(const Web &w);

struct Prop7Report {
    bool match = false;
    std::size_t web_size = 0, config_size = 0;
    // matching[i] = index of the configuration foliation equal to the image of foliation i.
    std::vector<std::optional<std::size_t>> matching;
    std::string detail;
};

// Compares the Cremona image of `w` with the web of `c` as sets of foliations.
Prop7Report compare_with_configuration(const Web &w, const Configuration &c);
// The nine-foliation trilogarithm web against configuration q.
Prop7Report prop7_check();
// The same web without foliations 6, 7, 9 against (q1, q2, q3, q4, q6).
Prop7Report prop8_check();
Web spence_kummer_web();

// One point per line: "X Y Z" as rationals; '#' comments; optional "name: ..." line.
Configuration parse_configuration(const std::string &text);
Configuration load_configuration(const std::string &path);

// Projective map acting on points by the 3x3 matrix g.
using ProjMatrix = std::array<std::array<Rational, 3>, 3>;
ProjPoint apply(const ProjMatrix &g, const ProjPoint &p);
// The affine-chart map (x, y) -> g(x, y).
std::pair<RatFunc, RatFunc> chart_map(const ProjMatrix &g);
ProjMatrix inverse(const ProjMatrix &g); // throws DegenerateMap

} // namespace abelweb
