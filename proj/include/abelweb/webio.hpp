#pragma once

#include "abelweb/web.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace abelweb {

struct WebFile {
    Web web;
    std::optional<std::pair<Rational, Rational>> point;
};

// Format, one item per line, '#' comments:
//   name: bol
//   point: 1/3 1/2
//   U: x
//   U: (1-y)/(1-x)
WebFile parse_web_file(const std::string &text);
WebFile load_web_file(const std::string &path);
std::string format_web_file(const Web &w, const std::optional<std::pair<Rational, Rational>> &point = std::nullopt);

// cauchy, arctan, rogers (= bol), sk, wc, lines5, lines6
Web named_web(const std::string &name);
std::vector<std::string> web_names();
// Line pencils through the points (k, k^2), k = 0..n-1, no three of them collinear.
Web all_lines_web(std::size_t n);

} // namespace abelweb
