#pragma once

#include "abelweb/hyperlog.hpp"

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace abelweb {

using NativeFn = std::function<Complex(const Complex &, mpfr_prec_t)>;

// A univariate function known by name: a word combination where one exists,
// otherwise a native evaluator.
struct SpecialFunction {
    std::string name;
    std::string description;
    std::optional<HyperlogExpr> expr;
    NativeFn native;

    Complex evaluate(const Complex &z, mpfr_prec_t prec) const;
};

// Throws UnknownName.
const SpecialFunction &special(const std::string &name);
std::vector<std::string> special_names();

// Right-hand sides in the two plane variables.
using BivarFn = std::function<Complex(const Complex &, const Complex &, mpfr_prec_t)>;
const BivarFn &rhs_function(const std::string &name);
std::vector<std::string> rhs_names();

// (a - c)(b - d) / ((a - d)(b - c)).
Complex cross_ratio(const Complex &a, const Complex &b, const Complex &c, const Complex &d);

Complex bloch_wigner(const Complex &z, mpfr_prec_t prec);

// Sum of (constant x atom): atoms are words L[w], table-convention words
// Lt[x1x0] and Lt[x-1x0], or registry names; a bare constant is allowed.
struct Component {
    HyperlogExpr words;
    std::vector<std::pair<Constant, std::string>> natives;

    Complex evaluate(const Complex &z, mpfr_prec_t prec) const;
    bool is_zero() const { return words.is_zero() && natives.empty(); }
    std::string to_string() const;
};

Component parse_component(const std::string &text);
// Constant expression such as "pi^2/6 - log2^2/2".
Constant parse_constant(const std::string &text);

} // namespace abelweb
