#pragma once

#include "abelweb/hyperlog.hpp"
#include "abelweb/web.hpp"

#include <optional>
#include <string>
#include <vector>

namespace abelweb {

// cx * d/dx + cy * d/dy
struct DerivationField {
    RatFunc cx, cy;

    RatFunc apply(const RatFunc &f) const;
    std::string to_string() const;
};

// (dU/dy) d/dx - (dU/dx) d/dy
DerivationField level_field(const RatFunc &u);
// Derivation with respect to V_c in the coordinates (V_i, V_c): Y(V_i) = 0, Y(V_c) = 1.
DerivationField normalized_derivation(const std::vector<RatFunc> &inner, std::size_t i, std::size_t c);

// sum_i sum_{j <= M_i} A_ij G_i^(j)(V_i) = 0. An unknown with no coefficients is absent.
struct Adfe {
    std::vector<RatFunc> inner;
    std::vector<std::vector<RatFunc>> coeffs; // coeffs[i][j] = A_ij, trailing zeros pruned

    static Adfe from_web(const Web &w); // type (0, ..., 0), all coefficients 1
    bool active(std::size_t i) const { return !coeffs[i].empty(); }
    std::vector<int> type_vector() const; // -1 for absent unknowns
    std::size_t active_count() const;
    std::string type_string() const;
    std::string to_string() const;
};

// Clear denominators and remove the polynomial content of the whole equation.
Adfe normalize_equation(const Adfe &e);

// One elimination step on pivot i with derivation normalized_derivation(i, c).
Adfe reduce_step(const Adfe &e, std::size_t i, std::size_t c);

struct ReductionStep {
    std::string kind; // "eliminate", "differentiate", "remainder"
    std::size_t pivot = 0, companion = 0;
    std::string type_after;
    std::string detail;
};

struct LdeResult {
    std::size_t target = 0;
    UnivarODE ode; // coefficients in the variable x standing for V_target
    std::vector<ReductionStep> trace;
    std::vector<Adfe> intermediates; // every Adfe of the elimination stage
    int bivariate_order = 0;          // order of the one-unknown Adfe before the final reduction
};

// Throws NotPurelyUnivariate, TrivialEquation (only constant solutions), NoRationalExpression.
LdeResult derive_lde(const Web &w, std::size_t target);

bool depends_only_on(const RatFunc &f, const RatFunc &u);
// g(v) with g(U) = f, as a rational function of x; degree cap doubled twice if needed.
RatFunc reexpress(const RatFunc &f, const RatFunc &u, std::optional<int> degree_bound = std::nullopt);

struct GenericityVerdict {
    bool generic = false;
    std::string detail;
    std::vector<std::string> witnesses; // nonvanishing differentiated coefficients
};

GenericityVerdict genericity_certificate(const Web &w);

} // namespace abelweb
