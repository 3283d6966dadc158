#pragma once

#include "abelweb/ratfunc.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace abelweb {

struct Foliation {
    RatFunc integral;
};

// Unordered set of pairwise distinct foliations, stored in a fixed order so
// that indices (0-based here, 1-based in reports) are meaningful.
class Web {
public:
    Web() = default;
    // Throws InvalidWeb (N < 3, constant integral, repeated foliation).
    Web(std::vector<RatFunc> integrals, std::string name = {});

    std::size_t size() const { return foliations_.size(); }
    const RatFunc &integral(std::size_t i) const { return foliations_[i].integral; }
    const std::vector<Foliation> &foliations() const { return foliations_; }
    std::vector<RatFunc> integrals() const;
    const std::string &name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

private:
    std::vector<Foliation> foliations_;
    std::string name_;
};

struct SingularLocus {
    // Pairwise coprime squarefree primitive components, canonical order.
    std::vector<BivarPoly> curve_components;
    // Subset coming from tangencies and critical leaves; unchanged under
    // Moebius reparametrization of the integrals.
    std::vector<BivarPoly> tangency_components;
    // Subset coming only from poles of the integrals.
    std::vector<BivarPoly> pole_components;
    // (num_i, den_i) for integrals whose numerator and denominator are both nonconstant.
    std::vector<std::pair<BivarPoly, BivarPoly>> indeterminacy;

    BivarPoly product() const;
    bool contains_point(const Rational &x, const Rational &y) const;
};

struct BasePoint {
    Rational x, y;
    std::vector<Rational> images;
    // true where the integral was replaced by its reciprocal to keep the image finite.
    std::vector<bool> inverted;
};

struct SigmaFactorReport {
    struct Entry {
        BivarPoly candidate;
        bool divides = false;
    };
    std::vector<Entry> entries;
    bool all_divide = false;
    bool product_equal = false;
    // Components of the computed locus not accounted for by any candidate.
    std::vector<BivarPoly> unmatched_components;
};

struct ConditionCReport {
    std::vector<std::vector<std::size_t>> partners;
    bool holds = false;
};

bool same_foliation(const RatFunc &f, const RatFunc &g);
// Integral of the same foliation (possibly reciprocal) with finite value at the point.
RatFunc finite_integral(const RatFunc &u, const Rational &x, const Rational &y, bool *inverted = nullptr);

SingularLocus singular_locus(const Web &w);
SigmaFactorReport verify_sigma_factors(const Web &w, const std::vector<BivarPoly> &candidates);
// Tries `preferred` first; otherwise a seeded search over small-denominator points.
// Throws SearchExhausted after kGenericPointAttempts candidates.
inline constexpr int kGenericPointAttempts = 20000;
BasePoint pick_generic_point(const Web &w, std::uint64_t seed,
                             const std::optional<std::pair<Rational, Rational>> &preferred = std::nullopt);
BasePoint pick_generic_point(const Web &w, const SingularLocus &sigma, std::uint64_t seed,
                             const std::optional<std::pair<Rational, Rational>> &preferred = std::nullopt);
bool is_generic_point(const Web &w, const SingularLocus &sigma, const Rational &x, const Rational &y);
Web pullback_web(const Web &w, const std::pair<RatFunc, RatFunc> &map);
ConditionCReport condition_C_local(const Web &w);
// 0-based indices; throws TooFewFoliations for fewer than 3.
Web subweb(const Web &w, const std::vector<std::size_t> &indices);
// Web with the given 0-based indices removed.
Web subweb_complement(const Web &w, const std::vector<std::size_t> &removed);
// Hat name such as "^6^9" for 1-based removed indices.
std::string hat_name(const std::vector<std::size_t> &removed_zero_based);

// For each foliation of `a`, the index of the matching foliation of `b`
// (nullopt if none).
std::vector<std::optional<std::size_t>> match_foliations(const Web &a, const Web &b);
bool same_web(const Web &a, const Web &b);

} // namespace abelweb
