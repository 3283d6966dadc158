#pragma once

#include "abelweb/special.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace abelweb {

enum class Domain {
    Ordered,    // 0 < x < y < 1
    UnitSquare, // 0 < x < 1, 0 < y < 1
    Hyperbolic, // xy < 1, |x|, |y| < 4
    Complex,    // x, y complex with small rational parts
};

Domain parse_domain(const std::string &text);
std::string domain_to_string(Domain d);

struct AfeInstance {
    std::string name;
    std::vector<RatFunc> inner;
    std::vector<Component> components;
    std::vector<long> multipliers;
    std::string rhs = "0";
    Domain domain = Domain::Ordered;

    std::size_t size() const { return inner.size(); }
    // Throws InvalidParameter on inconsistent lengths.
    void validate() const;
};

struct SamplePoint {
    Rational x_re, x_im, y_re, y_im;
    std::string to_string() const;
};

std::vector<SamplePoint> sample_domain(Domain d, int count, std::uint64_t seed);

// Sum of multiplier_i * component_i(U_i) - rhs at one point.
Complex afe_value(const AfeInstance &a, const SamplePoint &s, mpfr_prec_t prec);

struct SampleResidual {
    SamplePoint point;
    Real residual;   // |value at 2P|
    Real precision_error; // |value at P - value at 2P|
};

struct AfeReport {
    std::string name;
    int digits = 0;
    mpfr_prec_t prec = 0;
    double tolerance = 0;
    std::vector<SampleResidual> samples;
    Real max_residual;
    bool pass = false;
};

// Residuals are computed at P = digits_to_bits(digits) and at 2P; the 2P value
// is reported and the difference is its error estimate.
AfeReport verify_afe_numeric(const AfeInstance &a, int samples, int digits, double tolerance, std::uint64_t seed);

struct ConstantCandidate {
    std::string name;
    Constant value;
};

struct ConstancyReport {
    std::string name;
    std::vector<Complex> values;
    Complex mean;
    Real spread; // max distance of a sample value from the mean
    std::string best;
    Real best_residual;
    int matched_digits = 0;
};

// Throws NotConstant when the spread exceeds 10^-digits/2 relative to the mean.
ConstancyReport constancy_check(const AfeInstance &a, int samples, int digits,
                                const std::vector<ConstantCandidate> &candidates, std::uint64_t seed);

struct FiveTermReport {
    std::vector<Real> residuals;
    Real max_residual;
    bool pass = false;
};

// Sum_{i} (-1)^i D(cr(z_0..^z_i..z_4)) at random complex 5-tuples.
FiveTermReport five_term_check(int samples, int digits, double tolerance, std::uint64_t seed);

// Text format, one item per line, '#' comments:
//   name: sk
//   domain: 0<x<y<1
//   rhs: R3
//   term: 2 ; Li3 ; x
AfeInstance parse_afe(const std::string &text);
AfeInstance load_afe(const std::string &path);

} // namespace abelweb
