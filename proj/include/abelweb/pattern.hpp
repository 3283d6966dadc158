#pragma once

#include "abelweb/hyperlog.hpp"
#include "abelweb/numlinalg.hpp"
#include "abelweb/web.hpp"

#include <string>
#include <vector>

namespace abelweb {

// Indices in one class share one unknown function; F_i = multiplier_i * F_class(i).
struct Pattern {
    std::vector<std::vector<std::size_t>> classes; // 0-based
    std::vector<long> multipliers;                 // one per foliation

    void validate(std::size_t n) const;
    std::string to_string() const; // 1-based, e.g. "{1,2,3,4}{5} : 1,-1,-1,-1,1"
};

// "{1,2,3,4}{5} : 1,-1,-1,-1,1"; a missing class list means one class of everything.
Pattern parse_pattern(const std::string &text, std::size_t n);

// The shared unknown is searched in a finite space of global functions: the
// hyperlogarithms over {0,1} of weight <= max_weight, optionally z, 1/z and
// artanh(sqrt z). Coefficients are independent on each of the real intervals
// (-inf,0), (0,1), (1,inf) met by the images of the class at the base point.
struct AnsatzOptions {
    int max_weight = 3;
    bool rational_atoms = true;
    bool artanh_atom = true;
    int digits = 60;
};

struct PatternBlock {
    std::size_t cls = 0;
    int branch = 0; // -1: (-inf,0), 0: (0,1), 1: (1,inf)
};

struct ConstrainedRankResult {
    std::size_t dim = 0;
    std::vector<std::string> ansatz;
    std::vector<PatternBlock> blocks;
    // Kernel vectors: block b, function f at b * ansatz.size() + f; the last entry
    // is the constant of the relation.
    std::vector<CVector> basis;
    Real gap;
    int order = 0;
    bool stable = false; // same dimension at order + 2

    std::size_t columns() const { return blocks.size() * ansatz.size() + 1; }
    std::string describe(std::size_t k, int digits = 12) const;
};

std::string branch_name(int branch);

ConstrainedRankResult constrained_rank(const Web &w, const Pattern &p, const BasePoint &base,
                                       const AnsatzOptions &opt = {});

// Taylor coefficients at `center` of the function held by one block of a kernel vector.
std::vector<Complex> block_taylor(const ConstrainedRankResult &r, const CVector &v, std::size_t block,
                                  const Rational &center, int order, const AnsatzOptions &opt = {});

} // namespace abelweb
