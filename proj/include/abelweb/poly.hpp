#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace abelweb {

using Integer = mpz_class;
using Rational = mpq_class;

struct Exp {
    int x = 0;
    int y = 0;
    int total() const { return x + y; }
    bool operator==(const Exp &) const = default;
};

// Graded-lex, descending: higher total degree first, then higher x exponent.
// begin() of a term map is therefore the leading term.
struct GrLexGreater {
    bool operator()(const Exp &a, const Exp &b) const
    {
        int ta = a.x + a.y, tb = b.x + b.y;
        if (ta != tb)
            return ta > tb;
        return a.x > b.x;
    }
};

// Sparse bivariate polynomial over Q. Zero coefficients are never stored.
class BivarPoly {
public:
    using TermMap = std::map<Exp, Rational, GrLexGreater>;

    BivarPoly() = default;
    BivarPoly(const Rational &c);
    BivarPoly(long c) : BivarPoly(Rational(c)) {}
    static BivarPoly monomial(const Rational &c, int ex, int ey);
    static BivarPoly var_x() { return monomial(1, 1, 0); }
    static BivarPoly var_y() { return monomial(1, 0, 1); }

    const TermMap &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t size() const { return terms_.size(); }
    Rational coeff(int ex, int ey) const;
    void add_term(const Rational &c, int ex, int ey);

    // Requires nonzero polynomial.
    Exp leading_exp() const { return terms_.begin()->first; }
    const Rational &leading_coeff() const { return terms_.begin()->second; }

    int total_degree() const;
    int degree_x() const;
    int degree_y() const;

    BivarPoly operator-() const;
    BivarPoly &operator+=(const BivarPoly &o);
    BivarPoly &operator-=(const BivarPoly &o);
    BivarPoly &operator*=(const Rational &c);
    friend BivarPoly operator+(BivarPoly a, const BivarPoly &b) { return a += b; }
    friend BivarPoly operator-(BivarPoly a, const BivarPoly &b) { return a -= b; }
    friend BivarPoly operator*(const BivarPoly &a, const BivarPoly &b);
    friend BivarPoly operator*(BivarPoly a, const Rational &c) { return a *= c; }
    friend BivarPoly operator*(const Rational &c, BivarPoly a) { return a *= c; }
    bool operator==(const BivarPoly &o) const;
    bool operator!=(const BivarPoly &o) const { return !(*this == o); }

    BivarPoly pow(unsigned n) const;
    BivarPoly derivative(int var) const; // 0 = x, 1 = y
    Rational evaluate(const Rational &x, const Rational &y) const;
    // p(x0 + X, y0 + Y) expanded in X, Y.
    BivarPoly shifted(const Rational &x0, const Rational &y0) const;
    BivarPoly swapped() const;

    // Rational content c with p = c * (primitive integer polynomial, positive leading coefficient).
    Rational content() const;
    BivarPoly primitive() const;
    // Scale so that the leading coefficient is 1.
    BivarPoly monic() const;

    // Integer coefficients (requires primitive integral input).
    std::vector<std::vector<Integer>> to_dense_zxy() const; // [deg_y][deg_x]
    static BivarPoly from_dense_zxy(const std::vector<std::vector<Integer>> &d);

    std::string to_string(const std::string &vx = "x", const std::string &vy = "y") const;
    std::size_t hash() const;

private:
    TermMap terms_;
};

// Exact quotient if b divides a; returns false otherwise.
bool try_divide(const BivarPoly &a, const BivarPoly &b, BivarPoly &q);
BivarPoly divide_exact(const BivarPoly &a, const BivarPoly &b);
bool divides(const BivarPoly &d, const BivarPoly &p);

// Primitive integer gcd with positive leading coefficient; gcd(0, 0) = 0.
BivarPoly gcd(const BivarPoly &a, const BivarPoly &b);
BivarPoly squarefree_part(const BivarPoly &p);

// Split a list of polynomials into pairwise coprime squarefree primitive factors
// whose product has the same zero set as the product of the inputs.
std::vector<BivarPoly> coprime_basis(const std::vector<BivarPoly> &polys);

// Deterministic ordering used for canonical lists of factors.
bool canonical_less(const BivarPoly &a, const BivarPoly &b);

std::string rational_to_string(const Rational &q);

} // namespace abelweb
