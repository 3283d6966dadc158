#pragma once

#include "abelweb/hyperlog.hpp"
#include "abelweb/numlinalg.hpp"

#include <map>
#include <string>
#include <vector>

namespace abelweb::oracle {

using HE = HyperlogExpr;

inline HE W(const char *s, const Constant &c = Constant(1)) { return HE::word(parse_word(s), c); }

// Component of a printed germ: word part plus multiples of z, 1/z and artanh(sqrt z).
struct Germ {
    HE e;
    Constant id, inv, a;
};

inline Germ C(const HE &e) { return {e, 0, 0, 0}; }

// Independent oracle for the single-unknown SK pattern: the number of
// combinations of the printed 9-tuples F1..F28 whose components have the form
// multiplier_i * F(U_i) for one F, read off componentwise in the atom basis
// (so no jets and no ansatz search are involved). The printed germs are
// taken as linearly independent.
inline std::size_t sk_pattern_oracle()
{
    const mpfr_prec_t p = 200;
    Constant pi = Constant::pi(), I = Constant::i();
    HE L0 = W("x0"), L1 = W("x1"), L00 = W("x0x0"), L01 = W("x0x1");
    HE L10t = W("x1x0") + HE(Rational(1, 6) * pi * pi);
    HE d = L01 - L10t - HE(Rational(1, 6) * pi * pi);
    HE g = W("x0x0x1", 2) - W("x0x1x0") - W("x1x0x0") + HE(Rational(-2, 3) * Constant::zeta3());
    HE gh = g + (I * pi) * L01 - (Constant(4) * I * pi) * L10t - (pi * pi) * L1 + HE(Constant(2) * I * pi * pi * pi);
    HE h = W("x0x0x1") - W("x1x0x0");
    HE hh = h - (I * pi) * L01 + (Constant(2) * I * pi) * L10t + (Rational(1, 2) * pi * pi) * L1 -
            HE(Rational(2, 6) * I * pi * pi * pi);
    Germ Z = C(HE()), Id{HE(), 1, 0, 0}, Inv{HE(), 0, 1, 0}, A{HE(), 0, 0, 1}, mA{HE(), 0, 0, -1};
    Germ Idm1{HE(-1), 1, 0, 0}, Invm1{HE(-1), 0, 1, 0};
    HE ip = HE(I * pi);
    const std::vector<std::vector<Germ>> F = {
        {C(L0), C(-L0), C(-L0), Z, Z, Z, Z, Z, Z},
        {C(L0 + L1), Z, C(-(L0 + L1)), C(L1), Z, Z, Z, Z, Z},
        {C(L1), C(L1), Z, C(-L0), Z, Z, Z, Z, Z},
        {Z, Z, C(L0), C(L0), C(-L0), Z, Z, Z, Z},
        {C(L1), Z, C(-L1), Z, C(L1), Z, Z, Z, Z},
        {C(L0), C(L0), Z, Z, Z, C(-L0), Z, Z, Z},
        {C(L0), Z, Z, C(L0), Z, Z, C(-L0 + ip), Z, Z},
        {Inv, Z, Z, Z, Inv, Z, Invm1, Z, Z},
        {C(L1), Z, Z, Z, Z, C(-L1), C(L1), Z, Z},
        {Z, Id, Z, Id, Z, Z, Idm1, Z, Z},
        {Z, Z, Z, Z, Z, C(L0), C(-L0), C(L0), Z},
        {Z, C(L0), Z, Z, Z, Z, C(L1), C(-L1), Z},
        {Z, Z, Z, Z, Z, Z, C(L0), C(L0), C(-L0 - HE(Constant(2) * I * pi))},
        {Z, Z, Z, Z, C(L1), Z, C(L1), Z, C(-L1)},
        {Z, Inv, Z, Z, Id, Z, Z, Idm1, Z},
        {Id, Z, Z, Inv, Z, Z, Z, Invm1, Z},
        {Z, Z, A, Z, Z, mA, Z, Z, mA},
        {C(Constant(2) * L00), C(Constant(2) * L00), C(-L00), Z, Z, C(-L00), Z, Z, Z},
        {Z, Z, Z, Z, Z, C(L00), C(Constant(-2) * L00), C(Constant(-2) * L00),
         C(L00 + (Constant(4) * I * pi) * L0 - HE(Constant(4) * pi * pi))},
        {Z, Z, C(L00), C(Constant(-2) * L00), C(Constant(-2) * L00), Z, Z, Z, C(L00)},
        {C(d), C(-d), C(-d), C(-d), C(d), Z, Z, Z, Z},
        {C(d), C(d - (Rational(1, 2) * I * pi) * L0), Z, Z, Z, C(-d), C(d), C(-d), Z},
        {C(HE(pi * pi)), Z, Z, C(d - (Rational(1, 2) * I * pi) * L0), C(d), Z, C(d),
         C(d + (Rational(1, 2) * I * pi) * L0 + (I * pi) * L1), C(-d)},
        {C(L01), C(L01), Z, C(L00), Z, C(-L01), C(L01), C(-L01 - L00 + (I * pi) * L0), C(HE(Rational(1, 3) * pi * pi))},
        {Z, C(L00), Z, C(L01), C(L01), Z, C(L01), C(L01), C(-L01)},
        {C(Constant(2) * L01), Z, C(-L01), Z, C(Constant(2) * L01), C(-L01), C(Constant(2) * L01), Z, C(-L01)},
        {C(Constant(2) * g), C(Constant(2) * g), C(-g), C(Constant(2) * g), C(Constant(2) * g), C(-g),
         C(Constant(2) * gh), C(Constant(2) * gh), C(-g)},
        {C(Constant(2) * h), C(Constant(2) * h - (Rational(2, 3) * pi * pi) * L0), C(-h), C(Constant(2) * h),
         C(Constant(2) * h), C(-h), C(Constant(2) * hh), C(Constant(2) * hh), C(-h)},
    };
    auto atoms = [&](const Germ &c) {
        std::map<std::string, Complex> r;
        for (const auto &[w, k] : c.e.terms())
            if (!w.empty())
                r[word_to_string(w)] = k.numeric(p);
        if (!c.id.is_zero())
            r["Id"] = c.id.numeric(p);
        if (!c.inv.is_zero())
            r["Inv"] = c.inv.numeric(p);
        if (!c.a.is_zero())
            r["a"] = c.a.numeric(p);
        return r;
    };
    const long m[9] = {2, 2, -1, 2, 2, -1, 2, 2, -1};
    const std::vector<std::string> keys = {"x0", "x1", "x0x0", "x0x1", "x1x0", "x1x1", "x0x0x1", "x0x1x0", "x1x0x0",
                                           "Id", "Inv", "a"};
    // At (1/3, 1/2) the images of U7, U8 are negative and the others lie in (0, 1):
    // the shared function may differ between the two real branches.
    const std::vector<std::vector<int>> branches = {{0, 1, 2, 3, 4, 5, 8}, {6, 7}};
    CMatrix M;
    for (const auto &br : branches)
        for (std::size_t t = 1; t < br.size(); ++t)
            for (const auto &k : keys) {
                CVector row(F.size(), Complex(p));
                for (std::size_t j = 0; j < F.size(); ++j) {
                    auto a = atoms(F[j][static_cast<std::size_t>(br[t])]), b = atoms(F[j][static_cast<std::size_t>(br[0])]);
                    Complex va = a.count(k) ? a[k] : Complex(p), vb = b.count(k) ? b[k] : Complex(p);
                    row[j] = va * Real(Rational(1, m[br[t]]), p) - vb * Real(Rational(1, m[br[0]]), p);
                }
                M.push_back(row);
            }
    return numeric_kernel(M, F.size(), Real::pow2(-100, p)).basis.size();
}

} // namespace abelweb::oracle
