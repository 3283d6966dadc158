#pragma once

// Dense univariate polynomials over Z and Z[x][y] helpers used by the gcd.

#include <gmpxx.h>

#include <vector>

namespace abelweb::detail {

using ZPoly = std::vector<mpz_class>; // index = degree, trimmed
using ZXY = std::vector<ZPoly>;       // index = y-degree, coefficients in Z[x]

void trim(ZPoly &p);
void trim(ZXY &p);
inline int deg(const ZPoly &p) { return static_cast<int>(p.size()) - 1; }
inline int deg(const ZXY &p) { return static_cast<int>(p.size()) - 1; }

mpz_class content(const ZPoly &p);
ZPoly mul(const ZPoly &a, const ZPoly &b);
ZPoly sub(const ZPoly &a, const ZPoly &b);
ZPoly scale(const ZPoly &a, const mpz_class &c);
ZPoly divexact_scalar(const ZPoly &a, const mpz_class &c);
// Exact division in Z[x]; the caller guarantees divisibility.
ZPoly divexact(const ZPoly &a, const ZPoly &b);
ZPoly gcd(const ZPoly &a, const ZPoly &b);

ZPoly content_y(const ZXY &p);
ZXY gcd(const ZXY &a, const ZXY &b);

} // namespace abelweb::detail
