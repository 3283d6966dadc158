#include "abelweb/numlinalg.hpp"

#include <algorithm>
#include <numeric>

namespace abelweb {

NumericKernel numeric_kernel(CMatrix m, std::size_t ncols, const Real &threshold)
{
    mpfr_prec_t prec = threshold.prec();
    NumericKernel out;
    out.gap = Real(prec);
    std::size_t nrows = m.size();
    Real scale(prec);
    for (const auto &row : m)
        for (std::size_t j = 0; j < ncols; ++j)
            scale = max(scale, abs(row[j]));
    std::vector<std::size_t> perm(ncols);
    std::iota(perm.begin(), perm.end(), 0);
    std::size_t r = 0;
    Real last(prec);
    bool rejected = false;
    while (r < nrows && r < ncols && !scale.is_zero()) {
        std::size_t bi = r, bj = r;
        Real best(prec);
        for (std::size_t i = r; i < nrows; ++i)
            for (std::size_t j = r; j < ncols; ++j) {
                Real a = abs(m[i][perm[j]]);
                if (best < a) {
                    best = a;
                    bi = i;
                    bj = j;
                }
            }
        Real rel = best / scale;
        if (rel < threshold || rel.is_zero()) {
            out.gap = rel.is_zero() ? Real(prec) : last / rel;
            rejected = true;
            break;
        }
        out.pivots.push_back(rel);
        last = rel;
        std::swap(m[r], m[bi]);
        std::swap(perm[r], perm[bj]);
        Complex inv = Complex(Real(1L, prec), Real(prec)) / m[r][perm[r]];
        for (std::size_t j = r; j < ncols; ++j)
            m[r][perm[j]] *= inv;
        for (std::size_t i = 0; i < nrows; ++i) {
            if (i == r || m[i][perm[r]].is_zero())
                continue;
            Complex f = m[i][perm[r]];
            for (std::size_t j = r; j < ncols; ++j)
                m[i][perm[j]] -= f * m[r][perm[j]];
        }
        ++r;
    }
    if (!rejected)
        out.gap = Real::pow2(1L << 20, prec);
    out.rank = r;
    for (std::size_t f = r; f < ncols; ++f) {
        CVector v(ncols, Complex(prec));
        v[perm[f]] = Complex(Real(1L, prec), Real(prec));
        for (std::size_t k = 0; k < r; ++k)
            v[perm[k]] = -m[k][perm[f]];
        out.basis.push_back(std::move(v));
    }
    return out;
}

} // namespace abelweb
