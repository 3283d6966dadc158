#include "abelweb/linalg.hpp"

namespace abelweb {

std::vector<std::size_t> rref(QMatrix &m, std::size_t ncols)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
        // Pivot: first nonzero in column, preferring the smallest entry size
        // to limit coefficient growth; deterministic tie-break by row index.
        std::size_t best = m.size();
        std::size_t best_size = 0;
        for (std::size_t i = r; i < m.size(); ++i) {
            if (m[i][c] == 0)
                continue;
            std::size_t sz = mpz_sizeinbase(m[i][c].get_num_mpz_t(), 2) + mpz_sizeinbase(m[i][c].get_den_mpz_t(), 2);
            if (best == m.size() || sz < best_size) {
                best = i;
                best_size = sz;
            }
        }
        if (best == m.size())
            continue;
        std::swap(m[r], m[best]);
        Rational inv = 1 / m[r][c];
        for (std::size_t j = c; j < ncols; ++j)
            if (m[r][j] != 0)
                m[r][j] *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0)
                continue;
            Rational f = m[i][c];
            for (std::size_t j = c; j < ncols; ++j)
                if (m[r][j] != 0)
                    m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    return pivots;
}

std::size_t rank(QMatrix m, std::size_t ncols)
{
    return rref(m, ncols).size();
}

std::vector<QVector> nullspace(QMatrix m, std::size_t ncols)
{
    auto piv = rref(m, ncols);
    std::vector<bool> is_pivot(ncols, false);
    for (auto p : piv)
        is_pivot[p] = true;
    std::vector<QVector> basis;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f])
            continue;
        QVector v(ncols);
        v[f] = 1;
        for (std::size_t k = 0; k < piv.size(); ++k)
            v[piv[k]] = -m[k][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<QVector> row_basis(std::vector<QVector> rows, std::size_t ncols)
{
    rref(rows, ncols);
    return rows;
}

} // namespace abelweb
