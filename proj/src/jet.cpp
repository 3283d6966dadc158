#include "abelweb/jet.hpp"

#include "abelweb/errors.hpp"

#include <algorithm>

namespace abelweb {

JetSystem::JetSystem(const Web &w, const BasePoint &base)
    : n_(w.size()), bx_(base.x), by_(base.y), images_(base.images), pow_(w.size())
{
    for (std::size_t i = 0; i < n_; ++i) {
        bool inv = i < base.inverted.size() && base.inverted[i];
        integrals_.push_back(inv ? w.integral(i).inverse() : w.integral(i));
    }
}

void JetSystem::ensure_series(int order)
{
    if (order <= series_order_)
        return;
    int target = std::max(order, series_order_ < 0 ? order : 2 * series_order_);
    t_.clear();
    for (std::size_t i = 0; i < n_; ++i) {
        SeriesJet s = taylor(integrals_[i], bx_, by_, target);
        s.at(0, 0) = 0;
        t_.push_back(std::move(s));
    }
    series_order_ = target;
}

const Rational &JetSystem::power_coeff(std::size_t i, int k, int a, int b) const
{
    static const Rational zero = 0;
    int d = a + b;
    if (k < 1 || k > order_ || d < k || d > order_)
        return zero;
    return pow_[i][k][d][b];
}

void JetSystem::add_level(int d)
{
    ensure_series(d);
    for (std::size_t i = 0; i < n_; ++i) {
        auto &pi = pow_[i];
        if (static_cast<int>(pi.size()) <= d)
            pi.resize(d + 1);
        for (int k = 1; k <= d; ++k)
            if (static_cast<int>(pi[k].size()) <= d)
                pi[k].resize(d + 1);
        std::vector<Rational> &t1 = pi[1][d];
        t1.assign(d + 1, 0);
        for (int b = 0; b <= d; ++b)
            t1[b] = t_[i].at(d - b, b);
        for (int k = 2; k <= d; ++k) {
            std::vector<Rational> acc(d + 1);
            for (int e = 1; e <= d - k + 1; ++e) {
                const auto &lo = pi[k - 1][d - e];
                for (int b1 = 0; b1 <= e; ++b1) {
                    const Rational &u = t_[i].at(e - b1, b1);
                    if (u == 0)
                        continue;
                    for (int b2 = 0; b2 <= d - e; ++b2)
                        if (lo[b2] != 0)
                            acc[b1 + b2] += u * lo[b2];
                }
            }
            pi[k][d] = std::move(acc);
        }
    }

    std::size_t m = kernel_.size();
    std::size_t ncols = m + n_;
    QMatrix mat(d + 1, QVector(ncols));
    for (int b = 0; b <= d; ++b) {
        for (std::size_t j = 0; j < m; ++j) {
            Rational s = 0;
            const QVector &v = kernel_[j];
            for (int k = 1; k < d; ++k)
                for (std::size_t i = 0; i < n_; ++i) {
                    const Rational &c = v[static_cast<std::size_t>(k - 1) * n_ + i];
                    if (c != 0)
                        s += c * pow_[i][k][d][b];
                }
            mat[b][j] = s;
        }
        for (std::size_t i = 0; i < n_; ++i)
            mat[b][m + i] = pow_[i][d][d][b];
    }
    auto null = nullspace(mat, ncols);
    std::size_t len = static_cast<std::size_t>(d) * n_;
    std::vector<QVector> next;
    for (const auto &z : null) {
        QVector v(len);
        for (std::size_t j = 0; j < m; ++j) {
            if (z[j] == 0)
                continue;
            for (std::size_t c = 0; c < kernel_[j].size(); ++c)
                if (kernel_[j][c] != 0)
                    v[c] += z[j] * kernel_[j][c];
        }
        for (std::size_t i = 0; i < n_; ++i)
            v[static_cast<std::size_t>(d - 1) * n_ + i] = z[m + i];
        next.push_back(std::move(v));
    }
    kernel_ = row_basis(std::move(next), len);
    order_ = d;
}

void JetSystem::extend_to(int order)
{
    while (order_ < order)
        add_level(order_ + 1);
}

QMatrix JetSystem::matrix() const
{
    std::size_t ncols = static_cast<std::size_t>(order_) * n_;
    QMatrix m;
    for (int d = 1; d <= order_; ++d)
        for (int b = 0; b <= d; ++b) {
            QVector row(ncols);
            for (int k = 1; k <= d; ++k)
                for (std::size_t i = 0; i < n_; ++i)
                    row[static_cast<std::size_t>(k - 1) * n_ + i] = pow_[i][k][d][b];
            m.push_back(std::move(row));
        }
    return m;
}

std::vector<Rational> JetSystem::apply(const QVector &c) const
{
    std::vector<Rational> out;
    for (int d = 1; d <= order_; ++d)
        for (int b = 0; b <= d; ++b) {
            Rational s = 0;
            for (int k = 1; k <= d; ++k)
                for (std::size_t i = 0; i < n_; ++i) {
                    std::size_t col = static_cast<std::size_t>(k - 1) * n_ + i;
                    if (col < c.size() && c[col] != 0)
                        s += c[col] * pow_[i][k][d][b];
                }
            out.push_back(s);
        }
    return out;
}

std::size_t bol_bound(std::size_t n)
{
    return (n - 1) * (n - 2) / 2;
}

RankResult abelian_rank(const Web &w, const BasePoint &base, const TruncationPolicy &policy)
{
    std::size_t n = w.size();
    int k0 = policy.k0 > 0 ? policy.k0 : static_cast<int>(n);
    int kmax = policy.k_max > 0 ? policy.k_max : static_cast<int>(n * (n - 1) / 2 + 3);
    int s = std::max(policy.stabilize, 1);
    JetSystem js(w, base);
    RankResult r;
    int equal_run = 0;
    std::size_t prev = 0;
    for (int k = 1; k <= kmax; ++k) {
        js.extend_to(k);
        std::size_t dim = js.kernel_dim();
        r.dims.emplace_back(k, dim);
        if (k < k0)
            continue;
        if (k > k0 && dim > prev)
            r.monotone = false;
        equal_run = (k > k0 && dim == prev) ? equal_run + 1 : 1;
        prev = dim;
        if (equal_run >= s) {
            r.rank = dim;
            r.basis = js.basis();
            r.stabilized_order = k;
            if (dim > bol_bound(n))
                throw Error(ErrorKind::RankBoundExceeded,
                            "kernel dimension " + std::to_string(dim) + " exceeds the bound " + std::to_string(bol_bound(n)));
            return r;
        }
    }
    std::string seq;
    for (const auto &[k, d] : r.dims)
        seq += (seq.empty() ? "" : ",") + std::to_string(d);
    throw Error(ErrorKind::NotStabilized, "kernel dimensions did not stabilize: " + seq);
}

namespace {

BasePoint restrict_base(const BasePoint &b, const std::vector<std::size_t> &kept)
{
    BasePoint r{b.x, b.y, {}, {}};
    for (auto i : kept) {
        r.images.push_back(b.images[i]);
        r.inverted.push_back(b.inverted[i]);
    }
    return r;
}

void combinations(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t> &cur,
                  std::vector<std::vector<std::size_t>> &out)
{
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        combinations(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k)
{
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    combinations(n, k, 0, cur, out);
    return out;
}

BasePoint default_base(const Web &w, std::uint64_t seed)
{
    return pick_generic_point(w, seed, std::make_pair(Rational(1, 3), Rational(1, 2)));
}

} // namespace

std::vector<std::size_t> filtration_dims(const Web &w, const BasePoint &base, const TruncationPolicy &policy)
{
    RankResult full = abelian_rank(w, base, policy);
    int k = full.stabilized_order;
    std::size_t n = w.size();
    std::size_t len = static_cast<std::size_t>(k) * n;
    std::vector<std::size_t> dims;
    std::vector<QVector> span;
    for (std::size_t p = 3; p <= n; ++p) {
        for (const auto &sub : subsets(n, p)) {
            Web sw = subweb(w, sub);
            JetSystem js(sw, restrict_base(base, sub));
            js.extend_to(k);
            for (const auto &v : js.kernel()) {
                QVector e(len);
                for (int kk = 1; kk <= k; ++kk)
                    for (std::size_t j = 0; j < p; ++j)
                        e[static_cast<std::size_t>(kk - 1) * n + sub[j]] = v[static_cast<std::size_t>(kk - 1) * p + j];
                span.push_back(std::move(e));
            }
        }
        span = row_basis(std::move(span), len);
        dims.push_back(span.size());
    }
    return dims;
}

HexReport hexagonality(const Web &w, std::uint64_t seed)
{
    BasePoint base = default_base(w, seed);
    HexReport r;
    r.hexagonal = true;
    for (const auto &t : subsets(w.size(), 3)) {
        Web sw = subweb(w, t);
        std::size_t rk = abelian_rank(sw, restrict_base(base, t)).rank;
        r.triples.emplace_back(t, rk);
        if (rk != 1)
            r.hexagonal = false;
    }
    return r;
}

SubwebRank subweb_rank(const Web &w, const std::vector<std::size_t> &removed, std::uint64_t seed)
{
    BasePoint base = default_base(w, seed);
    SubwebRank s;
    s.removed = removed;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (std::find(removed.begin(), removed.end(), i) == removed.end())
            s.kept.push_back(i);
    s.name = hat_name(removed);
    Web sw = subweb(w, s.kept);
    s.rank = abelian_rank(sw, restrict_base(base, s.kept)).rank;
    s.maximal = s.rank == bol_bound(s.kept.size());
    if (s.kept.size() == 3)
        s.hexagonal = s.rank == 1;
    return s;
}

std::vector<SubwebRank> rank_report(const Web &w, const std::vector<std::size_t> &sizes, std::uint64_t seed)
{
    BasePoint base = default_base(w, seed);
    std::vector<SubwebRank> out;
    for (auto sz : sizes) {
        if (sz < 3 || sz > w.size())
            throw Error(ErrorKind::InvalidParameter, "subweb size out of range");
        for (const auto &kept : subsets(w.size(), sz)) {
            SubwebRank s;
            s.kept = kept;
            for (std::size_t i = 0; i < w.size(); ++i)
                if (std::find(kept.begin(), kept.end(), i) == kept.end())
                    s.removed.push_back(i);
            s.name = hat_name(s.removed);
            s.rank = abelian_rank(subweb(w, kept), restrict_base(base, kept)).rank;
            s.maximal = s.rank == bol_bound(sz);
            if (sz == 3)
                s.hexagonal = s.rank == 1;
            out.push_back(std::move(s));
        }
    }
    return out;
}

} // namespace abelweb
