#pragma once

#include "abelweb/linalg.hpp"
#include "abelweb/series.hpp"
#include "abelweb/web.hpp"

#include <optional>
#include <string>
#include <vector>

namespace abelweb {

struct TruncationPolicy {
    int k0 = 0;        // 0 means N
    int stabilize = 3; // equal consecutive kernel dimensions required
    int k_max = 0;     // 0 means N(N-1)/2 + 3
};

// Unknown c_{i,k} (coefficient of (t - w_i)^k in F_i, k >= 1) lives at
// column (k - 1) * N + i, so raising the order only appends columns.
struct KernelBasis {
    int order = 0;
    std::size_t n = 0;
    std::vector<QVector> vectors;

    std::size_t column(std::size_t i, int k) const { return static_cast<std::size_t>(k - 1) * n + i; }
};

// Incremental exact jet system at a base point. Level d adds the unknowns
// c_{i,d} and the equations of total degree d.
class JetSystem {
public:
    JetSystem(const Web &w, const BasePoint &base);

    void extend_to(int order);
    int order() const { return order_; }
    std::size_t size() const { return n_; }
    std::size_t kernel_dim() const { return kernel_.size(); }
    const std::vector<QVector> &kernel() const { return kernel_; }
    KernelBasis basis() const { return KernelBasis{order_, n_, kernel_}; }

    // Coefficient of X^a Y^b in (U_i - w_i)^k, with (X, Y) = (x - wx, y - wy).
    const Rational &power_coeff(std::size_t i, int k, int a, int b) const;
    // Full equation matrix at the current order: rows (a, b) with 1 <= a + b <= order.
    QMatrix matrix() const;
    // Sum_i F_i(U_i) expanded to the current order for a coefficient vector.
    std::vector<Rational> apply(const QVector &c) const;

private:
    void ensure_series(int order);
    void add_level(int d);

    std::size_t n_;
    std::vector<RatFunc> integrals_;
    Rational bx_, by_;
    std::vector<Rational> images_;
    int order_ = 0;
    int series_order_ = -1;
    std::vector<SeriesJet> t_;                          // U_i - w_i
    // pow_[i][k][d] = homogeneous part of degree d of T_i^k, as coefficients indexed by b.
    std::vector<std::vector<std::vector<std::vector<Rational>>>> pow_;
    std::vector<QVector> kernel_;
};

struct RankResult {
    std::size_t rank = 0;
    KernelBasis basis;
    std::vector<std::pair<int, std::size_t>> dims; // (order, kernel dimension)
    bool monotone = true;
    int stabilized_order = 0;
};

RankResult abelian_rank(const Web &w, const BasePoint &base, const TruncationPolicy &policy = {});
std::size_t bol_bound(std::size_t n);

// dim F^p for p = 3..N (index 0 is p = 3).
std::vector<std::size_t> filtration_dims(const Web &w, const BasePoint &base, const TruncationPolicy &policy = {});

struct HexReport {
    bool hexagonal = false;
    std::vector<std::pair<std::vector<std::size_t>, std::size_t>> triples; // (0-based indices, rank)
};
HexReport hexagonality(const Web &w, std::uint64_t seed = 0);

struct SubwebRank {
    std::vector<std::size_t> removed; // 0-based
    std::vector<std::size_t> kept;
    std::string name;
    std::size_t rank = 0;
    bool maximal = false;
    std::optional<bool> hexagonal; // only for 3-webs
};
std::vector<SubwebRank> rank_report(const Web &w, const std::vector<std::size_t> &sizes, std::uint64_t seed = 0);
SubwebRank subweb_rank(const Web &w, const std::vector<std::size_t> &removed, std::uint64_t seed = 0);

} // namespace abelweb
