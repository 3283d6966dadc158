#include "abelweb/pattern.hpp"

#include "abelweb/errors.hpp"
#include "abelweb/series.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace abelweb {

void Pattern::validate(std::size_t n) const
{
    if (multipliers.size() != n)
        throw Error(ErrorKind::InvalidParameter, "pattern needs one multiplier per foliation");
    std::vector<int> seen(n, 0);
    for (const auto &c : classes) {
        if (c.empty())
            throw Error(ErrorKind::InvalidParameter, "empty pattern class");
        for (auto i : c) {
            if (i >= n)
                throw Error(ErrorKind::InvalidParameter, "pattern index out of range");
            ++seen[i];
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (seen[i] != 1)
            throw Error(ErrorKind::InvalidParameter,
                        "index " + std::to_string(i + 1) + " must lie in exactly one pattern class");
        if (multipliers[i] == 0)
            throw Error(ErrorKind::InvalidParameter, "zero multiplier");
    }
}

std::string Pattern::to_string() const
{
    std::ostringstream os;
    for (const auto &c : classes) {
        os << "{";
        for (std::size_t k = 0; k < c.size(); ++k)
            os << (k ? "," : "") << c[k] + 1;
        os << "}";
    }
    os << " : ";
    for (std::size_t k = 0; k < multipliers.size(); ++k)
        os << (k ? "," : "") << multipliers[k];
    return os.str();
}

namespace {

std::vector<long> parse_int_list(const std::string &s)
{
    std::vector<long> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, ',')) {
        cur.erase(std::remove_if(cur.begin(), cur.end(), [](unsigned char c) { return std::isspace(c); }),
                  cur.end());
        if (cur.empty())
            throw Error(ErrorKind::Format, "empty entry in list '" + s + "'");
        try {
            out.push_back(std::stol(cur));
        } catch (const std::logic_error &) {
            throw Error(ErrorKind::Format, "bad integer '" + cur + "'");
        }
    }
    return out;
}

} // namespace

Pattern parse_pattern(const std::string &text, std::size_t n)
{
    Pattern p;
    std::string classes, mults = text;
    auto colon = text.find(':');
    if (colon != std::string::npos) {
        classes = text.substr(0, colon);
        mults = text.substr(colon + 1);
    }
    p.multipliers = parse_int_list(mults);
    std::size_t pos = 0;
    while ((pos = classes.find('{', pos)) != std::string::npos) {
        auto close = classes.find('}', pos);
        if (close == std::string::npos)
            throw Error(ErrorKind::Format, "unbalanced '{' in pattern");
        std::vector<std::size_t> cls;
        for (long v : parse_int_list(classes.substr(pos + 1, close - pos - 1))) {
            if (v < 1)
                throw Error(ErrorKind::Format, "pattern indices are 1-based");
            cls.push_back(static_cast<std::size_t>(v - 1));
        }
        p.classes.push_back(cls);
        pos = close + 1;
    }
    if (p.classes.empty()) {
        std::vector<std::size_t> all(n);
        for (std::size_t i = 0; i < n; ++i)
            all[i] = i;
        p.classes.push_back(all);
    }
    p.validate(n);
    return p;
}

std::string branch_name(int branch)
{
    return branch < 0 ? "(-inf,0)" : branch == 0 ? "(0,1)" : "(1,inf)";
}

namespace {

std::vector<Word> ansatz_words(int max_weight)
{
    std::vector<Word> out;
    for (int len = 1; len <= max_weight; ++len)
        for (int mask = 0; mask < (1 << len); ++mask) {
            Word w;
            for (int k = 0; k < len; ++k)
                w.push_back(Rational((mask >> (len - 1 - k)) & 1));
            out.push_back(w);
        }
    return out;
}

std::vector<std::string> ansatz_names(const AnsatzOptions &opt)
{
    std::vector<std::string> names;
    for (const auto &w : ansatz_words(opt.max_weight))
        names.push_back("L[" + word_to_string(w) + "]");
    if (opt.rational_atoms) {
        names.push_back("Id");
        names.push_back("Inv");
    }
    if (opt.artanh_atom)
        names.push_back("a");
    return names;
}

int branch_of(const Rational &c)
{
    if (c < 0)
        return -1;
    if (c > 1)
        return 1;
    if (c == 0 || c == 1)
        throw Error(ErrorKind::InvalidParameter, "image at a ramification point of the ansatz");
    return 0;
}

// Taylor coefficients (order + 1) at c of every ansatz function.
std::vector<std::vector<Complex>> ansatz_taylor(const AnsatzOptions &opt, const Rational &c, int order,
                                                mpfr_prec_t prec)
{
    auto words = ansatz_words(opt.max_weight);
    auto out = taylor_words(words, Complex(c, Rational(0), prec), order, prec);
    std::size_t len = static_cast<std::size_t>(order) + 1;
    Complex zero(prec);
    if (opt.rational_atoms) {
        std::vector<Complex> id(len, zero), inv(len, zero);
        id[0] = Complex(c, Rational(0), prec);
        if (len > 1)
            id[1] = Complex(Rational(1), Rational(0), prec);
        Rational p = 1 / c;
        for (std::size_t k = 0; k < len; ++k) {
            inv[k] = Complex(k % 2 ? -p : p, Rational(0), prec);
            p /= c;
        }
        out.push_back(id);
        out.push_back(inv);
    }
    if (opt.artanh_atom) {
        // s = sqrt(t) around c, then a' = s' / (1 - t).
        Complex sc = sqrt_principal(Complex(c, Rational(0), prec));
        std::vector<Complex> s(len + 1, zero), g(len, zero), a(len, zero);
        Rational binom = 1, cp = 1;
        for (std::size_t k = 0; k <= len; ++k) {
            s[k] = sc * Real(binom / cp, prec);
            binom = binom * (Rational(1, 2) - static_cast<long>(k)) / static_cast<long>(k + 1);
            cp *= c;
        }
        Rational q = 1 / (1 - c), qp = q;
        for (std::size_t k = 0; k < len; ++k) {
            g[k] = Complex(qp, Rational(0), prec);
            qp *= q;
        }
        Complex one(Real(1L, prec), Real(prec));
        if (c > 1) // artanh(sqrt c) = artanh(1/sqrt c) + i pi/2, one fixed side of the cut
            a[0] = atanh_principal(one / sc) + Complex(Real(prec), Real::pi(prec) * Real(Rational(1, 2), prec));
        else
            a[0] = atanh_principal(sc);
        for (std::size_t k = 1; k < len; ++k) {
            Complex acc(prec);
            for (std::size_t j = 0; j < k; ++j)
                acc += s[j + 1] * Real(static_cast<long>(j + 1), prec) * g[k - 1 - j];
            a[k] = acc * (Real(1L, prec) / Real(static_cast<long>(k), prec));
        }
        out.push_back(a);
    }
    return out;
}

struct Assembly {
    // rows[(a,b) flattened by SeriesJet::index] over columns
    std::vector<CVector> rows;
};

Assembly assemble(const Web &w, const Pattern &p, const BasePoint &base, const AnsatzOptions &opt,
                  const std::vector<PatternBlock> &blocks, std::size_t nf, int order, mpfr_prec_t prec)
{
    std::size_t n = w.size();
    std::size_t ncols = blocks.size() * nf + 1;
    std::size_t nrows = static_cast<std::size_t>((order + 1) * (order + 2) / 2);
    Assembly as;
    as.rows.assign(nrows, CVector(ncols, Complex(prec)));
    std::vector<std::size_t> cls_of(n);
    for (std::size_t c = 0; c < p.classes.size(); ++c)
        for (auto i : p.classes[c])
            cls_of[i] = c;
    for (std::size_t i = 0; i < n; ++i) {
        const Rational &c = base.images[i];
        int br = branch_of(c);
        std::size_t b = 0;
        while (!(blocks[b].cls == cls_of[i] && blocks[b].branch == br))
            ++b;
        auto g = ansatz_taylor(opt, c, order, prec);
        SeriesJet t = taylor(w.integral(i), base.x, base.y, order);
        t.at(0, 0) = 0;
        SeriesJet pw(base.x, base.y, order);
        pw.at(0, 0) = 1;
        Real m(p.multipliers[i], prec);
        for (int k = 0; k <= order; ++k) {
            for (int d = 0; d <= order; ++d)
                for (int bb = 0; bb <= d; ++bb) {
                    const Rational &q = pw.at(d - bb, bb);
                    if (q == 0)
                        continue;
                    Real qr(q, prec);
                    auto &row = as.rows[static_cast<std::size_t>(SeriesJet::index(d - bb, bb))];
                    for (std::size_t f = 0; f < nf; ++f)
                        row[b * nf + f] += g[f][static_cast<std::size_t>(k)] * (qr * m);
                }
            if (k < order)
                pw = (pw * t).truncated(order);
        }
    }
    as.rows[0][ncols - 1] = Complex(Real(-1L, prec), Real(prec));
    return as;
}

NumericKernel equilibrated_kernel(std::vector<CVector> rows, std::size_t ncols, mpfr_prec_t prec)
{
    for (auto &r : rows) {
        Real mx(prec);
        for (const auto &e : r)
            mx = max(mx, abs(e));
        if (!mx.is_zero()) {
            Real inv = Real(1L, prec) / mx;
            for (auto &e : r)
                e *= inv;
        }
    }
    std::vector<Real> cs(ncols, Real(1L, prec));
    for (std::size_t j = 0; j < ncols; ++j) {
        Real mx(prec);
        for (const auto &r : rows)
            mx = max(mx, abs(r[j]));
        if (!mx.is_zero()) {
            cs[j] = Real(1L, prec) / mx;
            for (auto &r : rows)
                r[j] *= cs[j];
        }
    }
    NumericKernel k = numeric_kernel(std::move(rows), ncols, Real::pow2(-static_cast<long>(prec / 2), prec));
    for (auto &v : k.basis) {
        for (std::size_t j = 0; j < ncols; ++j)
            v[j] *= cs[j];
        // normalize: largest entry 1
        std::size_t best = 0;
        for (std::size_t j = 1; j < ncols; ++j)
            if (abs(v[best]) < abs(v[j]))
                best = j;
        Complex s = v[best];
        for (auto &e : v)
            e /= s;
    }
    return k;
}

} // namespace

ConstrainedRankResult constrained_rank(const Web &w, const Pattern &p, const BasePoint &base,
                                       const AnsatzOptions &opt)
{
    p.validate(w.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        if (base.inverted.size() > i && base.inverted[i])
            throw Error(ErrorKind::InvalidParameter,
                        "integral " + std::to_string(i + 1) + " is infinite at the base point");
    mpfr_prec_t prec = digits_to_bits(opt.digits);
    ConstrainedRankResult r;
    r.ansatz = ansatz_names(opt);
    std::set<std::pair<std::size_t, int>> seen;
    for (std::size_t c = 0; c < p.classes.size(); ++c)
        for (auto i : p.classes[c]) {
            int br = branch_of(base.images[i]);
            if (seen.insert({c, br}).second)
                r.blocks.push_back(PatternBlock{c, br});
        }
    std::sort(r.blocks.begin(), r.blocks.end(),
              [](const PatternBlock &a, const PatternBlock &b) { return std::tie(a.cls, a.branch) < std::tie(b.cls, b.branch); });
    std::size_t nf = r.ansatz.size(), ncols = r.columns();
    int order = 2;
    while (static_cast<std::size_t>((order + 1) * (order + 2) / 2) < 2 * ncols)
        ++order;
    // A block met at a single center only sees the one-variable jet there, so it
    // needs order + 1 >= 2 nf to separate the ansatz functions.
    for (const auto &b : r.blocks) {
        std::set<Rational> centers;
        for (auto i : p.classes[b.cls])
            if (branch_of(base.images[i]) == b.branch)
                centers.insert(base.images[i]);
        if (centers.size() == 1)
            order = std::max(order, static_cast<int>(2 * nf) - 1);
    }
    r.order = order;
    Assembly big = assemble(w, p, base, opt, r.blocks, nf, order + 2, prec);
    std::vector<CVector> low(big.rows.begin(), big.rows.begin() + (order + 1) * (order + 2) / 2);
    NumericKernel k = equilibrated_kernel(low, ncols, prec);
    NumericKernel k2 = equilibrated_kernel(big.rows, ncols, prec);
    r.dim = k.basis.size();
    r.stable = k2.basis.size() == r.dim;
    r.basis = std::move(k.basis);
    r.gap = k.gap;
    return r;
}

std::string ConstrainedRankResult::describe(std::size_t k, int digits) const
{
    const CVector &v = basis.at(k);
    std::ostringstream os;
    std::size_t nf = ansatz.size();
    Real eps = Real::pow2(-static_cast<long>(digits * 3.33), v[0].prec());
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        os << "class " << blocks[b].cls + 1 << " on " << branch_name(blocks[b].branch) << ":";
        bool any = false;
        for (std::size_t f = 0; f < nf; ++f) {
            const Complex &c = v[b * nf + f];
            if (abs(c) < eps)
                continue;
            any = true;
            os << " (" << c.re.to_string(digits);
            if (!(abs(c.im) < eps))
                os << (c.im.sign() < 0 ? "" : "+") << c.im.to_string(digits) << "i";
            os << ")" << ansatz[f];
        }
        if (!any)
            os << " 0";
        os << "\n";
    }
    const Complex &c = v.back();
    os << "constant: " << c.re.to_string(digits) << " " << c.im.to_string(digits) << "i\n";
    return os.str();
}

std::vector<Complex> block_taylor(const ConstrainedRankResult &r, const CVector &v, std::size_t block,
                                  const Rational &center, int order, const AnsatzOptions &opt)
{
    mpfr_prec_t prec = v.front().prec();
    auto g = ansatz_taylor(opt, center, order, prec);
    std::size_t nf = r.ansatz.size();
    std::vector<Complex> out(static_cast<std::size_t>(order) + 1, Complex(prec));
    for (std::size_t f = 0; f < nf; ++f)
        for (std::size_t k = 0; k < out.size(); ++k)
            out[k] += v[block * nf + f] * g[f][k];
    return out;
}

} // namespace abelweb
