#include "zpoly.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>

namespace abelweb::detail {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kPrime = 2305843009213693951ULL; // 2^61 - 1

u64 mod_of(const mpz_class &v)
{
    return mpz_fdiv_ui(v.get_mpz_t(), kPrime);
}

u64 mulmod(u64 a, u64 b) { return static_cast<u64>((u128)a * b % kPrime); }
u64 addmod(u64 a, u64 b)
{
    u64 s = a + b;
    return s >= kPrime ? s - kPrime : s;
}
u64 submod(u64 a, u64 b) { return a >= b ? a - b : a + kPrime - b; }

u64 powmod(u64 a, u64 e)
{
    u64 r = 1;
    while (e) {
        if (e & 1)
            r = mulmod(r, a);
        a = mulmod(a, a);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a) { return powmod(a, kPrime - 2); }

using ModPoly = std::vector<u64>;

void trim_mod(ModPoly &p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

// Degree of gcd of two univariate polynomials mod p (-1 if both zero).
int gcd_degree_mod(ModPoly a, ModPoly b)
{
    trim_mod(a);
    trim_mod(b);
    if (a.size() < b.size())
        std::swap(a, b);
    while (!b.empty()) {
        u64 inv = invmod(b.back());
        while (a.size() >= b.size() && !a.empty()) {
            u64 f = mulmod(a.back(), inv);
            std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i)
                a[i + shift] = submod(a[i + shift], mulmod(f, b[i]));
            trim_mod(a);
        }
        std::swap(a, b);
    }
    return static_cast<int>(a.size()) - 1;
}

ModPoly reduce(const ZPoly &p)
{
    ModPoly r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        r[i] = mod_of(p[i]);
    return r;
}

u64 eval_mod(const ZPoly &p, u64 x)
{
    u64 r = 0;
    for (std::size_t i = p.size(); i-- > 0;)
        r = addmod(mulmod(r, x), mod_of(p[i]));
    return r;
}

ZPoly prem(ZPoly a, const ZPoly &b)
{
    const mpz_class &lb = b.back();
    int db = deg(b);
    while (deg(a) >= db && !a.empty()) {
        mpz_class la = a.back();
        int shift = deg(a) - db;
        for (auto &c : a)
            c *= lb;
        for (int i = 0; i <= db; ++i)
            a[i + shift] -= la * b[i];
        trim(a);
    }
    return a;
}

ZPoly primitive_part(const ZPoly &p)
{
    if (p.empty())
        return p;
    mpz_class c = content(p);
    if (p.back() < 0)
        c = -c;
    return divexact_scalar(p, c);
}

ZXY prem(ZXY a, const ZXY &b)
{
    const ZPoly &lb = b.back();
    int db = deg(b);
    while (deg(a) >= db && !a.empty()) {
        ZPoly la = a.back();
        int shift = deg(a) - db;
        for (auto &c : a)
            c = mul(c, lb);
        for (int i = 0; i <= db; ++i)
            a[i + shift] = sub(a[i + shift], mul(la, b[i]));
        trim(a);
    }
    return a;
}

ZXY primitive_y(const ZXY &p)
{
    ZPoly c = content_y(p);
    ZXY r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        r[i] = divexact(p[i], c);
    return r;
}

} // namespace

void trim(ZPoly &p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

void trim(ZXY &p)
{
    while (!p.empty() && p.back().empty())
        p.pop_back();
}

mpz_class content(const ZPoly &p)
{
    mpz_class g = 0;
    for (const auto &c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1)
            break;
    }
    return g;
}

ZPoly mul(const ZPoly &a, const ZPoly &b)
{
    if (a.empty() || b.empty())
        return {};
    ZPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    trim(r);
    return r;
}

ZPoly sub(const ZPoly &a, const ZPoly &b)
{
    ZPoly r = a;
    if (r.size() < b.size())
        r.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
        r[i] -= b[i];
    trim(r);
    return r;
}

ZPoly scale(const ZPoly &a, const mpz_class &c)
{
    if (c == 0)
        return {};
    ZPoly r = a;
    for (auto &v : r)
        v *= c;
    return r;
}

ZPoly divexact_scalar(const ZPoly &a, const mpz_class &c)
{
    ZPoly r = a;
    for (auto &v : r)
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
    return r;
}

ZPoly divexact(const ZPoly &a, const ZPoly &b)
{
    if (b.size() == 1)
        return divexact_scalar(a, b[0]);
    ZPoly rem = a;
    int db = deg(b);
    if (deg(rem) < db)
        return {};
    ZPoly q(deg(rem) - db + 1);
    while (!rem.empty() && deg(rem) >= db) {
        int shift = deg(rem) - db;
        mpz_class c;
        mpz_divexact(c.get_mpz_t(), rem.back().get_mpz_t(), b.back().get_mpz_t());
        q[shift] = c;
        for (int i = 0; i <= db; ++i)
            mpz_submul(rem[i + shift].get_mpz_t(), c.get_mpz_t(), b[i].get_mpz_t());
        trim(rem);
    }
    trim(q);
    return q;
}

ZPoly gcd(const ZPoly &a, const ZPoly &b)
{
    if (a.empty())
        return primitive_part(b).empty() ? ZPoly{} : scale(primitive_part(b), content(b));
    if (b.empty())
        return scale(primitive_part(a), content(a));
    mpz_class ca = content(a), cb = content(b), c;
    mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    if (a.size() == 1 || b.size() == 1)
        return {c};
    ZPoly A = divexact_scalar(a, ca), B = divexact_scalar(b, cb);
    if (mod_of(A.back()) != 0 && mod_of(B.back()) != 0 && gcd_degree_mod(reduce(A), reduce(B)) == 0)
        return {c};
    if (deg(A) < deg(B))
        std::swap(A, B);
    while (!B.empty()) {
        ZPoly R = prem(A, B);
        A = std::move(B);
        B = primitive_part(R);
    }
    A = primitive_part(A);
    if (deg(A) == 0)
        return {c};
    return scale(A, c);
}

ZPoly content_y(const ZXY &p)
{
    ZPoly g;
    for (const auto &c : p) {
        g = gcd(g, c);
        if (g.size() == 1 && abs(g[0]) == 1)
            break;
    }
    if (!g.empty() && g.back() < 0)
        g = scale(g, -1);
    return g;
}

ZXY gcd(const ZXY &a, const ZXY &b)
{
    if (a.empty())
        return b;
    if (b.empty())
        return a;
    ZPoly ca = content_y(a), cb = content_y(b);
    ZPoly c = gcd(ca, cb);
    if (a.size() == 1 || b.size() == 1)
        return {c};
    ZXY A(a.size()), B(b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        A[i] = divexact(a[i], ca);
    for (std::size_t i = 0; i < b.size(); ++i)
        B[i] = divexact(b[i], cb);

    // Modular screen: if the images at some x = r have a constant gcd in y,
    // the true gcd has y-degree 0 and is the gcd of the contents.
    for (u64 r : {1000003ULL, 7919ULL}) {
        u64 la = eval_mod(A.back(), r), lb = eval_mod(B.back(), r);
        if (la == 0 || lb == 0)
            continue;
        ModPoly ia(A.size()), ib(B.size());
        for (std::size_t i = 0; i < A.size(); ++i)
            ia[i] = eval_mod(A[i], r);
        for (std::size_t i = 0; i < B.size(); ++i)
            ib[i] = eval_mod(B[i], r);
        if (gcd_degree_mod(ia, ib) == 0)
            return {c};
        break;
    }

    if (deg(A) < deg(B))
        std::swap(A, B);
    while (!B.empty()) {
        ZXY R = prem(A, B);
        A = std::move(B);
        if (R.empty()) {
            B.clear();
            break;
        }
        B = primitive_y(R);
    }
    if (deg(A) == 0)
        return {c};
    A = primitive_y(A);
    ZXY out(A.size());
    for (std::size_t i = 0; i < A.size(); ++i)
        out[i] = mul(A[i], c);
    return out;
}

} // namespace abelweb::detail
