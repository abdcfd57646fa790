#pragma once

#include "zrl/cyclotomic.hpp"
#include "zrl/zmod.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace zrl {

// Coefficient rings for matrix groups. Each ring exposes the same small
// vocabulary so the group machinery can be templated over it.

struct FpRing {
    using Elem = std::uint32_t;
    std::uint32_t p;

    explicit FpRing(std::uint32_t p_ = 3) : p(p_) {}
    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem add(Elem a, Elem b) const { return (a + b) % p; }
    Elem sub(Elem a, Elem b) const { return (a + p - b % p) % p; }
    Elem mul(Elem a, Elem b) const { return std::uint32_t((std::uint64_t(a) * b) % p); }
    Elem neg(Elem a) const { return a ? p - a : 0; }
    bool is_zero(Elem a) const { return a % p == 0; }
    bool is_unit(Elem a) const { return a % p != 0; }
    Elem inv(Elem a) const {
        Elem r = 1, base = a % p;
        for (std::uint32_t e = p - 2; e; e >>= 1) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
        }
        return r;
    }
    Elem from_int(long v) const {
        long m = v % long(p);
        return Elem(m < 0 ? m + p : m);
    }
    void fma(Elem& acc, Elem a, Elem b) const { acc = add(acc, mul(a, b)); }
    void hash_append(Elem a, std::string& out) const { out.push_back(char(a)); out.push_back(char(a >> 8)); }
    std::string str(Elem a) const { return std::to_string(a); }
    bool eq(Elem a, Elem b) const { return a == b; }
    std::uint64_t pack_bits() const { return 64 - __builtin_clzll(p - 1 ? p - 1 : 1); }
    std::uint64_t pack(Elem a) const { return a; }
};

struct ZpkRing {
    using Elem = std::uint64_t;
    ZpkCtx ctx;

    ZpkRing() = default;
    explicit ZpkRing(const ZpkCtx& c) : ctx(c) {}
    ZpkRing(std::uint64_t p, int k) : ctx(p, k) {}
    Elem zero() const { return 0; }
    Elem one() const { return 1 % ctx.q; }
    Elem add(Elem a, Elem b) const { return ctx.add(a, b); }
    Elem sub(Elem a, Elem b) const { return ctx.sub(a, b); }
    Elem mul(Elem a, Elem b) const { return ctx.mul(a, b); }
    Elem neg(Elem a) const { return ctx.neg(a); }
    bool is_zero(Elem a) const { return a % ctx.q == 0; }
    bool is_unit(Elem a) const { return ctx.is_unit(a); }
    Elem inv(Elem a) const { return ctx.inv(a); }
    Elem from_int(long v) const {
        long long m = v % (long long)ctx.q;
        return Elem(m < 0 ? m + (long long)ctx.q : m);
    }
    void fma(Elem& acc, Elem a, Elem b) const { acc = add(acc, mul(a, b)); }
    void hash_append(Elem a, std::string& out) const {
        for (int i = 0; i < 8; ++i) out.push_back(char(a >> (8 * i)));
    }
    std::string str(Elem a) const { return std::to_string(a); }
    bool eq(Elem a, Elem b) const { return a == b; }
    std::uint64_t pack_bits() const { return 64 - __builtin_clzll(ctx.q - 1 ? ctx.q - 1 : 1); }
    std::uint64_t pack(Elem a) const { return a; }
};

struct CycRing {
    using Elem = Cyc;
    const CycloField* F = nullptr;

    CycRing() = default;
    explicit CycRing(const CycloField& field) : F(&field) {}
    Elem zero() const { return Cyc(*F); }
    Elem one() const { return Cyc(*F, Rat(1)); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool is_unit(const Elem& a) const { return !a.is_zero(); }
    Elem inv(const Elem& a) const { return a.inverse(); }
    Elem from_int(long v) const { return Cyc(*F, Rat(v)); }
    void fma(Elem& acc, const Elem& a, const Elem& b) const {
        if (a.is_zero() || b.is_zero()) return;
        acc.add_product(a, b);
    }
    void hash_append(const Elem& a, std::string& out) const { a.hash_append(out); }
    std::string str(const Elem& a) const { return a.str(); }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    std::uint64_t pack_bits() const { return 0; } // no fixed-width packing
    std::uint64_t pack(const Elem&) const { return 0; }
};

// Dense n x n matrix over a ring R;矩阵 acts on column vectors.
template <class R>
struct Mat {
    int n = 0;
    std::vector<typename R::Elem> a; // row-major

    Mat() = default;
    Mat(int n_, const R& ring) : n(n_), a(size_t(n_) * n_, ring.zero()) {}

    typename R::Elem& at(int i, int j) { return a[size_t(i) * n + j]; }
    const typename R::Elem& at(int i, int j) const { return a[size_t(i) * n + j]; }

    static Mat identity(int n, const R& ring) {
        Mat m(n, ring);
        for (int i = 0; i < n; ++i) m.at(i, i) = ring.one();
        return m;
    }

    bool operator==(const Mat& o) const {
        if (n != o.n) return false;
        for (size_t i = 0; i < a.size(); ++i)
            if (!(a[i] == o.a[i])) return false;
        return true;
    }
};

template <class R>
Mat<R> mat_mul(const R& ring, const Mat<R>& x, const Mat<R>& y) {
    Mat<R> out(x.n, ring);
    for (int i = 0; i < x.n; ++i)
        for (int k = 0; k < x.n; ++k) {
            const auto& xik = x.at(i, k);
            if (ring.is_zero(xik)) continue;
            for (int j = 0; j < x.n; ++j) ring.fma(out.at(i, j), xik, y.at(k, j));
        }
    return out;
}

// Gauss-Jordan inverse; throws if not invertible over the ring
// (for ZpkRing this requires unit pivots, which invertible matrices provide).
// Monomial matrices take a direct path.
template <class R>
Mat<R> mat_inv(const R& ring, const Mat<R>& m) {
    int n = m.n;
    {
        bool monomial = true;
        std::vector<int> col_of(n, -1);
        for (int i = 0; i < n && monomial; ++i) {
            int nz = -1;
            for (int j = 0; j < n; ++j) {
                if (ring.is_zero(m.at(i, j))) continue;
                if (nz >= 0) { monomial = false; break; }
                nz = j;
            }
            if (nz < 0 || !monomial) { monomial = false; break; }
            if (!ring.is_unit(m.at(i, nz))) { monomial = false; break; }
            if (col_of[nz] >= 0) { monomial = false; break; }
            col_of[nz] = i;
        }
        if (monomial) {
            Mat<R> inv(n, ring);
            for (int j = 0; j < n; ++j) {
                int i = col_of[j];
                inv.at(j, i) = ring.inv(m.at(i, j));
            }
            return inv;
        }
    }
    Mat<R> a = m, inv = Mat<R>::identity(n, ring);
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (ring.is_unit(a.at(i, c))) { piv = i; break; }
        if (piv < 0) throw std::domain_error("matrix not invertible over ring");
        if (piv != c)
            for (int j = 0; j < n; ++j) {
                std::swap(a.at(piv, j), a.at(c, j));
                std::swap(inv.at(piv, j), inv.at(c, j));
            }
        auto f = ring.inv(a.at(c, c));
        for (int j = 0; j < n; ++j) {
            a.at(c, j) = ring.mul(a.at(c, j), f);
            inv.at(c, j) = ring.mul(inv.at(c, j), f);
        }
        for (int i = 0; i < n; ++i) {
            if (i == c || ring.is_zero(a.at(i, c))) continue;
            auto g = a.at(i, c);
            for (int j = 0; j < n; ++j) {
                a.at(i, j) = ring.sub(a.at(i, j), ring.mul(g, a.at(c, j)));
                inv.at(i, j) = ring.sub(inv.at(i, j), ring.mul(g, inv.at(c, j)));
            }
        }
    }
    return inv;
}

template <class R>
bool mat_is_identity(const R& ring, const Mat<R>& m) {
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j)
            if (!ring.eq(m.at(i, j), i == j ? ring.one() : ring.zero())) return false;
    return true;
}

template <class R>
std::string mat_key(const R& ring, const Mat<R>& m) {
    std::string out;
    out.reserve(m.a.size() * 2 + 2);
    for (const auto& e : m.a) ring.hash_append(e, out);
    return out;
}

// rank of (m - 1), i.e. the reflection test helper; works over fields (Fp, Cyc).
template <class R>
int mat_rank_minus_one(const R& ring, const Mat<R>& m) {
    int n = m.n;
    std::vector<typename R::Elem> w;
    w.reserve(size_t(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            w.push_back(ring.sub(m.at(i, j), i == j ? ring.one() : ring.zero()));
    // row echelon over a field
    int rank = 0;
    for (int c = 0; c < n && rank < n; ++c) {
        int piv = -1;
        for (int i = rank; i < n; ++i)
            if (!ring.is_zero(w[size_t(i) * n + c])) { piv = i; break; }
        if (piv < 0) continue;
        for (int j = 0; j < n; ++j) std::swap(w[size_t(piv) * n + j], w[size_t(rank) * n + j]);
        auto f = ring.inv(w[size_t(rank) * n + c]);
        for (int j = 0; j < n; ++j) w[size_t(rank) * n + j] = ring.mul(w[size_t(rank) * n + j], f);
        for (int i = 0; i < n; ++i) {
            if (i == rank || ring.is_zero(w[size_t(i) * n + c])) continue;
            auto g = w[size_t(i) * n + c];
            for (int j = 0; j < n; ++j)
                w[size_t(i) * n + j] = ring.sub(w[size_t(i) * n + j], ring.mul(g, w[size_t(rank) * n + j]));
        }
        ++rank;
    }
    return rank;
}

} // namespace zrl
