#include "zrl/fpsolve.hpp"

#include <cstring>
#include <stdexcept>

namespace zrl {

namespace {

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    std::uint32_t r = 1, b = a % p;
    for (std::uint32_t e = p - 2; e; e >>= 1) {
        if (e & 1) r = std::uint32_t(std::uint64_t(r) * b % p);
        b = std::uint32_t(std::uint64_t(b) * b % p);
    }
    return r;
}

// Bitsliced F_3 elimination: each row is two bitplanes, trit 1 = (1,0), 2 = (0,1).
struct F3Rows {
    int cols, words;
    std::vector<std::uint64_t> lo, hi; // per row: words entries each

    F3Rows(int nrows, int ncols) : cols(ncols), words((ncols + 63) / 64) {
        lo.assign(size_t(nrows) * words, 0);
        hi.assign(size_t(nrows) * words, 0);
    }
    void set(int r, int c, std::uint8_t v) {
        size_t idx = size_t(r) * words + (c >> 6);
        std::uint64_t bit = 1ull << (c & 63);
        if (v == 1) lo[idx] |= bit;
        else if (v == 2) hi[idx] |= bit;
    }
    std::uint8_t get(int r, int c) const {
        size_t idx = size_t(r) * words + (c >> 6);
        std::uint64_t bit = 1ull << (c & 63);
        if (lo[idx] & bit) return 1;
        if (hi[idx] & bit) return 2;
        return 0;
    }
    void scale_by_two(int r) {
        size_t off = size_t(r) * words;
        for (int w = 0; w < words; ++w) std::swap(lo[off + w], hi[off + w]);
    }
    // row r += s * row q  (s in {1,2})
    void add_scaled(int r, int q, std::uint8_t s) {
        size_t ro = size_t(r) * words, qo = size_t(q) * words;
        for (int w = 0; w < words; ++w) {
            std::uint64_t a1 = lo[ro + w], b1 = hi[ro + w];
            std::uint64_t a2 = lo[qo + w], b2 = hi[qo + w];
            if (s == 2) std::swap(a2, b2);
            std::uint64_t na = (a1 & ~a2 & ~b2) | (a2 & ~a1 & ~b1) | (b1 & b2);
            std::uint64_t nb = (b1 & ~a2 & ~b2) | (b2 & ~a1 & ~b1) | (a1 & a2);
            lo[ro + w] = na;
            hi[ro + w] = nb;
        }
    }
};

int f3_rank(const FpDenseMat& m) {
    F3Rows rs(m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            if (std::uint8_t v = m.at(i, j) % 3) rs.set(i, j, v);
    int rank = 0;
    for (int c = 0; c < m.cols && rank < m.rows; ++c) {
        int piv = -1;
        for (int i = rank; i < m.rows; ++i)
            if (rs.get(i, c)) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != rank) {
            size_t a = size_t(piv) * rs.words, b = size_t(rank) * rs.words;
            for (int w = 0; w < rs.words; ++w) {
                std::swap(rs.lo[a + w], rs.lo[b + w]);
                std::swap(rs.hi[a + w], rs.hi[b + w]);
            }
        }
        if (rs.get(rank, c) == 2) rs.scale_by_two(rank);
        for (int i = 0; i < m.rows; ++i) {
            if (i == rank) continue;
            std::uint8_t v = rs.get(i, c);
            if (!v) continue;
            rs.add_scaled(i, rank, std::uint8_t(3 - v)); // subtract v * pivot row
        }
        ++rank;
    }
    return rank;
}

} // namespace

std::vector<int> fp_rref_inplace(FpDenseMat& m) {
    std::uint32_t p = m.p;
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int piv = -1;
        for (int i = r; i < m.rows; ++i)
            if (m.at(i, c) % p) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
        std::uint32_t f = inv_mod(m.at(r, c), p);
        for (int j = 0; j < m.cols; ++j)
            m.at(r, j) = std::uint8_t(std::uint64_t(m.at(r, j)) * f % p);
        for (int i = 0; i < m.rows; ++i) {
            if (i == r) continue;
            std::uint32_t g = m.at(i, c) % p;
            if (!g) continue;
            std::uint32_t gneg = p - g;
            const std::uint8_t* src = &m.a[size_t(r) * m.cols];
            std::uint8_t* dst = &m.a[size_t(i) * m.cols];
            for (int j = 0; j < m.cols; ++j)
                dst[j] = std::uint8_t((dst[j] + std::uint64_t(gneg) * src[j]) % p);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int fp_rank(const FpDenseMat& m) {
    if (m.p == 3 && std::uint64_t(m.rows) * m.cols > 200'000) return f3_rank(m);
    FpDenseMat c = m;
    return int(fp_rref_inplace(c).size());
}

std::vector<std::vector<std::uint8_t>> fp_kernel_basis(const FpDenseMat& m) {
    FpDenseMat c = m;
    auto pivots = fp_rref_inplace(c);
    std::vector<char> is_pivot(m.cols, 0);
    for (int pc : pivots) is_pivot[pc] = 1;
    std::vector<std::vector<std::uint8_t>> out;
    for (int fc = 0; fc < m.cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<std::uint8_t> v(m.cols, 0);
        v[fc] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) {
            std::uint32_t val = c.at(int(r), fc) % m.p;
            v[pivots[r]] = std::uint8_t(val ? m.p - val : 0);
        }
        out.push_back(std::move(v));
    }
    return out;
}

FpDenseMat fp_mul(const FpDenseMat& x, const FpDenseMat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("fp_mul: shape");
    FpDenseMat out(x.p, x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            std::uint32_t f = x.at(i, k) % x.p;
            if (!f) continue;
            const std::uint8_t* src = &y.a[size_t(k) * y.cols];
            std::uint8_t* dst = &out.a[size_t(i) * out.cols];
            for (int j = 0; j < y.cols; ++j)
                dst[j] = std::uint8_t((dst[j] + std::uint64_t(f) * src[j]) % x.p);
        }
    return out;
}

FpDenseMat fp_inverse(const FpDenseMat& m) {
    if (m.rows != m.cols) throw std::invalid_argument("fp_inverse: not square");
    FpDenseMat aug(m.p, m.rows, 2 * m.cols);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols + i) = 1;
    }
    auto piv = fp_rref_inplace(aug);
    if (int(piv.size()) != m.rows || piv.back() >= m.cols)
        throw std::domain_error("fp_inverse: singular");
    FpDenseMat out(m.p, m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) out.at(i, j) = aug.at(i, m.cols + j);
    return out;
}

} // namespace zrl
