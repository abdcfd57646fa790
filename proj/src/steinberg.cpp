#include "zrl/steinberg.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace zrl {

namespace {

// flags serialized as the concatenated RREF bases of each level
std::string flag_key(const FpRing& ring, const std::vector<std::vector<FpVec>>& levels) {
    std::string out;
    for (const auto& lvl : levels) {
        auto rr = fp_rref(ring, lvl);
        for (const auto& row : rr) out.append(row.begin(), row.end());
    }
    return out;
}

std::string apply_flag(const FpRing& ring, const Mat<FpRing>& g, const std::string& key,
                       int n, const std::vector<int>& dims) {
    std::string out;
    out.reserve(key.size());
    size_t off = 0;
    for (int d : dims) {
        std::vector<FpVec> rows;
        rows.reserve(d);
        for (int r = 0; r < d; ++r) {
            FpVec v(key.begin() + off, key.begin() + off + n);
            off += n;
            rows.push_back(fp_apply(ring, g, v));
        }
        auto rr = fp_rref(ring, rows);
        for (const auto& row : rr) out.append(row.begin(), row.end());
    }
    return out;
}

std::vector<Mat<FpRing>> gl_generators(int n, const FpRing& ring) {
    std::vector<Mat<FpRing>> gens;
    if (n == 1) {
        Mat<FpRing> d(1, ring);
        d.at(0, 0) = ring.p > 2 ? 2 : 1; // a generator of F_p^* for odd p
        gens.push_back(d);
        return gens;
    }
    Mat<FpRing> cyc(n, ring);
    for (int i = 0; i < n; ++i) cyc.at((i + 1) % n, i) = 1;
    Mat<FpRing> trans = Mat<FpRing>::identity(n, ring);
    trans.at(0, 1) = 1;
    Mat<FpRing> diag = Mat<FpRing>::identity(n, ring);
    // smallest primitive root mod p
    std::uint32_t g = 2;
    for (; g < ring.p; ++g) {
        std::uint32_t ord = 1, y = g % ring.p;
        while (y != 1) {
            y = ring.mul(y, g);
            ++ord;
        }
        if (ord == ring.p - 1) break;
    }
    diag.at(0, 0) = g;
    gens.push_back(cyc);
    gens.push_back(trans);
    if (ring.p > 2) gens.push_back(diag);
    return gens;
}

std::string standard_flag(const FpRing& ring, int n, const std::vector<int>& dims) {
    std::vector<std::vector<FpVec>> levels;
    for (int d : dims) {
        std::vector<FpVec> rows;
        for (int r = 0; r < d; ++r) {
            FpVec v(n, 0);
            v[r] = 1;
            rows.push_back(v);
        }
        levels.push_back(rows);
    }
    return flag_key(ring, levels);
}

// per-orbit stabilizer fixed-space accumulation using Schreier edges carried
// in the module representation
struct OrbitFixedAccumulator {
    std::uint32_t p;
    int m; // module dimension
    // current fixed-space basis as columns of an m x dim matrix
    FpDenseMat basis;

    explicit OrbitFixedAccumulator(std::uint32_t p_, int m_) : p(p_), m(m_) {
        basis = FpDenseMat(p_, m_, m_);
        for (int i = 0; i < m_; ++i) basis.at(i, i) = 1;
    }
    int dim() const { return basis.cols; }
    // intersect with the fixed space of s (m x m)
    void intersect(const FpDenseMat& s) {
        if (basis.cols == 0) return;
        // rows of (s - 1) * basis
        FpDenseMat prod(p, m, basis.cols);
        for (int i = 0; i < m; ++i)
            for (int k = 0; k < m; ++k) {
                std::uint32_t v = s.at(i, k) % p;
                if (i == k) v = (v + p - 1) % p;
                if (!v) continue;
                for (int j = 0; j < basis.cols; ++j)
                    prod.at(i, j) = std::uint8_t((prod.at(i, j) + v * basis.at(k, j)) % p);
            }
        auto ker = fp_kernel_basis(prod);
        FpDenseMat nb(p, m, int(ker.size()));
        for (size_t j = 0; j < ker.size(); ++j)
            for (int i = 0; i < m; ++i) {
                std::uint32_t acc = 0;
                for (int k = 0; k < basis.cols; ++k)
                    acc = (acc + std::uint32_t(ker[j][k]) * basis.at(i, k)) % p;
                nb.at(i, int(j)) = std::uint8_t(acc);
            }
        basis = std::move(nb);
    }
};

FpDenseMat fp_identity(std::uint32_t p, int m) {
    FpDenseMat out(p, m, m);
    for (int i = 0; i < m; ++i) out.at(i, i) = 1;
    return out;
}

bool fp_equal(const FpDenseMat& a, const FpDenseMat& b) {
    return a.rows == b.rows && a.cols == b.cols && a.a == b.a;
}

// one mask's term: sum over Gamma-orbits of dim M^{stabilizer}
long mask_term(const FpRing& ring, int n, const std::vector<int>& dims,
               const std::vector<Mat<FpRing>>& gamma, const std::vector<FpDenseMat>& rho,
               const std::vector<FpDenseMat>& rho_inv, const FlagSpace& space) {
    size_t N = space.size();
    int m = rho.empty() ? 0 : rho[0].rows;
    std::vector<std::uint32_t> orbit_of(N, UINT32_MAX);
    std::vector<FpDenseMat> T(N), Tinv(N);
    long total = 0;
    std::vector<std::uint32_t> queue;
    for (std::uint32_t start = 0; start < N; ++start) {
        if (orbit_of[start] != UINT32_MAX) continue;
        OrbitFixedAccumulator acc(ring.p, m);
        orbit_of[start] = start;
        T[start] = fp_identity(ring.p, m);
        Tinv[start] = T[start];
        queue.clear();
        queue.push_back(start);
        for (size_t head = 0; head < queue.size(); ++head) {
            std::uint32_t cur = queue[head];
            const std::string& key = space.flags[cur];
            for (size_t gi = 0; gi < gamma.size(); ++gi) {
                std::string img = apply_flag(ring, gamma[gi], key, n, dims);
                std::uint32_t j = space.index.at(img);
                if (orbit_of[j] == UINT32_MAX) {
                    orbit_of[j] = start;
                    T[j] = fp_mul(rho[gi], T[cur]);
                    Tinv[j] = fp_mul(Tinv[cur], rho_inv[gi]);
                    queue.push_back(j);
                } else if (acc.dim() > 0) {
                    // Schreier generator in the module representation
                    FpDenseMat s = fp_mul(Tinv[j], fp_mul(rho[gi], T[cur]));
                    acc.intersect(s);
                }
            }
        }
        total += acc.dim();
        // release transversal storage for this orbit
        for (std::uint32_t idx : queue) {
            T[idx] = FpDenseMat();
            Tinv[idx] = FpDenseMat();
        }
    }
    return total;
}

} // namespace

FpModule FpModule::trivial(std::uint32_t p) {
    FpModule mod;
    mod.dim = 1;
    mod.act = [p](const Mat<FpRing>&) { return fp_identity(p, 1); };
    return mod;
}

FpModule FpModule::natural(std::uint32_t p) {
    FpModule mod;
    mod.dim = 0; // filled on first use via act
    mod.act = [p](const Mat<FpRing>& g) {
        FpDenseMat out(p, g.n, g.n);
        for (int i = 0; i < g.n; ++i)
            for (int j = 0; j < g.n; ++j) out.at(i, j) = std::uint8_t(g.at(i, j) % p);
        return out;
    };
    return mod;
}

FpModule FpModule::natural_sub(std::uint32_t p, int k) {
    FpModule mod;
    mod.dim = k;
    mod.act = [p, k](const Mat<FpRing>& g) {
        FpDenseMat out(p, k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) out.at(i, j) = std::uint8_t(g.at(i, j) % p);
        // invariance check: no nonzero entries below the block
        for (int i = k; i < g.n; ++i)
            for (int j = 0; j < k; ++j)
                if (g.at(i, j) % p) throw std::domain_error("subspace is not invariant");
        return out;
    };
    return mod;
}

FpModule FpModule::natural_quotient(std::uint32_t p, int k) {
    FpModule mod;
    mod.dim = -k; // resolved against n at use: dim = n - k
    mod.act = [p, k](const Mat<FpRing>& g) {
        int m = g.n - k;
        FpDenseMat out(p, m, m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) out.at(i, j) = std::uint8_t(g.at(k + i, k + j) % p);
        return out;
    };
    return mod;
}

FpModule FpModule::natural_slice(std::uint32_t p, int from, int k) {
    FpModule mod;
    mod.dim = k;
    mod.act = [p, from, k](const Mat<FpRing>& g) {
        FpDenseMat out(p, k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) out.at(i, j) = std::uint8_t(g.at(from + i, from + j) % p);
        return out;
    };
    return mod;
}

FpModule FpModule::character(std::uint32_t p,
                             std::function<std::uint32_t(const Mat<FpRing>&)> chi) {
    FpModule mod;
    mod.dim = 1;
    mod.act = [p, chi](const Mat<FpRing>& g) {
        FpDenseMat out(p, 1, 1);
        out.at(0, 0) = std::uint8_t(chi(g) % p);
        return out;
    };
    return mod;
}

std::uint64_t gaussian_binomial(int n, int k, std::uint64_t p) {
    // [n choose k]_p = prod_{i=0}^{k-1} (p^{n-i} - 1) / (p^{i+1} - 1)
    __uint128_t num = 1, den = 1;
    auto pw = [&](int e) {
        __uint128_t r = 1;
        for (int i = 0; i < e; ++i) r *= p;
        return r;
    };
    for (int i = 0; i < k; ++i) {
        num *= pw(n - i) - 1;
        den *= pw(i + 1) - 1;
    }
    return std::uint64_t(num / den);
}

FlagSpace flag_space(const ParabolicMask& mask, std::uint64_t cap) {
    FpRing ring(mask.p);
    FlagSpace out;
    out.mask = mask;
    out.dims = mask.flag_dims();
    // expected size: product of successive Gaussian binomials
    std::uint64_t expect = 1;
    int prev = 0;
    for (int d : out.dims) {
        expect *= gaussian_binomial(mask.n - prev, d - prev, mask.p);
        prev = d;
    }
    if (expect > cap) throw ClosureOverflow(cap);
    auto gens = gl_generators(mask.n, ring);
    std::string base = standard_flag(ring, mask.n, out.dims);
    out.flags.push_back(base);
    out.index.emplace(base, 0);
    for (std::uint32_t head = 0; head < out.flags.size(); ++head) {
        std::string cur = out.flags[head];
        for (const auto& g : gens) {
            std::string img = apply_flag(ring, g, cur, mask.n, out.dims);
            if (out.index.emplace(img, std::uint32_t(out.flags.size())).second)
                out.flags.push_back(std::move(img));
        }
    }
    if (out.flags.size() != expect)
        throw std::logic_error("flag space size mismatch: got " +
                               std::to_string(out.flags.size()) + " expected " +
                               std::to_string(expect));
    return out;
}

long hom_steinberg(int n, std::uint32_t p, const std::vector<Mat<FpRing>>& gamma,
                   const FpModule& module, int threads) {
    FpRing ring(p);
    std::vector<FpDenseMat> rho, rho_inv;
    for (const auto& g : gamma) {
        rho.push_back(module.act(g));
        rho_inv.push_back(fp_inverse(rho.back()));
    }
    if (rho.empty()) throw std::invalid_argument("hom_steinberg: no generators");
    int nmasks = 1 << (n - 1);
    std::vector<long> terms(nmasks, 0);
    if (threads <= 0) {
        const char* env = std::getenv("ZRL_THREADS");
        threads = env ? std::max(1, atoi(env)) : 1;
    }
    std::atomic<int> next{0};
    auto worker = [&]() {
        while (true) {
            int mi = next.fetch_add(1);
            if (mi >= nmasks) break;
            ParabolicMask mask{n, p, std::uint32_t(mi)};
            FlagSpace space = flag_space(mask);
            terms[mi] = mask_term(ring, n, mask.flag_dims(), gamma, rho, rho_inv, space);
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    long total = 0;
    for (int mi = 0; mi < nmasks; ++mi) {
        int sign = __builtin_popcount(unsigned(mi)) % 2 ? -1 : 1;
        total += sign * terms[mi];
    }
    if (total < 0)
        throw std::logic_error("hom_steinberg: negative rank (internal fault)");
    return total;
}

// --------------------------------------------------------------------------
// Tits building oracle
// --------------------------------------------------------------------------

namespace {

std::vector<std::string> all_subspaces(const FpRing& ring, int n, int k) {
    // all RREF bases of k-dimensional subspaces, deterministic order
    std::vector<std::string> out;
    std::vector<int> pivots(k);
    std::function<void(int, int)> choose = [&](int start, int idx) {
        if (idx == k) {
            std::vector<std::pair<int, int>> freepos; // (row, col)
            for (int r = 0; r < k; ++r)
                for (int c = pivots[r] + 1; c < n; ++c)
                    if (std::find(pivots.begin(), pivots.end(), c) == pivots.end())
                        freepos.emplace_back(r, c);
            std::uint64_t count = 1;
            for (size_t i = 0; i < freepos.size(); ++i) count *= ring.p;
            for (std::uint64_t it = 0; it < count; ++it) {
                std::vector<FpVec> rows(k, FpVec(n, 0));
                for (int r = 0; r < k; ++r) rows[r][pivots[r]] = 1;
                std::uint64_t x = it;
                for (auto [r, c] : freepos) {
                    rows[r][c] = std::uint8_t(x % ring.p);
                    x /= ring.p;
                }
                std::string key;
                auto rr = fp_rref(ring, rows);
                for (const auto& row : rr) key.append(row.begin(), row.end());
                out.push_back(std::move(key));
            }
            return;
        }
        for (int c = start; c < n; ++c) {
            pivots[idx] = c;
            choose(c + 1, idx + 1);
        }
    };
    choose(0, 0);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool subspace_contains(const FpRing& ring, const std::string& big, int bd,
                       const std::string& small, int sd, int n) {
    // both RREF; small <= big iff stacking leaves rank bd
    std::vector<FpVec> rows;
    for (int r = 0; r < bd; ++r)
        rows.emplace_back(big.begin() + r * n, big.begin() + (r + 1) * n);
    for (int r = 0; r < sd; ++r)
        rows.emplace_back(small.begin() + r * n, small.begin() + (r + 1) * n);
    return int(fp_rref(ring, rows).size()) == bd;
}

} // namespace

long tits_building_oracle(int n, std::uint32_t p, const std::vector<Mat<FpRing>>& gamma,
                          const FpModule& module) {
    FpRing ring(p);
    if (n < 2) throw std::invalid_argument("oracle needs n >= 2");
    // vertices by dimension
    std::vector<std::vector<std::string>> verts(n); // verts[d] for d = 1..n-1
    for (int d = 1; d < n; ++d) verts[d] = all_subspaces(ring, n, d);
    // simplices of dimension q are chains V_{d_0} < ... < V_{d_q}
    // enumerate all chains; index per dimension
    struct Simplex {
        std::vector<std::pair<int, std::uint32_t>> parts; // (dim, index into verts)
    };
    std::vector<std::vector<Simplex>> simp(n - 1); // simp[q]
    std::vector<std::unordered_map<std::string, std::uint32_t>> simp_index(n - 1);
    auto simp_key = [&](const Simplex& s) {
        std::string key;
        for (auto [d, i] : s.parts) {
            key.push_back(char(d));
            key.append(verts[d][i]);
        }
        return key;
    };
    // dimension 0
    for (int d = 1; d < n; ++d)
        for (std::uint32_t i = 0; i < verts[d].size(); ++i) {
            Simplex s;
            s.parts = {{d, i}};
            simp_index[0].emplace(simp_key(s), std::uint32_t(simp[0].size()));
            simp[0].push_back(std::move(s));
        }
    for (int q = 1; q < n - 1; ++q) {
        for (const auto& s : simp[q - 1]) {
            auto [dtop, itop] = s.parts.back();
            for (int d = dtop + 1; d < n; ++d)
                for (std::uint32_t i = 0; i < verts[d].size(); ++i) {
                    if (!subspace_contains(ring, verts[d][i], d, verts[dtop][itop], dtop, n))
                        continue;
                    Simplex t = s;
                    t.parts.emplace_back(d, i);
                    simp_index[q].emplace(simp_key(t), std::uint32_t(simp[q].size()));
                    simp[q].push_back(std::move(t));
                }
        }
    }
    int top = n - 2;
    // boundary matrix from top simplices to (top-1): rows = lower, cols = top
    long st_dim = 0;
    std::vector<std::vector<std::uint8_t>> kernel; // basis vectors over columns
    size_t ntop = simp[top].size();
    if (top == 0) {
        // building is a set of points; St = reduced homology H~0 = ker(augmentation)
        FpDenseMat aug(p, 1, int(ntop));
        for (size_t j = 0; j < ntop; ++j) aug.at(0, int(j)) = 1;
        kernel = fp_kernel_basis(aug);
    } else {
        FpDenseMat bd(p, int(simp[top - 1].size()), int(ntop));
        for (size_t j = 0; j < ntop; ++j) {
            const Simplex& s = simp[top][j];
            for (size_t f = 0; f < s.parts.size(); ++f) {
                Simplex face;
                for (size_t t = 0; t < s.parts.size(); ++t)
                    if (t != f) face.parts.push_back(s.parts[t]);
                std::uint32_t fi = simp_index[top - 1].at(simp_key(face));
                std::uint32_t sign = (f % 2 == 0) ? 1 : p - 1;
                bd.at(int(fi), int(j)) = std::uint8_t((bd.at(int(fi), int(j)) + sign) % p);
            }
        }
        kernel = fp_kernel_basis(bd);
    }
    st_dim = long(kernel.size());
    if (st_dim == 0) return 0;
    int m = module.dim;
    std::vector<FpDenseMat> rho;
    for (const auto& g : gamma) rho.push_back(module.act(g));
    if (!rho.empty()) m = rho[0].rows;
    // B: ntop x st columns = kernel vectors
    FpDenseMat B(p, int(ntop), int(st_dim));
    for (long c = 0; c < st_dim; ++c)
        for (size_t r = 0; r < ntop; ++r) B.at(int(r), int(c)) = kernel[c][r];
    // pivot rows: RREF of B^T gives independent columns = row indices of B
    FpDenseMat BT(p, int(st_dim), int(ntop));
    for (long c = 0; c < st_dim; ++c)
        for (size_t r = 0; r < ntop; ++r) BT.at(int(c), int(r)) = B.at(int(r), int(c));
    auto pivot_rows = fp_rref_inplace(BT);
    if (long(pivot_rows.size()) != st_dim) throw std::logic_error("oracle: rank defect");
    FpDenseMat Bpiv(p, int(st_dim), int(st_dim));
    for (long i = 0; i < st_dim; ++i)
        for (long c = 0; c < st_dim; ++c) Bpiv.at(int(i), int(c)) = B.at(pivot_rows[i], int(c));
    FpDenseMat Bpiv_inv = fp_inverse(Bpiv);
    // permutation action of each generator on top simplices
    std::vector<FpDenseMat> rho_st;
    for (const auto& g : gamma) {
        std::vector<std::uint32_t> perm(ntop);
        for (size_t j = 0; j < ntop; ++j) {
            const Simplex& s = simp[top][j];
            Simplex img;
            for (auto [d, i] : s.parts) {
                std::vector<FpVec> rows;
                const std::string& key = verts[d][i];
                for (int r = 0; r < d; ++r) {
                    FpVec v(key.begin() + r * n, key.begin() + (r + 1) * n);
                    rows.push_back(fp_apply(ring, g, v));
                }
                auto rr = fp_rref(ring, rows);
                std::string k2;
                for (const auto& row : rr) k2.append(row.begin(), row.end());
                auto it = std::lower_bound(verts[d].begin(), verts[d].end(), k2);
                img.parts.emplace_back(d, std::uint32_t(it - verts[d].begin()));
            }
            perm[j] = simp_index[top].at(simp_key(img));
        }
        // rho_St = Bpiv_inv * (P B)_piv
        FpDenseMat PBpiv(p, int(st_dim), int(st_dim));
        // (P B)[r] = B[perm^{-1}(r)]: row r of P B is row of B mapped onto r
        std::vector<std::uint32_t> perm_inv(ntop);
        for (size_t j = 0; j < ntop; ++j) perm_inv[perm[j]] = std::uint32_t(j);
        for (long i = 0; i < st_dim; ++i) {
            std::uint32_t src = perm_inv[std::uint32_t(pivot_rows[i])];
            for (long c = 0; c < st_dim; ++c) PBpiv.at(int(i), int(c)) = B.at(int(src), int(c));
        }
        rho_st.push_back(fp_mul(Bpiv_inv, PBpiv));
    }
    // solve dim of {X in M tensor St* : rho_M(g) X = X rho_st(g)}
    long unknowns = long(m) * st_dim;
    FpDenseMat sys(p, int(unknowns * long(gamma.size())), int(unknowns));
    long row = 0;
    for (size_t gi = 0; gi < gamma.size(); ++gi) {
        // (I tensor rho_M - rho_st^T tensor I) vec(X) with X as m x st, vec by columns:
        // condition: rho_M X - X rho_st = 0
        for (long c = 0; c < st_dim; ++c)
            for (int i = 0; i < m; ++i) {
                // equation for entry (i, c) of rho_M X - X rho_st
                for (int k = 0; k < m; ++k) {
                    std::uint8_t v = rho[gi].at(i, k);
                    if (v)
                        sys.at(int(row), int(c * m + k)) =
                            std::uint8_t((sys.at(int(row), int(c * m + k)) + v) % p);
                }
                for (long k = 0; k < st_dim; ++k) {
                    std::uint8_t v = rho_st[gi].at(int(k), int(c));
                    if (v)
                        sys.at(int(row), int(k * m + i)) = std::uint8_t(
                            (sys.at(int(row), int(k * m + i)) + p - v) % p);
                }
                ++row;
            }
    }
    long rank = fp_rank(sys);
    return unknowns - rank;
}

// --------------------------------------------------------------------------
// Levi route
// --------------------------------------------------------------------------

long hom_steinberg_levi(int n, std::uint32_t p, const std::vector<Mat<FpRing>>& gamma,
                        const std::vector<int>& blocks, const FpModule& module,
                        std::uint64_t closure_cap) {
    FpRing ring(p);
    if (std::accumulate(blocks.begin(), blocks.end(), 0) != n)
        throw std::invalid_argument("levi: blocks must sum to n");
    // offsets
    std::vector<int> off{0};
    for (int b : blocks) off.push_back(off.back() + b);
    // gamma must be block upper triangular
    for (const auto& g : gamma)
        for (size_t bi = 0; bi < blocks.size(); ++bi)
            for (size_t bj = 0; bj < bi; ++bj)
                for (int i = off[bi]; i < off[bi + 1]; ++i)
                    for (int j = off[bj]; j < off[bj + 1]; ++j)
                        if (g.at(i, j) % p)
                            throw std::domain_error("levi: generator not in the parabolic");
    // the full unipotent radical must lie in <gamma>
    MatrixGroup<FpRing> G(ring, gamma);
    G.enumerate(closure_cap, false);
    std::vector<Mat<FpRing>> radical;
    for (size_t bi = 0; bi + 1 < blocks.size(); ++bi)
        for (size_t bj = bi + 1; bj < blocks.size(); ++bj)
            for (int i = off[bi]; i < off[bi + 1]; ++i)
                for (int j = off[bj]; j < off[bj + 1]; ++j) {
                    Mat<FpRing> u = Mat<FpRing>::identity(n, ring);
                    u.at(i, j) = 1;
                    radical.push_back(u);
                }
    for (const auto& u : radical) {
        if (!G.contains(u))
            throw std::domain_error("levi: unipotent radical is not inside the subgroup");
        FpDenseMat mu = module.act(u);
        if (!fp_equal(mu, fp_identity(p, mu.rows)))
            throw std::domain_error("levi: radical does not act trivially on the module");
    }
    // Levi images of the generators, deduplicated
    std::vector<Mat<FpRing>> levi;
    std::vector<FpDenseMat> rho, rho_inv;
    for (const auto& g : gamma) {
        Mat<FpRing> l(n, ring);
        for (size_t b = 0; b < blocks.size(); ++b)
            for (int i = off[b]; i < off[b + 1]; ++i)
                for (int j = off[b]; j < off[b + 1]; ++j) l.at(i, j) = g.at(i, j);
        levi.push_back(l);
        rho.push_back(module.act(l));
        rho_inv.push_back(fp_inverse(rho.back()));
    }
    // product flag space: per block, all masks; combined alternating sum
    long total = 0;
    int nb = int(blocks.size());
    std::vector<std::uint32_t> mask_tuple(nb, 0);
    std::function<void(int, int)> rec = [&](int b, int sign_pop) {
        if (b == nb) {
            // build the product flag space as a single flag structure over F_p^n:
            // levels are per-block; serialize per block in block-local coordinates
            // use a combined "dims" built from block dims shifted by offsets
            // Implement directly: product of block flag spaces.
            std::vector<FlagSpace> spaces;
            std::vector<std::vector<int>> bdims(nb);
            std::uint64_t product_size = 1;
            for (int bb = 0; bb < nb; ++bb) {
                ParabolicMask pm{blocks[bb], p, mask_tuple[bb]};
                spaces.push_back(flag_space(pm));
                bdims[bb] = pm.flag_dims();
                product_size *= spaces.back().size();
            }
            // orbit computation over the product
            std::vector<std::uint32_t> radix(nb);
            {
                std::uint64_t acc = 1;
                for (int bb = nb - 1; bb >= 0; --bb) {
                    radix[bb] = std::uint32_t(acc);
                    acc *= spaces[bb].size();
                }
            }
            auto apply_product = [&](size_t gi, std::uint64_t code) {
                std::uint64_t out = 0;
                for (int bb = 0; bb < nb; ++bb) {
                    std::uint32_t idx = std::uint32_t(code / radix[bb] % spaces[bb].size());
                    // act on the block flag with the block submatrix of levi[gi]
                    const std::string& key = spaces[bb].flags[idx];
                    Mat<FpRing> sub(blocks[bb], ring);
                    for (int i = 0; i < blocks[bb]; ++i)
                        for (int j = 0; j < blocks[bb]; ++j)
                            sub.at(i, j) = levi[gi].at(off[bb] + i, off[bb] + j);
                    std::string img = apply_flag(ring, sub, key, blocks[bb], bdims[bb]);
                    out += std::uint64_t(spaces[bb].index.at(img)) * radix[bb];
                }
                return out;
            };
            std::vector<std::uint32_t> orbit_of(product_size, UINT32_MAX);
            int m = rho[0].rows;
            std::vector<FpDenseMat> T(product_size), Tinv(product_size);
            long term = 0;
            std::vector<std::uint64_t> queue;
            for (std::uint64_t start = 0; start < product_size; ++start) {
                if (orbit_of[start] != UINT32_MAX) continue;
                OrbitFixedAccumulator acc(p, m);
                orbit_of[start] = 1;
                T[start] = fp_identity(p, m);
                Tinv[start] = T[start];
                queue.clear();
                queue.push_back(start);
                for (size_t head = 0; head < queue.size(); ++head) {
                    std::uint64_t cur = queue[head];
                    for (size_t gi = 0; gi < levi.size(); ++gi) {
                        std::uint64_t img = apply_product(gi, cur);
                        if (orbit_of[img] == UINT32_MAX) {
                            orbit_of[img] = 1;
                            T[img] = fp_mul(rho[gi], T[cur]);
                            Tinv[img] = fp_mul(Tinv[cur], rho_inv[gi]);
                            queue.push_back(img);
                        } else if (acc.dim() > 0) {
                            FpDenseMat s = fp_mul(Tinv[img], fp_mul(rho[gi], T[cur]));
                            acc.intersect(s);
                        }
                    }
                }
                term += acc.dim();
                for (std::uint64_t idx : queue) {
                    T[idx] = FpDenseMat();
                    Tinv[idx] = FpDenseMat();
                }
            }
            total += (sign_pop % 2 ? -1 : 1) * term;
            return;
        }
        for (std::uint32_t mi = 0; mi < (1u << (blocks[b] - 1)); ++mi) {
            mask_tuple[b] = mi;
            rec(b + 1, sign_pop + __builtin_popcount(mi));
        }
    };
    rec(0, 0);
    if (total < 0) throw std::logic_error("hom_steinberg_levi: negative rank");
    return total;
}

ObstructionReport obstruction_report(const std::string& label, int n, std::uint32_t p,
                                     const std::vector<Mat<FpRing>>& weyl_gens,
                                     int extra_trivial, std::uint64_t closure_cap) {
    FpRing ring(p);
    ObstructionReport rep;
    rep.rank = n;
    rep.weyl_label = label;
    rep.lim.assign(n, 0);
    // minus-one shortcut: if -1 lies in W (p odd), Hom(St, natural) = 0
    bool minus_one = false;
    {
        Mat<FpRing> minus(n, ring);
        for (int i = 0; i < n; ++i) minus.at(i, i) = ring.from_int(-1);
        MatrixGroup<FpRing> W(ring, weyl_gens);
        W.enumerate(closure_cap, false);
        minus_one = W.contains(minus);
    }
    long value = 0;
    long nat = hom_steinberg(n, p, weyl_gens, FpModule::natural(p));
    if (minus_one && nat != 0)
        throw std::logic_error("minus-one shortcut disagrees with the computation");
    rep.used_minusone_shortcut = minus_one;
    value += nat;
    if (extra_trivial > 0)
        value += extra_trivial * hom_steinberg(n, p, weyl_gens, FpModule::trivial(p));
    rep.lim[n - 1] = value;
    return rep;
}

} // namespace zrl
