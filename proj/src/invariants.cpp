#include "zrl/invariants.hpp"

#include "zrl/fpsolve.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace zrl {

namespace {

// elementary symmetric functions from power sums (Newton), exact over the field
std::vector<Cyc> char_poly_rev(const CycRing& ring, const Mat<CycRing>& g) {
    // det(1 - t g) = 1 - e1 t + e2 t^2 - ... +- en t^n
    int n = g.n;
    std::vector<Cyc> p; // power traces p_1..p_n
    Mat<CycRing> x = g;
    for (int k = 1; k <= n; ++k) {
        Cyc tr(*ring.F);
        for (int i = 0; i < n; ++i) tr += x.at(i, i);
        p.push_back(tr);
        if (k < n) x = mat_mul(ring, x, g);
    }
    std::vector<Cyc> e{Cyc(*ring.F, Rat(1))};
    for (int k = 1; k <= n; ++k) {
        Cyc acc(*ring.F);
        for (int i = 1; i <= k; ++i) {
            Cyc term = e[k - i] * p[i - 1];
            if (i % 2 == 0) term = -term;
            acc += term;
        }
        e.push_back(acc.scaled(Rat(1, k)));
    }
    std::vector<Cyc> out;
    for (int k = 0; k <= n; ++k) {
        Cyc c = e[k];
        if (k % 2 == 1) c = -c;
        out.push_back(c);
    }
    return out;
}

std::string poly_key(const std::vector<Cyc>& poly) {
    std::string out;
    for (const auto& c : poly) c.hash_append(out);
    return out;
}

} // namespace

MolienResult molien_degrees(const Realization& real, int max_degree, std::uint64_t cap) {
    const CycRing& ring = real.ring;
    int n = real.rank();
    std::map<std::string, std::pair<std::vector<Cyc>, std::uint64_t>> classes;
    MatrixGroup<CycRing> G(ring, real.gens);
    G.enumerate(cap, false, [&](const Mat<CycRing>& g) {
        auto poly = char_poly_rev(ring, g);
        auto key = poly_key(poly);
        auto it = classes.find(key);
        if (it == classes.end())
            classes.emplace(key, std::make_pair(std::move(poly), std::uint64_t(1)));
        else
            ++it->second.second;
    });
    int D = max_degree;
    std::vector<Cyc> series(D + 1, Cyc(*ring.F));
    for (const auto& [key, entry] : classes) {
        const auto& [poly, mult] = entry;
        // invert the polynomial as a power series: s satisfies poly * s = 1
        std::vector<Cyc> s(D + 1, Cyc(*ring.F));
        s[0] = Cyc(*ring.F, Rat(1));
        for (int d = 1; d <= D; ++d) {
            Cyc acc(*ring.F);
            for (int k = 1; k <= std::min<int>(d, n); ++k)
                if (!poly[k].is_zero()) acc += poly[k] * s[d - k];
            s[d] = -acc;
        }
        Rat m = Rat(std::int64_t(mult));
        for (int d = 0; d <= D; ++d) series[d] += s[d].scaled(m);
    }
    Rat inv_order(1, long(G.order()));
    MolienResult out;
    out.prefix.dims.resize(D + 1);
    std::vector<Rat> avg(D + 1);
    for (int d = 0; d <= D; ++d) {
        Cyc v = series[d];
        if (!v.is_rational())
            throw std::logic_error("molien: non-rational series coefficient");
        Rat r = v.rational_part() * inv_order;
        if (den(r) != 1 || r < 0)
            throw std::logic_error("molien: coefficient is not a non-negative integer");
        avg[d] = r;
        out.prefix.dims[d] = num(r);
    }
    // extract degrees: F = series^{-1} must be prod (1 - t^{d_i})
    std::vector<Rat> F(D + 1, Rat(0));
    F[0] = 1;
    for (int d = 1; d <= D; ++d) {
        Rat acc(0);
        for (int k = 1; k <= d; ++k) acc += F[d - k] * avg[k];
        F[d] = -acc; // since sum_{k} F[k] avg[d-k] = 0 for d >= 1
    }
    std::vector<long> degrees;
    std::vector<Rat> G2 = F;
    for (int count = 0; count < n; ++count) {
        int e = -1;
        for (int d = 1; d <= D; ++d)
            if (G2[d] != 0) { e = d; break; }
        if (e < 0)
            throw std::domain_error("molien: fewer factors than the rank (truncation too short?)");
        // with repeated degrees the lowest coefficient is -(multiplicity)
        if (G2[e] >= 0)
            throw std::domain_error("molien: series does not factor as a reflection ring");
        degrees.push_back(e);
        // divide by (1 - t^e): G2 <- G2 / (1 - t^e)
        for (int d = e; d <= D; ++d) G2[d] += G2[d - e];
    }
    for (int d = 0; d <= D; ++d)
        if ((d == 0 && G2[d] != 1) || (d > 0 && G2[d] != 0))
            throw std::domain_error("molien: residual factor is not 1");
    std::sort(degrees.begin(), degrees.end());
    out.degrees = degrees;
    return out;
}

std::vector<Int> degree_series(const std::vector<long>& degrees, int D) {
    std::vector<Int> co(D + 1, Int(0));
    co[0] = 1;
    for (long d : degrees)
        for (int i = int(d); i <= D; ++i) co[i] += co[i - d];
    return co;
}

namespace {

std::vector<std::vector<int>> monomials(int n, int d) {
    if (n == 1) return {{d}};
    std::vector<std::vector<int>> out;
    for (int e = 0; e <= d; ++e)
        for (auto rest : monomials(n - 1, d - e)) {
            rest.insert(rest.begin(), e);
            out.push_back(std::move(rest));
        }
    return out;
}

} // namespace

HilbertPrefix modular_invariant_dims(const FpRing& ring,
                                     const std::vector<Mat<FpRing>>& gens, int nvars,
                                     int max_degree) {
    HilbertPrefix out;
    out.dims.resize(max_degree + 1);
    out.dims[0] = 1;
    std::uint32_t p = ring.p;
    for (int d = 1; d <= max_degree; ++d) {
        auto monos = monomials(nvars, d);
        std::map<std::vector<int>, int> idx;
        for (size_t i = 0; i < monos.size(); ++i) idx[monos[i]] = int(i);
        int N = int(monos.size());
        // rows of (S(g)^T - I) stacked over generators, where S(g)[m][m'] is the
        // coefficient of m' in the substituted monomial m(g x)
        FpDenseMat sys(p, N * int(gens.size()), N);
        for (size_t gi = 0; gi < gens.size(); ++gi) {
            const auto& g = gens[gi];
            for (int mi = 0; mi < N; ++mi) {
                // expand prod_k (sum_j g[k][j] x_j)^{e_k}
                std::map<std::vector<int>, std::uint32_t> poly{{std::vector<int>(nvars, 0), 1}};
                for (int k = 0; k < nvars; ++k) {
                    for (int rep = 0; rep < monos[mi][k]; ++rep) {
                        std::map<std::vector<int>, std::uint32_t> next;
                        for (const auto& [mon, c] : poly) {
                            for (int j = 0; j < nvars; ++j) {
                                std::uint32_t gkj = g.at(k, j) % p;
                                if (!gkj) continue;
                                auto m2 = mon;
                                ++m2[j];
                                auto& slot = next[m2];
                                slot = std::uint32_t((slot + std::uint64_t(c) * gkj) % p);
                            }
                        }
                        poly = std::move(next);
                    }
                }
                for (const auto& [mon, c] : poly) {
                    if (!c) continue;
                    int mj = idx.at(mon);
                    // transpose: row mj, column mi
                    int row = int(gi) * N + mj;
                    sys.at(row, mi) = std::uint8_t((sys.at(row, mi) + c) % p);
                }
            }
            for (int mi = 0; mi < N; ++mi) {
                int row = int(gi) * N + mi;
                sys.at(row, mi) = std::uint8_t((sys.at(row, mi) + p - 1) % p);
            }
        }
        out.dims[d] = N - fp_rank(sys);
    }
    return out;
}

DegreeCheck polynomial_degree_check(const std::string& label, std::uint64_t p,
                                    int max_degree) {
    const CatalogEntry& entry = catalog_entry(label);
    DegreeCheck out;
    out.char0_degrees.assign(entry.degrees.begin(), entry.degrees.end());
    Realization real = build_entry(label);
    // validate the catalog degrees by Molien when cheaply enumerable
    if (entry.order <= Int(10000)) {
        auto mol = molien_degrees(real, int(2 * entry.degrees.back()) + 2);
        if (mol.degrees != std::vector<long>(entry.degrees.begin(), entry.degrees.end()))
            throw std::logic_error("catalog degrees disagree with Molien for " + label);
    }
    FpRing ring{std::uint32_t(p)};
    auto gens = reduce_mod_p(real, p);
    out.modular = modular_invariant_dims(ring, gens, real.rank(), max_degree);
    auto expect = degree_series(out.char0_degrees, max_degree);
    out.pass = true;
    for (int d = 0; d <= max_degree; ++d) {
        if (out.modular.dims[d] < expect[d])
            throw std::logic_error("modular dimension fell below characteristic zero");
        if (out.modular.dims[d] != expect[d]) {
            out.pass = false;
            out.first_mismatch = d;
            break;
        }
    }
    return out;
}

std::vector<Int> smith_normal_form(std::vector<std::vector<Int>> m) {
    size_t rows = m.size();
    if (rows == 0) return {};
    size_t cols = m[0].size();
    std::vector<Int> divisors;
    size_t r0 = 0, c0 = 0;
    auto abs_int = [](const Int& x) { return x < 0 ? Int(-x) : x; };
    while (r0 < rows && c0 < cols) {
        // find the smallest nonzero entry in the remaining block
        size_t pr = rows, pc = cols;
        Int best = 0;
        for (size_t i = r0; i < rows; ++i)
            for (size_t j = c0; j < cols; ++j)
                if (m[i][j] != 0 && (best == 0 || abs_int(m[i][j]) < best)) {
                    best = abs_int(m[i][j]);
                    pr = i;
                    pc = j;
                }
        if (pr == rows) break; // all zero
        std::swap(m[r0], m[pr]);
        for (size_t i = 0; i < rows; ++i) std::swap(m[i][c0], m[i][pc]);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (size_t i = r0 + 1; i < rows; ++i) {
                if (m[i][c0] == 0) continue;
                Int q = m[i][c0] / m[r0][c0];
                for (size_t j = c0; j < cols; ++j) m[i][j] -= q * m[r0][j];
                if (m[i][c0] != 0) {
                    std::swap(m[r0], m[i]);
                    clean = false;
                }
            }
            for (size_t j = c0 + 1; j < cols; ++j) {
                if (m[r0][j] == 0) continue;
                Int q = m[r0][j] / m[r0][c0];
                for (size_t i = r0; i < rows; ++i) m[i][j] -= q * m[i][c0];
                if (m[r0][j] != 0) {
                    for (size_t i = 0; i < rows; ++i) std::swap(m[i][c0], m[i][j]);
                    clean = false;
                }
            }
        }
        divisors.push_back(abs_int(m[r0][c0]));
        ++r0;
        ++c0;
    }
    // enforce the divisibility chain
    for (size_t i = 0; i + 1 < divisors.size(); ++i)
        for (size_t j = i + 1; j < divisors.size(); ++j)
            if (divisors[j] % divisors[i] != 0) {
                Int a = divisors[i], b = divisors[j];
                Int g = boost::multiprecision::gcd(a, b);
                Int l = a / g * b;
                divisors[i] = g;
                divisors[j] = l;
            }
    std::sort(divisors.begin(), divisors.end());
    return divisors;
}

CoinvariantReport coinvariants_torsion(const Realization& real, std::uint64_t p) {
    auto mats = integer_matrices(real);
    int n = real.rank();
    // columns of (1 - g) for every generator, stacked horizontally
    std::vector<std::vector<Int>> m(n);
    for (const auto& g : mats)
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i)
                m[i].push_back(Int((i == j ? 1 : 0) - g[size_t(i) * n + j]));
    auto div = smith_normal_form(std::move(m));
    CoinvariantReport rep;
    rep.elementary_divisors = div;
    rep.free_rank = n - int(div.size());
    for (const auto& d : div)
        if (d > 1) {
            rep.torsion.push_back(d);
            if (d % Int(p) == 0) rep.has_p_torsion = true;
        }
    return rep;
}

} // namespace zrl
