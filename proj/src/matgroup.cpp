#include "zrl/matgroup.hpp"

#include <algorithm>
#include <numeric>

namespace zrl {

std::vector<FpVec> fp_rref(const FpRing& ring, std::vector<FpVec> rows) {
    if (rows.empty()) return rows;
    size_t n = rows[0].size();
    size_t r = 0;
    for (size_t c = 0; c < n && r < rows.size(); ++c) {
        size_t piv = SIZE_MAX;
        for (size_t i = r; i < rows.size(); ++i)
            if (rows[i][c] % ring.p) { piv = i; break; }
        if (piv == SIZE_MAX) continue;
        std::swap(rows[piv], rows[r]);
        std::uint32_t f = ring.inv(rows[r][c]);
        for (size_t j = 0; j < n; ++j) rows[r][j] = std::uint8_t(ring.mul(rows[r][j], f));
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r) continue;
            std::uint32_t g = rows[i][c] % ring.p;
            if (!g) continue;
            for (size_t j = 0; j < n; ++j)
                rows[i][j] = std::uint8_t(ring.sub(rows[i][j], ring.mul(g, rows[r][j])));
        }
        ++r;
    }
    // drop zero rows
    while (!rows.empty()) {
        bool zero = true;
        for (auto x : rows.back())
            if (x % ring.p) { zero = false; break; }
        if (!zero) break;
        rows.pop_back();
    }
    return rows;
}

FpVec fp_apply(const FpRing& ring, const Mat<FpRing>& m, const FpVec& v) {
    FpVec out(v.size(), 0);
    for (int i = 0; i < m.n; ++i) {
        std::uint32_t acc = 0;
        for (int j = 0; j < m.n; ++j) acc = ring.add(acc, ring.mul(m.at(i, j), v[j]));
        out[i] = std::uint8_t(acc);
    }
    return out;
}

OrbitPoint make_vector_point(const FpVec& v) {
    OrbitPoint p;
    p.bytes.assign(v.begin(), v.end());
    return p;
}

OrbitPoint make_subspace_point(const FpRing& ring, const std::vector<FpVec>& basis) {
    auto rr = fp_rref(ring, basis);
    OrbitPoint p;
    for (const auto& row : rr) p.bytes.append(row.begin(), row.end());
    return p;
}

OrbitPoint make_flag_point(const FpRing& ring, const std::vector<std::vector<FpVec>>& levels,
                           std::vector<int>* dims_out) {
    OrbitPoint p;
    if (dims_out) dims_out->clear();
    for (const auto& lvl : levels) {
        auto rr = fp_rref(ring, lvl);
        if (dims_out) dims_out->push_back(int(rr.size()));
        for (const auto& row : rr) p.bytes.append(row.begin(), row.end());
    }
    return p;
}

OrbitPoint apply_point(const FpRing& ring, const Mat<FpRing>& g, const OrbitData& shape,
                       const OrbitPoint& p) {
    int n = shape.n;
    OrbitPoint out;
    switch (shape.action) {
    case OrbitAction::Vector: {
        FpVec v(p.bytes.begin(), p.bytes.end());
        auto w = fp_apply(ring, g, v);
        out.bytes.assign(w.begin(), w.end());
        return out;
    }
    case OrbitAction::Subspace:
    case OrbitAction::Flag: {
        size_t off = 0;
        for (int dim : shape.level_dims) {
            std::vector<FpVec> rows;
            rows.reserve(dim);
            for (int r = 0; r < dim; ++r) {
                FpVec v(p.bytes.begin() + off, p.bytes.begin() + off + n);
                off += n;
                rows.push_back(fp_apply(ring, g, v));
            }
            auto rr = fp_rref(ring, rows);
            for (const auto& row : rr) out.bytes.append(row.begin(), row.end());
        }
        return out;
    }
    }
    return out;
}

OrbitData orbit_with_schreier(const FpRing& ring, const std::vector<Mat<FpRing>>& gens,
                              OrbitAction action, const OrbitPoint& base,
                              const std::vector<int>& level_dims, int n, std::uint64_t cap) {
    OrbitData od;
    od.action = action;
    od.n = n;
    od.level_dims = level_dims;
    od.points.push_back(base);
    od.parent.push_back(-1);
    od.via_gen.push_back(-1);
    od.index.emplace(base, 0);
    for (std::uint32_t head = 0; head < od.points.size(); ++head) {
        OrbitPoint cur = od.points[head];
        for (size_t gi = 0; gi < gens.size(); ++gi) {
            OrbitPoint img = apply_point(ring, gens[gi], od, cur);
            if (od.index.count(img)) continue;
            if (od.points.size() + 1 > cap)
                throw ClosureOverflow(cap);
            od.index.emplace(img, std::uint32_t(od.points.size()));
            od.points.push_back(std::move(img));
            od.parent.push_back(int(head));
            od.via_gen.push_back(int(gi));
        }
    }
    return od;
}

Mat<FpRing> orbit_transversal(const FpRing& ring, const std::vector<Mat<FpRing>>& gens,
                              const OrbitData& orbit, std::uint32_t idx) {
    std::vector<int> path;
    for (int cur = int(idx); orbit.parent[cur] >= 0; cur = orbit.parent[cur])
        path.push_back(orbit.via_gen[cur]);
    Mat<FpRing> t = Mat<FpRing>::identity(orbit.n, ring);
    for (auto it = path.rbegin(); it != path.rend(); ++it) t = mat_mul(ring, gens[*it], t);
    return t;
}

std::vector<Mat<FpRing>> stabilizer_generators(const FpRing& ring,
                                               const std::vector<Mat<FpRing>>& gens,
                                               const OrbitData& orbit) {
    // transversal matrices for every point, then the Schreier generators
    std::vector<Mat<FpRing>> trans(orbit.points.size());
    std::vector<Mat<FpRing>> trans_inv(orbit.points.size());
    trans[0] = Mat<FpRing>::identity(orbit.n, ring);
    trans_inv[0] = trans[0];
    for (std::uint32_t i = 1; i < orbit.points.size(); ++i) {
        trans[i] = mat_mul(ring, gens[orbit.via_gen[i]], trans[orbit.parent[i]]);
        trans_inv[i] = mat_inv(ring, trans[i]);
    }
    std::vector<Mat<FpRing>> out;
    std::unordered_set<PackedKey, PackedKeyHash> seen;
    for (std::uint32_t i = 0; i < orbit.points.size(); ++i) {
        for (size_t gi = 0; gi < gens.size(); ++gi) {
            OrbitPoint img = apply_point(ring, gens[gi], orbit, orbit.points[i]);
            std::uint32_t j = orbit.index.at(img);
            Mat<FpRing> s = mat_mul(ring, trans_inv[j], mat_mul(ring, gens[gi], trans[i]));
            if (mat_is_identity(ring, s)) continue;
            if (seen.insert(packed_key_of(ring, s)).second) out.push_back(std::move(s));
        }
    }
    return out;
}

int fixed_subspace_dim(const FpRing& ring, const std::vector<Mat<FpRing>>& gens, int d) {
    // kernel of the stacked (g - 1)
    std::vector<FpVec> rows;
    for (const auto& g : gens) {
        if (g.n != d) throw std::invalid_argument("fixed_subspace_dim: dimension mismatch");
        for (int i = 0; i < d; ++i) {
            FpVec row(d, 0);
            for (int j = 0; j < d; ++j)
                row[j] = std::uint8_t(ring.sub(g.at(i, j), i == j ? 1 : 0));
            rows.push_back(std::move(row));
        }
    }
    auto rr = fp_rref(ring, rows);
    return d - int(rr.size());
}

namespace {

std::vector<int> element_orders(const SmallGroupTable& t) {
    std::vector<int> ord(t.order, 0);
    for (int i = 0; i < t.order; ++i) {
        int x = i, o = 1;
        while (x != 0) {
            x = t.mul[x][i];
            ++o;
        }
        ord[i] = o;
    }
    return ord;
}

} // namespace

std::string identify_small_group(const SmallGroupTable& t) {
    int n = t.order;
    if (n <= 0) return "unknown";
    auto ord = element_orders(t);
    bool abelian = true;
    for (int i = 0; i < n && abelian; ++i)
        for (int j = 0; j < i && abelian; ++j)
            if (t.mul[i][j] != t.mul[j][i]) abelian = false;
    int max_order = *std::max_element(ord.begin(), ord.end());
    int center = 0;
    for (int i = 0; i < n; ++i) {
        bool central = true;
        for (int j = 0; j < n && central; ++j)
            if (t.mul[i][j] != t.mul[j][i]) central = false;
        if (central) ++center;
    }
    int involutions = int(std::count(ord.begin(), ord.end(), 2));
    // abelianization order: quotient by the subgroup generated by commutators
    std::vector<int> inv(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (t.mul[i][j] == 0) inv[i] = j;
    std::vector<char> in_comm(n, 0);
    in_comm[0] = 1;
    std::vector<int> frontier{0};
    std::vector<int> comms;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int c = t.mul[t.mul[t.mul[inv[i]][inv[j]]][i]][j];
            if (!in_comm[c]) {
                in_comm[c] = 1;
                frontier.push_back(c);
                comms.push_back(c);
            }
        }
    // close under multiplication
    bool grew = true;
    while (grew) {
        grew = false;
        for (int i = 0; i < n; ++i) {
            if (!in_comm[i]) continue;
            for (int j = 0; j < n; ++j) {
                if (!in_comm[j]) continue;
                int k = t.mul[i][j];
                if (!in_comm[k]) {
                    in_comm[k] = 1;
                    grew = true;
                }
            }
        }
    }
    int comm_order = int(std::count(in_comm.begin(), in_comm.end(), 1));
    int abel = n / comm_order;

    if (abelian) {
        if (max_order == n) return "C" + std::to_string(n);
        if (n == 4 && max_order == 2) return "C2xC2";
        return "unknown";
    }
    if (n == 8 && involutions == 1 && center == 2) return "Q8";
    if (n == 24 && involutions == 1 && center == 2 && abel == 3) return "SL2(F3)";
    if (n == 12 && max_order != 6 && abel == 3 && center == 1) return "A4";
    if (n == 24 && center == 1 && abel == 2 && max_order == 4) return "S4";
    if (n % 2 == 0) {
        int m = n / 2;
        // dihedral: cyclic subgroup of order m plus m reflections
        int expected_inv = (m % 2 == 0) ? m + 1 : m;
        int expected_center = (m % 2 == 0) ? 2 : 1;
        if (m >= 3 && max_order == m && involutions == expected_inv && center == expected_center) {
            if (m == 3) return "S3";
            return "D" + std::to_string(m);
        }
    }
    return "unknown";
}

} // namespace zrl
