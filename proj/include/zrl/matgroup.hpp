#pragma once

#include "zrl/ring.hpp"

#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace zrl {

// ---------------------------------------------------------------------------
// Packed matrix keys. Fp/Zpk matrices pack into at most four 64-bit words;
// cyclotomic matrices fall back to an exact serialized string.
// ---------------------------------------------------------------------------

struct PackedKey {
    std::array<std::uint64_t, 4> w{0, 0, 0, 0};
    bool operator==(const PackedKey& o) const { return w == o.w; }
};

struct PackedKeyHash {
    size_t operator()(const PackedKey& k) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull;
        for (auto x : k.w) {
            h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            h *= 0xff51afd7ed558ccdull;
        }
        return size_t(h);
    }
};

template <class R>
struct KeyPolicy {
    using Key = std::string;
    static Key key(const R& ring, const Mat<R>& m) { return mat_key(ring, m); }
    static constexpr bool packable = false;
};

template <class R>
PackedKey packed_key_of(const R& ring, const Mat<R>& m) {
    int bits = int(ring.pack_bits());
    if (bits * m.n * m.n > 256) throw std::length_error("matrix too large to pack");
    PackedKey k;
    int pos = 0;
    for (const auto& e : m.a) {
        std::uint64_t v = ring.pack(e);
        int word = pos >> 6, off = pos & 63;
        k.w[word] |= v << off;
        if (off + bits > 64) k.w[word + 1] |= v >> (64 - off);
        pos += bits;
    }
    return k;
}

template <>
struct KeyPolicy<FpRing> {
    using Key = PackedKey;
    static Key key(const FpRing& ring, const Mat<FpRing>& m) { return packed_key_of(ring, m); }
    static constexpr bool packable = true;
};

template <>
struct KeyPolicy<ZpkRing> {
    using Key = PackedKey;
    static Key key(const ZpkRing& ring, const Mat<ZpkRing>& m) { return packed_key_of(ring, m); }
    static constexpr bool packable = true;
};

template <class K>
struct KeyHashFor {
    size_t operator()(const K& k) const { return std::hash<K>()(k); }
};
template <>
struct KeyHashFor<PackedKey> {
    size_t operator()(const PackedKey& k) const { return PackedKeyHash()(k); }
};

struct ClosureOverflow : std::runtime_error {
    explicit ClosureOverflow(std::uint64_t cap)
        : std::runtime_error("group closure exceeds cap " + std::to_string(cap)) {}
};

// ---------------------------------------------------------------------------
// MatrixGroup: generators plus an optional full enumeration index.
// ---------------------------------------------------------------------------

template <class R>
class MatrixGroup {
public:
    using Key = typename KeyPolicy<R>::Key;
    using KeySet = std::unordered_set<Key, KeyHashFor<Key>>;

    R ring;
    int n = 0;
    std::vector<Mat<R>> gens;

    MatrixGroup() = default;
    MatrixGroup(const R& ring_, std::vector<Mat<R>> gens_)
        : ring(ring_), n(gens_.empty() ? 0 : gens_[0].n), gens(std::move(gens_)) {}

    bool enumerated() const { return enumerated_; }
    std::uint64_t order() const {
        if (!enumerated_) throw std::logic_error("group not enumerated");
        return order_;
    }
    const KeySet& keys() const {
        if (!enumerated_) throw std::logic_error("group not enumerated");
        return keys_;
    }
    const std::vector<Mat<R>>& elements() const {
        if (!have_elements_) throw std::logic_error("elements were not stored");
        return elements_;
    }
    bool contains(const Mat<R>& m) const {
        return keys().count(KeyPolicy<R>::key(ring, m)) != 0;
    }

    // Breadth-first closure. visitor (if given) sees every element exactly once,
    // identity first. Throws ClosureOverflow past `cap`.
    void enumerate(std::uint64_t cap, bool store_elements = true,
                   const std::function<void(const Mat<R>&)>& visitor = nullptr) {
        for (const auto& g : gens) {
            (void)mat_inv(ring, g); // non-invertible generators are rejected here
            if (g.n != n) throw std::invalid_argument("generator dimension mismatch");
        }
        keys_.clear();
        elements_.clear();
        Mat<R> id = Mat<R>::identity(n, ring);
        std::deque<Mat<R>> frontier;
        keys_.insert(KeyPolicy<R>::key(ring, id));
        if (visitor) visitor(id);
        if (store_elements) elements_.push_back(id);
        frontier.push_back(id);
        std::uint64_t count = 1;
        while (!frontier.empty()) {
            Mat<R> x = std::move(frontier.front());
            frontier.pop_front();
            for (const auto& g : gens) {
                Mat<R> y = mat_mul(ring, x, g);
                auto key = KeyPolicy<R>::key(ring, y);
                if (keys_.insert(std::move(key)).second) {
                    if (++count > cap) throw ClosureOverflow(cap);
                    if (visitor) visitor(y);
                    if (store_elements) elements_.push_back(y);
                    frontier.push_back(std::move(y));
                }
            }
        }
        order_ = count;
        enumerated_ = true;
        have_elements_ = store_elements;
    }

private:
    bool enumerated_ = false;
    bool have_elements_ = false;
    std::uint64_t order_ = 0;
    KeySet keys_;
    std::vector<Mat<R>> elements_;
};

template <class R>
MatrixGroup<R> generate_closure(const R& ring, std::vector<Mat<R>> gens, std::uint64_t cap,
                                bool store_elements = true) {
    if (gens.empty()) throw std::invalid_argument("empty generator list");
    MatrixGroup<R> g(ring, std::move(gens));
    g.enumerate(cap, store_elements);
    return g;
}

// true iff g w g^-1 lies in W for every generator w of W (W enumerated).
template <class R>
bool normalizes(const R& ring, const Mat<R>& g, const MatrixGroup<R>& W) {
    Mat<R> gi = mat_inv(ring, g);
    for (const auto& w : W.gens) {
        Mat<R> c = mat_mul(ring, mat_mul(ring, g, w), gi);
        if (!W.contains(c)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Orbits over F_p with Schreier transversals.
// Points: column vectors, subspaces (canonical reduced echelon basis), or
// flags (chains of echelon bases).
// ---------------------------------------------------------------------------

using FpVec = std::vector<std::uint8_t>;

// reduced row echelon form of rows (each row an FpVec of length n); returns rows
std::vector<FpVec> fp_rref(const FpRing& ring, std::vector<FpVec> rows);

FpVec fp_apply(const FpRing& ring, const Mat<FpRing>& m, const FpVec& v);

enum class OrbitAction { Vector, Subspace, Flag };

struct OrbitPoint {
    // serialized canonical form; for Subspace: rref rows concatenated (k rows of n)
    // for Flag: each level's rref concatenated in increasing dimension order
    std::string bytes;
    bool operator==(const OrbitPoint& o) const { return bytes == o.bytes; }
};

struct OrbitPointHash {
    size_t operator()(const OrbitPoint& p) const { return std::hash<std::string>()(p.bytes); }
};

struct OrbitData {
    OrbitAction action = OrbitAction::Vector;
    int n = 0;                              // ambient dimension
    std::vector<int> level_dims;            // subspace/flag dims (Vector: {})
    std::vector<OrbitPoint> points;         // BFS order, base point first
    std::vector<int> parent;                // parent index (-1 for base)
    std::vector<int> via_gen;               // generator index used from parent
    std::unordered_map<OrbitPoint, std::uint32_t, OrbitPointHash> index;

    size_t size() const { return points.size(); }
};

OrbitPoint make_vector_point(const FpVec& v);
OrbitPoint make_subspace_point(const FpRing& ring, const std::vector<FpVec>& basis);
OrbitPoint make_flag_point(const FpRing& ring, const std::vector<std::vector<FpVec>>& levels,
                           std::vector<int>* dims_out = nullptr);

OrbitPoint apply_point(const FpRing& ring, const Mat<FpRing>& g, const OrbitData& shape,
                       const OrbitPoint& p);

OrbitData orbit_with_schreier(const FpRing& ring, const std::vector<Mat<FpRing>>& gens,
                              OrbitAction action, const OrbitPoint& base,
                              const std::vector<int>& level_dims, int n,
                              std::uint64_t cap = 5'000'000);

// transversal matrix mapping the base point to points[idx]
Mat<FpRing> orbit_transversal(const FpRing& ring, const std::vector<Mat<FpRing>>& gens,
                              const OrbitData& orbit, std::uint32_t idx);

// Schreier generators of the stabilizer of the base point, deduplicated.
std::vector<Mat<FpRing>> stabilizer_generators(const FpRing& ring,
                                               const std::vector<Mat<FpRing>>& gens,
                                               const OrbitData& orbit);

// dimension of the simultaneous fixed space of the generators on F_p^d
int fixed_subspace_dim(const FpRing& ring, const std::vector<Mat<FpRing>>& gens, int d);

// ---------------------------------------------------------------------------
// Small-group quotients and identification.
// ---------------------------------------------------------------------------

struct SmallGroupTable {
    int order = 0;
    std::vector<std::vector<int>> mul; // mul[i][j], index 0 = identity
};

inline bool KeyLess(const PackedKey& a, const PackedKey& b) { return a.w < b.w; }
inline bool KeyLess(const std::string& a, const std::string& b) { return a < b; }

// Multiplication table of <Ngens, W> / (scalars * W). W must be enumerated with
// elements stored and normalized by every N generator.
template <class R>
SmallGroupTable quotient_mod_scalars_and_subgroup(const R& ring,
                                                  const std::vector<Mat<R>>& n_gens,
                                                  const MatrixGroup<R>& W,
                                                  std::uint64_t cap = 2'000'000,
                                                  int quotient_cap = 20000) {
    using Key = typename KeyPolicy<R>::Key;
    for (const auto& g : n_gens)
        if (!normalizes(ring, g, W))
            throw std::domain_error("subgroup is not normalized by the given generators");
    std::vector<Mat<R>> all = W.gens;
    all.insert(all.end(), n_gens.begin(), n_gens.end());
    MatrixGroup<R> G(ring, all);
    G.enumerate(cap, true);
    // scalar matrices inside G
    std::vector<Mat<R>> scalars;
    for (const auto& g : G.elements()) {
        bool scalar = true;
        for (int i = 0; i < g.n && scalar; ++i)
            for (int j = 0; j < g.n && scalar; ++j) {
                if (i == j) {
                    if (!ring.eq(g.at(i, j), g.at(0, 0))) scalar = false;
                } else if (!ring.is_zero(g.at(i, j)))
                    scalar = false;
            }
        if (scalar) scalars.push_back(g);
    }
    // kernel K = scalars * W (normal: scalars are central, W normal in G)
    std::vector<Mat<R>> kernel;
    std::unordered_set<Key, KeyHashFor<Key>> kseen;
    for (const auto& s : scalars)
        for (const auto& w : W.elements()) {
            Mat<R> k = mat_mul(ring, s, w);
            auto key = KeyPolicy<R>::key(ring, k);
            if (kseen.insert(key).second) kernel.push_back(std::move(k));
        }
    // label cosets: sweep the elements, marking each kernel translate
    std::unordered_map<Key, int, KeyHashFor<Key>> coset_of;
    std::vector<Mat<R>> reps;
    {
        Mat<R> id = Mat<R>::identity(G.n, ring);
        auto label = [&](const Mat<R>& g) {
            if (coset_of.count(KeyPolicy<R>::key(ring, g))) return;
            int idx = int(reps.size());
            reps.push_back(g);
            if (int(reps.size()) > quotient_cap) throw ClosureOverflow(quotient_cap);
            for (const auto& k : kernel)
                coset_of.emplace(KeyPolicy<R>::key(ring, mat_mul(ring, k, g)), idx);
        };
        label(id);
        for (const auto& g : G.elements()) label(g);
    }
    SmallGroupTable t;
    t.order = int(reps.size());
    t.mul.assign(t.order, std::vector<int>(t.order, 0));
    for (int i = 0; i < t.order; ++i)
        for (int j = 0; j < t.order; ++j)
            t.mul[i][j] = coset_of.at(KeyPolicy<R>::key(ring, mat_mul(ring, reps[i], reps[j])));
    return t;
}

// name among {C_n, C2xC2, S3, S4, A4, D_n, Q8, SL2(F3)}; "unknown" otherwise
std::string identify_small_group(const SmallGroupTable& t);

} // namespace zrl
