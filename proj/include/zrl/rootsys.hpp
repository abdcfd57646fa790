#pragma once

#include "zrl/cyclotomic.hpp"
#include "zrl/matgroup.hpp"

#include <string>
#include <vector>

namespace zrl {

// Root system data with Bourbaki simple-root numbering. Roots are stored as
// integer vectors in the simple-root basis, closed under the simple
// reflections. cartan(i, j) = <alpha_j, alpha_i^vee>.
class RootSystem {
public:
    static RootSystem build(const std::string& type); // "A2", "E8", "F4", ...

    const std::string& type() const { return type_; }
    int rank() const { return rank_; }
    int cartan(int i, int j) const { return cartan_[size_t(i) * rank_ + j]; }
    const std::vector<std::vector<int>>& roots() const { return roots_; }

    // <alpha, alpha_i^vee> for a root alpha in simple-root coordinates
    int pairing(const std::vector<int>& alpha, int i) const;

    // matrix of the simple reflection s_j acting on the coroot lattice mod p
    Mat<FpRing> simple_reflection_coroot(const FpRing& ring, int j) const;

    // ambient adjoint dimension: rank + #roots
    int adjoint_dim() const { return rank_ + int(roots_.size()); }

private:
    std::string type_;
    int rank_ = 0;
    std::vector<int> cartan_;
    std::vector<std::vector<int>> roots_;
};

// Order-p torus element h = prod_i h_{alpha_i}(zeta_p^{e_i}), as its exponent
// vector e in F_p^rank. The group law is vector addition.
struct TorusPoint {
    const RootSystem* rs = nullptr;
    std::uint32_t p = 3;
    FpVec e;

    bool is_trivial() const {
        for (auto x : e)
            if (x % p) return false;
        return true;
    }
    TorusPoint mul(const TorusPoint& o) const {
        TorusPoint out = *this;
        for (size_t i = 0; i < e.size(); ++i) out.e[i] = std::uint8_t((e[i] + o.e[i]) % p);
        return out;
    }
    TorusPoint inv() const {
        TorusPoint out = *this;
        for (size_t i = 0; i < e.size(); ++i) out.e[i] = std::uint8_t((p - e[i] % p) % p);
        return out;
    }
};

// exponent k with alpha(h) = zeta_p^k
std::uint32_t root_exponent(const std::vector<int>& alpha, const TorusPoint& h);

// exact trace of Ad(h) on the ambient Lie algebra: rank + sum_alpha alpha(h)
Cyc adjoint_trace_toral(const TorusPoint& h);

// (1/|S|) * sum of traces; must be a non-negative rational integer
long centralizer_dimension(const std::vector<Cyc>& traces);

// A word in the simple reflections n_i (1-based letters); torus letters
// h_{alpha_i}(-1) are recorded by callers but are inert for the torus action.
struct WeylWord {
    std::vector<int> letters; // 1-based simple-root indices
};

// product of simple-reflection matrices on the coroot lattice mod p, acting on
// exponent vectors as h -> w h w^{-1}
Mat<FpRing> weyl_word_matrix(const RootSystem& rs, const FpRing& ring, const WeylWord& w);

TorusPoint apply_weyl_word(const RootSystem& rs, const WeylWord& w, const TorusPoint& h);

} // namespace zrl
