#pragma once

#include "zrl/fpsolve.hpp"
#include "zrl/matgroup.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace zrl {

// Parabolic subgroups P_I of GL_n(F_p): I indexes the simple positions inside
// P_I, so flags of type I omit the subspace dimensions listed in I.
// I = {1..n-1} gives P = G (one flag); I = {} gives the Borel (complete flags).
struct ParabolicMask {
    int n = 2;
    std::uint32_t p = 3;
    std::uint32_t I = 0; // bit d-1 set <=> dimension d omitted (d in 1..n-1)

    std::vector<int> flag_dims() const {
        std::vector<int> dims;
        for (int d = 1; d < n; ++d)
            if (!(I >> (d - 1) & 1)) dims.push_back(d);
        return dims;
    }
    int popcount() const { return __builtin_popcount(I); }
};

// A module for a subgroup of GL_n(F_p): a dimension and an evaluation map
// defined on the relevant matrices (it must restrict to a homomorphism on the
// subgroup the computation runs over).
struct FpModule {
    int dim = 1;
    std::function<FpDenseMat(const Mat<FpRing>&)> act;

    static FpModule trivial(std::uint32_t p);
    static FpModule natural(std::uint32_t p);
    // action on the span of the first k coordinates (must be invariant)
    static FpModule natural_sub(std::uint32_t p, int k);
    // action on the quotient by the span of the first k coordinates
    static FpModule natural_quotient(std::uint32_t p, int k);
    // subquotient slice spanned by coordinates [from, from + k) (0-based)
    static FpModule natural_slice(std::uint32_t p, int from, int k);
    // one-dimensional module given by a scalar character
    static FpModule character(std::uint32_t p,
                              std::function<std::uint32_t(const Mat<FpRing>&)> chi);
};

// Deterministic enumeration of the flag space of type I (sizes = products of
// Gaussian binomials; the standard flag has index 0).
struct FlagSpace {
    ParabolicMask mask;
    std::vector<int> dims;
    std::vector<std::string> flags; // canonical serialized chains
    std::unordered_map<std::string, std::uint32_t> index;

    size_t size() const { return flags.size(); }
};
FlagSpace flag_space(const ParabolicMask& mask, std::uint64_t cap = 5'000'000);

// Gaussian binomial [n choose k]_p as a plain integer
std::uint64_t gaussian_binomial(int n, int k, std::uint64_t p);

// alternating sum over parabolic types of sum over Gamma-orbits of dim M^stab
long hom_steinberg(int n, std::uint32_t p, const std::vector<Mat<FpRing>>& gamma,
                   const FpModule& module, int threads = 0);

// Independent oracle: top homology of the order complex of proper nonzero
// subspaces of F_p^n, with the Gamma-action, solved as an equivariant Hom.
long tits_building_oracle(int n, std::uint32_t p, const std::vector<Mat<FpRing>>& gamma,
                          const FpModule& module);

// Levi route: blocks partition {1..n}; U = full block-unipotent radical must
// lie in <gamma> and act trivially on the module. Computes
// Hom_{Gamma/U}(tensor of block Steinbergs, M) over product flags.
long hom_steinberg_levi(int n, std::uint32_t p, const std::vector<Mat<FpRing>>& gamma,
                        const std::vector<int>& blocks, const FpModule& module,
                        std::uint64_t closure_cap = 12'000'000);

struct ObstructionReport {
    int rank = 0;
    std::string weyl_label;
    std::vector<long> lim; // lim^i for i = 0 .. rank-1 (nonzero only at rank-1)
    bool used_minusone_shortcut = false;
    bool all_zero() const {
        for (long v : lim)
            if (v) return false;
        return true;
    }
};

// module parts: natural E plus extra trivial coordinates
ObstructionReport obstruction_report(const std::string& label, int n, std::uint32_t p,
                                     const std::vector<Mat<FpRing>>& weyl_gens,
                                     int extra_trivial = 0,
                                     std::uint64_t closure_cap = 12'000'000);

} // namespace zrl
