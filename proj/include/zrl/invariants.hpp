#pragma once

#include "zrl/catalog.hpp"
#include "zrl/numbers.hpp"

#include <string>
#include <vector>

namespace zrl {

struct HilbertPrefix {
    std::vector<Int> dims; // dims[d] = dimension in degree d, d = 0..D
};

struct MolienResult {
    HilbertPrefix prefix;
    std::vector<long> degrees; // extracted fundamental degrees
};

// Truncated Molien series (1/|W|) sum 1/det(1 - t g) over the enumerated
// group, grouped by characteristic polynomial; factors the series as
// prod 1/(1 - t^{d_i}) and extracts the degrees (throws if the factorization
// fails, i.e. the group is not a reflection group).
MolienResult molien_degrees(const Realization& real, int max_degree,
                            std::uint64_t cap = 4'000'000);

// coefficients of prod 1/(1 - t^d) through degree D
std::vector<Int> degree_series(const std::vector<long>& degrees, int D);

// per-degree dimensions of the invariants of the polynomial algebra over F_p
HilbertPrefix modular_invariant_dims(const FpRing& ring,
                                     const std::vector<Mat<FpRing>>& gens, int nvars,
                                     int max_degree);

struct DegreeCheck {
    bool pass = false;
    int first_mismatch = -1; // degree of the first disagreement when failing
    std::vector<long> char0_degrees;
    HilbertPrefix modular;
};

// PASS iff the modular Hilbert prefix equals prod 1/(1-t^{d_i}) with the
// characteristic-zero degrees through max_degree
DegreeCheck polynomial_degree_check(const std::string& label, std::uint64_t p,
                                    int max_degree);

struct CoinvariantReport {
    std::vector<Int> elementary_divisors; // nonzero diagonal of the Smith form
    int free_rank = 0;
    bool has_p_torsion = false;
    std::vector<Int> torsion; // divisors > 1
};

// Smith normal form of the stacked (1 - g) over the integer matrices of a
// conductor-1 realization; reports the torsion of the coinvariant lattice L_W.
CoinvariantReport coinvariants_torsion(const Realization& real, std::uint64_t p);

// integer Smith normal form diagonal (nonzero entries, each dividing the next)
std::vector<Int> smith_normal_form(std::vector<std::vector<Int>> m);

} // namespace zrl
