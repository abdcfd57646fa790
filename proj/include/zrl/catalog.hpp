#pragma once

#include "zrl/matgroup.hpp"
#include "zrl/numbers.hpp"
#include "zrl/rootsys.hpp"
#include "zrl/zmod.hpp"

#include <optional>
#include <string>
#include <vector>

namespace zrl {

// p admissible iff p odd and p % modulus lies in residues, for every rule.
struct AdmissibilityRule {
    int modulus;
    std::vector<int> residues;
};

struct CatalogEntry {
    std::string label;
    int rank = 0;
    int char_conductor = 1; // conductor of a cyclotomic field containing the character field
    std::vector<AdmissibilityRule> admissible;
    std::vector<long> degrees; // fundamental degrees, ascending
    Int order;                 // = product of degrees
    long reflections = 0;      // = sum (d_i - 1)
    bool enumerable = true;    // enumerably small by default caps
    bool exotic = false;       // character field strictly larger than Q
};

const std::vector<CatalogEntry>& catalog_entries();
const CatalogEntry& catalog_entry(const std::string& label);
bool admissible_odd_prime(const CatalogEntry& e, std::uint64_t p);

// A concrete matrix realization over a cyclotomic field, with the subfield
// pathway used for reductions mod p.
struct Realization {
    std::string label;
    int conductor = 1;
    SubfieldGen subfield;  // entries lie in Q(theta)
    CycRing ring;
    std::vector<Mat<CycRing>> gens;

    int rank() const { return gens.empty() ? 0 : gens[0].n; }
};

Realization build_family2(int m, int r, int n);
Realization build_weyl(const std::string& type);
Realization build_sporadic(const std::string& name);
Realization build_entry(const std::string& label);

// The reflection set a sporadic construction is based on (G29/G31/G34: the
// hyperplane reflections of the proof; others: reflections of the closure).
std::vector<Mat<CycRing>> sporadic_reflections(const std::string& name);

// can the stored matrices be reduced at p (subfield generator has a root)?
bool realizable_mod_p(const Realization& r, std::uint64_t p);

std::vector<Mat<FpRing>> reduce_mod_p(const Realization& r, std::uint64_t p);
std::vector<Mat<ZpkRing>> reduce_mod_zpk(const Realization& r, std::uint64_t p, int k);

// integer matrices of a conductor-1 realization (Weyl groups on coroot bases)
std::vector<std::vector<long>> integer_matrices(const Realization& r);

// Norton-style irreducibility test over F_p (dimension <= 9): spin kernel
// vectors of random group-algebra elements, plus the dual-module test.
bool irreducible_mod_p(const FpRing& ring, const std::vector<Mat<FpRing>>& gens,
                       std::uint64_t seed = 1);

// exhaustive oracle: spin every line; complete for any dimension (a proper
// nonzero submodule always contains a line)
bool irreducible_by_line_search(const FpRing& ring, const std::vector<Mat<FpRing>>& gens);

// dimension of the span of the orbit of `start` under the generator action
int spin_dimension(const FpRing& ring, const std::vector<Mat<FpRing>>& gens, const FpVec& start);

// Pointwise stabilizer W_V of the subspace spanned by `basis`, via orbit plus
// Schreier generators; returns its order and whether the reflections inside it
// generate it. cap bounds the setwise-stabilizer closure.
struct StabilizerReport {
    std::uint64_t setwise_order = 0;
    std::uint64_t pointwise_order = 0;
    long reflections_inside = 0;
    bool reflection_generated = false;
    std::uint64_t orbit_size = 0;
};
StabilizerReport reflection_stabilizer_check(const FpRing& ring,
                                             const std::vector<Mat<FpRing>>& gens,
                                             const std::vector<FpVec>& basis,
                                             std::uint64_t cap = 2'000'000);

// Fixed line of a Sylow p-subgroup generator: random words in the generators
// until an element of order p appears (p exactly divides the group order in
// all needed cases), seeded and bounded.
std::optional<FpVec> sylow_fixed_line(const FpRing& ring, const std::vector<Mat<FpRing>>& gens,
                                      std::uint64_t seed = 1, int max_tries = 4000);

} // namespace zrl
