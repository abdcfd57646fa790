#pragma once

#include "zrl/matgroup.hpp"
#include "zrl/rootsys.hpp"

#include <map>
#include <string>
#include <variant>
#include <vector>

namespace zrl {

// Explicit centralizer models: SL3^3/C3 (inside 3E6), SL9/C3 (inside E8),
// SL6 o SL3 (inside 2E7). Elements are stored modulo the central C3, in the
// lexicographically least central translate. All matrices live over Q(zeta36).
enum class Model { TripleSL3, SL9, SL6xSL3 };
enum class Ambient { E6, E7, E8 };

struct ModelElem {
    Model model = Model::TripleSL3;
    std::vector<Mat<CycRing>> comp;

    const std::string& key() const; // canonical-form serialization, cached
    bool operator==(const ModelElem& o) const { return key() == o.key(); }

private:
    mutable std::string key_;
};

const CycRing& model_ring();

ModelElem model_identity(Model m);
ModelElem model_make(Model m, std::vector<Mat<CycRing>> comp); // canonicalizes
ModelElem model_mul(const ModelElem& a, const ModelElem& b);
ModelElem model_inv(const ModelElem& a);
// x^c = c^-1 x c, the conjugation convention used for stated induced matrices
ModelElem model_conj(const ModelElem& x, const ModelElem& c);
// the two outer conjugations on the TripleSL3 model:
// s1: [g1,g2,g3] -> [g2,g3,g1];  s2: [g1,g2,g3] -> [g1^-T, g3^-T, g2^-T]
ModelElem model_conj_s1(const ModelElem& x);
ModelElem model_conj_s2(const ModelElem& x);

// trace on the 27-dimensional module of triples (TripleSL3 only)
Cyc trace27(const ModelElem& x);
// exact adjoint trace on e6 / e7 / e8 via the branching formulas; the e7 trace
// of a TripleSL3 element uses the inclusion 3E6 < 2E7.
Cyc adjoint_trace_model(const ModelElem& x, Ambient ambient);

// named elements: beta, gamma, tau1, tau2 and the per-model sets from the
// construction; relations are asserted at build time.
struct NamedElements {
    std::map<std::string, Mat<CycRing>> sl3;  // beta, gamma, tau1, tau2, sigma23
    std::map<std::string, ModelElem> elems;   // model-specific named elements
};
const NamedElements& named_elements(Model m);

struct ClassTableRow {
    std::string tag;
    std::vector<Cyc> invariant;
};
struct ClassTable {
    Ambient ambient;
    std::vector<ClassTableRow> rows;
};
// trace-invariant tuples anchored at the named representatives
const ClassTable& class_table(Ambient ambient);
std::vector<Cyc> class_invariant(const ModelElem& x, Ambient ambient);
std::string class_tag(const ModelElem& x, Ambient ambient);

// enumerate the subgroup generated by commuting order-3 elements (cap 3^6),
// with exponent vectors relative to the given ordered basis. `quotient` lists
// central elements to quotient by (e.g. the center z of 3E6 when working in
// the adjoint group E6): elements are identified with their translates.
struct SubgroupEnum {
    std::vector<ModelElem> elements; // index 0 = identity
    std::vector<FpVec> exponents;    // exponent vector per element
    std::map<std::string, int> index;
    std::vector<ModelElem> translates; // identity + quotient subgroup elements
    int lookup(const ModelElem& x) const; // -1 if absent
};
SubgroupEnum enumerate_elementary_abelian(const std::vector<ModelElem>& basis,
                                          const std::vector<ModelElem>& quotient = {});

// multiset of class tags over the nontrivial elements
std::map<std::string, int> class_distribution(const std::vector<ModelElem>& gens,
                                              Ambient ambient);

// matrix (columns convention) of x -> x^c on the subgroup spanned by `basis`
struct TwistS1 {};
struct TwistS2 {};
using Conjugator = std::variant<ModelElem, TwistS1, TwistS2>;
Mat<FpRing> induced_matrix(const Conjugator& c, const std::vector<ModelElem>& basis,
                           const std::vector<ModelElem>& quotient = {});

} // namespace zrl
