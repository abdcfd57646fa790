#include "zrl/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <map>
#include <random>

#include "zrl/fpsolve.hpp"
#include <sstream>
#include <stdexcept>

namespace zrl {

namespace {

Int product_of(const std::vector<long>& degs) {
    Int o = 1;
    for (long d : degs) o *= d;
    return o;
}

long refl_of(const std::vector<long>& degs) {
    long s = 0;
    for (long d : degs) s += d - 1;
    return s;
}

CatalogEntry make_entry(std::string label, int rank, int cond,
                        std::vector<AdmissibilityRule> adm, std::vector<long> degs,
                        bool enumerable, bool exotic) {
    CatalogEntry e;
    e.label = std::move(label);
    e.rank = rank;
    e.char_conductor = cond;
    e.admissible = std::move(adm);
    std::sort(degs.begin(), degs.end());
    e.order = product_of(degs);
    e.reflections = refl_of(degs);
    e.degrees = std::move(degs);
    e.enumerable = enumerable;
    e.exotic = exotic;
    return e;
}

std::vector<long> weyl_degrees(const std::string& type) {
    char fam = type[0];
    int n = std::stoi(type.substr(1));
    std::vector<long> d;
    switch (fam) {
    case 'A':
        for (int i = 2; i <= n + 1; ++i) d.push_back(i);
        break;
    case 'B':
    case 'C':
        for (int i = 1; i <= n; ++i) d.push_back(2 * i);
        break;
    case 'D':
        for (int i = 1; i < n; ++i) d.push_back(2 * i);
        d.push_back(n);
        break;
    case 'G':
        d = {2, 6};
        break;
    case 'F':
        d = {2, 6, 8, 12};
        break;
    case 'E':
        if (n == 6) d = {2, 5, 6, 8, 9, 12};
        else if (n == 7) d = {2, 6, 8, 10, 12, 14, 18};
        else d = {2, 8, 12, 14, 18, 20, 24, 30};
        break;
    default:
        throw std::invalid_argument("weyl_degrees: " + type);
    }
    return d;
}

std::vector<long> family2_degrees(int m, int r, int n) {
    std::vector<long> d;
    for (int i = 1; i < n; ++i) d.push_back(long(i) * m);
    d.push_back(long(n) * m / r);
    return d;
}

std::vector<AdmissibilityRule> adm_one_mod(int m) {
    if (m <= 2) return {};
    return {{m, {1}}};
}

std::vector<CatalogEntry> build_all_entries() {
    std::vector<CatalogEntry> v;
    for (const char* t : {"A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2", "F4",
                          "E6", "E7", "E8"}) {
        std::string ty(t);
        int rank = std::stoi(ty.substr(1));
        bool enumerable = !(ty == "E7" || ty == "E8");
        v.push_back(make_entry(ty, rank, 1, {}, weyl_degrees(ty), enumerable, false));
    }
    auto fam2 = [&](int m, int r, int n) {
        std::ostringstream os;
        os << "G(" << m << "," << r << "," << n << ")";
        std::vector<AdmissibilityRule> adm;
        if (n == 2 && r == m)
            adm = {{m, {1, m - 1}}};
        else
            adm = adm_one_mod(m);
        bool exotic = m >= 3;
        v.push_back(make_entry(os.str(), n, m, adm, family2_degrees(m, r, n), true, exotic));
    };
    fam2(4, 2, 2);
    fam2(3, 3, 3);
    fam2(3, 1, 2);
    fam2(5, 1, 2);
    fam2(2, 1, 2);
    fam2(5, 5, 2);
    fam2(7, 7, 2);
    fam2(8, 8, 2);
    fam2(9, 9, 2);
    fam2(12, 12, 2);
    v.push_back(make_entry("G5", 2, 3, {{3, {1}}}, {6, 12}, true, true));
    v.push_back(make_entry("G7", 2, 12, {{12, {1}}}, {12, 12}, true, true));
    v.push_back(make_entry("G8", 2, 4, {{4, {1}}}, {8, 12}, true, true));
    v.push_back(make_entry("G10", 2, 12, {{12, {1}}}, {12, 24}, true, true));
    v.push_back(make_entry("G12", 2, 8, {{8, {1, 3}}}, {6, 8}, true, true));
    v.push_back(make_entry("G14", 2, 24, {{3, {1}}, {8, {1, 3}}}, {6, 24}, true, true));
    v.push_back(make_entry("G26", 3, 3, {{3, {1}}}, {6, 12, 18}, true, true));
    v.push_back(make_entry("G29", 4, 4, {{4, {1}}}, {4, 8, 12, 20}, true, true));
    v.push_back(make_entry("G31", 4, 4, {{4, {1}}}, {8, 12, 20, 24}, true, true));
    v.push_back(make_entry("G34", 6, 3, {{3, {1}}}, {6, 12, 18, 24, 30, 42}, false, true));
    // the Weyl group of PU(3): Sigma_3 on the coweight lattice of A2
    v.push_back(make_entry("PU3", 2, 1, {}, {2, 3}, true, false));
    return v;
}

// ---- cyclotomic matrix helpers -------------------------------------------

Mat<CycRing> cyc_mat(const CycRing& R, int n) { return Mat<CycRing>(n, R); }

Mat<CycRing> perm_mat(const CycRing& R, const std::vector<int>& sigma) {
    // sigma is the image list: column j has a 1 in row sigma[j]
    int n = int(sigma.size());
    auto m = cyc_mat(R, n);
    for (int j = 0; j < n; ++j) m.at(sigma[j], j) = R.one();
    return m;
}

Mat<CycRing> diag_mat(const CycRing& R, const std::vector<Cyc>& d) {
    auto m = cyc_mat(R, int(d.size()));
    for (size_t i = 0; i < d.size(); ++i) m.at(int(i), int(i)) = d[i];
    return m;
}

// order-2 unitary reflection with root vector a: r = 1 - 2 a a*/<a,a>
Mat<CycRing> root_reflection(const CycRing& R, const std::vector<Cyc>& a) {
    int n = int(a.size());
    Cyc aa(*R.F);
    for (const auto& x : a) aa += x * x.conj();
    Cyc s = (Cyc(*R.F, Rat(2))) * aa.inverse();
    auto m = cyc_mat(R, n);
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) {
            Cyc v = -(s * a[k] * a[j].conj());
            if (k == j) v += R.one();
            m.at(k, j) = v;
        }
    return m;
}

Realization make_realization(std::string label, int conductor, std::vector<Mat<CycRing>> gens,
                             std::optional<SubfieldGen> sf = std::nullopt) {
    Realization r;
    r.label = std::move(label);
    r.conductor = conductor;
    r.ring = CycRing(CycloField::get(conductor));
    r.subfield = sf ? *sf : SubfieldGen::whole_field(conductor);
    r.gens = std::move(gens);
    return r;
}

std::vector<Mat<CycRing>> quaternion_group_gens(const CycRing& R) {
    // T* = <q_i, q_j, nu> inside SU(2); conductor must contain zeta_4
    const CycloField& F = *R.F;
    int m = F.conductor();
    if (m % 4 != 0) throw std::logic_error("quaternion gens need i in the field");
    Cyc i = Cyc::zeta(F, m / 4);
    auto qi = cyc_mat(R, 2);
    qi.at(0, 0) = i;
    qi.at(1, 1) = -i;
    auto qj = cyc_mat(R, 2);
    qj.at(0, 1) = R.one();
    qj.at(1, 0) = -R.one();
    auto qk = mat_mul(R, qi, qj);
    auto nu = cyc_mat(R, 2);
    Rat half(1, 2);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
            Cyc s = qi.at(r, c) + qj.at(r, c) + qk.at(r, c);
            if (r == c) s -= R.one();
            nu.at(r, c) = s.scaled(half);
        }
    return {qi, qj, nu};
}

} // namespace

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = build_all_entries();
    return entries;
}

const CatalogEntry& catalog_entry(const std::string& label) {
    for (const auto& e : catalog_entries())
        if (e.label == label) return e;
    throw std::invalid_argument("unknown catalog entry: " + label);
}

bool admissible_odd_prime(const CatalogEntry& e, std::uint64_t p) {
    if (p < 3 || p % 2 == 0) return false;
    for (const auto& rule : e.admissible) {
        int rem = int(p % std::uint64_t(rule.modulus));
        if (std::find(rule.residues.begin(), rule.residues.end(), rem) == rule.residues.end())
            return false;
    }
    return true;
}

Realization build_family2(int m, int r, int n) {
    if (r < 1 || m % r != 0 || n < 2 || (m == 2 && r == 2 && n == 2))
        throw std::invalid_argument("build_family2: bad (m,r,n)");
    const CycloField& F = CycloField::get(m);
    CycRing R(F);
    Cyc z = Cyc::zeta(F, 1);
    std::vector<Mat<CycRing>> gens;
    // permutations: adjacent transposition and an n-cycle
    {
        std::vector<int> t(n);
        for (int i = 0; i < n; ++i) t[i] = i;
        std::swap(t[0], t[1]);
        gens.push_back(perm_mat(R, t));
        if (n > 2) {
            std::vector<int> c(n);
            for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
            gens.push_back(perm_mat(R, c));
        }
    }
    // diagonal part A(m,r,n): diag(z, z^-1, 1, ...) and diag(z^r, 1, ...)
    if (m > 1) {
        std::vector<Cyc> d(n, R.one());
        d[0] = z;
        d[1] = z.inverse();
        gens.push_back(diag_mat(R, d));
        if (r < m) {
            std::vector<Cyc> d2(n, R.one());
            d2[0] = Cyc::zeta(F, r);
            gens.push_back(diag_mat(R, d2));
        }
    }
    std::ostringstream os;
    os << "G(" << m << "," << r << "," << n << ")";
    if (n == 2 && r == m) {
        // dihedral case: conjugate into the real subfield Q(zeta + zeta^-1)
        Mat<CycRing> g = cyc_mat(R, 2), gi(2, R);
        g.at(0, 0) = R.one();
        g.at(0, 1) = -z.inverse();
        g.at(1, 0) = R.one();
        g.at(1, 1) = -z;
        gi = mat_inv(R, g);
        SubfieldGen sf = SubfieldGen::real_subfield(m);
        std::vector<Mat<CycRing>> conj;
        for (const auto& x : gens) {
            auto y = mat_mul(R, mat_mul(R, gi, x), g);
            for (const auto& e : y.a)
                if (!sf.coordinates(e))
                    throw std::logic_error("dihedral conjugation left the real subfield");
            conj.push_back(y);
        }
        return make_realization(os.str(), m, std::move(conj), sf);
    }
    return make_realization(os.str(), m, std::move(gens));
}

Realization build_weyl(const std::string& type) {
    RootSystem rs = RootSystem::build(type);
    const CycloField& F = CycloField::get(1);
    CycRing R(F);
    std::vector<Mat<CycRing>> gens;
    for (int j = 0; j < rs.rank(); ++j) {
        auto m = cyc_mat(R, rs.rank());
        for (int i = 0; i < rs.rank(); ++i)
            for (int k = 0; k < rs.rank(); ++k) {
                long v = (i == k ? 1 : 0) - (i == j ? rs.cartan(k, j) : 0);
                m.at(i, k) = Cyc(F, Rat(v));
            }
        gens.push_back(m);
    }
    return make_realization(type, 1, std::move(gens));
}

std::vector<Mat<CycRing>> sporadic_reflections(const std::string& name) {
    if (name == "G29" || name == "G31") {
        const CycloField& F = CycloField::get(4);
        CycRing R(F);
        Cyc i = Cyc::zeta(F, 1);
        std::vector<std::vector<Cyc>> roots;
        auto ipow = [&](int a) { return Cyc::zeta(F, a); };
        for (int j = 0; j < 4; ++j)
            for (int k = j + 1; k < 4; ++k)
                for (int a = 0; a < 4; ++a) {
                    std::vector<Cyc> v(4, Cyc(F));
                    v[j] = R.one();
                    v[k] = -ipow(-a);
                    roots.push_back(v);
                }
        int want = (name == "G29") ? 0 : -1; // G29: sum = 0 mod 4; G31: sum even
        for (int a2 = 0; a2 < 4; ++a2)
            for (int a3 = 0; a3 < 4; ++a3)
                for (int a4 = 0; a4 < 4; ++a4) {
                    int s = (a2 + a3 + a4) % 4;
                    bool take = (name == "G29") ? (s == 0) : (s % 2 == 0);
                    (void)want;
                    if (!take) continue;
                    roots.push_back({R.one(), ipow(-a2), ipow(-a3), ipow(-a4)});
                }
        if (name == "G31")
            for (int j = 0; j < 4; ++j) {
                std::vector<Cyc> v(4, Cyc(F));
                v[j] = R.one();
                roots.push_back(v);
            }
        std::vector<Mat<CycRing>> out;
        for (const auto& a : roots) out.push_back(root_reflection(R, a));
        return out;
    }
    if (name == "G34") {
        const CycloField& F = CycloField::get(3);
        CycRing R(F);
        auto wpow = [&](int a) { return Cyc::zeta(F, a); };
        std::vector<std::vector<Cyc>> roots;
        for (int j = 0; j < 6; ++j)
            for (int k = j + 1; k < 6; ++k)
                for (int a = 0; a < 3; ++a) {
                    std::vector<Cyc> v(6, Cyc(F));
                    v[j] = R.one();
                    v[k] = -wpow(-a);
                    roots.push_back(v);
                }
        for (int a2 = 0; a2 < 3; ++a2)
            for (int a3 = 0; a3 < 3; ++a3)
                for (int a4 = 0; a4 < 3; ++a4)
                    for (int a5 = 0; a5 < 3; ++a5)
                        for (int a6 = 0; a6 < 3; ++a6) {
                            if ((a2 + a3 + a4 + a5 + a6) % 3 != 0) continue;
                            roots.push_back({R.one(), wpow(-a2), wpow(-a3), wpow(-a4),
                                             wpow(-a5), wpow(-a6)});
                        }
        std::vector<Mat<CycRing>> out;
        for (const auto& a : roots) out.push_back(root_reflection(R, a));
        return out;
    }
    throw std::invalid_argument("sporadic_reflections: " + name);
}

Realization build_sporadic(const std::string& name) {
    if (name == "G5") {
        const CycloField& F = CycloField::get(3);
        CycRing R(F);
        Cyc w = Cyc::zeta(F, 1);
        auto s = diag_mat(R, {R.one(), w});
        auto t = cyc_mat(R, 2);
        Rat third(1, 3);
        t.at(0, 0) = (Cyc(F, Rat(2)) + w).scaled(third);
        t.at(0, 1) = -R.one();
        t.at(1, 0) = w.scaled(Rat(2, 3));
        t.at(1, 1) = (R.one() + w.scaled(Rat(2))).scaled(third);
        return make_realization("G5", 3, {s, t});
    }
    if (name == "G7" || name == "G10") {
        const CycloField& F = CycloField::get(12);
        CycRing R(F);
        auto gens = quaternion_group_gens(R);
        gens.push_back(diag_mat(R, {Cyc::zeta(F, 1), Cyc::zeta(F, 1)})); // zeta12 I
        if (name == "G10") gens.push_back(diag_mat(R, {R.one(), Cyc::zeta(F, 3)}));
        return make_realization(name, 12, std::move(gens));
    }
    if (name == "G8") {
        const CycloField& F = CycloField::get(4);
        CycRing R(F);
        Cyc i = Cyc::zeta(F, 1);
        Realization f2 = build_family2(4, 2, 2);
        std::vector<Mat<CycRing>> gens = f2.gens;
        auto h1 = cyc_mat(R, 2);
        h1.at(0, 1) = i;
        h1.at(1, 0) = R.one();
        auto h2 = cyc_mat(R, 2);
        Cyc half1pi = (R.one() + i).scaled(Rat(1, 2));
        h2.at(0, 0) = half1pi;
        h2.at(0, 1) = half1pi;
        h2.at(1, 0) = half1pi * i;
        h2.at(1, 1) = -(half1pi * i);
        gens.push_back(h1);
        gens.push_back(h2);
        return make_realization("G8", 4, std::move(gens));
    }
    if (name == "G12") {
        const CycloField& F = CycloField::get(8);
        CycRing R(F);
        Cyc r2 = Cyc::zeta(F, 1) + Cyc::zeta(F, 3); // sqrt(-2)
        Rat half(1, 2);
        auto s0 = diag_mat(R, {R.one(), -R.one()});
        auto mk = [&](int sgn) {
            auto t = cyc_mat(R, 2);
            t.at(0, 0) = Cyc(F, Rat(-1, 2));
            t.at(0, 1) = ((-R.one()) + r2.scaled(Rat(sgn))).scaled(half);
            t.at(1, 0) = ((-R.one()) - r2.scaled(Rat(sgn))).scaled(half);
            t.at(1, 1) = Cyc(F, Rat(1, 2));
            return t;
        };
        SubfieldGen sf = SubfieldGen::from_theta(8, r2);
        return make_realization("G12", 8, {s0, mk(-1), mk(1)}, sf);
    }
    if (name == "G14") {
        const CycloField& F = CycloField::get(24);
        CycRing R(F);
        auto gens = quaternion_group_gens(R);
        gens.push_back(diag_mat(R, {Cyc::zeta(F, 8), Cyc::zeta(F, 8)})); // omega I
        gens.push_back(diag_mat(R, {Cyc::zeta(F, 9), Cyc::zeta(F, 3)})); // diag(z8^3, z8)
        return make_realization("G14", 24, std::move(gens));
    }
    if (name == "G26") {
        const CycloField& F = CycloField::get(3);
        CycRing R(F);
        Cyc w = Cyc::zeta(F, 1);
        Realization f2 = build_family2(3, 3, 3);
        std::vector<Mat<CycRing>> gens = f2.gens;
        gens.push_back(diag_mat(R, {R.one(), R.one(), w * w}));
        auto r2m = cyc_mat(R, 3);
        Cyc sqrtm3 = w - w * w; // omega - omega^2
        Cyc f = sqrtm3.inverse();
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r2m.at(i, j) = f * (i == j ? w : w * w);
        gens.push_back(r2m);
        return make_realization("G26", 3, std::move(gens));
    }
    if (name == "G29" || name == "G31" || name == "G34") {
        auto refl = sporadic_reflections(name);
        std::vector<Mat<CycRing>> gens;
        if (name == "G29") {
            gens = {refl[0], refl[12], refl[20], refl[4], refl[24], refl[30]};
        } else if (name == "G31") {
            gens = refl; // all sixty reflections; the group is only ~46k elements
        } else {
            // G34: adjacent swaps, one twisted swap, one linear-form reflection
            gens = {refl[0], refl[15], refl[27], refl[36], refl[42], refl[1], refl[45]};
        }
        return make_realization(name, name == "G34" ? 3 : 4, std::move(gens));
    }
    throw std::invalid_argument("build_sporadic: unknown name " + name);
}

namespace {

Realization build_pu3() {
    // Sigma_3 acting on the coweight lattice of A2 (the PU(3) integral lattice):
    // s1 = [[-1,0],[1,1]], s2 = [[1,1],[0,-1]] on the fundamental-coweight basis
    const CycloField& F = CycloField::get(1);
    CycRing R(F);
    auto mk = [&](std::initializer_list<long> vals) {
        Mat<CycRing> m(2, R);
        auto it = vals.begin();
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) m.at(i, j) = Cyc(F, Rat(*it++));
        return m;
    };
    return make_realization("PU3", 1, {mk({-1, 0, 1, 1}), mk({1, 1, 0, -1})});
}

} // namespace

Realization build_entry(const std::string& label) {
    if (label == "PU3") return build_pu3();
    if (label.size() >= 2 && label[0] == 'G' && label[1] == '(') {
        int m, r, n;
        if (sscanf(label.c_str(), "G(%d,%d,%d)", &m, &r, &n) != 3)
            throw std::invalid_argument("bad family-2 label: " + label);
        return build_family2(m, r, n);
    }
    if (label.size() >= 2 && label[0] == 'G' && isdigit(label[1]) &&
        !(label[1] == '2' && label.size() == 2))
        return build_sporadic(label);
    return build_weyl(label);
}

bool realizable_mod_p(const Realization& r, std::uint64_t p) {
    if (p % 2 == 0) return false;
    return hensel_smallest_root(r.subfield.minpoly, p, 1).has_value();
}

std::vector<Mat<FpRing>> reduce_mod_p(const Realization& r, std::uint64_t p) {
    auto e = RootOfUnityEmbedding::of_subfield(r.subfield, p, 1);
    FpRing R{std::uint32_t(p)};
    std::vector<Mat<FpRing>> out;
    for (const auto& g : r.gens) {
        Mat<FpRing> m(g.n, R);
        for (int i = 0; i < g.n; ++i)
            for (int j = 0; j < g.n; ++j) m.at(i, j) = std::uint32_t(e.map(g.at(i, j)));
        out.push_back(std::move(m));
    }
    return out;
}

std::vector<Mat<ZpkRing>> reduce_mod_zpk(const Realization& r, std::uint64_t p, int k) {
    auto e = RootOfUnityEmbedding::of_subfield(r.subfield, p, k);
    ZpkRing R(p, k);
    std::vector<Mat<ZpkRing>> out;
    for (const auto& g : r.gens) {
        Mat<ZpkRing> m(g.n, R);
        for (int i = 0; i < g.n; ++i)
            for (int j = 0; j < g.n; ++j) m.at(i, j) = e.map(g.at(i, j));
        out.push_back(std::move(m));
    }
    return out;
}

std::vector<std::vector<long>> integer_matrices(const Realization& r) {
    if (r.conductor != 1) throw std::invalid_argument("integer_matrices: conductor must be 1");
    std::vector<std::vector<long>> out;
    for (const auto& g : r.gens) {
        std::vector<long> m;
        for (const auto& e : g.a) {
            Rat v = e.rational_part();
            if (den(v) != 1) throw std::logic_error("non-integer entry");
            m.push_back(long(num(v)));
        }
        out.push_back(std::move(m));
    }
    return out;
}

int spin_dimension(const FpRing& ring, const std::vector<Mat<FpRing>>& gens, const FpVec& start) {
    int n = int(start.size());
    std::vector<FpVec> rows{start};
    auto echelon = fp_rref(ring, rows);
    std::vector<FpVec> basis = echelon;
    for (size_t head = 0; head < basis.size(); ++head) {
        for (const auto& g : gens) {
            FpVec img = fp_apply(ring, g, basis[head]);
            auto aug = basis;
            aug.push_back(img);
            auto red = fp_rref(ring, aug);
            if (red.size() > basis.size()) basis = red;
            if (int(basis.size()) == n) return n;
        }
    }
    return int(basis.size());
}

bool irreducible_by_line_search(const FpRing& ring, const std::vector<Mat<FpRing>>& gens) {
    int n = gens[0].n;
    // lines are enumerated by normalized vectors: leading coordinate 1
    for (int pos = 0; pos < n; ++pos) {
        std::uint64_t count = 1;
        for (int j = pos + 1; j < n; ++j) count *= ring.p;
        for (std::uint64_t it = 0; it < count; ++it) {
            FpVec w(n, 0);
            w[pos] = 1;
            std::uint64_t x = it;
            for (int j = pos + 1; j < n; ++j) {
                w[j] = std::uint8_t(x % ring.p);
                x /= ring.p;
            }
            if (spin_dimension(ring, gens, w) < n) return false;
        }
    }
    return true;
}

bool irreducible_mod_p(const FpRing& ring, const std::vector<Mat<FpRing>>& gens,
                       std::uint64_t seed) {
    int n = gens[0].n;
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 12345);
    std::vector<Mat<FpRing>> tgens;
    for (const auto& g : gens) {
        Mat<FpRing> t(n, ring);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) t.at(i, j) = g.at(j, i);
        tgens.push_back(std::move(t));
    }
    for (int attempt = 0; attempt < 400; ++attempt) {
        // random element of the group algebra: sum of random short words
        Mat<FpRing> A(n, ring);
        int terms = 2 + int(rng() % 3);
        for (int t = 0; t < terms; ++t) {
            Mat<FpRing> w = Mat<FpRing>::identity(n, ring);
            int len = 1 + int(rng() % 4);
            for (int l = 0; l < len; ++l) w = mat_mul(ring, w, gens[rng() % gens.size()]);
            std::uint32_t c = 1 + std::uint32_t(rng() % (ring.p - 1));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    A.at(i, j) = ring.add(A.at(i, j), ring.mul(c, w.at(i, j)));
        }
        // kernel of A
        FpDenseMat M(ring.p, n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) M.at(i, j) = std::uint8_t(A.at(i, j));
        auto ker = fp_kernel_basis(M);
        if (ker.empty() || int(ker.size()) == n) continue;
        // Norton: if some kernel vector spins to a proper subspace -> reducible;
        // if all spin full, check the transpose kernel on the dual module.
        for (const auto& kv : ker)
            if (spin_dimension(ring, gens, kv) < n) return false;
        FpDenseMat MT(ring.p, n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) MT.at(i, j) = std::uint8_t(A.at(j, i));
        auto kert = fp_kernel_basis(MT);
        for (const auto& kv : kert)
            if (spin_dimension(ring, tgens, kv) < n) return false;
        return true;
    }
    // no usable singular algebra element found; fall back to the exhaustive search
    return irreducible_by_line_search(ring, gens);
}

StabilizerReport reflection_stabilizer_check(const FpRing& ring,
                                             const std::vector<Mat<FpRing>>& gens,
                                             const std::vector<FpVec>& basis,
                                             std::uint64_t cap) {
    StabilizerReport rep;
    int n = gens[0].n;
    OrbitPoint base = make_subspace_point(ring, basis);
    std::vector<int> dims{int(fp_rref(ring, basis).size())};
    auto orbit = orbit_with_schreier(ring, gens, OrbitAction::Subspace, base, dims, n, cap);
    rep.orbit_size = orbit.size();
    auto sgens = stabilizer_generators(ring, gens, orbit);
    // incremental closure: add generators only when not already generated
    std::vector<Mat<FpRing>> used;
    MatrixGroup<FpRing> S;
    bool have = false;
    for (const auto& g : sgens) {
        if (have && S.contains(g)) continue;
        used.push_back(g);
        S = MatrixGroup<FpRing>(ring, used);
        S.enumerate(cap, true);
        have = true;
    }
    if (!have) {
        S = MatrixGroup<FpRing>(ring, {Mat<FpRing>::identity(n, ring)});
        S.enumerate(cap, true);
    }
    rep.setwise_order = S.order();
    // pointwise stabilizer: elements fixing every basis vector
    auto rb = fp_rref(ring, basis);
    std::vector<Mat<FpRing>> pw;
    for (const auto& g : S.elements()) {
        bool fixes = true;
        for (const auto& v : rb)
            if (fp_apply(ring, g, v) != v) { fixes = false; break; }
        if (fixes) pw.push_back(g);
    }
    rep.pointwise_order = pw.size();
    std::vector<Mat<FpRing>> refl;
    for (const auto& g : pw)
        if (mat_rank_minus_one(ring, g) == 1) refl.push_back(g);
    rep.reflections_inside = long(refl.size());
    if (refl.empty()) {
        rep.reflection_generated = (rep.pointwise_order == 1);
    } else {
        auto RG = generate_closure(ring, refl, cap, false);
        rep.reflection_generated = (RG.order() == rep.pointwise_order);
    }
    return rep;
}

std::optional<FpVec> sylow_fixed_line(const FpRing& ring, const std::vector<Mat<FpRing>>& gens,
                                      std::uint64_t seed, int max_tries) {
    int n = gens[0].n;
    std::mt19937_64 rng(seed * 0x2545F4914F6CDD1Dull + 99);
    Mat<FpRing> cur = Mat<FpRing>::identity(n, ring);
    for (int t = 0; t < max_tries; ++t) {
        cur = mat_mul(ring, cur, gens[rng() % gens.size()]);
        // order of cur, bounded
        Mat<FpRing> x = cur;
        int ord = 1;
        const int cap = 2520;
        while (!mat_is_identity(ring, x) && ord <= cap) {
            x = mat_mul(ring, x, cur);
            ++ord;
        }
        if (ord > cap) continue;
        if (ord % ring.p != 0) continue;
        // power up to order p
        Mat<FpRing> s = Mat<FpRing>::identity(n, ring);
        Mat<FpRing> base = cur;
        int e = ord / int(ring.p);
        while (e) {
            if (e & 1) s = mat_mul(ring, s, base);
            base = mat_mul(ring, base, base);
            e >>= 1;
        }
        // fixed space of s
        FpDenseMat M(ring.p, n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                M.at(i, j) = std::uint8_t(ring.sub(s.at(i, j), i == j ? 1 : 0));
        auto ker = fp_kernel_basis(M);
        if (ker.size() == 1) return FpVec(ker[0].begin(), ker[0].end());
        if (!ker.empty()) return FpVec(ker[0].begin(), ker[0].end());
    }
    return std::nullopt;
}

} // namespace zrl
