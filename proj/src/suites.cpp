#include "zrl/suites.hpp"

#include "zrl/catalog.hpp"
#include "zrl/invariants.hpp"
#include "zrl/models.hpp"
#include "zrl/rootsys.hpp"
#include "zrl/steinberg.hpp"

#include <json.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace zrl {

namespace {

struct RowSink {
    std::vector<SuiteRow>& rows;

    void check(const std::string& id, const std::string& anchor, const std::string& expected,
               const std::string& computed) {
        rows.push_back({id, anchor, expected, computed,
                        expected == computed ? "PASS" : "FAIL"});
    }
    void run(const std::string& id, const std::string& anchor, const std::string& expected,
             const std::function<std::string()>& f) {
        std::string computed;
        std::string status;
        try {
            computed = f();
            status = expected == computed ? "PASS" : "FAIL";
        } catch (const ClosureOverflow& e) {
            computed = e.what();
            status = "SKIPPED(cap)";
        } catch (const std::exception& e) {
            computed = std::string("error: ") + e.what();
            status = "FAIL";
        }
        rows.push_back({id, anchor, expected, computed, status});
    }
};

std::string dist_str(const std::map<std::string, int>& d) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [tag, count] : d) {
        if (!first) os << " ";
        os << tag << "^" << count;
        first = false;
    }
    return os.str();
}

ModelElem named(Model m, const std::string& s) { return named_elements(m).elems.at(s); }

std::vector<ModelElem> model_basis(Model m, std::initializer_list<const char*> names) {
    std::vector<ModelElem> out;
    for (const char* n : names) {
        std::string s(n);
        if (s == "x2x1^-1")
            out.push_back(model_mul(named(m, "x2"), model_inv(named(m, "x1"))));
        else if (s == "x3a^-1")
            out.push_back(model_mul(named(m, "x3"), model_inv(named(m, "a"))));
        else
            out.push_back(named(m, s));
    }
    return out;
}

std::string matrix_str(const Mat<FpRing>& m) {
    std::ostringstream os;
    for (int i = 0; i < m.n; ++i) {
        if (i) os << ";";
        for (int j = 0; j < m.n; ++j) {
            if (j) os << ",";
            os << m.at(i, j);
        }
    }
    return os.str();
}

Mat<FpRing> fp_of(std::initializer_list<int> vals, int n) {
    FpRing R3(3);
    Mat<FpRing> m(n, R3);
    auto it = vals.begin();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = R3.from_int(*it++);
    return m;
}

Mat<FpRing> eye_plus(int n, std::initializer_list<std::pair<int, int>> ones,
                     std::initializer_list<std::pair<int, int>> diag = {}) {
    FpRing R3(3);
    Mat<FpRing> m = Mat<FpRing>::identity(n, R3);
    for (auto [i, j] : ones) m.at(i - 1, j - 1) = R3.add(m.at(i - 1, j - 1), 1);
    for (auto [i, v] : diag) m.at(i - 1, i - 1) = R3.from_int(v);
    return m;
}

// ---- the W'(E) generator matrices from the lower-bound computations --------

std::vector<Mat<FpRing>> wprime(const std::string& name) {
    if (name == "E5a_E8")
        return {eye_plus(5, {{3, 2}}), eye_plus(5, {{2, 3}}), eye_plus(5, {{1, 3}}),
                eye_plus(5, {}, {{1, 2}}), eye_plus(5, {{1, 4}, {1, 5}}),
                eye_plus(5, {{4, 3}}), eye_plus(5, {{2, 4}}, {{5, 2}})};
    if (name == "E5b_E8")
        return {eye_plus(5, {{2, 1}}), eye_plus(5, {{1, 2}}),
                eye_plus(5, {{1, 4}, {3, 2}}), eye_plus(5, {{4, 3}}),
                eye_plus(5, {{3, 4}}), eye_plus(5, {{3, 5}}, {{2, 2}, {4, 2}, {5, 2}})};
    if (name == "E4a_E6")
        return {eye_plus(4, {{1, 2}}), eye_plus(4, {{3, 4}}), eye_plus(4, {{2, 3}}),
                eye_plus(4, {}, {{1, 2}, {3, 2}, {4, 2}}), eye_plus(4, {{2, 1}})};
    if (name == "E4b_E6")
        return {eye_plus(4, {{3, 4}}), eye_plus(4, {{4, 3}}), eye_plus(4, {}, {{2, 2}}),
                eye_plus(4, {{1, 2}}), eye_plus(4, {{1, 3}}),
                eye_plus(4, {}, {{1, 2}, {2, 2}, {3, 2}, {4, 2}})};
    // Weyl groups of the non-toral subgroup tables
    FpRing R3(3);
    auto sl3 = [&](int total) {
        // SL3(F3) block placed at the bottom-right of a total x total identity
        std::vector<Mat<FpRing>> out;
        int off = total - 3;
        Mat<FpRing> a = Mat<FpRing>::identity(total, R3);
        a.at(off + 0, off + 1) = 1;
        Mat<FpRing> b = Mat<FpRing>::identity(total, R3);
        b.at(off + 0, off + 0) = 0;
        b.at(off + 1, off + 1) = 0;
        b.at(off + 2, off + 2) = 0;
        b.at(off + 0, off + 2) = 1;
        b.at(off + 1, off + 0) = 1;
        b.at(off + 2, off + 1) = 1;
        out.push_back(a);
        out.push_back(b);
        return out;
    };
    if (name == "SL3") return sl3(3);
    if (name == "E4_3E6" || name == "E4_2E7") {
        // [eps? * ; 0 SL3]: row vector on top; for 3E6 the corner is 1, for 2E7
        // the corner is any unit (add the inversion diag(2,2,2,1) ~ eps corner)
        auto out = sl3(4);
        out.push_back(eye_plus(4, {{1, 2}}));
        if (name == "E4_2E7")
            out.push_back(eye_plus(4, {}, {{1, 2}, {2, 2}, {3, 2}}));
        return out;
    }
    if (name == "E2a_E6") return {eye_plus(2, {{1, 2}}), eye_plus(2, {}, {{1, 2}, {2, 2}})};
    if (name == "E2b_E6" || name == "SL2") {
        // SL2(F3)
        return {eye_plus(2, {{1, 2}}), eye_plus(2, {{2, 1}})};
    }
    if (name == "E3a_E6")
        return {eye_plus(3, {}, {{1, 2}}), eye_plus(3, {}, {{2, 2}, {3, 2}}),
                eye_plus(3, {{1, 2}}), eye_plus(3, {{1, 3}}), eye_plus(3, {{2, 3}})};
    if (name == "E3c_E6") {
        auto out = std::vector<Mat<FpRing>>{eye_plus(3, {}, {{1, 2}}),
                                            eye_plus(3, {{1, 2}}), eye_plus(3, {{1, 3}})};
        out.push_back(eye_plus(3, {{2, 3}}));
        out.push_back(eye_plus(3, {{3, 2}}));
        return out;
    }
    if (name == "E3d_E6")
        return {eye_plus(3, {}, {{1, 2}}), eye_plus(3, {{2, 3}}), eye_plus(3, {{3, 2}})};
    if (name == "E3a_E8")
        return {eye_plus(3, {{1, 2}}), eye_plus(3, {{2, 1}}), eye_plus(3, {}, {{1, 2}, {3, 2}}),
                eye_plus(3, {{1, 3}}), eye_plus(3, {{2, 3}})};
    if (name == "E4a_E8") {
        auto out = sl3(4);
        // SL3 x GL1 with SL3 on the first three coordinates
        std::vector<Mat<FpRing>> shifted;
        Mat<FpRing> a = Mat<FpRing>::identity(4, R3);
        a.at(0, 1) = 1;
        Mat<FpRing> b = Mat<FpRing>::identity(4, R3);
        b.at(0, 0) = 0;
        b.at(1, 1) = 0;
        b.at(2, 2) = 0;
        b.at(0, 2) = 1;
        b.at(1, 0) = 1;
        b.at(2, 1) = 1;
        shifted = {a, b, eye_plus(4, {}, {{4, 2}})};
        return shifted;
    }
    if (name == "E4b_E8")
        return {eye_plus(4, {}, {{1, 2}}), eye_plus(4, {}, {{2, 2}, {4, 2}}),
                eye_plus(4, {{2, 3}}), eye_plus(4, {{3, 2}}), eye_plus(4, {{1, 2}}),
                eye_plus(4, {{1, 4}}), eye_plus(4, {{2, 4}}), eye_plus(4, {{3, 4}})};
    if (name == "E4c_E8") {
        auto out = sl3(4);
        out.push_back(eye_plus(4, {{1, 2}}));
        out.push_back(eye_plus(4, {}, {{1, 2}}));
        return out;
    }
    if (name == "GSp4_chi" || name == "E5b_W") {
        return wprime("E5b_E8");
    }
    throw std::invalid_argument("unknown W' name: " + name);
}

// orbit counting over all rank-k subspaces of F_3^n
long count_subspace_orbits(const std::vector<Mat<FpRing>>& gens, int n, int k) {
    FpRing R3(3);
    // enumerate all rank-k subspaces via orbits: scan canonical points
    std::vector<int> pivots(k);
    std::vector<OrbitPoint> all;
    std::function<void(int, int)> choose = [&](int start, int idx) {
        if (idx == k) {
            std::vector<std::pair<int, int>> freepos;
            for (int r = 0; r < k; ++r)
                for (int c = pivots[r] + 1; c < n; ++c)
                    if (std::find(pivots.begin(), pivots.end(), c) == pivots.end())
                        freepos.emplace_back(r, c);
            std::uint64_t count = 1;
            for (size_t i = 0; i < freepos.size(); ++i) count *= 3;
            for (std::uint64_t it = 0; it < count; ++it) {
                std::vector<FpVec> rows(k, FpVec(n, 0));
                for (int r = 0; r < k; ++r) rows[r][pivots[r]] = 1;
                std::uint64_t x = it;
                for (auto [r, c] : freepos) {
                    rows[r][c] = std::uint8_t(x % 3);
                    x /= 3;
                }
                all.push_back(make_subspace_point(R3, rows));
            }
            return;
        }
        for (int c = start; c < n; ++c) {
            pivots[idx] = c;
            choose(c + 1, idx + 1);
        }
    };
    choose(0, 0);
    std::unordered_map<OrbitPoint, char, OrbitPointHash> seen;
    long orbits = 0;
    OrbitData shape;
    shape.action = OrbitAction::Subspace;
    shape.n = n;
    shape.level_dims = {k};
    for (const auto& start : all) {
        if (seen.count(start)) continue;
        ++orbits;
        std::vector<OrbitPoint> stack{start};
        seen.emplace(start, 1);
        while (!stack.empty()) {
            OrbitPoint cur = stack.back();
            stack.pop_back();
            for (const auto& g : gens) {
                OrbitPoint img = apply_point(R3, g, shape, cur);
                if (seen.emplace(img, 1).second) stack.push_back(img);
            }
        }
    }
    return orbits;
}

TorusPoint torus(const RootSystem& rs, std::initializer_list<int> e) {
    TorusPoint h;
    h.rs = &rs;
    h.p = 3;
    for (int x : e) h.e.push_back(std::uint8_t(((x % 3) + 3) % 3));
    return h;
}

std::string vec_str(const FpVec& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << int(v[i]);
    }
    return os.str();
}

Cyc lift3_to36(const Cyc& x) {
    const CycloField& F36 = CycloField::get(36);
    std::vector<Rat> raw(13, Rat(0));
    raw[0] = x.coeffs()[0];
    raw[12] = x.coeffs()[1];
    return Cyc::from_coeffs(F36, raw);
}

// ---- individual suites -----------------------------------------------------

void suite_e6_distributions(RowSink& sink) {
    Model t = Model::TripleSL3;
    auto row = [&](const std::string& id, const std::string& anchor,
                   std::initializer_list<const char*> basis, const std::string& expect) {
        auto gens = model_basis(t, basis);
        sink.run(id, anchor, expect,
                 [&] { return dist_str(class_distribution(gens, Ambient::E6)); });
    };
    row("E3_3E6", "non-toral table of 3E6, rank 3", {"a", "x2", "y2"}, "3C^26");
    row("E4_3E6", "non-toral table of 3E6, rank 4", {"z", "a", "x2", "y2"},
        "3C^78 3E^1 3E'^1");
    row("E2a_E6", "non-toral table of E6 (preimage)", {"y1", "x2", "z"},
        "3C^18 3D^6 3E^1 3E'^1");
    row("E2b_E6", "non-toral table of E6 (preimage)", {"y1", "x1", "z"},
        "3D^24 3E^1 3E'^1");
    row("E3a_E6", "non-toral table of E6 (preimage)", {"a", "y1", "x2", "z"},
        "3C^60 3D^18 3E^1 3E'^1");
    row("E3b_E6", "non-toral table of E6 (preimage)", {"a", "x2", "y2", "z"},
        "3C^78 3E^1 3E'^1");
    row("E3c_E6", "non-toral table of E6 (preimage)", {"a", "y1", "x1", "z"},
        "3C^6 3D^72 3E^1 3E'^1");
    row("E3d_E6", "non-toral table of E6 (preimage)", {"x2x1^-1", "y1", "x1", "z"},
        "3A^2 3B^2 3B'^2 3C^48 3D^24 3E^1 3E'^1");
    row("E4a_E6", "non-toral table of E6 (preimage)", {"a", "y2", "y1", "x2", "z"},
        "3C^186 3D^54 3E^1 3E'^1");
    row("E4b_E6", "non-toral table of E6 (preimage)", {"a", "x2x1^-1", "y1", "x1", "z"},
        "3A^6 3B^6 3B'^6 3C^150 3D^72 3E^1 3E'^1");
    // cross-oracle rows: model traces equal toral traces
    RootSystem e6 = RootSystem::build("E6");
    auto cross = [&](const std::string& nameid, const char* name,
                     std::initializer_list<int> vec) {
        sink.run("cross_" + nameid, "torus coordinates of the named elements", "equal", [&] {
            Cyc lhs = adjoint_trace_model(named(t, name), Ambient::E6);
            Cyc rhs = lift3_to36(adjoint_trace_toral(torus(e6, vec)));
            return lhs == rhs ? "equal" : ("differ: " + lhs.str() + " vs " + rhs.str());
        });
    };
    cross("z", "z", {1, 0, 2, 0, 1, 2});
    cross("a", "a", {1, 0, 2, 0, 2, 1});
    cross("x1", "x1", {1, 0, 1, 0, 1, 1});
    cross("x2", "x2", {0, 2, 2, 0, 2, 0});
    sink.run("trace27_z", "27-trace of the central element", "27*w", [&] {
        Cyc v = trace27(named(t, "z"));
        Cyc expect = Cyc::zeta(CycloField::get(36), 12).scaled(Rat(27));
        return v == expect ? "27*w" : v.str();
    });
}

void suite_e8_distributions(RowSink& sink) {
    Model m = Model::SL9;
    auto row = [&](const std::string& id, std::initializer_list<const char*> basis,
                   const std::string& expect) {
        auto gens = model_basis(m, basis);
        sink.run(id, "non-toral table of E8", expect,
                 [&] { return dist_str(class_distribution(gens, Ambient::E8)); });
    };
    row("E3a_E8", {"x1", "y1", "a"}, "3A^18 3B^8");
    row("E3b_E8", {"x1", "y1", "x3"}, "3B^26");
    row("E4a_E8", {"x1", "y1", "x3", "x3a^-1"}, "3A^52 3B^26 3D^2");
    row("E4b_E8", {"x2", "x1", "y1", "a"}, "3A^54 3B^26");
    row("E4c_E8", {"x2", "x1", "y1", "x3"}, "3B^80");
    row("E5a_E8", {"x2", "x1", "y1", "x3", "x3a^-1"}, "3A^156 3B^80 3D^6");
    row("E5b_E8", {"x1", "y1", "x2", "y2", "a"}, "3A^162 3B^80");
    row("E0_E8_toral", {"x1", "x2", "y1", "y2"}, "3B^80");
    RootSystem e8 = RootSystem::build("E8");
    auto cross = [&](const std::string& nameid, const char* name,
                     std::initializer_list<int> vec) {
        sink.run("cross_" + nameid, "torus coordinates of the named elements", "equal", [&] {
            Cyc lhs = adjoint_trace_model(named(m, name), Ambient::E8);
            Cyc rhs = lift3_to36(adjoint_trace_toral(torus(e8, vec)));
            return lhs == rhs ? "equal" : ("differ: " + lhs.str() + " vs " + rhs.str());
        });
    };
    cross("abar", "a", {1, 1, 2, 0, 0, 0, 0, 0});
    cross("x1bar", "x1", {1, 0, 0, 0, 1, 0, 0, 1});
    cross("x2bar", "x2", {1, 0, 2, 0, 2, 1, 0, 0});
    cross("x3bar", "x3", {2, 0, 1, 0, 2, 1, 0, 0});
}

void suite_e7_distributions(RowSink& sink) {
    Model t = Model::TripleSL3;
    auto row = [&](const std::string& id, std::initializer_list<const char*> basis,
                   const std::string& expect) {
        auto gens = model_basis(t, basis);
        sink.run(id, "non-toral table of 2E7", expect,
                 [&] { return dist_str(class_distribution(gens, Ambient::E7)); });
    };
    row("E3_2E7", {"a", "x2", "y2"}, "3C^26");
    row("E4_2E7", {"z", "a", "x2", "y2"}, "3B^2 3C^78");
    // the SL6 o SL3 model of the rank-3 centralizer
    {
        Model s = Model::SL6xSL3;
        auto gens = model_basis(s, {"g", "A", "B"});
        sink.run("E3_2E7_model", "rank-3 subgroup in the SL6 o SL3 model", "3C^26",
                 [&] { return dist_str(class_distribution(gens, Ambient::E7)); });
    }
    sink.run("incl_3C", "class inclusion from 3E6 into 2E7", "3C",
             [&] { return class_tag(named(t, "a"), Ambient::E7); });
    sink.run("incl_3E", "class inclusion from 3E6 into 2E7", "3B",
             [&] { return class_tag(named(t, "z"), Ambient::E7); });
    sink.run("incl_3E'", "class inclusion from 3E6 into 2E7", "3B",
             [&] { return class_tag(model_inv(named(t, "z")), Ambient::E7); });
}

void suite_orbits(RowSink& sink) {
    auto row = [&](const std::string& id, const std::string& wname, int n, int k,
                   long expect) {
        sink.run(id, "orbit representatives listed in the proofs", std::to_string(expect),
                 [&] { return std::to_string(count_subspace_orbits(wprime(wname), n, k)); });
    };
    row("E5a_rank3", "E5a_E8", 5, 3, 6);
    row("E5a_rank4", "E5a_E8", 5, 4, 4);
    row("E5b_rank3", "E5b_E8", 5, 3, 3);
    row("E5b_rank4", "E5b_E8", 5, 4, 2);
    row("E4a_rank2", "E4a_E6", 4, 2, 4);
    row("E4a_rank3", "E4a_E6", 4, 3, 3);
    row("E4b_rank2", "E4b_E6", 4, 2, 6);
    row("E4b_rank3", "E4b_E6", 4, 3, 4);
    sink.run("orbit_of_zero", "fixed point of the zero subgroup", "1", [&] {
        FpRing R3(3);
        auto orb = orbit_with_schreier(R3, wprime("E5a_E8"), OrbitAction::Vector,
                                       make_vector_point({0, 0, 0, 0, 0}), {}, 5);
        return std::to_string(orb.size());
    });
}

void suite_weyl_lower_bounds(RowSink& sink) {
    Model m9 = Model::SL9;
    Model t = Model::TripleSL3;
    auto e5a = model_basis(m9, {"x2", "x1", "y1", "x3", "x3a^-1"});
    auto e5b = model_basis(m9, {"x1", "y1", "x2", "y2", "a"});
    auto mrow = [&](const std::string& id, const Conjugator& c,
                    const std::vector<ModelElem>& basis, const Mat<FpRing>& expect,
                    const std::vector<ModelElem>& quot = {}) {
        sink.run(id, "stated induced matrices", matrix_str(expect),
                 [&] { return matrix_str(induced_matrix(c, basis, quot)); });
    };
    mrow("E5a_tau1", named(m9, "conj_t1_blk"), e5a, eye_plus(5, {{3, 2}}));
    mrow("E5a_tau2", named(m9, "conj_t2_blk"), e5a, eye_plus(5, {{2, 3}}));
    mrow("E5a_Ib2b", named(m9, "conj_I_b2_b"), e5a, eye_plus(5, {{1, 3}}));
    mrow("E5a_sigma", named(m9, "conj_sigma"), e5a, eye_plus(5, {}, {{1, 2}}));
    mrow("E5a_y2", named(m9, "y2"), e5a, eye_plus(5, {{1, 4}, {1, 5}}));
    mrow("E5a_IIb2", named(m9, "conj_I_I_b2"), e5a, eye_plus(5, {{4, 3}}));
    mrow("E5b_tau1", named(m9, "conj_t1_blk"), e5b, eye_plus(5, {{2, 1}}));
    mrow("E5b_tau2", named(m9, "conj_t2_blk"), e5b, eye_plus(5, {{1, 2}}));
    mrow("E5b_Ib2b", named(m9, "conj_I_b2_b"), e5b, eye_plus(5, {{1, 4}, {3, 2}}));
    mrow("E5b_blow1", named(m9, "conj_t1_blow"), e5b, eye_plus(5, {{4, 3}}));
    mrow("E5b_blow2", named(m9, "conj_t2_blow"), e5b, eye_plus(5, {{3, 4}}));
    // E6 subgroups, modulo the center
    auto z = named(t, "z");
    std::vector<ModelElem> quot{z};
    auto e4a = model_basis(t, {"a", "y2", "y1", "x2"});
    auto e4b = model_basis(t, {"a", "x2x1^-1", "y1", "x1"});
    mrow("E4a_b2II", named(t, "conj_b2II"), e4a, eye_plus(4, {{1, 2}}), quot);
    mrow("E4a_It1t1sq", named(t, "conj_I_t1_t1sq"), e4a, eye_plus(4, {{3, 4}}), quot);
    mrow("E4a_s1", TwistS1{}, e4a, eye_plus(4, {{2, 3}}), quot);
    mrow("E4a_s2", TwistS2{}, e4a, eye_plus(4, {}, {{1, 2}, {3, 2}, {4, 2}}), quot);
    mrow("E4a_t1t1t1", named(t, "conj_t1_t1_t1"), e4a, eye_plus(4, {{2, 4}}), quot);
    mrow("E4b_It1t1sq", named(t, "conj_I_t1_t1sq"), e4b, eye_plus(4, {{3, 4}}), quot);
    mrow("E4b_It2bt2sq", named(t, "conj_I_t2b_t2sq"), e4b, eye_plus(4, {{4, 3}}), quot);
    mrow("E4b_sigma23", named(t, "conj_s23II"), e4b, eye_plus(4, {}, {{2, 2}}), quot);
    mrow("E4b_gamma", named(t, "conj_gII"), e4b, eye_plus(4, {{1, 2}}), quot);
    mrow("E4b_Ib2I", named(t, "conj_Ib2I"), e4b, eye_plus(4, {{1, 3}}), quot);
    mrow("E4b_s2", TwistS2{}, e4b,
         eye_plus(4, {}, {{1, 2}, {2, 2}, {3, 2}, {4, 2}}), quot);
    mrow("E4_3E6_Ibb2", named(t, "conj_I_b_b2"),
         model_basis(t, {"z", "a", "x2", "y2"}), eye_plus(4, {{1, 4}}));
    // Weyl words on toral targets
    RootSystem e6 = RootSystem::build("E6");
    WeylWord w15{{1, 4, 2, 3, 1, 4, 5, 4, 6, 5, 4, 2, 3, 1, 4}};
    auto word_row = [&](const std::string& id, const RootSystem& rs, const WeylWord& w,
                        TorusPoint from, TorusPoint to) {
        sink.run(id, "toral identities of the stated words", vec_str(to.e),
                 [&] { return vec_str(apply_weyl_word(rs, w, from).e); });
    };
    TorusPoint a6 = torus(e6, {1, 0, 2, 0, 2, 1});
    TorusPoint x26 = torus(e6, {0, 2, 2, 0, 2, 0});
    TorusPoint x16 = torus(e6, {1, 0, 1, 0, 1, 1});
    word_row("E2a_a_to_x2", e6, w15, a6, x26);
    word_row("E2a_x2_to_a", e6, w15, x26, a6);
    word_row("E2a_x2x1inv", e6, w15, x26.mul(x16.inv()), torus(e6, {0, 0, 0, 1, 0, 0}));
    word_row("E2a_z_fixed", e6, w15, torus(e6, {1, 0, 2, 0, 1, 2}),
             torus(e6, {1, 0, 2, 0, 1, 2}));
    // the long E8 words, on the toral basis columns; the stated matrices follow
    // the exponent convention, so the inverse word acts
    RootSystem e8 = RootSystem::build("E8");
    WeylWord w5a{{1, 2, 4, 2, 3, 5, 4, 2, 3, 1, 4, 3, 5, 4, 6, 5, 4, 2, 3, 4, 7,
                  6, 5, 4, 8, 7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4, 7}};
    WeylWord w5a_inv{std::vector<int>(w5a.letters.rbegin(), w5a.letters.rend())};
    WeylWord w5b{{2, 8, 7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4, 3, 1, 7, 6,
                  5, 4, 2, 3, 4, 5, 6, 7, 8}};
    TorusPoint a8 = torus(e8, {1, 1, 2, 0, 0, 0, 0, 0});
    TorusPoint x18 = torus(e8, {1, 0, 0, 0, 1, 0, 0, 1});
    TorusPoint x28 = torus(e8, {1, 0, 2, 0, 2, 1, 0, 0});
    TorusPoint x38 = torus(e8, {2, 0, 1, 0, 2, 1, 0, 0});
    TorusPoint x3a8 = x38.mul(a8.inv());
    word_row("E5a_word_x2", e8, w5a_inv, x28, x28);
    word_row("E5a_word_x1", e8, w5a_inv, x18, x18);
    word_row("E5a_word_x3", e8, w5a_inv, x38, x18.mul(x38));
    word_row("E5a_word_x3a", e8, w5a_inv, x3a8, x3a8.mul(x3a8));
    word_row("E5b_word_x1", e8, w5b, x18, x18);
    word_row("E5b_word_x2", e8, w5b, x28, x28);
    word_row("E5b_word_a", e8, w5b, a8, x28.mul(a8.mul(a8)));
    // the longest element of W(E7) inverts the torus: diag(2,2,2,1) on E4_2E7
    RootSystem e7 = RootSystem::build("E7");
    std::vector<int> letters;
    // any reduced word for w0 works; w0 = -1 so squaring the positive-root count
    // is unnecessary: apply the standard longest-word via repeated reflection:
    // use the fact that -1 = product over a (known) word; verify via matrix
    sink.run("E7_w0_inverts", "the longest element acts as -1 on the torus", "true", [&] {
        // w0 = c^{h/2} for a Coxeter element c (all exponents of E7 are odd);
        // h = 18, so c^9 = -1 on the coroot lattice
        FpRing R251{251}; // entries of c^9 are small; a big prime certifies -I over Z
        Mat<FpRing> c = Mat<FpRing>::identity(7, R251);
        for (int j = 0; j < 7; ++j) {
            Mat<FpRing> s = Mat<FpRing>::identity(7, R251);
            for (int i = 0; i < 7; ++i)
                s.at(j, i) = R251.sub(s.at(j, i), R251.from_int(e7.cartan(i, j)));
            c = mat_mul(R251, c, s);
        }
        Mat<FpRing> pw = Mat<FpRing>::identity(7, R251);
        for (int k = 0; k < 9; ++k) pw = mat_mul(R251, pw, c);
        Mat<FpRing> minus(7, R251);
        for (int i = 0; i < 7; ++i) minus.at(i, i) = R251.from_int(-1);
        return pw == minus ? "true" : "false";
    });
}

void suite_centralizer_dims(RowSink& sink) {
    const CycloField& F3 = CycloField::get(3);
    // the explicit 14 = (1/27)(3*78 + 24*(30+24w+24w^2)) computation
    sink.run("dim14_intermediate", "explicit dimension computation for the rank-2 case",
             "30+24w+24w^2 = 6 and dim = 14", [&] {
                 RootSystem e6 = RootSystem::build("E6");
                 Cyc tr = adjoint_trace_toral(torus(e6, {1, 0, 1, 0, 1, 1}));
                 Cyc expect = Cyc(F3, Rat(30)) + Cyc::zeta(F3, 1).scaled(Rat(24)) +
                              Cyc::zeta(F3, 2).scaled(Rat(24));
                 if (!(tr == expect)) return std::string("intermediate trace differs");
                 std::vector<Cyc> traces;
                 for (int i = 0; i < 3; ++i) traces.push_back(Cyc(F3, Rat(78)));
                 for (int i = 0; i < 24; ++i) traces.push_back(tr);
                 long dim = centralizer_dimension(traces);
                 if (dim != 14) return "dim = " + std::to_string(dim);
                 return std::string("30+24w+24w^2 = 6 and dim = 14");
             });
    auto dim_row = [&](const std::string& id, Model m, Ambient amb,
                       std::initializer_list<const char*> basis, long expect) {
        auto gens = model_basis(m, basis);
        sink.run(id, "centralizer column of the non-toral tables", std::to_string(expect),
                 [&] {
                     auto sub = enumerate_elementary_abelian(gens);
                     std::vector<Cyc> traces;
                     for (const auto& e : sub.elements)
                         traces.push_back(adjoint_trace_model(e, amb));
                     return std::to_string(centralizer_dimension(traces));
                 });
    };
    Model t = Model::TripleSL3, m9 = Model::SL9;
    dim_row("E3_3E6", t, Ambient::E6, {"a", "x2", "y2"}, 0);
    dim_row("E4_3E6", t, Ambient::E6, {"z", "a", "x2", "y2"}, 0);
    dim_row("E2a_E6", t, Ambient::E6, {"y1", "x2", "z"}, 8);
    dim_row("E2b_E6", t, Ambient::E6, {"y1", "x1", "z"}, 14);
    dim_row("E3a_E6", t, Ambient::E6, {"a", "y1", "x2", "z"}, 2);
    dim_row("E3b_E6", t, Ambient::E6, {"a", "x2", "y2", "z"}, 0);
    dim_row("E3c_E6", t, Ambient::E6, {"a", "y1", "x1", "z"}, 8);
    dim_row("E3d_E6", t, Ambient::E6, {"x2x1^-1", "y1", "x1", "z"}, 4);
    dim_row("E4a_E6", t, Ambient::E6, {"a", "y2", "y1", "x2", "z"}, 0);
    dim_row("E4b_E6", t, Ambient::E6, {"a", "x2x1^-1", "y1", "x1", "z"}, 2);
    dim_row("E3a_E8", m9, Ambient::E8, {"x1", "y1", "a"}, 8);
    dim_row("E3b_E8", m9, Ambient::E8, {"x1", "y1", "x3"}, 14);
    dim_row("E4a_E8", m9, Ambient::E8, {"x1", "y1", "x3", "x3a^-1"}, 4);
    dim_row("E4b_E8", m9, Ambient::E8, {"x2", "x1", "y1", "a"}, 2);
    dim_row("E4c_E8", m9, Ambient::E8, {"x2", "x1", "y1", "x3"}, 8);
    dim_row("E5a_E8", m9, Ambient::E8, {"x2", "x1", "y1", "x3", "x3a^-1"}, 2);
    dim_row("E5b_E8", m9, Ambient::E8, {"x1", "y1", "x2", "y2", "a"}, 0);
    dim_row("E3_2E7", t, Ambient::E7, {"a", "x2", "y2"}, 3);
    dim_row("E4_2E7", t, Ambient::E7, {"z", "a", "x2", "y2"}, 1);
}

void suite_obstructions(RowSink& sink) {
    FpRing R3(3);
    // Steinberg dimensions
    for (auto [n, p] : {std::pair<int, int>{2, 3}, {3, 3}, {3, 5}, {4, 3}}) {
        long expect = 1;
        for (int k = 0; k < n * (n - 1) / 2; ++k) expect *= p;
        FpRing R{std::uint32_t(p)};
        sink.run("st_dim_" + std::to_string(n) + "_" + std::to_string(p),
                 "rank of the Steinberg module", std::to_string(expect), [&, n, p] {
                     FpRing RR{std::uint32_t(p)};
                     std::vector<Mat<FpRing>> triv{Mat<FpRing>::identity(n, RR)};
                     return std::to_string(
                         hom_steinberg(n, std::uint32_t(p), triv, FpModule::trivial(p)));
                 });
    }
    for (auto [n, p] : {std::pair<int, int>{2, 3}, {3, 3}, {3, 5}}) {
        long expect = 1;
        for (int k = 0; k < n * (n - 1) / 2; ++k) expect *= p;
        sink.run("oracle_dim_" + std::to_string(n) + "_" + std::to_string(p),
                 "building homology rank", std::to_string(expect), [&, n, p] {
                     FpRing RR{std::uint32_t(p)};
                     std::vector<Mat<FpRing>> triv{Mat<FpRing>::identity(n, RR)};
                     return std::to_string(
                         tits_building_oracle(n, std::uint32_t(p), triv, FpModule::trivial(p)));
                 });
    }
    // calclemma by both routes
    auto sl3_gl4 = [&]() {
        return std::vector<Mat<FpRing>>{
            fp_of({1, 1, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1}, 4),
            fp_of({0, 0, 1, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1}, 4)};
    };
    sink.run("calclemma_sum", "Hom over SL3(F3) x 1 on the natural rank-4 module", "0",
             [&] { return std::to_string(hom_steinberg(4, 3, sl3_gl4(), FpModule::natural(3))); });
    sink.run("calclemma_oracle", "same Hom by the building oracle", "0", [&] {
        return std::to_string(tits_building_oracle(4, 3, sl3_gl4(), FpModule::natural(3)));
    });
    // Sp4(F3)
    auto sp4 = [&]() {
        std::vector<std::vector<int>> forms = {
            {0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}};
        auto B = [&](const FpVec& x, const FpVec& v) {
            std::uint32_t acc = 0;
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                    acc = (acc + std::uint32_t((forms[i][j] + 3) % 3) * x[i] % 3 * v[j]) % 3;
            return acc;
        };
        std::vector<FpVec> vs = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1},
                                 {1, 0, 1, 0}, {0, 1, 0, 1}, {1, 1, 1, 0}};
        std::vector<Mat<FpRing>> gens;
        for (const auto& v : vs) {
            Mat<FpRing> t(4, R3);
            for (int j = 0; j < 4; ++j) {
                FpVec e(4, 0);
                e[j] = 1;
                std::uint32_t c = B(e, v);
                for (int i = 0; i < 4; ++i)
                    t.at(i, j) = std::uint32_t((std::uint32_t(i == j) + c * v[i]) % 3);
            }
            gens.push_back(t);
        }
        return gens;
    }();
    sink.run("sp4_order", "isometry group of the block form", "51840", [&] {
        auto G = generate_closure(R3, sp4, 100000, false);
        return std::to_string(G.order());
    });
    sink.run("sp4_st_trivial", "Hom over Sp4(F3) into the trivial module", "0",
             [&] { return std::to_string(hom_steinberg(4, 3, sp4, FpModule::trivial(3))); });
    sink.run("sp4_st_natural", "Hom over Sp4(F3) into the natural module", "0",
             [&] { return std::to_string(hom_steinberg(4, 3, sp4, FpModule::natural(3))); });
    sink.run("sp4_minusone", "the -1 shortcut applies", "shortcut used, value 0", [&] {
        auto rep = obstruction_report("Sp4(F3)", 4, 3, sp4);
        if (!rep.used_minusone_shortcut) return std::string("-1 not detected");
        return rep.all_zero() ? std::string("shortcut used, value 0")
                              : std::string("nonzero");
    });
    // the Weyl groups of all table rows: all-zero reports
    auto zero_row = [&](const std::string& wname, int n, int extra_trivial = 0) {
        sink.run("obstruction_" + wname, "case analysis of the obstruction computation",
                 "all zero", [&] {
                     auto rep =
                         obstruction_report(wname, n, 3, wprime(wname), extra_trivial);
                     return rep.all_zero() ? "all zero" : "nonzero";
                 });
    };
    {
        auto rep = obstruction_report("E3_3E6", 3, 3, wprime("SL3"), 1);
        sink.check("obstruction_E3_3E6", "case analysis with the central coordinate",
                   "all zero", rep.all_zero() ? "all zero" : "nonzero");
    }
    zero_row("E4_3E6", 4);
    zero_row("E2a_E6", 2);
    zero_row("E2b_E6", 2);
    zero_row("E3a_E6", 3);
    {
        auto rep = obstruction_report("E3b_E6", 3, 3, wprime("SL3"));
        sink.check("obstruction_E3b_E6", "case analysis of the obstruction computation",
                   "all zero", rep.all_zero() ? "all zero" : "nonzero");
    }
    zero_row("E3c_E6", 3);
    zero_row("E3d_E6", 3);
    zero_row("E4a_E6", 4);
    zero_row("E4b_E6", 4);
    zero_row("E3a_E8", 3);
    zero_row("E4a_E8", 4);
    zero_row("E4b_E8", 4);
    zero_row("E4c_E8", 4);
    zero_row("E5a_E8", 5);
    zero_row("E5b_E8", 5);
    zero_row("E4_2E7", 4);
    // the named Levi reductions
    auto levi_row = [&](const std::string& id, const std::string& wname, int n,
                        const std::vector<int>& blocks, const FpModule& part1,
                        const FpModule& part2) {
        sink.run(id, "Levi reduction named in the proof", "0 and 0", [&] {
            long a = hom_steinberg_levi(n, 3, wprime(wname), blocks, part1);
            long b = hom_steinberg_levi(n, 3, wprime(wname), blocks, part2);
            return std::to_string(a) + " and " + std::to_string(b);
        });
    };
    levi_row("levi_U2_E3c_E6", "E3c_E6", 3, {1, 2}, FpModule::natural_sub(3, 1),
             FpModule::natural_quotient(3, 1));
    levi_row("levi_U23_E4_2E7", "E4_2E7", 4, {1, 3}, FpModule::natural_sub(3, 1),
             FpModule::natural_quotient(3, 1));
    levi_row("levi_U234_E5a_E8", "E5a_E8", 5, {1, 4}, FpModule::natural_sub(3, 1),
             FpModule::natural_quotient(3, 1));
    levi_row("levi_U123_E5b_E8", "E5b_E8", 5, {4, 1}, FpModule::natural_sub(3, 4),
             FpModule::natural_quotient(3, 4));
    levi_row("levi_U1_E4a_E6", "E4a_E6", 4, {2, 1, 1}, FpModule::natural_sub(3, 2),
             FpModule::natural_slice(3, 2, 1));
    levi_row("levi_U1_E4a_E6_top", "E4a_E6", 4, {2, 1, 1}, FpModule::natural_slice(3, 3, 1),
             FpModule::natural_slice(3, 2, 1));
    levi_row("levi_U2_E4b_E8", "E4b_E8", 4, {1, 2, 1}, FpModule::natural_sub(3, 1),
             FpModule::natural_slice(3, 1, 2));
    levi_row("levi_U2_E4b_E8_top", "E4b_E8", 4, {1, 2, 1}, FpModule::natural_slice(3, 3, 1),
             FpModule::natural_sub(3, 1));
    levi_row("levi_U23_E4c_E8", "E4c_E8", 4, {1, 3}, FpModule::natural_sub(3, 1),
             FpModule::natural_quotient(3, 1));
}

void suite_catalog_lemmas(RowSink& sink, std::uint64_t cap) {
    // mod-p order preservation over all enumerable entries, realizable odd p < 50
    for (const auto& entry : catalog_entries()) {
        if (!entry.enumerable || entry.order > Int(1'000'000)) continue;
        Realization real = build_entry(entry.label);
        for (std::uint64_t p = 3; p < 50; p += 2) {
            bool prime = true;
            for (std::uint64_t d = 3; d * d <= p; d += 2)
                if (p % d == 0) prime = false;
            if (!prime) continue;
            if (!admissible_odd_prime(entry, p)) continue;
            if (!realizable_mod_p(real, p)) continue;
            sink.run("order_" + entry.label + "_p" + std::to_string(p),
                     "mod-p reduction is injective for odd p", entry.order.str(), [&] {
                         FpRing R{std::uint32_t(p)};
                         auto G = generate_closure(R, reduce_mod_p(real, p), cap, false);
                         return std::to_string(G.order());
                     });
        }
    }
    // irreducibility of the natural mod-p module for the exotic entries
    for (const char* label : {"G(4,2,2)", "G(3,3,3)", "G5", "G7", "G8", "G10", "G12",
                              "G14", "G26", "G29", "G31", "G34"}) {
        const auto& entry = catalog_entry(label);
        std::uint64_t p = 3;
        while (!admissible_odd_prime(entry, p) ||
               !realizable_mod_p(build_entry(label), p)) {
            p += 2;
            if (p > 200) break;
        }
        if (p > 200) continue;
        sink.run(std::string("irred_") + label + "_p" + std::to_string(p),
                 "the natural mod-p module of an exotic entry is irreducible", "irreducible",
                 [&, label, p] {
                     FpRing R{std::uint32_t(p)};
                     auto gens = reduce_mod_p(build_entry(label), p);
                     return irreducible_mod_p(R, gens) ? "irreducible" : "reducible";
                 });
    }
    sink.run("refl_count_G29", "hyperplane list for G29", "40", [&] {
        return std::to_string(sporadic_reflections("G29").size());
    });
    sink.run("refl_count_G34", "hyperplane list for G34 (45 + 81)", "126", [&] {
        return std::to_string(sporadic_reflections("G34").size());
    });
    sink.run("refl_closure_G29", "reflections of the enumerated G29 mod 13", "40", [&] {
        FpRing R{13};
        auto G = generate_closure(R, reduce_mod_p(build_sporadic("G29"), 13), 10000);
        long c = 0;
        for (const auto& g : G.elements())
            if (mat_rank_minus_one(R, g) == 1) ++c;
        return std::to_string(c);
    });
    // Sylow fixed lines with reflection-generated pointwise stabilizers
    auto sylow_row = [&](const std::string& label, std::uint64_t p, std::uint64_t order) {
        sink.run("sylow_" + label + "_p" + std::to_string(p),
                 "Sylow fixed line is 1-dimensional with stabilizer of order p!",
                 "dim 1, order " + std::to_string(order) + ", reflection-generated",
                 [&, label, p, order] {
                     FpRing R{std::uint32_t(p)};
                     auto gens = reduce_mod_p(build_entry(label), p);
                     auto line = sylow_fixed_line(R, gens);
                     if (!line) return std::string("no fixed line found");
                     auto rep = reflection_stabilizer_check(R, gens, {*line});
                     std::ostringstream os;
                     os << "dim 1, order " << rep.pointwise_order
                        << (rep.reflection_generated ? ", reflection-generated"
                                                     : ", not reflection-generated");
                     return os.str();
                 });
    };
    sylow_row("G12", 3, 6);
    sylow_row("G29", 5, 120);
    sylow_row("G31", 5, 120);
    sylow_row("G34", 7, 5040);
    // the G34 order certificate: orbit times line stabilizer
    sink.run("order_G34", "orbit-stabilizer certificate for the non-enumerable entry",
             "39191040", [&] {
                 FpRing R7{7};
                 auto gens = reduce_mod_p(build_sporadic("G34"), 7);
                 auto line = sylow_fixed_line(R7, gens);
                 if (!line) return std::string("no fixed line");
                 auto rep = reflection_stabilizer_check(R7, gens, {*line});
                 Int total = Int(rep.orbit_size) * Int(rep.setwise_order);
                 return total.str();
             });
    // family 2: reduction is a bijection on reflections
    for (auto [m, r, n, p] : {std::tuple<int, int, int, int>{4, 2, 2, 13},
                              {3, 3, 3, 7},
                              {5, 1, 2, 11}}) {
        std::ostringstream id;
        id << "refl_bijection_G(" << m << "," << r << "," << n << ")";
        sink.run(id.str(), "reduction mod p is a bijection on reflections",
                 std::to_string(catalog_entry("G(" + std::to_string(m) + "," +
                                              std::to_string(r) + "," + std::to_string(n) +
                                              ")")
                                    .reflections),
                 [&, m, r, n, p] {
                     auto real = build_family2(m, r, n);
                     FpRing R{std::uint32_t(p)};
                     auto G = generate_closure(R, reduce_mod_p(real, std::uint64_t(p)), 20000);
                     long c = 0;
                     for (const auto& g : G.elements())
                         if (mat_rank_minus_one(R, g) == 1) ++c;
                     return std::to_string(c);
                 });
    }
}

void suite_normalizers(RowSink& sink) {
    sink.run("G422_order", "the order-24 group H extends G(4,2,2) to order 96", "96", [&] {
        ZpkRing R(13, 2);
        auto W = reduce_mod_zpk(build_family2(4, 2, 2), 13, 2);
        auto H = reduce_mod_zpk(build_sporadic("G8"), 13, 2);
        // the G8 construction lists the G(4,2,2) generators first, then H's two
        std::vector<Mat<ZpkRing>> gens = W;
        gens.push_back(H[H.size() - 2]);
        gens.push_back(H[H.size() - 1]);
        auto G = generate_closure(R, gens, 1000, false);
        return std::to_string(G.order());
    });
    sink.run("G422_quotient", "normalizer quotient of G(4,2,2)", "S3", [&] {
        ZpkRing R(13, 2);
        auto Wg = reduce_mod_zpk(build_family2(4, 2, 2), 13, 2);
        auto H = reduce_mod_zpk(build_sporadic("G8"), 13, 2);
        MatrixGroup<ZpkRing> W(R, Wg);
        W.enumerate(1000, true);
        std::vector<Mat<ZpkRing>> N{H[H.size() - 2], H[H.size() - 1]};
        auto t = quotient_mod_scalars_and_subgroup(R, N, W);
        return identify_small_group(t);
    });
    sink.run("G333_order", "extension of G(3,3,3) by the SL2(F3)-like H", "648", [&] {
        ZpkRing R(7, 2);
        auto G26 = reduce_mod_zpk(build_sporadic("G26"), 7, 2);
        auto G = generate_closure(R, G26, 3000, false);
        return std::to_string(G.order());
    });
    sink.run("G333_quotient", "normalizer quotient of G(3,3,3)", "A4", [&] {
        ZpkRing R(7, 2);
        auto all = reduce_mod_zpk(build_sporadic("G26"), 7, 2);
        auto Wg = reduce_mod_zpk(build_family2(3, 3, 3), 7, 2);
        MatrixGroup<ZpkRing> W(R, Wg);
        W.enumerate(1000, true);
        std::vector<Mat<ZpkRing>> N{all[all.size() - 2], all[all.size() - 1]};
        auto t = quotient_mod_scalars_and_subgroup(R, N, W);
        return identify_small_group(t);
    });
    sink.run("G14_order", "G5 extends by one reflection to order 144", "144", [&] {
        auto real = build_sporadic("G14");
        MatrixGroup<CycRing> G(real.ring, real.gens);
        G.enumerate(1000, false);
        return std::to_string(G.order());
    });
    sink.run("G5_C2_quotient", "normalizer quotient of G5 over Z_p", "C2", [&] {
        // b = [[-1, 1 + w/2], [(1 - w)/3, 1]] normalizes G5 with b^2 = (3/2) I
        ZpkRing R(7, 2);
        auto Wg = reduce_mod_zpk(build_sporadic("G5"), 7, 2);
        MatrixGroup<ZpkRing> W(R, Wg);
        W.enumerate(1000, true);
        auto e = RootOfUnityEmbedding::of_subfield(SubfieldGen::whole_field(3), 7, 2);
        const CycloField& F3 = CycloField::get(3);
        Cyc w = Cyc::zeta(F3, 1);
        Mat<ZpkRing> b(2, R);
        b.at(0, 0) = e.map(Cyc(F3, Rat(-1)));
        b.at(0, 1) = e.map(Cyc(F3, Rat(1)) + w.scaled(Rat(1, 2)));
        b.at(1, 0) = e.map((Cyc(F3, Rat(1)) - w).scaled(Rat(1, 3)));
        b.at(1, 1) = e.map(Cyc(F3, Rat(1)));
        auto t = quotient_mod_scalars_and_subgroup(R, {b}, W);
        return identify_small_group(t);
    });
    sink.run("G7_C2_quotient", "normalizer quotient of G7 over Z_p", "C2", [&] {
        ZpkRing R(13, 2);
        auto Wg = reduce_mod_zpk(build_sporadic("G7"), 13, 2);
        auto G10g = reduce_mod_zpk(build_sporadic("G10"), 13, 2);
        MatrixGroup<ZpkRing> W(R, Wg);
        W.enumerate(1000, true);
        std::vector<Mat<ZpkRing>> N{G10g.back()}; // diag(1, i)
        auto t = quotient_mod_scalars_and_subgroup(R, N, W);
        return identify_small_group(t);
    });
    sink.run("family2_generic_quotient", "generic family-2 quotient C_gcd(r,n)", "C2", [&] {
        // G(4,2,4): gcd(2,4) = 2, extension by diag(1,1,1,zeta_4)
        ZpkRing R(13, 2);
        auto Wg = reduce_mod_zpk(build_family2(4, 2, 4), 13, 2);
        MatrixGroup<ZpkRing> W(R, Wg);
        W.enumerate(20000, true);
        auto e = RootOfUnityEmbedding::primitive_root(4, 13, 2);
        Mat<ZpkRing> d = Mat<ZpkRing>::identity(4, R);
        d.at(3, 3) = e.image;
        auto t = quotient_mod_scalars_and_subgroup(R, {d}, W, 4'000'000, 40000);
        return identify_small_group(t);
    });
    for (auto [m, p] : {std::pair<int, int>{5, 19}, {7, 13}, {9, 17}, {12, 11}}) {
        std::ostringstream id;
        id << "dihedral_unit_m" << m << "_p" << p;
        sink.run(id.str(), "2 + zeta + zeta^-1 is a unit when p = +-1 mod m", "unit",
                 [&, m, p] {
                     auto e = RootOfUnityEmbedding::real_subfield(m, std::uint64_t(p), 2);
                     const CycloField& F = CycloField::get(m);
                     Cyc u = Cyc(F, Rat(2)) + Cyc::zeta(F, 1) + Cyc::zeta(F, -1);
                     return e.ctx.is_unit(e.map(u)) ? "unit" : "not a unit";
                 });
    }
}

void suite_invariants(RowSink& sink) {
    sink.run("pu3_modular_prefix", "modular invariants of the PU(3) lattice",
             "1/((1-t)(1-t^6)) through degree 12", [&] {
                 FpRing R3(3);
                 auto gens = reduce_mod_p(build_entry("PU3"), 3);
                 auto dims = modular_invariant_dims(R3, gens, 2, 12);
                 auto expect = degree_series({1, 6}, 12);
                 return dims.dims == expect
                            ? std::string("1/((1-t)(1-t^6)) through degree 12")
                            : std::string("prefix differs");
             });
    sink.run("pu3_coinvariants", "coinvariant lattice of PU(3) is Z/3", "Z/3", [&] {
        auto rep = coinvariants_torsion(build_entry("PU3"), 3);
        if (rep.torsion.size() == 1 && rep.torsion[0] == 3 && rep.free_rank == 0)
            return std::string("Z/3");
        return std::string("different torsion");
    });
    sink.run("su2_coinvariants", "coinvariants of the rank-1 lattice", "Z/2, no 3-torsion",
             [&] {
                 auto rep = coinvariants_torsion(build_weyl("A1"), 3);
                 if (rep.torsion.size() == 1 && rep.torsion[0] == 2 && !rep.has_p_torsion)
                     return std::string("Z/2, no 3-torsion");
                 return std::string("different");
             });
    sink.run("degreecheck_PU3_3", "modular degrees differ from characteristic zero",
             "FAIL at degree 1", [&] {
                 auto r = polynomial_degree_check("PU3", 3, 12);
                 return r.pass ? std::string("PASS")
                               : "FAIL at degree " + std::to_string(r.first_mismatch);
             });
    sink.run("degreecheck_F4_3", "excluded pair (F4, 3)", "FAIL at degree 4", [&] {
        auto r = polynomial_degree_check("F4", 3, 12);
        return r.pass ? std::string("PASS")
                      : "FAIL at degree " + std::to_string(r.first_mismatch);
    });
    sink.run("degreecheck_G12_3", "modular case with matching degrees", "PASS", [&] {
        auto r = polynomial_degree_check("G12", 3, 12);
        return r.pass ? std::string("PASS") : std::string("FAIL");
    });
    // every rank <= 4 catalog pair with p not dividing |W| passes
    for (const auto& entry : catalog_entries()) {
        if (entry.rank > 4 || !entry.enumerable || entry.order > Int(200000)) continue;
        Realization real = build_entry(entry.label);
        int added = 0;
        for (std::uint64_t p = 3; p < 30 && added < 2; p += 2) {
            bool prime = true;
            for (std::uint64_t d = 3; d * d <= p; d += 2)
                if (p % d == 0) prime = false;
            if (!prime) continue;
            if (!admissible_odd_prime(entry, p)) continue;
            if (!realizable_mod_p(real, p)) continue;
            if (entry.order % Int(p) == 0) continue;
            ++added;
            sink.run("nonmodular_" + entry.label + "_p" + std::to_string(p),
                     "averaging argument for p not dividing the order", "PASS",
                     [&, label = entry.label, p] {
                         auto r = polynomial_degree_check(label, p, 10);
                         return r.pass ? std::string("PASS") : std::string("FAIL");
                     });
        }
    }
    // Molien validation rows: product of degrees = order
    for (const char* label : {"A2", "B2", "G2", "F4", "G5", "G8", "G12", "G(4,2,2)",
                              "G(3,3,3)", "G26", "G29"}) {
        const auto& entry = catalog_entry(label);
        sink.run(std::string("molien_") + label, "fundamental degrees by Molien summation",
                 entry.order.str(), [&, label] {
                     auto mol =
                         molien_degrees(build_entry(label),
                                        int(2 * catalog_entry(label).degrees.back()) + 2);
                     Int prod = 1;
                     for (long d : mol.degrees) prod *= d;
                     return prod.str();
                 });
    }
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "e6-distributions", "e8-distributions", "e7-distributions", "orbits",
        "weyl-lower-bounds", "centralizer-dims", "obstructions", "catalog-lemmas",
        "normalizers", "invariants"};
    return names;
}

SuiteReport run_suite(const std::string& name, std::uint64_t cap) {
    SuiteReport report;
    report.name = name;
    RowSink sink{report.rows};
    auto start = std::chrono::steady_clock::now();
    if (name == "e6-distributions") suite_e6_distributions(sink);
    else if (name == "e8-distributions") suite_e8_distributions(sink);
    else if (name == "e7-distributions") suite_e7_distributions(sink);
    else if (name == "orbits") suite_orbits(sink);
    else if (name == "weyl-lower-bounds") suite_weyl_lower_bounds(sink);
    else if (name == "centralizer-dims") suite_centralizer_dims(sink);
    else if (name == "obstructions") suite_obstructions(sink);
    else if (name == "catalog-lemmas") suite_catalog_lemmas(sink, cap);
    else if (name == "normalizers") suite_normalizers(sink);
    else if (name == "invariants") suite_invariants(sink);
    else throw std::invalid_argument("unknown suite: " + name);
    report.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::string report_to_text(const SuiteReport& r) {
    std::ostringstream os;
    os << "suite " << r.name << " (" << r.rows.size() << " rows, "
       << r.seconds << " s)\n";
    for (const auto& row : r.rows)
        os << "  [" << row.status << "] " << row.id << ": expected '" << row.expected
           << "' computed '" << row.computed << "'  -- " << row.anchor << "\n";
    os << (r.pass() ? "ALL PASS" : "FAILURES PRESENT") << "\n";
    return os.str();
}

std::string report_to_json(const SuiteReport& r) {
    nlohmann::ordered_json doc;
    doc["schema"] = "zrl-report-v1";
    doc["suite"] = r.name;
    doc["seconds"] = r.seconds;
    doc["pass"] = r.pass();
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : r.rows) {
        nlohmann::ordered_json j;
        j["id"] = row.id;
        j["anchor"] = row.anchor;
        j["expected"] = row.expected;
        j["computed"] = row.computed;
        j["status"] = row.status;
        doc["rows"].push_back(j);
    }
    return doc.dump(2);
}

void export_report(const SuiteReport& r, const std::string& path, const std::string& format) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << (format == "json" ? report_to_json(r) : report_to_text(r));
}

} // namespace zrl
