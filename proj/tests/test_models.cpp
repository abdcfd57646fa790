#include "zrl/models.hpp"

#include <doctest.h>

using namespace zrl;

namespace {

const CycloField& F36() { return CycloField::get(36); }

Cyc c36(long v) { return Cyc(F36(), Rat(v)); }

Cyc omega36() { return Cyc::zeta(F36(), 12); }

// lift a conductor-3 cyclotomic value into the model field
Cyc lift3(const Cyc& x) {
    std::vector<Rat> raw(13, Rat(0));
    raw[0] = x.coeffs()[0];
    raw[12] = x.coeffs()[1];
    return Cyc::from_coeffs(F36(), raw);
}

ModelElem named(Model m, const std::string& s) { return named_elements(m).elems.at(s); }

std::map<std::string, int> dist(std::initializer_list<const char*> names, Model m,
                                Ambient amb, bool with_z = false) {
    std::vector<ModelElem> gens;
    for (const char* n : names) gens.push_back(named(m, n));
    if (with_z) gens.push_back(named(m, "z"));
    return class_distribution(gens, amb);
}

using DistMap = std::map<std::string, int>;

} // namespace

TEST_CASE("named element relations and trace27 anchors") {
    auto z = named(Model::TripleSL3, "z");
    auto a = named(Model::TripleSL3, "a");
    CHECK(trace27(z) == omega36().scaled(Rat(27)));
    CHECK(trace27(model_identity(Model::TripleSL3)) == c36(27));
    CHECK(trace27(a) == c36(0));
    // adjoint dimensions at the identity
    CHECK(adjoint_trace_model(model_identity(Model::TripleSL3), Ambient::E6) == c36(78));
    CHECK(adjoint_trace_model(model_identity(Model::SL9), Ambient::E8) == c36(248));
    CHECK(adjoint_trace_model(model_identity(Model::SL6xSL3), Ambient::E7) == c36(133));
    CHECK(adjoint_trace_model(model_identity(Model::TripleSL3), Ambient::E7) == c36(133));
}

TEST_CASE("cross-oracle: model traces equal toral traces on the named elements") {
    RootSystem e8 = RootSystem::build("E8");
    auto toral = [&](std::initializer_list<int> e) {
        TorusPoint h;
        h.rs = &e8;
        h.p = 3;
        for (int x : e) h.e.push_back(std::uint8_t(x));
        return lift3(adjoint_trace_toral(h));
    };
    CHECK(adjoint_trace_model(named(Model::SL9, "a"), Ambient::E8) ==
          toral({1, 1, 2, 0, 0, 0, 0, 0}));
    CHECK(adjoint_trace_model(named(Model::SL9, "x1"), Ambient::E8) ==
          toral({1, 0, 0, 0, 1, 0, 0, 1}));
    CHECK(adjoint_trace_model(named(Model::SL9, "x2"), Ambient::E8) ==
          toral({1, 0, 2, 0, 2, 1, 0, 0}));
    CHECK(adjoint_trace_model(named(Model::SL9, "x3"), Ambient::E8) ==
          toral({2, 0, 1, 0, 2, 1, 0, 0}));
    auto x3ainv = model_mul(named(Model::SL9, "x3"), model_inv(named(Model::SL9, "a")));
    CHECK(adjoint_trace_model(x3ainv, Ambient::E8) == c36(77));

    RootSystem e6 = RootSystem::build("E6");
    auto toral6 = [&](std::initializer_list<int> e) {
        TorusPoint h;
        h.rs = &e6;
        h.p = 3;
        for (int x : e) h.e.push_back(std::uint8_t(x));
        return lift3(adjoint_trace_toral(h));
    };
    CHECK(adjoint_trace_model(named(Model::TripleSL3, "z"), Ambient::E6) ==
          toral6({1, 0, 2, 0, 1, 2}));
    CHECK(adjoint_trace_model(named(Model::TripleSL3, "a"), Ambient::E6) ==
          toral6({1, 0, 2, 0, 2, 1}));
    CHECK(adjoint_trace_model(named(Model::TripleSL3, "x1"), Ambient::E6) ==
          toral6({1, 0, 1, 0, 1, 1}));
    CHECK(adjoint_trace_model(named(Model::TripleSL3, "x2"), Ambient::E6) ==
          toral6({0, 2, 2, 0, 2, 0}));
    // a in TripleSL3: (78 + t + tbar)/3 = 24 = dim SL3^3/C3
    auto a6 = named(Model::TripleSL3, "a");
    std::vector<Cyc> traces{c36(78), adjoint_trace_model(a6, Ambient::E6),
                            adjoint_trace_model(model_inv(a6), Ambient::E6)};
    CHECK(centralizer_dimension(traces) == 24);
}

TEST_CASE("3E6 class distributions") {
    CHECK(dist({"a", "x2", "y2"}, Model::TripleSL3, Ambient::E6) == DistMap{{"3C", 26}});
    CHECK(dist({"z", "a", "x2", "y2"}, Model::TripleSL3, Ambient::E6) ==
          DistMap{{"3C", 78}, {"3E", 1}, {"3E'", 1}});
    CHECK(dist({"z"}, Model::TripleSL3, Ambient::E6) == DistMap{{"3E", 1}, {"3E'", 1}});
}

TEST_CASE("E6 class distributions (preimages in 3E6)") {
    auto with_z = [&](std::initializer_list<const char*> names) {
        return dist(names, Model::TripleSL3, Ambient::E6, true);
    };
    auto x2x1i = model_mul(named(Model::TripleSL3, "x2"),
                           model_inv(named(Model::TripleSL3, "x1")));
    CHECK(with_z({"y1", "x2"}) == DistMap{{"3C", 18}, {"3D", 6}, {"3E", 1}, {"3E'", 1}});
    CHECK(with_z({"y1", "x1"}) == DistMap{{"3D", 24}, {"3E", 1}, {"3E'", 1}});
    CHECK(with_z({"a", "y1", "x2"}) ==
          DistMap{{"3C", 60}, {"3D", 18}, {"3E", 1}, {"3E'", 1}});
    CHECK(with_z({"a", "x2", "y2"}) == DistMap{{"3C", 78}, {"3E", 1}, {"3E'", 1}});
    CHECK(with_z({"a", "y1", "x1"}) == DistMap{{"3C", 6}, {"3D", 72}, {"3E", 1}, {"3E'", 1}});
    {
        std::vector<ModelElem> gens{x2x1i, named(Model::TripleSL3, "y1"),
                                    named(Model::TripleSL3, "x1"),
                                    named(Model::TripleSL3, "z")};
        CHECK(class_distribution(gens, Ambient::E6) ==
              DistMap{{"3A", 2}, {"3B", 2}, {"3B'", 2}, {"3C", 48}, {"3D", 24},
                      {"3E", 1}, {"3E'", 1}});
    }
    CHECK(with_z({"a", "y2", "y1", "x2"}) ==
          DistMap{{"3C", 186}, {"3D", 54}, {"3E", 1}, {"3E'", 1}});
    {
        std::vector<ModelElem> gens{named(Model::TripleSL3, "a"), x2x1i,
                                    named(Model::TripleSL3, "y1"),
                                    named(Model::TripleSL3, "x1"),
                                    named(Model::TripleSL3, "z")};
        CHECK(class_distribution(gens, Ambient::E6) ==
              DistMap{{"3A", 6}, {"3B", 6}, {"3B'", 6}, {"3C", 150}, {"3D", 72},
                      {"3E", 1}, {"3E'", 1}});
    }
}

TEST_CASE("class tags respect the inversion pairing") {
    auto z = named(Model::TripleSL3, "z");
    CHECK(class_tag(z, Ambient::E6) == "3E");
    CHECK(class_tag(model_inv(z), Ambient::E6) == "3E'");
    auto a = named(Model::TripleSL3, "a");
    CHECK(class_tag(a, Ambient::E6) == "3C");
    CHECK(class_tag(model_inv(a), Ambient::E6) == "3C");
    auto x1 = named(Model::TripleSL3, "x1");
    CHECK(class_tag(x1, Ambient::E6) == "3D");
    CHECK(class_tag(model_inv(x1), Ambient::E6) == "3D");
    auto x2x1i = model_mul(named(Model::TripleSL3, "x2"), model_inv(x1));
    CHECK(class_tag(x2x1i, Ambient::E6) == "3A");
    CHECK(class_tag(model_mul(x2x1i, z), Ambient::E6) == "3B");
    CHECK(class_tag(model_inv(model_mul(x2x1i, z)), Ambient::E6) == "3B'");
}

TEST_CASE("E8 class distributions") {
    Model m = Model::SL9;
    auto a = named(m, "a");
    auto x3ai = model_mul(named(m, "x3"), model_inv(a));
    auto D = [&](std::vector<ModelElem> gens) { return class_distribution(gens, Ambient::E8); };
    CHECK(D({named(m, "x1"), named(m, "y1"), a}) == DistMap{{"3A", 18}, {"3B", 8}});
    CHECK(D({named(m, "x1"), named(m, "y1"), named(m, "x3")}) == DistMap{{"3B", 26}});
    CHECK(D({named(m, "x1"), named(m, "y1"), named(m, "x3"), x3ai}) ==
          DistMap{{"3A", 52}, {"3B", 26}, {"3D", 2}});
    CHECK(D({named(m, "x2"), named(m, "x1"), named(m, "y1"), a}) ==
          DistMap{{"3A", 54}, {"3B", 26}});
    CHECK(D({named(m, "x2"), named(m, "x1"), named(m, "y1"), named(m, "x3")}) ==
          DistMap{{"3B", 80}});
    CHECK(D({named(m, "x2"), named(m, "x1"), named(m, "y1"), named(m, "x3"), x3ai}) ==
          DistMap{{"3A", 156}, {"3B", 80}, {"3D", 6}});
    CHECK(D({named(m, "x1"), named(m, "y1"), named(m, "x2"), named(m, "y2"), a}) ==
          DistMap{{"3A", 162}, {"3B", 80}});
    // E0 = <x1,x2,y1,y2> has distribution 3B^80 (it is toral)
    CHECK(D({named(m, "x1"), named(m, "x2"), named(m, "y1"), named(m, "y2")}) ==
          DistMap{{"3B", 80}});
}

TEST_CASE("2E7 class distributions via both models") {
    Model t = Model::TripleSL3;
    auto D7 = [&](std::vector<ModelElem> gens) { return class_distribution(gens, Ambient::E7); };
    CHECK(D7({named(t, "a"), named(t, "x2"), named(t, "y2")}) == DistMap{{"3C", 26}});
    CHECK(D7({named(t, "z"), named(t, "a"), named(t, "x2"), named(t, "y2")}) ==
          DistMap{{"3B", 2}, {"3C", 78}});
    // the SL6 o SL3 model: E = <g, A, B> is conjugate to E^3_{2E7}
    Model s = Model::SL6xSL3;
    CHECK(D7({named(s, "g"), named(s, "A"), named(s, "B")}) == DistMap{{"3C", 26}});
    // inclusion consistency: 3C[3E6] lands in 3C[2E7], 3E/3E' land in 3B[2E7]
    CHECK(class_tag(named(t, "a"), Ambient::E7) == "3C");
    CHECK(class_tag(named(t, "z"), Ambient::E7) == "3B");
    CHECK(class_tag(model_inv(named(t, "z")), Ambient::E7) == "3B");
}

TEST_CASE("distribution-dimension consistency for every table row") {
    auto dim_of = [&](std::vector<ModelElem> gens, Ambient amb) {
        auto sub = enumerate_elementary_abelian(gens);
        std::vector<Cyc> traces;
        for (const auto& e : sub.elements) traces.push_back(adjoint_trace_model(e, amb));
        return centralizer_dimension(traces);
    };
    Model t = Model::TripleSL3;
    auto z = named(t, "z");
    auto x2x1i = model_mul(named(t, "x2"), model_inv(named(t, "x1")));
    // 3E6 rows: both centralizers are E^4 (dimension 0)
    CHECK(dim_of({named(t, "a"), named(t, "x2"), named(t, "y2")}, Ambient::E6) == 0);
    CHECK(dim_of({z, named(t, "a"), named(t, "x2"), named(t, "y2")}, Ambient::E6) == 0);
    // E6 rows (preimages): dims 8, 14, 2, 0, 8, 4, 0, 2
    CHECK(dim_of({named(t, "y1"), named(t, "x2"), z}, Ambient::E6) == 8);
    CHECK(dim_of({named(t, "y1"), named(t, "x1"), z}, Ambient::E6) == 14);
    CHECK(dim_of({named(t, "a"), named(t, "y1"), named(t, "x2"), z}, Ambient::E6) == 2);
    CHECK(dim_of({named(t, "a"), named(t, "x2"), named(t, "y2"), z}, Ambient::E6) == 0);
    CHECK(dim_of({named(t, "a"), named(t, "y1"), named(t, "x1"), z}, Ambient::E6) == 8);
    CHECK(dim_of({x2x1i, named(t, "y1"), named(t, "x1"), z}, Ambient::E6) == 4);
    CHECK(dim_of({named(t, "a"), named(t, "y2"), named(t, "y1"), named(t, "x2"), z},
                 Ambient::E6) == 0);
    CHECK(dim_of({named(t, "a"), x2x1i, named(t, "y1"), named(t, "x1"), z}, Ambient::E6) == 2);
    // E8 rows: dims 8, 14, 4, 2, 8, 2, 0
    Model m = Model::SL9;
    auto a8 = named(m, "a");
    auto x3ai = model_mul(named(m, "x3"), model_inv(a8));
    CHECK(dim_of({named(m, "x1"), named(m, "y1"), a8}, Ambient::E8) == 8);
    CHECK(dim_of({named(m, "x1"), named(m, "y1"), named(m, "x3")}, Ambient::E8) == 14);
    CHECK(dim_of({named(m, "x1"), named(m, "y1"), named(m, "x3"), x3ai}, Ambient::E8) == 4);
    CHECK(dim_of({named(m, "x2"), named(m, "x1"), named(m, "y1"), a8}, Ambient::E8) == 2);
    CHECK(dim_of({named(m, "x2"), named(m, "x1"), named(m, "y1"), named(m, "x3")},
                 Ambient::E8) == 8);
    CHECK(dim_of({named(m, "x2"), named(m, "x1"), named(m, "y1"), named(m, "x3"), x3ai},
                 Ambient::E8) == 2);
    CHECK(dim_of({named(m, "x1"), named(m, "y1"), named(m, "x2"), named(m, "y2"), a8},
                 Ambient::E8) == 0);
    // 2E7 rows: dims 3 and 1
    CHECK(dim_of({named(t, "a"), named(t, "x2"), named(t, "y2")}, Ambient::E7) == 3);
    CHECK(dim_of({z, named(t, "a"), named(t, "x2"), named(t, "y2")}, Ambient::E7) == 1);
}

TEST_CASE("induced matrices on E8 subgroups match the stated matrices") {
    Model m = Model::SL9;
    FpRing R3(3);
    auto a = named(m, "a");
    auto x3ai = model_mul(named(m, "x3"), model_inv(a));
    std::vector<ModelElem> e5a{named(m, "x2"), named(m, "x1"), named(m, "y1"),
                               named(m, "x3"), x3ai};
    std::vector<ModelElem> e5b{named(m, "x1"), named(m, "y1"), named(m, "x2"),
                               named(m, "y2"), a};
    auto expect = [&](int n, std::initializer_list<std::pair<int, int>> ones,
                      std::initializer_list<std::pair<int, int>> others = {}) {
        Mat<FpRing> mm = Mat<FpRing>::identity(n, R3);
        for (auto [i, j] : ones) mm.at(i - 1, j - 1) = R3.add(mm.at(i - 1, j - 1), 1);
        for (auto [i, v] : others) mm.at(i - 1, i - 1) = std::uint32_t(v);
        return mm;
    };
    CHECK(induced_matrix(named(m, "conj_t1_blk"), e5a) == expect(5, {{3, 2}}));
    CHECK(induced_matrix(named(m, "conj_t2_blk"), e5a) == expect(5, {{2, 3}}));
    CHECK(induced_matrix(named(m, "conj_I_b2_b"), e5a) == expect(5, {{1, 3}}));
    CHECK(induced_matrix(named(m, "conj_sigma"), e5a) == expect(5, {}, {{1, 2}}));
    CHECK(induced_matrix(named(m, "y2"), e5a) == expect(5, {{1, 4}, {1, 5}}));
    CHECK(induced_matrix(named(m, "conj_I_I_b2"), e5a) == expect(5, {{4, 3}}));
    CHECK(induced_matrix(named(m, "conj_t1_blk"), e5b) == expect(5, {{2, 1}}));
    CHECK(induced_matrix(named(m, "conj_t2_blk"), e5b) == expect(5, {{1, 2}}));
    CHECK(induced_matrix(named(m, "conj_I_b2_b"), e5b) == expect(5, {{1, 4}, {3, 2}}));
    CHECK(induced_matrix(named(m, "conj_t1_blow"), e5b) == expect(5, {{4, 3}}));
    CHECK(induced_matrix(named(m, "conj_t2_blow"), e5b) == expect(5, {{3, 4}}));
}

TEST_CASE("induced matrices on E6 subgroups (modulo the center z)") {
    Model t = Model::TripleSL3;
    FpRing R3(3);
    auto z = named(t, "z");
    std::vector<ModelElem> quot{z};
    std::vector<ModelElem> e4a{named(t, "a"), named(t, "y2"), named(t, "y1"),
                               named(t, "x2")};
    auto x2x1i = model_mul(named(t, "x2"), model_inv(named(t, "x1")));
    std::vector<ModelElem> e4b{named(t, "a"), x2x1i, named(t, "y1"), named(t, "x1")};
    auto E = [&](int i, int j) {
        Mat<FpRing> mm = Mat<FpRing>::identity(4, R3);
        mm.at(i - 1, j - 1) = 1;
        return mm;
    };
    CHECK(induced_matrix(named(t, "conj_b2II"), e4a, quot) == E(1, 2));
    CHECK(induced_matrix(named(t, "conj_I_t1_t1sq"), e4a, quot) == E(3, 4));
    CHECK(induced_matrix(TwistS1{}, e4a, quot) == E(2, 3));
    {
        Mat<FpRing> d = Mat<FpRing>::identity(4, R3);
        d.at(0, 0) = 2;
        d.at(2, 2) = 2;
        d.at(3, 3) = 2;
        CHECK(induced_matrix(TwistS2{}, e4a, quot) == d);
    }
    // [tau1,tau1,tau1] fixes a, y2, y1 and sends x2 to x2 y2; in the paper's
    // permuted basis {x2, y2^2, s1, a} this is the stated I4 + e_{2,1}
    CHECK(induced_matrix(named(t, "conj_t1_t1_t1"), e4a, quot) == E(2, 4));
    CHECK(induced_matrix(named(t, "conj_I_t1_t1sq"), e4b, quot) == E(3, 4));
    CHECK(induced_matrix(named(t, "conj_I_t2b_t2sq"), e4b, quot) == E(4, 3));
    {
        Mat<FpRing> d = Mat<FpRing>::identity(4, R3);
        d.at(1, 1) = 2;
        CHECK(induced_matrix(named(t, "conj_s23II"), e4b, quot) == d);
    }
    CHECK(induced_matrix(named(t, "conj_gII"), e4b, quot) == E(1, 2));
    CHECK(induced_matrix(named(t, "conj_Ib2I"), e4b, quot) == E(1, 3));
    {
        Mat<FpRing> d(4, R3);
        for (int i = 0; i < 4; ++i) d.at(i, i) = 2;
        CHECK(induced_matrix(TwistS2{}, e4b, quot) == d);
    }
    // in 3E6 itself: [I3, beta, beta^2] induces I4 + e_{1,4} on {z, a, x2, y2}
    std::vector<ModelElem> e4_3e6{z, named(t, "a"), named(t, "x2"), named(t, "y2")};
    CHECK(induced_matrix(named(t, "conj_I_b_b2"), e4_3e6) == E(1, 4));
}
