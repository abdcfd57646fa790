#include "zrl/rootsys.hpp"

#include <doctest.h>

using namespace zrl;

namespace {

TorusPoint tp(const RootSystem& rs, std::initializer_list<int> e, std::uint32_t p = 3) {
    TorusPoint h;
    h.rs = &rs;
    h.p = p;
    for (int x : e) h.e.push_back(std::uint8_t(((x % int(p)) + int(p)) % int(p)));
    return h;
}

} // namespace

TEST_CASE("root system sizes") {
    CHECK(RootSystem::build("A2").roots().size() == 6);
    CHECK(RootSystem::build("F4").roots().size() == 48);
    CHECK(RootSystem::build("E6").roots().size() == 72);
    CHECK(RootSystem::build("E7").roots().size() == 126);
    CHECK(RootSystem::build("E8").roots().size() == 240);
    CHECK(RootSystem::build("G2").roots().size() == 12);
    CHECK(RootSystem::build("B3").roots().size() == 18);
    CHECK(RootSystem::build("D4").roots().size() == 24);
    CHECK(RootSystem::build("E8").adjoint_dim() == 248);
}

TEST_CASE("root exponents") {
    RootSystem e8 = RootSystem::build("E8");
    TorusPoint triv = tp(e8, {0, 0, 0, 0, 0, 0, 0, 0});
    for (const auto& a : e8.roots()) CHECK(root_exponent(a, triv) == 0);
    // simple alpha_i at h_{alpha_i}(omega) gives the Cartan diagonal 2
    for (int i = 0; i < 8; ++i) {
        TorusPoint h = tp(e8, {0, 0, 0, 0, 0, 0, 0, 0});
        h.e[i] = 1;
        std::vector<int> alpha(8, 0);
        alpha[i] = 1;
        CHECK(root_exponent(alpha, h) == 2);
    }
}

TEST_CASE("adjoint traces of the named E8 torus elements") {
    RootSystem e8 = RootSystem::build("E8");
    const auto& F3 = CycloField::get(3);
    auto as_int = [&](const Cyc& c) {
        REQUIRE(c.is_rational());
        REQUIRE(den(c.rational_part()) == 1);
        return long(num(c.rational_part()));
    };
    CHECK(as_int(adjoint_trace_toral(tp(e8, {0, 0, 0, 0, 0, 0, 0, 0}))) == 248);
    // a-bar = h1(w) h2(w) h3(w^2): class 3A, trace -4, centralizer A8 of dim 80
    TorusPoint a = tp(e8, {1, 1, 2, 0, 0, 0, 0, 0});
    CHECK(as_int(adjoint_trace_toral(a)) == -4);
    CHECK(centralizer_dimension({Cyc(F3, Rat(248)), adjoint_trace_toral(a),
                                 adjoint_trace_toral(a.inv())}) == 80);
    // x1 = h1(w) h5(w) h8(w): class 3B, trace 5
    CHECK(as_int(adjoint_trace_toral(tp(e8, {1, 0, 0, 0, 1, 0, 0, 1}))) == 5);
    // x2, x3 also 3B
    CHECK(as_int(adjoint_trace_toral(tp(e8, {1, 0, 2, 0, 2, 1, 0, 0}))) == 5);
    CHECK(as_int(adjoint_trace_toral(tp(e8, {2, 0, 1, 0, 2, 1, 0, 0}))) == 5);
    // x3 a^-1: class 3D, trace 77 (centralizer E7 T1 of dimension 134)
    TorusPoint x3 = tp(e8, {2, 0, 1, 0, 2, 1, 0, 0});
    TorusPoint d = x3.mul(a.inv());
    CHECK(as_int(adjoint_trace_toral(d)) == 77);
}

TEST_CASE("adjoint traces in E6: the explicit 14-dimension computation") {
    RootSystem e6 = RootSystem::build("E6");
    const auto& F3 = CycloField::get(3);
    TorusPoint z = tp(e6, {1, 0, 2, 0, 1, 2});
    TorusPoint x1 = tp(e6, {1, 0, 1, 0, 1, 1});
    CHECK(adjoint_trace_toral(z) == Cyc(F3, Rat(78)));
    // trace of x1 equals 30 + 24 w + 24 w^2 (= 6)
    Cyc expect = Cyc(F3, Rat(30)) + Cyc::zeta(F3, 1).scaled(Rat(24)) +
                 Cyc::zeta(F3, 2).scaled(Rat(24));
    CHECK(adjoint_trace_toral(x1) == expect);
    CHECK(expect == Cyc(F3, Rat(6)));
    // (1/27)(3*78 + 24*(30+24w+24w^2)) = 14
    std::vector<Cyc> traces;
    for (int i = 0; i < 3; ++i) traces.push_back(Cyc(F3, Rat(78)));
    for (int i = 0; i < 24; ++i) traces.push_back(expect);
    CHECK(centralizer_dimension(traces) == 14);
}

TEST_CASE("centralizer dimension basics and errors") {
    const auto& F3 = CycloField::get(3);
    CHECK(centralizer_dimension({Cyc(F3, Rat(248))}) == 248);
    // inconsistent data: non-integer average
    CHECK_THROWS_AS(centralizer_dimension({Cyc(F3, Rat(1)), Cyc(F3, Rat(2))}),
                    std::domain_error);
    // a torus centralizes itself: dimension >= rank for subgroup of torus points
    RootSystem e6 = RootSystem::build("E6");
    std::vector<Cyc> traces;
    TorusPoint a = tp(e6, {1, 0, 2, 0, 2, 1});
    for (int i = 0; i < 3; ++i) {
        TorusPoint x = i == 0 ? tp(e6, {0, 0, 0, 0, 0, 0}) : (i == 1 ? a : a.inv());
        traces.push_back(adjoint_trace_toral(x));
    }
    CHECK(centralizer_dimension(traces) >= 6);
}

TEST_CASE("weyl words: identity, simple negation, the E2a 15-letter word") {
    RootSystem e6 = RootSystem::build("E6");
    FpRing R3(3);
    CHECK(mat_is_identity(R3, weyl_word_matrix(e6, R3, WeylWord{})));
    // s_i sends the i-th coroot to its negative
    for (int i = 1; i <= 6; ++i) {
        WeylWord w{{i}};
        TorusPoint h = tp(e6, {0, 0, 0, 0, 0, 0});
        h.e[i - 1] = 1;
        auto img = apply_weyl_word(e6, w, h);
        CHECK(img.e == h.inv().e);
    }
    WeylWord w15{{1, 4, 2, 3, 1, 4, 5, 4, 6, 5, 4, 2, 3, 1, 4}};
    TorusPoint a = tp(e6, {1, 0, 2, 0, 2, 1});
    TorusPoint x2 = tp(e6, {0, 2, 2, 0, 2, 0});
    TorusPoint x1 = tp(e6, {1, 0, 1, 0, 1, 1});
    CHECK(apply_weyl_word(e6, w15, a).e == x2.e);
    CHECK(apply_weyl_word(e6, w15, x2).e == a.e);
    auto x2x1i = x2.mul(x1.inv());
    TorusPoint e4 = tp(e6, {0, 0, 0, 1, 0, 0});
    CHECK(apply_weyl_word(e6, w15, x2x1i).e == e4.e);
    // z is central: fixed by every word
    TorusPoint z = tp(e6, {1, 0, 2, 0, 1, 2});
    CHECK(apply_weyl_word(e6, w15, z).e == z.e);
}

TEST_CASE("trace is a Weyl-class function and respects inversion symmetry") {
    RootSystem e6 = RootSystem::build("E6");
    TorusPoint a = tp(e6, {1, 0, 2, 0, 2, 1});
    WeylWord w{{2, 4, 3, 1, 5, 6, 4, 2}};
    CHECK(adjoint_trace_toral(a) == adjoint_trace_toral(apply_weyl_word(e6, w, a)));
    // trace(h) conjugate equals trace(h^{-1}) because roots pair off as {a, -a}
    CHECK(adjoint_trace_toral(a).conj() == adjoint_trace_toral(a.inv()));
}
