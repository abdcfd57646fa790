#include "zrl/matgroup.hpp"

#include <doctest.h>

using namespace zrl;

namespace {

Mat<FpRing> fpmat(const FpRing& R, int n, std::initializer_list<int> vals) {
    Mat<FpRing> m(n, R);
    auto it = vals.begin();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = R.from_int(*it++);
    return m;
}

} // namespace

TEST_CASE("closure: symmetric group as permutation matrices") {
    FpRing R(3);
    auto t = fpmat(R, 3, {0, 1, 0, 1, 0, 0, 0, 0, 1});
    auto c = fpmat(R, 3, {0, 0, 1, 1, 0, 0, 0, 1, 0});
    auto G = generate_closure(R, {t, c}, 100);
    CHECK(G.order() == 6);
    // closure idempotence: closing the element set again gives the same size
    auto G2 = generate_closure(R, G.elements(), 100);
    CHECK(G2.order() == 6);
}

TEST_CASE("closure: SL3(F3) has order 5616") {
    FpRing R(3);
    auto a = fpmat(R, 3, {1, 1, 0, 0, 1, 0, 0, 0, 1});
    auto b = fpmat(R, 3, {0, 0, 1, 1, 0, 0, 0, 1, 0});
    auto G = generate_closure(R, {a, b}, 10000, false);
    CHECK(G.order() == 5616); // q^3 (q^3-1)(q^2-1) for q=3
}

TEST_CASE("closure: G(4,2,2) over Z/13^2 has order 16") {
    ZpkRing R(13, 2);
    ZpkCtx c = R.ctx;
    // i mod 169: Teichmuller lift of 5: 5^13 mod 169
    std::uint64_t i = c.pow(5, 13);
    CHECK(c.mul(i, i) == c.q - 1);
    Mat<ZpkRing> swap(2, R), di(2, R), dm(2, R);
    swap.at(0, 1) = 1;
    swap.at(1, 0) = 1;
    di.at(0, 0) = i;
    di.at(1, 1) = c.q - i;
    dm.at(0, 0) = c.q - 1;
    dm.at(1, 1) = 1;
    auto G = generate_closure(R, {swap, di, dm}, 100);
    CHECK(G.order() == 16);
    CHECK_THROWS_AS(generate_closure(R, {swap, di, dm}, 7), ClosureOverflow);
}

TEST_CASE("orbit with Schreier: S3 on basis vector") {
    FpRing R(3);
    auto t = fpmat(R, 3, {0, 1, 0, 1, 0, 0, 0, 0, 1});
    auto c = fpmat(R, 3, {0, 0, 1, 1, 0, 0, 0, 1, 0});
    std::vector<Mat<FpRing>> gens{t, c};
    auto base = make_vector_point({1, 0, 0});
    auto orb = orbit_with_schreier(R, gens, OrbitAction::Vector, base, {}, 3);
    CHECK(orb.size() == 3);
    auto stab = stabilizer_generators(R, gens, orb);
    auto S = generate_closure(R, stab, 100);
    CHECK(S.order() == 2);
    // orbit-stabilizer
    CHECK(orb.size() * S.order() == 6);
    // transversal words map base to the indexed points
    for (std::uint32_t i = 0; i < orb.size(); ++i) {
        auto tr = orbit_transversal(R, gens, orb, i);
        CHECK(apply_point(R, tr, orb, base) == orb.points[i]);
    }
}

TEST_CASE("orbit: W(A2) on a simple coroot mod 3 has orbit size 6") {
    FpRing R(3);
    // simple reflections on the coroot basis: s_j(a_i) = a_i - A[i][j] a_j
    auto s1 = fpmat(R, 2, {-1, 1, 0, 1});
    auto s2 = fpmat(R, 2, {1, 0, 1, -1});
    auto orb = orbit_with_schreier(R, {s1, s2}, OrbitAction::Vector,
                                   make_vector_point({1, 0}), {}, 2);
    CHECK(orb.size() == 6);
}

TEST_CASE("orbit of zero vector is a fixed point") {
    FpRing R(3);
    auto s1 = fpmat(R, 2, {-1, 1, 0, 1});
    auto orb = orbit_with_schreier(R, {s1}, OrbitAction::Vector,
                                   make_vector_point({0, 0}), {}, 2);
    CHECK(orb.size() == 1);
}

TEST_CASE("identity group orbit and transitive cyclic stabilizer") {
    FpRing R(5);
    auto id = Mat<FpRing>::identity(4, R);
    auto orb = orbit_with_schreier(R, {id}, OrbitAction::Vector,
                                   make_vector_point({1, 2, 3, 4}), {}, 4);
    CHECK(orb.size() == 1);
    // C_5 acting on nonzero vectors of F_5 (scalar rotation x -> 2x is order 4; use
    // a 5-cycle permutation on 5 coordinates instead)
    FpRing R2(2);
    Mat<FpRing> cyc(5, R2);
    for (int i = 0; i < 5; ++i) cyc.at((i + 1) % 5, i) = 1;
    auto orb2 = orbit_with_schreier(R2, {cyc}, OrbitAction::Vector,
                                    make_vector_point({1, 0, 0, 0, 0}), {}, 5);
    CHECK(orb2.size() == 5);
    auto stab2 = stabilizer_generators(R2, {cyc}, orb2);
    CHECK(stab2.empty()); // trivial stabilizer
}

TEST_CASE("fixed subspace dimensions") {
    FpRing R(3);
    auto id4 = Mat<FpRing>::identity(4, R);
    CHECK(fixed_subspace_dim(R, {id4}, 4) == 4);
    Mat<FpRing> minus(4, R);
    for (int i = 0; i < 4; ++i) minus.at(i, i) = R.from_int(-1);
    CHECK(fixed_subspace_dim(R, {minus}, 4) == 0);
    auto u1 = fpmat(R, 3, {1, 1, 0, 0, 1, 0, 0, 0, 1});
    auto u2 = fpmat(R, 3, {1, 0, 1, 0, 1, 0, 0, 0, 1});
    CHECK(fixed_subspace_dim(R, {u1, u2}, 3) == 1);
}

TEST_CASE("fixed subspace dim is generating-set independent") {
    FpRing R(3);
    auto a = fpmat(R, 3, {1, 1, 0, 0, 1, 0, 0, 0, 1});
    auto b = fpmat(R, 3, {0, 0, 1, 1, 0, 0, 0, 1, 0});
    auto G = generate_closure(R, {a, b}, 10000);
    CHECK(fixed_subspace_dim(R, {a, b}, 3) ==
          fixed_subspace_dim(R, G.elements(), 3));
}

TEST_CASE("normalizes: scalars always, non-monomial matrix does not") {
    FpRing R(13);
    std::uint64_t i = 5; // i^2 = -1 mod 13
    Mat<FpRing> swap(2, R), di(2, R);
    swap.at(0, 1) = 1;
    swap.at(1, 0) = 1;
    di.at(0, 0) = R.from_int(long(i));
    di.at(1, 1) = R.from_int(long(13 - i));
    auto G422 = generate_closure(R, {swap, di,
                                     fpmat(R, 2, {-1, 0, 0, 1})}, 100);
    Mat<FpRing> scalar(2, R);
    scalar.at(0, 0) = scalar.at(1, 1) = 7;
    CHECK(normalizes(R, scalar, G422));
    // a random non-monomial matrix does not normalize G(3,1,2)-like groups
    auto G312 = generate_closure(R, {swap, fpmat(R, 2, {3, 0, 0, 1})}, 200);
    CHECK(G312.order() == 18);
    auto bad = fpmat(R, 2, {1, 1, 0, 1});
    CHECK_FALSE(normalizes(R, bad, G312));
}

TEST_CASE("quotient by scalars and subgroup: trivial case") {
    FpRing R(13);
    Mat<FpRing> swap(2, R), dm(2, R);
    swap.at(0, 1) = 1;
    swap.at(1, 0) = 1;
    dm.at(0, 0) = R.from_int(-1);
    dm.at(1, 1) = 1;
    auto W = generate_closure(R, {swap, dm}, 100);
    auto t = quotient_mod_scalars_and_subgroup(R, W.gens, W);
    CHECK(t.order == 1);
}

TEST_CASE("identify_small_group fingerprints") {
    // S3 as a multiplication table via permutation composition
    FpRing R(3);
    auto t = fpmat(R, 3, {0, 1, 0, 1, 0, 0, 0, 0, 1});
    auto c = fpmat(R, 3, {0, 0, 1, 1, 0, 0, 0, 1, 0});
    auto W = generate_closure(R, {t, c}, 100);
    // quotient by the trivial subgroup of scalars: S3 itself
    Mat<FpRing> id = Mat<FpRing>::identity(3, R);
    auto Wtriv = generate_closure(R, {id}, 10);
    auto tab = quotient_mod_scalars_and_subgroup(R, W.gens, Wtriv);
    CHECK(tab.order == 6);
    CHECK(identify_small_group(tab) == "S3");
}
