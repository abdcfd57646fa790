#include "zrl/cyclotomic.hpp"
#include "zrl/zmod.hpp"

#include <doctest.h>

#include <random>

using namespace zrl;

TEST_CASE("cyclotomic normalization") {
    const auto& F3 = CycloField::get(3);
    // 1 + z3 + z3^2 = 0
    Cyc x = Cyc::from_coeffs(F3, {Rat(1), Rat(1), Rat(1)});
    CHECK(x.is_zero());

    const auto& F4 = CycloField::get(4);
    // z4^2 = -1
    Cyc i2 = Cyc::zeta(F4, 2);
    CHECK(i2 == Cyc(F4, Rat(-1)));

    const auto& F9 = CycloField::get(9);
    CHECK(Cyc::zeta(F9, 9) == Cyc(F9, Rat(1)));
    CHECK(CycloField::get(9).degree() == 6);

    CHECK_THROWS(CycloField(0));
}

TEST_CASE("cyclotomic inverse") {
    const auto& F3 = CycloField::get(3);
    Cyc one(F3, Rat(1));
    CHECK(one.inverse() == one);
    Cyc w = Cyc::zeta(F3, 1);
    CHECK(w.inverse() == Cyc::zeta(F3, 2));

    const auto& F5 = CycloField::get(5);
    Cyc x = Cyc(F5, Rat(2)) + Cyc::zeta(F5, 1) + Cyc::zeta(F5, -1);
    Cyc xi = x.inverse();
    CHECK(x * xi == Cyc(F5, Rat(1)));

    CHECK_THROWS_AS(Cyc(F5).inverse(), std::domain_error);
}

TEST_CASE("cyclotomic inverse: random elements invert exactly") {
    std::mt19937 rng(7);
    for (int m : {5, 8, 12}) {
        const auto& F = CycloField::get(m);
        for (int t = 0; t < 20; ++t) {
            std::vector<Rat> c(F.degree());
            bool nz = false;
            for (auto& x : c) {
                x = Rat(int(rng() % 7) - 3);
                if (x != 0) nz = true;
            }
            if (!nz) continue;
            Cyc x = Cyc::from_coeffs(F, c);
            if (x.is_zero()) continue;
            CHECK(x * x.inverse() == Cyc(F, Rat(1)));
        }
    }
}

TEST_CASE("embed_root_of_unity examples") {
    // (m=4, p=13, k=1): smallest r with r^2 = -1 mod 13 is 5
    auto e = RootOfUnityEmbedding::primitive_root(4, 13, 1);
    CHECK(e.image == 5);
    CHECK(e.ctx.pow(e.image, 2) == 12);

    // (m=3, p=7, k=2): r^2 + r + 1 = 0 mod 49; 18 qualifies, as does the
    // Teichmuller lift 30 of the smallest seed 2 that this embedding picks
    auto e2 = RootOfUnityEmbedding::primitive_root(3, 7, 2);
    CHECK(e2.ctx.mul(e2.image, e2.image) + e2.image + 1 == 49);
    CHECK((18ull * 18 + 18 + 1) % 49 == 0);
    CHECK(e2.image == 30);
    CHECK(e2.order_of_image() == 3);

    // real-subfield mode (m=5, p=19): y^2 + y - 1 = 0 has a root; 2 + theta a unit
    auto er = RootOfUnityEmbedding::real_subfield(5, 19, 1);
    const auto& F5 = CycloField::get(5);
    Cyc u = Cyc(F5, Rat(2)) + Cyc::zeta(F5, 1) + Cyc::zeta(F5, -1);
    auto img = er.map(u);
    CHECK(er.ctx.is_unit(img));

    CHECK_THROWS_AS(RootOfUnityEmbedding::primitive_root(5, 13, 1), std::domain_error);
}

TEST_CASE("embedding has exact order m and is a ring homomorphism") {
    std::mt19937 rng(11);
    for (auto [m, p, k] : {std::tuple<int, int, int>{3, 7, 2},
                           {4, 13, 2},
                           {5, 11, 1},
                           {8, 17, 2},
                           {12, 13, 1}}) {
        auto e = RootOfUnityEmbedding::primitive_root(m, p, k);
        CHECK(e.order_of_image() == std::uint64_t(m));
        const auto& F = CycloField::get(m);
        for (int t = 0; t < 10; ++t) {
            std::vector<Rat> ca(F.degree()), cb(F.degree());
            for (auto& x : ca) x = Rat(int(rng() % 5) - 2);
            for (auto& x : cb) x = Rat(int(rng() % 5) - 2);
            Cyc a = Cyc::from_coeffs(F, ca), b = Cyc::from_coeffs(F, cb);
            CHECK(e.map(a * b) == e.ctx.mul(e.map(a), e.map(b)));
            CHECK(e.map(a + b) == e.ctx.add(e.map(a), e.map(b)));
        }
    }
}

TEST_CASE("galois and conjugation") {
    const auto& F12 = CycloField::get(12);
    Cyc z = Cyc::zeta(F12, 1);
    CHECK(z.galois(7) == Cyc::zeta(F12, 7));
    CHECK(z.conj() * z == Cyc(F12, Rat(1)));
    // omega = z12^4 is fixed by zeta -> zeta^7
    Cyc w = Cyc::zeta(F12, 4);
    CHECK(w.galois(7) == w);
}
