#pragma once

#include "zrl/cyclotomic.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace zrl {

// Residue arithmetic modulo p^k for an odd prime p. Values live in [0, p^k).
struct ZpkCtx {
    std::uint64_t p = 0;
    int k = 1;
    std::uint64_t q = 0; // p^k

    ZpkCtx() = default;
    ZpkCtx(std::uint64_t p_, int k_);

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % q; }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + q - b % q) % q; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
    bool is_unit(std::uint64_t a) const { return a % p != 0; }
    std::uint64_t inv(std::uint64_t a) const; // throws if not a unit
    std::uint64_t neg(std::uint64_t a) const { return a ? q - a : 0; }
};

// A defining generator theta of a subfield Q(theta) of Q(zeta_m), with its
// minimal polynomial over Q. Coefficients are rational; elements of the
// subfield are written in the power basis 1, theta, ..., theta^{d-1}.
struct SubfieldGen {
    int conductor = 1;           // ambient Q(zeta_m)
    Cyc theta;                   // generator inside the ambient field
    std::vector<Rat> minpoly;    // monic, degree d, index i = coeff of x^i
    std::vector<std::vector<Rat>> basis_mat; // ambient coords of theta^j, j < d (deg x d)

    static SubfieldGen whole_field(int m);          // theta = zeta_m, minpoly Phi_m
    static SubfieldGen real_subfield(int m);        // theta = zeta_m + zeta_m^{-1}
    static SubfieldGen from_theta(int m, const Cyc& theta);

    // Coordinates of x in the power basis of theta; nullopt if x is not in Q(theta).
    std::optional<std::vector<Rat>> coordinates(const Cyc& x) const;
};

// Deterministic lift of a root of unity (or of a subfield generator) into Z/p^k.
struct RootOfUnityEmbedding {
    int m = 1;
    ZpkCtx ctx;
    std::uint64_t image = 1;       // image of the generator theta
    SubfieldGen subfield;          // what was embedded

    // theta = zeta_m as such: requires m | p - 1. Smallest valid residue mod p,
    // then Teichmuller lift x -> x^p iterated to precision k.
    static RootOfUnityEmbedding primitive_root(int m, std::uint64_t p, int k);
    // real-subfield mode: theta = zeta_m + zeta_m^{-1}, requires p = +-1 (mod m).
    static RootOfUnityEmbedding real_subfield(int m, std::uint64_t p, int k);
    // generic: smallest mod-p root of theta's minimal polynomial, Hensel-lifted.
    static RootOfUnityEmbedding of_subfield(const SubfieldGen& sf, std::uint64_t p, int k);

    // Map a cyclotomic element lying in Q(theta) to Z/p^k. Throws if the element
    // is outside the subfield or has p in a denominator.
    std::uint64_t map(const Cyc& x) const;
    std::uint64_t map_rat(const Rat& r) const;
    // multiplicative order of `image` in (Z/p^k)^*
    std::uint64_t order_of_image() const;
};

// Smallest root of a polynomial mod p (by search), then Hensel lift to p^k.
// Returns nullopt if no root exists mod p or the root fails to lift (singular).
std::optional<std::uint64_t> hensel_smallest_root(const std::vector<Rat>& poly,
                                                  std::uint64_t p, int k);

} // namespace zrl
