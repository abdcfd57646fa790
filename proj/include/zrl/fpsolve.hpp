#pragma once

#include <cstdint>
#include <vector>

namespace zrl {

// Dense F_p linear algebra on uint8 entries. Row-major.
struct FpDenseMat {
    std::uint32_t p = 3;
    int rows = 0, cols = 0;
    std::vector<std::uint8_t> a;

    FpDenseMat() = default;
    FpDenseMat(std::uint32_t p_, int r, int c) : p(p_), rows(r), cols(c), a(size_t(r) * c, 0) {}
    std::uint8_t& at(int i, int j) { return a[size_t(i) * cols + j]; }
    std::uint8_t at(int i, int j) const { return a[size_t(i) * cols + j]; }
};

// rank by Gaussian elimination (destroys a copy). Uses a bitsliced path for p = 3.
int fp_rank(const FpDenseMat& m);

// basis of the right kernel, as rows of length cols
std::vector<std::vector<std::uint8_t>> fp_kernel_basis(const FpDenseMat& m);

// reduced row echelon form in place; returns pivot columns
std::vector<int> fp_rref_inplace(FpDenseMat& m);

FpDenseMat fp_mul(const FpDenseMat& x, const FpDenseMat& y);
FpDenseMat fp_inverse(const FpDenseMat& m); // throws if singular

} // namespace zrl
