#pragma once

#include "zrl/numbers.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace zrl {

// The field Q(zeta_m), elements in the power basis 1, z, ..., z^{phi(m)-1}
// reduced modulo the m-th cyclotomic polynomial.
class CycloField {
public:
    explicit CycloField(int conductor);

    int conductor() const { return m_; }
    int degree() const { return deg_; }

    // Phi_m as monic integer polynomial, coefficient of x^i at index i.
    const std::vector<Int>& cyclotomic_poly() const { return phi_; }

    // x^k reduced mod Phi_m for k in [0, m); precomputed.
    const std::vector<Rat>& power_reduction(int k) const { return zpow_[k]; }

    static const CycloField& get(int conductor); // interned, thread-safe

private:
    int m_;
    int deg_;
    std::vector<Int> phi_;
    std::vector<std::vector<Rat>> zpow_;
};

class Cyc {
public:
    Cyc() : field_(nullptr) {}
    explicit Cyc(const CycloField& F) : field_(&F), c_(F.degree()) {}
    Cyc(const CycloField& F, const Rat& rational) : field_(&F), c_(F.degree()) {
        if (!c_.empty()) c_[0] = rational;
    }

    static Cyc zeta(const CycloField& F, long k = 1); // zeta_m^k
    // Normalize a raw coefficient vector (length <= m) against Phi_m.
    static Cyc from_coeffs(const CycloField& F, const std::vector<Rat>& raw);

    const CycloField& field() const { return *field_; }
    const std::vector<Rat>& coeffs() const { return c_; }
    bool is_zero() const;
    bool is_rational() const;
    Rat rational_part() const { return c_.empty() ? Rat(0) : c_[0]; }

    Cyc operator+(const Cyc& o) const;
    Cyc operator-(const Cyc& o) const;
    Cyc operator-() const;
    Cyc operator*(const Cyc& o) const;
    Cyc& operator+=(const Cyc& o) { return *this = *this + o; }
    Cyc& operator-=(const Cyc& o) { return *this = *this - o; }
    Cyc& operator*=(const Cyc& o) { return *this = *this * o; }
    bool operator==(const Cyc& o) const { return field_ == o.field_ && c_ == o.c_; }
    bool operator!=(const Cyc& o) const { return !(*this == o); }

    // *this += a * b, reducing against Phi_m without temporaries
    void add_product(const Cyc& a, const Cyc& b);

    Cyc inverse() const; // extended Euclid against Phi_m; throws on zero
    Cyc conj() const;    // zeta -> zeta^{-1}
    Cyc galois(int t) const; // zeta -> zeta^t, gcd(t, m) = 1
    Cyc scaled(const Rat& r) const;

    std::string str() const; // human-readable, exact
    void hash_append(std::string& out) const;

private:
    const CycloField* field_;
    std::vector<Rat> c_;
};

} // namespace zrl
