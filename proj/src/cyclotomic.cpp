#include "zrl/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace zrl {

Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

namespace {

// poly arithmetic on Int coefficient vectors, index i = coeff of x^i
std::vector<Int> poly_div_exact(const std::vector<Int>& a, const std::vector<Int>& b) {
    // exact division of integer polynomials, b monic-ish (leading coeff divides)
    std::vector<Int> r = a;
    if (r.size() < b.size()) throw std::logic_error("poly_div_exact: degree");
    std::vector<Int> q(r.size() - b.size() + 1);
    for (int i = int(r.size()) - 1; i >= int(b.size()) - 1; --i) {
        Int c = r[i] / b.back();
        q[i - (b.size() - 1)] = c;
        if (c != 0)
            for (size_t j = 0; j < b.size(); ++j) r[i - (b.size() - 1) + j] -= c * b[j];
    }
    for (auto& c : r)
        if (c != 0) throw std::logic_error("poly_div_exact: not exact");
    while (q.size() > 1 && q.back() == 0) q.pop_back();
    return q;
}

std::vector<Int> cyclotomic_polynomial(int m) {
    // x^m - 1 divided by all Phi_d, d | m, d < m.
    std::vector<Int> num(m + 1);
    num[0] = -1;
    num[m] = 1;
    for (int d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        num = poly_div_exact(num, cyclotomic_polynomial(d));
    }
    return num;
}

} // namespace

CycloField::CycloField(int conductor) : m_(conductor) {
    if (conductor <= 0) throw std::invalid_argument("conductor must be positive");
    phi_ = cyclotomic_polynomial(conductor);
    deg_ = int(phi_.size()) - 1;
    // zpow_[k] = x^k mod Phi_m, for k in [0, 2*deg) to cover products, and up to m for convenience
    int top = std::max(2 * deg_, m_ + 1);
    zpow_.resize(top);
    std::vector<Rat> cur(deg_, Rat(0));
    if (deg_ > 0) cur[0] = 1;
    for (int k = 0; k < top; ++k) {
        zpow_[k] = cur;
        // multiply by x
        Rat lead = deg_ > 0 ? cur[deg_ - 1] : Rat(0);
        for (int i = deg_ - 1; i > 0; --i) cur[i] = cur[i - 1];
        if (deg_ > 0) cur[0] = 0;
        if (lead != 0)
            for (int i = 0; i < deg_; ++i) cur[i] -= lead * Rat(phi_[i]);
    }
}

const CycloField& CycloField::get(int conductor) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<CycloField>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[conductor];
    if (!slot) slot = std::make_unique<CycloField>(conductor);
    return *slot;
}

Cyc Cyc::zeta(const CycloField& F, long k) {
    Cyc out(F);
    long kk = ((k % F.conductor()) + F.conductor()) % F.conductor();
    const auto& red = F.power_reduction(int(kk));
    out.c_ = red;
    return out;
}

Cyc Cyc::from_coeffs(const CycloField& F, const std::vector<Rat>& raw) {
    if (int(raw.size()) > F.conductor() && F.conductor() > 1)
        throw std::invalid_argument("coefficient vector longer than conductor");
    Cyc out(F);
    for (size_t k = 0; k < raw.size(); ++k) {
        if (raw[k] == 0) continue;
        const auto& red = F.power_reduction(int(k % F.conductor()));
        for (int i = 0; i < F.degree(); ++i) out.c_[i] += raw[k] * red[i];
    }
    return out;
}

bool Cyc::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool Cyc::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Cyc Cyc::operator+(const Cyc& o) const {
    Cyc out(*field_);
    for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] + o.c_[i];
    return out;
}

Cyc Cyc::operator-(const Cyc& o) const {
    Cyc out(*field_);
    for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] - o.c_[i];
    return out;
}

Cyc Cyc::operator-() const {
    Cyc out(*field_);
    for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = -c_[i];
    return out;
}

Cyc Cyc::operator*(const Cyc& o) const {
    if (is_zero() || o.is_zero()) return Cyc(*field_);
    int d = field_->degree();
    std::vector<Rat> prod(2 * d > 0 ? 2 * d - 1 : 1, Rat(0));
    for (int i = 0; i < d; ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; j < d; ++j) {
            if (o.c_[j] == 0) continue;
            prod[i + j] += c_[i] * o.c_[j];
        }
    }
    Cyc out(*field_);
    for (int k = 0; k < int(prod.size()); ++k) {
        if (prod[k] == 0) continue;
        if (k < d)
            out.c_[k] += prod[k];
        else {
            const auto& red = field_->power_reduction(k);
            for (int i = 0; i < d; ++i) out.c_[i] += prod[k] * red[i];
        }
    }
    return out;
}

void Cyc::add_product(const Cyc& a, const Cyc& b) {
    int d = field_->degree();
    for (int i = 0; i < d; ++i) {
        if (a.c_[i] == 0) continue;
        for (int j = 0; j < d; ++j) {
            if (b.c_[j] == 0) continue;
            Rat prod = a.c_[i] * b.c_[j];
            int k = i + j;
            if (k < d)
                c_[k] += prod;
            else {
                const auto& red = field_->power_reduction(k);
                for (int t = 0; t < d; ++t)
                    if (red[t] != 0) c_[t] += prod * red[t];
            }
        }
    }
}

Cyc Cyc::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in cyclotomic field");
    int d = field_->degree();
    if (d == 1) {
        Cyc out(*field_);
        out.c_[0] = Rat(1) / c_[0];
        return out;
    }
    // extended Euclid in Q[x]: s * this + t * Phi = gcd (= constant)
    using Poly = std::vector<Rat>;
    auto deg = [](const Poly& p) {
        for (int i = int(p.size()) - 1; i >= 0; --i)
            if (p[i] != 0) return i;
        return -1;
    };
    Poly a(c_.begin(), c_.end());
    Poly b(field_->cyclotomic_poly().size());
    for (size_t i = 0; i < b.size(); ++i) b[i] = Rat(field_->cyclotomic_poly()[i]);
    Poly s0(1, Rat(1)), s1(1, Rat(0)); // coefficients of `this`
    // invariant: a = s0 * this (mod Phi), b = s1 * this (mod Phi)
    std::swap(a, b);
    std::swap(s0, s1);
    while (true) {
        int db = deg(b);
        if (db < 0) throw std::logic_error("cyclotomic inverse: zero remainder chain");
        if (db == 0) break;
        int da = deg(a);
        if (da < db) {
            std::swap(a, b);
            std::swap(s0, s1);
            continue;
        }
        Rat f = a[da] / b[db];
        for (int i = 0; i <= db; ++i) a[da - db + i] -= f * b[i];
        if (int(s0.size()) < da - db + int(s1.size())) s0.resize(da - db + s1.size());
        for (int i = 0; i < int(s1.size()); ++i)
            if (s1[i] != 0) s0[da - db + i] -= f * s1[i];
    }
    // b is a nonzero constant: inverse = s1 / b[0]
    Cyc out(*field_);
    Poly red = s1;
    red.resize(std::max(red.size(), size_t(d)), Rat(0));
    Cyc folded = Cyc::from_coeffs(*field_, red);
    Rat inv_c = Rat(1) / b[0];
    for (int i = 0; i < d; ++i) out.c_[i] = folded.c_[i] * inv_c;
    return out;
}

Cyc Cyc::galois(int t) const {
    int m = field_->conductor();
    int tt = ((t % m) + m) % m;
    std::vector<Rat> raw(m, Rat(0));
    // coefficient of z^i maps to z^{i*t}
    for (int i = 0; i < field_->degree(); ++i) {
        if (c_[i] == 0) continue;
        raw[int((long(i) * tt) % m)] += c_[i];
    }
    return Cyc::from_coeffs(*field_, raw);
}

Cyc Cyc::conj() const { return galois(field_->conductor() - 1); }

Cyc Cyc::scaled(const Rat& r) const {
    Cyc out(*field_);
    for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] * r;
    return out;
}

std::string Cyc::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        os << c_[i].str();
        if (i > 0) os << "*z" << field_->conductor() << "^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

void Cyc::hash_append(std::string& out) const {
    for (const auto& x : c_) {
        out += x.str();
        out += ',';
    }
    out += ';';
}

} // namespace zrl
