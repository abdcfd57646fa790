#include "zrl/rootsys.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace zrl {

namespace {

std::vector<int> cartan_matrix(char family, int n) {
    std::vector<int> A(size_t(n) * n, 0);
    auto at = [&](int i, int j) -> int& { return A[size_t(i) * n + j]; };
    for (int i = 0; i < n; ++i) at(i, i) = 2;
    auto link = [&](int i, int j) { at(i, j) = -1; at(j, i) = -1; };
    switch (family) {
    case 'A':
        for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
        break;
    case 'B': // alpha_n short: <alpha_n, alpha_{n-1}^vee> = -2
        for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
        at(n - 2, n - 1) = -2;
        break;
    case 'C':
        for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
        at(n - 1, n - 2) = -2;
        break;
    case 'D':
        for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
        link(n - 3, n - 1);
        break;
    case 'E': {
        // Bourbaki: chain 1-3-4-5-6(-7)(-8), node 2 attached to 4
        std::vector<int> chain = {0, 2, 3, 4, 5, 6, 7};
        chain.resize(n - 1);
        for (size_t i = 0; i + 1 < chain.size(); ++i) link(chain[i], chain[i + 1]);
        link(1, 3);
        break;
    }
    case 'F':
        A = {2, -1, 0, 0, -1, 2, -2, 0, 0, -1, 2, -1, 0, 0, -1, 2};
        break;
    case 'G':
        A = {2, -1, -3, 2};
        break;
    default:
        throw std::invalid_argument("unknown root system family");
    }
    return A;
}

} // namespace

RootSystem RootSystem::build(const std::string& type) {
    if (type.size() < 2) throw std::invalid_argument("bad root system type: " + type);
    char fam = type[0];
    int n = std::stoi(type.substr(1));
    if ((fam == 'E' && (n < 6 || n > 8)) || (fam == 'F' && n != 4) || (fam == 'G' && n != 2) ||
        ((fam == 'B' || fam == 'C') && n < 2) || (fam == 'D' && n < 3) || (fam == 'A' && n < 1))
        throw std::invalid_argument("bad root system type: " + type);
    RootSystem rs;
    rs.type_ = type;
    rs.rank_ = n;
    rs.cartan_ = cartan_matrix(fam, n);
    // closure of simple roots under simple reflections
    std::set<std::vector<int>> all;
    std::vector<std::vector<int>> frontier;
    for (int i = 0; i < n; ++i) {
        std::vector<int> a(n, 0);
        a[i] = 1;
        all.insert(a);
        frontier.push_back(a);
    }
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& a : frontier)
            for (int j = 0; j < n; ++j) {
                int c = rs.pairing(a, j);
                std::vector<int> im = a;
                im[j] -= c;
                if (all.insert(im).second) next.push_back(im);
            }
        frontier = std::move(next);
    }
    rs.roots_.assign(all.begin(), all.end());
    return rs;
}

int RootSystem::pairing(const std::vector<int>& alpha, int i) const {
    int s = 0;
    for (int j = 0; j < rank_; ++j) s += alpha[j] * cartan(i, j);
    return s;
}

Mat<FpRing> RootSystem::simple_reflection_coroot(const FpRing& ring, int j) const {
    // s_j(alpha_i^vee) = alpha_i^vee - cartan(i, j) alpha_j^vee
    Mat<FpRing> m = Mat<FpRing>::identity(rank_, ring);
    for (int i = 0; i < rank_; ++i)
        m.at(j, i) = ring.sub(m.at(j, i), ring.from_int(cartan(i, j)));
    return m;
}

std::uint32_t root_exponent(const std::vector<int>& alpha, const TorusPoint& h) {
    const RootSystem& rs = *h.rs;
    long s = 0;
    for (int i = 0; i < rs.rank(); ++i) s += long(h.e[i]) * rs.pairing(alpha, i);
    long m = s % long(h.p);
    return std::uint32_t(m < 0 ? m + h.p : m);
}

Cyc adjoint_trace_toral(const TorusPoint& h) {
    const auto& F = CycloField::get(int(h.p));
    Cyc tr(F, Rat(h.rs->rank()));
    std::vector<std::uint32_t> counts(h.p, 0);
    for (const auto& alpha : h.rs->roots()) ++counts[root_exponent(alpha, h)];
    for (std::uint32_t k = 0; k < h.p; ++k)
        if (counts[k]) tr += Cyc::zeta(F, k).scaled(Rat(counts[k]));
    return tr;
}

long centralizer_dimension(const std::vector<Cyc>& traces) {
    if (traces.empty()) throw std::invalid_argument("empty trace list");
    Cyc sum = traces[0];
    for (size_t i = 1; i < traces.size(); ++i) sum += traces[i];
    if (!sum.is_rational())
        throw std::domain_error("centralizer dimension: trace sum is not rational");
    Rat avg = sum.rational_part() / Rat(long(traces.size()));
    if (den(avg) != 1 || avg < 0)
        throw std::domain_error("centralizer dimension: not a non-negative integer");
    return long(num(avg));
}

Mat<FpRing> weyl_word_matrix(const RootSystem& rs, const FpRing& ring, const WeylWord& w) {
    Mat<FpRing> m = Mat<FpRing>::identity(rs.rank(), ring);
    for (int letter : w.letters) {
        if (letter < 1 || letter > rs.rank()) throw std::invalid_argument("bad word letter");
        m = mat_mul(ring, m, rs.simple_reflection_coroot(ring, letter - 1));
    }
    return m;
}

TorusPoint apply_weyl_word(const RootSystem& rs, const WeylWord& w, const TorusPoint& h) {
    FpRing ring(h.p);
    Mat<FpRing> m = weyl_word_matrix(rs, ring, w);
    TorusPoint out = h;
    out.e = fp_apply(ring, m, h.e);
    return out;
}

} // namespace zrl
