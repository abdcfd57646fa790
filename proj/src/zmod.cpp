#include "zrl/zmod.hpp"

#include <numeric>
#include <stdexcept>

namespace zrl {

ZpkCtx::ZpkCtx(std::uint64_t p_, int k_) : p(p_), k(k_) {
    if (p < 2) throw std::invalid_argument("modulus prime must be >= 2");
    q = 1;
    for (int i = 0; i < k; ++i) {
        if (q > UINT64_MAX / p) throw std::overflow_error("p^k exceeds 64 bits");
        q *= p;
    }
}

std::uint64_t ZpkCtx::mul(std::uint64_t a, std::uint64_t b) const {
    return (std::uint64_t)((__uint128_t)a * b % q);
}

std::uint64_t ZpkCtx::pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1 % q;
    a %= q;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t ZpkCtx::inv(std::uint64_t a) const {
    if (!is_unit(a)) throw std::domain_error("not a unit mod p^k");
    // extended Euclid
    std::int64_t q0 = std::int64_t(q);
    std::int64_t t = 0, newt = 1, r = q0, newr = std::int64_t(a % q);
    while (newr != 0) {
        std::int64_t quo = r / newr;
        t -= quo * newt;
        std::swap(t, newt);
        r -= quo * newr;
        std::swap(r, newr);
    }
    if (r != 1) throw std::domain_error("inverse does not exist");
    std::int64_t res = t % q0;
    if (res < 0) res += q0;
    return std::uint64_t(res);
}

SubfieldGen SubfieldGen::from_theta(int m, const Cyc& theta) {
    const CycloField& F = CycloField::get(m);
    int D = F.degree();
    SubfieldGen sf;
    sf.conductor = m;
    sf.theta = theta;
    // powers of theta until linear dependence -> minimal polynomial
    std::vector<Cyc> pows;
    Cyc cur(F, Rat(1));
    pows.push_back(cur);
    std::vector<std::vector<Rat>> rows; // ambient coords of theta^j
    rows.push_back(cur.coeffs());
    while (true) {
        cur = cur * theta;
        // solve: is cur in span of pows? Gaussian elimination over Q on D coords.
        std::vector<std::vector<Rat>> M; // columns = pows, rhs = cur
        int nc = int(pows.size());
        M.assign(D, std::vector<Rat>(nc + 1, Rat(0)));
        for (int j = 0; j < nc; ++j)
            for (int i = 0; i < D; ++i) M[i][j] = pows[j].coeffs()[i];
        for (int i = 0; i < D; ++i) M[i][nc] = cur.coeffs()[i];
        // eliminate
        std::vector<int> pivot_of_col(nc, -1);
        int r = 0;
        for (int c = 0; c < nc && r < D; ++c) {
            int piv = -1;
            for (int i = r; i < D; ++i)
                if (M[i][c] != 0) { piv = i; break; }
            if (piv < 0) continue;
            std::swap(M[piv], M[r]);
            Rat f = M[r][c];
            for (int j = c; j <= nc; ++j) M[r][j] /= f;
            for (int i = 0; i < D; ++i) {
                if (i == r || M[i][c] == 0) continue;
                Rat g = M[i][c];
                for (int j = c; j <= nc; ++j) M[i][j] -= g * M[r][j];
            }
            pivot_of_col[c] = r;
            ++r;
        }
        bool consistent = true;
        for (int i = r; i < D; ++i)
            if (M[i][nc] != 0) consistent = false;
        if (consistent) {
            // minpoly: x^{nc} - sum coeff_j x^j
            sf.minpoly.assign(nc + 1, Rat(0));
            sf.minpoly[nc] = 1;
            for (int c = 0; c < nc; ++c) {
                Rat coeff = pivot_of_col[c] >= 0 ? M[pivot_of_col[c]][nc] : Rat(0);
                sf.minpoly[c] = -coeff;
            }
            sf.basis_mat = rows;
            return sf;
        }
        pows.push_back(cur);
        rows.push_back(cur.coeffs());
        if (int(pows.size()) > D) throw std::logic_error("subfield generator: no minpoly found");
    }
}

SubfieldGen SubfieldGen::whole_field(int m) {
    const CycloField& F = CycloField::get(m);
    return from_theta(m, Cyc::zeta(F, 1));
}

SubfieldGen SubfieldGen::real_subfield(int m) {
    const CycloField& F = CycloField::get(m);
    return from_theta(m, Cyc::zeta(F, 1) + Cyc::zeta(F, -1));
}

std::optional<std::vector<Rat>> SubfieldGen::coordinates(const Cyc& x) const {
    const CycloField& F = CycloField::get(conductor);
    int D = F.degree();
    int d = int(basis_mat.size());
    // solve basis_mat^T * c = x over Q
    std::vector<std::vector<Rat>> M(D, std::vector<Rat>(d + 1, Rat(0)));
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < D; ++i) M[i][j] = basis_mat[j][i];
    for (int i = 0; i < D; ++i) M[i][d] = x.coeffs()[i];
    int r = 0;
    std::vector<int> pivcol;
    for (int c = 0; c < d && r < D; ++c) {
        int piv = -1;
        for (int i = r; i < D; ++i)
            if (M[i][c] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(M[piv], M[r]);
        Rat f = M[r][c];
        for (int j = c; j <= d; ++j) M[r][j] /= f;
        for (int i = 0; i < D; ++i) {
            if (i == r || M[i][c] == 0) continue;
            Rat g = M[i][c];
            for (int j = c; j <= d; ++j) M[i][j] -= g * M[r][j];
        }
        pivcol.push_back(c);
        ++r;
    }
    for (int i = r; i < D; ++i)
        if (M[i][d] != 0) return std::nullopt;
    std::vector<Rat> out(d, Rat(0));
    for (int i = 0; i < r; ++i) out[pivcol[i]] = M[i][d];
    return out;
}

std::optional<std::uint64_t> hensel_smallest_root(const std::vector<Rat>& poly,
                                                  std::uint64_t p, int k) {
    ZpkCtx fp(p, 1);
    auto red = [&](const Rat& r, const ZpkCtx& c) -> std::uint64_t {
        Int n = num(r) % Int(c.q);
        if (n < 0) n += Int(c.q);
        Int d = den(r) % Int(c.q);
        std::uint64_t nn = n.convert_to<std::uint64_t>();
        std::uint64_t dd = d.convert_to<std::uint64_t>();
        return c.mul(nn, c.inv(dd));
    };
    auto eval = [&](std::uint64_t x, const ZpkCtx& c) -> std::uint64_t {
        std::uint64_t acc = 0;
        for (int i = int(poly.size()) - 1; i >= 0; --i)
            acc = c.add(c.mul(acc, x), red(poly[i], c));
        return acc;
    };
    auto evald = [&](std::uint64_t x, const ZpkCtx& c) -> std::uint64_t {
        std::uint64_t acc = 0;
        for (int i = int(poly.size()) - 1; i >= 1; --i)
            acc = c.add(c.mul(acc, x), c.mul(std::uint64_t(i) % c.q, red(poly[i], c)));
        return acc;
    };
    std::optional<std::uint64_t> root;
    for (std::uint64_t x = 0; x < p; ++x)
        if (eval(x, fp) == 0 && evald(x, fp) != 0) { root = x; break; }
    if (!root) return std::nullopt;
    ZpkCtx full(p, k);
    std::uint64_t x = *root;
    // Newton iteration doubles precision; k is tiny so iterate a few times.
    for (int it = 0; it < k + 2; ++it) {
        std::uint64_t fx = eval(x, full);
        if (fx == 0) break;
        std::uint64_t dfx = evald(x, full);
        x = full.sub(x, full.mul(fx, full.inv(dfx)));
    }
    if (eval(x, full) != 0) return std::nullopt;
    return x;
}

RootOfUnityEmbedding RootOfUnityEmbedding::of_subfield(const SubfieldGen& sf,
                                                       std::uint64_t p, int k) {
    RootOfUnityEmbedding e;
    e.m = sf.conductor;
    e.ctx = ZpkCtx(p, k);
    e.subfield = sf;
    auto root = hensel_smallest_root(sf.minpoly, p, k);
    if (!root)
        throw std::domain_error("no admissible embedding of the subfield generator mod p");
    e.image = *root;
    return e;
}

RootOfUnityEmbedding RootOfUnityEmbedding::primitive_root(int m, std::uint64_t p, int k) {
    if (p % 2 == 0) throw std::invalid_argument("p must be odd");
    if ((p - 1) % std::uint64_t(m) != 0)
        throw std::domain_error("admissibility: m must divide p-1");
    // smallest residue of exact multiplicative order m mod p, then Teichmuller lift
    ZpkCtx fp(p, 1);
    std::uint64_t seed = 0;
    for (std::uint64_t x = 1; x < p; ++x) {
        if (fp.pow(x, m) != 1) continue;
        bool primitive = true;
        for (int d = 1; d < m; ++d)
            if (m % d == 0 && fp.pow(x, d) == 1) { primitive = false; break; }
        if (primitive) { seed = x; break; }
    }
    if (seed == 0 && m > 1) throw std::domain_error("no primitive m-th root mod p");
    if (m == 1) seed = 1;
    RootOfUnityEmbedding e;
    e.m = m;
    e.ctx = ZpkCtx(p, k);
    e.subfield = SubfieldGen::whole_field(m);
    std::uint64_t x = seed;
    for (int i = 0; i < k; ++i) x = e.ctx.pow(x, p); // Teichmuller: converges in <= k steps
    e.image = x;
    return e;
}

RootOfUnityEmbedding RootOfUnityEmbedding::real_subfield(int m, std::uint64_t p, int k) {
    if (p % 2 == 0) throw std::invalid_argument("p must be odd");
    if (p % std::uint64_t(m) != 1 && p % std::uint64_t(m) != std::uint64_t(m) - 1)
        throw std::domain_error("admissibility: need p = +-1 (mod m)");
    return of_subfield(SubfieldGen::real_subfield(m), p, k);
}

std::uint64_t RootOfUnityEmbedding::map_rat(const Rat& r) const {
    Int n = num(r) % Int(ctx.q);
    if (n < 0) n += Int(ctx.q);
    Int d = den(r);
    if (d % Int(ctx.p) == 0) throw std::domain_error("p in denominator");
    Int dm = d % Int(ctx.q);
    return ctx.mul(n.convert_to<std::uint64_t>(), ctx.inv(dm.convert_to<std::uint64_t>()));
}

std::uint64_t RootOfUnityEmbedding::map(const Cyc& x) const {
    auto coords = subfield.coordinates(x);
    if (!coords) throw std::domain_error("element is not in the embedded subfield");
    std::uint64_t acc = 0;
    for (int i = int(coords->size()) - 1; i >= 0; --i)
        acc = ctx.add(ctx.mul(acc, image), map_rat((*coords)[i]));
    return acc;
}

std::uint64_t RootOfUnityEmbedding::order_of_image() const {
    std::uint64_t x = image % ctx.q;
    std::uint64_t ord = 1;
    std::uint64_t cur = x;
    while (cur != 1 % ctx.q) {
        cur = ctx.mul(cur, x);
        ++ord;
        if (ord > ctx.q) throw std::logic_error("order_of_image: not a unit?");
    }
    return ord;
}

} // namespace zrl
