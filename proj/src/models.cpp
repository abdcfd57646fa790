#include "zrl/models.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace zrl {

namespace {

constexpr int kConductor = 36;

const CycloField& field() { return CycloField::get(kConductor); }

Cyc zeta(int k) { return Cyc::zeta(field(), k); }
Cyc omega() { return zeta(12); }
Cyc eta() { return zeta(4); } // e^{2 pi i / 9}
Cyc imag_i() { return zeta(9); }

Mat<CycRing> cmat(int n) { return Mat<CycRing>(n, model_ring()); }

Mat<CycRing> diag(const std::vector<Cyc>& d) {
    auto m = cmat(int(d.size()));
    for (size_t i = 0; i < d.size(); ++i) m.at(int(i), int(i)) = d[i];
    return m;
}

Mat<CycRing> scalar_mat(int n, const Cyc& c) {
    auto m = cmat(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = c;
    return m;
}

Mat<CycRing> block_diag3(const Mat<CycRing>& a, const Mat<CycRing>& b, const Mat<CycRing>& c) {
    auto m = cmat(a.n + b.n + c.n);
    auto put = [&](const Mat<CycRing>& x, int off) {
        for (int i = 0; i < x.n; ++i)
            for (int j = 0; j < x.n; ++j) m.at(off + i, off + j) = x.at(i, j);
    };
    put(a, 0);
    put(b, a.n);
    put(c, a.n + b.n);
    return m;
}

// blowup Delta_{n,k}: each entry a_{ij} replaced by a_{ij} I_k
Mat<CycRing> blowup(const Mat<CycRing>& a, int k) {
    auto m = cmat(a.n * k);
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j)
            for (int l = 0; l < k; ++l) m.at(i * k + l, j * k + l) = a.at(i, j);
    return m;
}

Mat<CycRing> transpose_inv(const Mat<CycRing>& a) {
    auto inv = mat_inv(model_ring(), a);
    auto m = cmat(a.n);
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j) m.at(i, j) = inv.at(j, i);
    return m;
}

Cyc mat_trace(const Mat<CycRing>& a) {
    Cyc t(field());
    for (int i = 0; i < a.n; ++i) t += a.at(i, i);
    return t;
}

std::vector<Cyc> power_traces(const Mat<CycRing>& a, int upto) {
    std::vector<Cyc> p;
    Mat<CycRing> x = a;
    for (int k = 1; k <= upto; ++k) {
        p.push_back(mat_trace(x));
        if (k < upto) x = mat_mul(model_ring(), x, a);
    }
    return p;
}

// central generator per model
std::vector<Mat<CycRing>> central_translation(Model m, int n_scalars_power) {
    Cyc w = omega();
    Cyc wk(field(), Rat(1));
    for (int i = 0; i < n_scalars_power; ++i) wk *= w;
    switch (m) {
    case Model::TripleSL3:
        return {scalar_mat(3, wk), scalar_mat(3, wk), scalar_mat(3, wk)};
    case Model::SL9:
        return {scalar_mat(9, wk)};
    case Model::SL6xSL3: {
        Cyc w2k = wk * wk;
        return {scalar_mat(6, wk), scalar_mat(3, w2k)};
    }
    }
    throw std::logic_error("bad model");
}

std::string serialize(const std::vector<Mat<CycRing>>& comp) {
    std::string out;
    for (const auto& m : comp)
        for (const auto& e : m.a) e.hash_append(out);
    return out;
}

} // namespace

const CycRing& model_ring() {
    static CycRing ring(field());
    return ring;
}

const std::string& ModelElem::key() const {
    if (key_.empty() && !comp.empty()) key_ = serialize(comp);
    return key_;
}

namespace {
// lexicographic comparison of component lists by exact coefficients
int compare_comp(const std::vector<Mat<CycRing>>& a, const std::vector<Mat<CycRing>>& b) {
    for (size_t m = 0; m < a.size(); ++m)
        for (size_t e = 0; e < a[m].a.size(); ++e) {
            const auto& x = a[m].a[e].coeffs();
            const auto& y = b[m].a[e].coeffs();
            for (size_t i = 0; i < x.size(); ++i) {
                if (x[i] < y[i]) return -1;
                if (y[i] < x[i]) return 1;
            }
        }
    return 0;
}
} // namespace

ModelElem model_make(Model m, std::vector<Mat<CycRing>> comp) {
    // canonical form: least central translate in coefficient order
    ModelElem best;
    best.model = m;
    best.comp = comp;
    for (int k = 1; k < 3; ++k) {
        auto cen = central_translation(m, k);
        std::vector<Mat<CycRing>> cand;
        for (size_t i = 0; i < comp.size(); ++i)
            cand.push_back(mat_mul(model_ring(), cen[i], comp[i]));
        if (compare_comp(cand, best.comp) < 0) best.comp = std::move(cand);
    }
    return best;
}

ModelElem model_identity(Model m) {
    switch (m) {
    case Model::TripleSL3:
        return model_make(m, {Mat<CycRing>::identity(3, model_ring()),
                              Mat<CycRing>::identity(3, model_ring()),
                              Mat<CycRing>::identity(3, model_ring())});
    case Model::SL9:
        return model_make(m, {Mat<CycRing>::identity(9, model_ring())});
    case Model::SL6xSL3:
        return model_make(m, {Mat<CycRing>::identity(6, model_ring()),
                              Mat<CycRing>::identity(3, model_ring())});
    }
    throw std::logic_error("bad model");
}

ModelElem model_mul(const ModelElem& a, const ModelElem& b) {
    if (a.model != b.model) throw std::invalid_argument("model mismatch");
    std::vector<Mat<CycRing>> comp;
    for (size_t i = 0; i < a.comp.size(); ++i)
        comp.push_back(mat_mul(model_ring(), a.comp[i], b.comp[i]));
    return model_make(a.model, std::move(comp));
}

ModelElem model_inv(const ModelElem& a) {
    std::vector<Mat<CycRing>> comp;
    for (const auto& m : a.comp) comp.push_back(mat_inv(model_ring(), m));
    return model_make(a.model, std::move(comp));
}

ModelElem model_conj(const ModelElem& x, const ModelElem& c) {
    return model_mul(model_mul(model_inv(c), x), c);
}

ModelElem model_conj_s1(const ModelElem& x) {
    if (x.model != Model::TripleSL3) throw std::invalid_argument("s1 twist: TripleSL3 only");
    return model_make(x.model, {x.comp[1], x.comp[2], x.comp[0]});
}

ModelElem model_conj_s2(const ModelElem& x) {
    if (x.model != Model::TripleSL3) throw std::invalid_argument("s2 twist: TripleSL3 only");
    return model_make(x.model,
                      {transpose_inv(x.comp[0]), transpose_inv(x.comp[2]),
                       transpose_inv(x.comp[1])});
}

Cyc trace27(const ModelElem& x) {
    if (x.model != Model::TripleSL3) throw std::invalid_argument("trace27: TripleSL3 only");
    Cyc t(field());
    for (int i = 0; i < 3; ++i) {
        Cyc tr_g = mat_trace(x.comp[i]);
        Cyc tr_next_inv = mat_trace(mat_inv(model_ring(), x.comp[(i + 1) % 3]));
        t += tr_g * tr_next_inv;
    }
    return t;
}

Cyc adjoint_trace_model(const ModelElem& x, Ambient ambient) {
    const CycRing& R = model_ring();
    Cyc one(field(), Rat(1));
    if (ambient == Ambient::E6) {
        if (x.model != Model::TripleSL3) throw std::invalid_argument("e6 trace: TripleSL3");
        // sum_i (tr g_i tr g_i^-1 - 1) + prod tr g_i + prod tr g_i^-1
        Cyc t(field());
        Cyc prod(field(), Rat(1)), prodinv(field(), Rat(1));
        for (int i = 0; i < 3; ++i) {
            Cyc a = mat_trace(x.comp[i]);
            Cyc b = mat_trace(mat_inv(R, x.comp[i]));
            t += a * b - one;
            prod *= a;
            prodinv *= b;
        }
        return t + prod + prodinv;
    }
    if (ambient == Ambient::E8) {
        if (x.model != Model::SL9) throw std::invalid_argument("e8 trace: SL9");
        const Mat<CycRing>& g = x.comp[0];
        auto gi = mat_inv(R, g);
        auto lam3 = [&](const Mat<CycRing>& m) {
            auto p = power_traces(m, 3);
            // (p1^3 - 3 p1 p2 + 2 p3) / 6
            Cyc v = p[0] * p[0] * p[0] - (p[0] * p[1]).scaled(Rat(3)) + p[2].scaled(Rat(2));
            return v.scaled(Rat(1, 6));
        };
        return mat_trace(g) * mat_trace(gi) - one + lam3(g) + lam3(gi);
    }
    // ambient E7
    if (x.model == Model::SL6xSL3) {
        const Mat<CycRing>& A = x.comp[0];
        const Mat<CycRing>& B = x.comp[1];
        auto Ai = mat_inv(R, A);
        auto Bi = mat_inv(R, B);
        auto lam2 = [&](const Mat<CycRing>& m) {
            auto p = power_traces(m, 2);
            return (p[0] * p[0] - p[1]).scaled(Rat(1, 2));
        };
        // the (Lambda^2 6)-factor pairs with the dual of the 3: this is the
        // orientation under which the central (w I6, w^2 I3) acts trivially
        return mat_trace(A) * mat_trace(Ai) - one + mat_trace(B) * mat_trace(Bi) - one +
               lam2(A) * mat_trace(Bi) + lam2(Ai) * mat_trace(B);
    }
    if (x.model == Model::TripleSL3) {
        // e7 = e6 + C + 27 + dual(27) under 3E6 x T1
        return adjoint_trace_model(x, Ambient::E6) + one + trace27(x) + trace27(model_inv(x));
    }
    throw std::invalid_argument("e7 trace: unsupported model");
}

namespace {

NamedElements build_named(Model m) {
    const CycRing& R = model_ring();
    Cyc w = omega();
    Cyc w2 = w * w;
    Cyc one(field(), Rat(1));
    NamedElements N;
    // beta = diag(1, w, w^2), gamma = (1,2,3), tau1, tau2 in SL3
    Mat<CycRing> beta = diag({one, w, w2});
    Mat<CycRing> gamma = cmat(3);
    gamma.at(0, 2) = one;
    gamma.at(1, 0) = one;
    gamma.at(2, 1) = one;
    // tau1 = (e^{-pi i/18}/sqrt 3) [[1,w^2,1],[1,1,w^2],[w^2,1,1]]
    // e^{-pi i/18} = zeta36^{-1}; sqrt3 = -i (w - w^2)
    Cyc sqrt3 = -(imag_i() * (w - w2));
    Cyc f = zeta(-1) * sqrt3.inverse();
    Mat<CycRing> tau1 = cmat(3);
    {
        const Cyc vals[3][3] = {{one, w2, one}, {one, one, w2}, {w2, one, one}};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) tau1.at(i, j) = f * vals[i][j];
    }
    Mat<CycRing> tau2 = diag({eta(), (eta() * eta()).inverse(), eta()});
    // sigma23 = -(2,3) in SL3
    Mat<CycRing> sigma23 = cmat(3);
    sigma23.at(0, 0) = -one;
    sigma23.at(1, 2) = -one;
    sigma23.at(2, 1) = -one;
    N.sl3 = {{"beta", beta}, {"gamma", gamma}, {"tau1", tau1}, {"tau2", tau2},
             {"sigma23", sigma23}};
    // relations: beta^tau1 = beta gamma, gamma^tau1 = gamma, beta^tau2 = beta,
    // gamma^tau2 = beta gamma, [beta, gamma] = w I
    auto conj3 = [&](const Mat<CycRing>& x, const Mat<CycRing>& c) {
        return mat_mul(R, mat_mul(R, mat_inv(R, c), x), c);
    };
    auto eq_mod_center = [&](const Mat<CycRing>& a, const Mat<CycRing>& b) {
        for (int k = 0; k < 3; ++k) {
            Cyc wk(field(), Rat(1));
            for (int i = 0; i < k; ++i) wk *= w;
            bool same = true;
            for (int i = 0; i < 3 && same; ++i)
                for (int j = 0; j < 3 && same; ++j)
                    if (!(a.at(i, j) == wk * b.at(i, j))) same = false;
            if (same) return true;
        }
        return false;
    };
    if (!eq_mod_center(conj3(beta, tau1), mat_mul(R, beta, gamma)))
        throw std::logic_error("named elements: beta^tau1 != beta gamma");
    if (!eq_mod_center(conj3(gamma, tau1), gamma))
        throw std::logic_error("named elements: gamma^tau1 != gamma");
    if (!eq_mod_center(conj3(beta, tau2), beta))
        throw std::logic_error("named elements: beta^tau2 != beta");
    if (!eq_mod_center(conj3(gamma, tau2), mat_mul(R, beta, gamma)))
        throw std::logic_error("named elements: gamma^tau2 != beta gamma");
    {
        auto comm = mat_mul(R, mat_mul(R, beta, gamma),
                            mat_mul(R, mat_inv(R, beta), mat_inv(R, gamma)));
        if (!(comm == scalar_mat(3, w)))
            throw std::logic_error("named elements: [beta,gamma] != w I");
    }

    auto I3 = Mat<CycRing>::identity(3, R);
    if (m == Model::TripleSL3) {
        auto mk = [&](const Mat<CycRing>& a, const Mat<CycRing>& b, const Mat<CycRing>& c) {
            return model_make(Model::TripleSL3, {a, b, c});
        };
        Mat<CycRing> wI = scalar_mat(3, w);
        Mat<CycRing> w2I = scalar_mat(3, w2);
        N.elems["z"] = mk(I3, w2I, wI);
        N.elems["a"] = mk(wI, I3, I3);
        N.elems["x1"] = mk(I3, beta, beta);
        N.elems["x2"] = mk(beta, beta, beta);
        N.elems["y1"] = mk(I3, gamma, mat_mul(R, gamma, gamma));
        N.elems["y2"] = mk(gamma, gamma, gamma);
        N.elems["conj_b2II"] = mk(mat_mul(R, beta, beta), I3, I3);
        N.elems["conj_I_t1_t1sq"] = mk(I3, tau1, mat_mul(R, tau1, tau1));
        N.elems["conj_t1_t1_t1"] = mk(tau1, tau1, tau1);
        N.elems["conj_I_t2b_t2sq"] = mk(I3, mat_mul(R, tau2, beta), mat_mul(R, tau2, tau2));
        N.elems["conj_s23II"] = mk(sigma23, I3, I3);
        N.elems["conj_gII"] = mk(gamma, I3, I3);
        N.elems["conj_Ib2I"] = mk(I3, mat_mul(R, beta, beta), I3);
        N.elems["conj_I_b_b2"] = mk(I3, beta, mat_mul(R, beta, beta));
    } else if (m == Model::SL9) {
        auto mk = [&](const Mat<CycRing>& x) { return model_make(Model::SL9, {x}); };
        N.elems["a"] = mk(scalar_mat(9, eta()));
        N.elems["x1"] = mk(block_diag3(beta, beta, beta));
        N.elems["x2"] = mk(blowup(beta, 3));
        N.elems["x3"] = mk(block_diag3(I3, I3, scalar_mat(3, w)));
        N.elems["y1"] = mk(block_diag3(gamma, gamma, gamma));
        N.elems["y2"] = mk(blowup(gamma, 3));
        N.elems["conj_t1_blk"] = mk(block_diag3(tau1, tau1, tau1));
        N.elems["conj_t2_blk"] = mk(block_diag3(tau2, tau2, tau2));
        N.elems["conj_I_b2_b"] = mk(block_diag3(I3, mat_mul(R, beta, beta), beta));
        N.elems["conj_I_I_b2"] = mk(block_diag3(I3, I3, mat_mul(R, beta, beta)));
        N.elems["conj_t1_blow"] = mk(blowup(tau1, 3));
        N.elems["conj_t2_blow"] = mk(blowup(tau2, 3));
        {
            // sigma = -(1,4)(2,5)(3,6)
            Mat<CycRing> s = cmat(9);
            Cyc mone = -one;
            for (int l = 0; l < 3; ++l) {
                s.at(3 + l, l) = mone;
                s.at(l, 3 + l) = mone;
                s.at(6 + l, 6 + l) = mone;
            }
            N.elems["conj_sigma"] = mk(s);
        }
        // order sanity: a = eta I9 has order 9 as a matrix but order 3 mod center
        {
            ModelElem a = N.elems.at("a");
            ModelElem a3 = model_mul(model_mul(a, a), a);
            if (!(a3 == model_identity(Model::SL9)))
                throw std::logic_error("named elements: a^3 != 1 modulo the center");
        }
    } else {
        auto mk = [&](const Mat<CycRing>& A, const Mat<CycRing>& B) {
            return model_make(Model::SL6xSL3, {A, B});
        };
        auto blk2 = [&](const Mat<CycRing>& x) {
            auto mm = cmat(6);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) {
                    mm.at(i, j) = x.at(i, j);
                    mm.at(3 + i, 3 + j) = x.at(i, j);
                }
            return mm;
        };
        N.elems["g"] = mk(scalar_mat(6, w), Mat<CycRing>::identity(3, R));
        N.elems["A"] = mk(blk2(beta), beta);
        N.elems["B"] = mk(blk2(gamma), mat_mul(R, gamma, gamma));
    }
    return N;
}

std::map<Model, NamedElements>& named_cache() {
    static std::map<Model, NamedElements> cache;
    return cache;
}
std::mutex named_mutex;

ClassTable build_table(Ambient ambient) {
    ClassTable t;
    t.ambient = ambient;
    if (ambient == Ambient::E6) {
        const auto& N = named_elements(Model::TripleSL3);
        ModelElem z = N.elems.at("z");
        ModelElem a = N.elems.at("a");
        ModelElem x1 = N.elems.at("x1");
        ModelElem x2 = N.elems.at("x2");
        ModelElem r3a = model_mul(x2, model_inv(x1)); // [beta, I, I] type, class 3A
        auto add = [&](const std::string& tag, const ModelElem& e) {
            t.rows.push_back({tag, class_invariant(e, Ambient::E6)});
        };
        add("3A", r3a);
        add("3B", model_mul(r3a, z));
        add("3B'", model_mul(r3a, model_mul(z, z)));
        add("3C", a);
        add("3D", x1);
        add("3E", z);
        add("3E'", model_mul(z, z));
    } else if (ambient == Ambient::E8) {
        const auto& N = named_elements(Model::SL9);
        auto add = [&](const std::string& tag, const ModelElem& e) {
            t.rows.push_back({tag, class_invariant(e, Ambient::E8)});
        };
        add("3A", N.elems.at("a"));
        add("3B", N.elems.at("x1"));
        add("3D", model_mul(N.elems.at("x3"), model_inv(N.elems.at("a"))));
    } else {
        // 2E7: 3C anchored by the model element g; 3B via the inclusion of the
        // class 3E of 3E6 (the central z of 3E6)
        const auto& N7 = named_elements(Model::SL6xSL3);
        const auto& N6 = named_elements(Model::TripleSL3);
        t.rows.push_back({"3C", class_invariant(N7.elems.at("g"), Ambient::E7)});
        t.rows.push_back({"3B", class_invariant(N6.elems.at("z"), Ambient::E7)});
    }
    // representative invariants must be pairwise distinct
    for (size_t i = 0; i < t.rows.size(); ++i)
        for (size_t j = i + 1; j < t.rows.size(); ++j)
            if (t.rows[i].invariant == t.rows[j].invariant)
                throw std::logic_error("class table: colliding invariants " + t.rows[i].tag +
                                       " / " + t.rows[j].tag);
    return t;
}

} // namespace

const NamedElements& named_elements(Model m) {
    std::lock_guard<std::mutex> lock(named_mutex);
    auto& cache = named_cache();
    auto it = cache.find(m);
    if (it == cache.end()) it = cache.emplace(m, build_named(m)).first;
    return it->second;
}

std::vector<Cyc> class_invariant(const ModelElem& x, Ambient ambient) {
    if (ambient == Ambient::E6) return {trace27(x), adjoint_trace_model(x, Ambient::E6)};
    return {adjoint_trace_model(x, ambient)};
}

const ClassTable& class_table(Ambient ambient) {
    static std::mutex mu;
    static std::map<Ambient, ClassTable> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(ambient);
    if (it == cache.end()) it = cache.emplace(ambient, build_table(ambient)).first;
    return it->second;
}

std::string class_tag(const ModelElem& x, Ambient ambient) {
    const ClassTable& t = class_table(ambient);
    auto inv = class_invariant(x, ambient);
    const std::string* found = nullptr;
    for (const auto& row : t.rows)
        if (row.invariant == inv) {
            if (found) throw std::logic_error("ambiguous class tag");
            found = &row.tag;
        }
    if (!found) throw std::domain_error("no class tag matches the trace invariant");
    return *found;
}

int SubgroupEnum::lookup(const ModelElem& x) const {
    auto it = index.find(x.key());
    return it == index.end() ? -1 : it->second;
}

SubgroupEnum enumerate_elementary_abelian(const std::vector<ModelElem>& basis,
                                          const std::vector<ModelElem>& quotient) {
    SubgroupEnum out;
    if (basis.empty()) throw std::invalid_argument("empty basis");
    ModelElem id = model_identity(basis[0].model);
    // close the quotient subgroup (tiny)
    out.translates.push_back(id);
    {
        std::map<std::string, int> seen{{id.key(), 0}};
        for (size_t head = 0; head < out.translates.size(); ++head)
            for (const auto& q : quotient) {
                ModelElem next = model_mul(out.translates[head], q);
                if (seen.emplace(next.key(), 1).second) out.translates.push_back(next);
                if (out.translates.size() > 81) throw std::length_error("quotient too large");
            }
    }
    // the index maps every translate's key to the element index, so that
    // membership is a single lookup
    auto insert = [&](ModelElem x, FpVec e) {
        if (out.index.count(x.key())) return false;
        int idx = int(out.elements.size());
        for (size_t t = 1; t < out.translates.size(); ++t)
            out.index.emplace(model_mul(x, out.translates[t]).key(), idx);
        out.index.emplace(x.key(), idx);
        out.elements.push_back(std::move(x));
        out.exponents.push_back(std::move(e));
        return true;
    };
    insert(id, FpVec(basis.size(), 0));
    for (size_t head = 0; head < out.elements.size(); ++head) {
        for (size_t b = 0; b < basis.size(); ++b) {
            ModelElem next = model_mul(out.elements[head], basis[b]);
            if (out.elements.size() >= 3 * 3 * 3 * 3 * 3 * 3ull)
                throw std::length_error("subgroup enumeration exceeded 3^6");
            FpVec e = out.exponents[head];
            e[b] = std::uint8_t((e[b] + 1) % 3);
            insert(std::move(next), std::move(e));
        }
    }
    return out;
}

std::map<std::string, int> class_distribution(const std::vector<ModelElem>& gens,
                                              Ambient ambient) {
    auto sub = enumerate_elementary_abelian(gens);
    std::map<std::string, int> out;
    for (size_t i = 1; i < sub.elements.size(); ++i) ++out[class_tag(sub.elements[i], ambient)];
    return out;
}

Mat<FpRing> induced_matrix(const Conjugator& c, const std::vector<ModelElem>& basis,
                           const std::vector<ModelElem>& quotient) {
    auto sub = enumerate_elementary_abelian(basis, quotient);
    FpRing R3(3);
    Mat<FpRing> m(int(basis.size()), R3);
    for (size_t j = 0; j < basis.size(); ++j) {
        ModelElem img;
        if (std::holds_alternative<ModelElem>(c))
            img = model_conj(basis[j], std::get<ModelElem>(c));
        else if (std::holds_alternative<TwistS1>(c))
            img = model_conj_s1(basis[j]);
        else
            img = model_conj_s2(basis[j]);
        int idx = sub.lookup(img);
        if (idx < 0) throw std::domain_error("conjugator does not normalize the subgroup");
        const FpVec& e = sub.exponents[idx];
        for (size_t i = 0; i < basis.size(); ++i) m.at(int(i), int(j)) = e[i];
    }
    return m;
}

} // namespace zrl
