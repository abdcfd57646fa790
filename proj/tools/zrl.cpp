#include "zrl/catalog.hpp"
#include "zrl/groupio.hpp"
#include "zrl/invariants.hpp"
#include "zrl/suites.hpp"
#include "zrl/steinberg.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>

using namespace zrl;

namespace {

std::uint64_t env_cap(std::uint64_t fallback) {
    const char* v = std::getenv("ZRL_CAP");
    return v ? std::strtoull(v, nullptr, 10) : fallback;
}

int cmd_catalog_list(std::uint64_t prime) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& e : catalog_entries()) {
        if (prime && !admissible_odd_prime(e, prime)) continue;
        nlohmann::ordered_json j;
        j["label"] = e.label;
        j["rank"] = e.rank;
        j["order"] = e.order.str();
        j["degrees"] = e.degrees;
        j["reflections"] = e.reflections;
        j["character_conductor"] = e.char_conductor;
        j["exotic"] = e.exotic;
        j["enumerable"] = e.enumerable;
        nlohmann::ordered_json adm = nlohmann::ordered_json::array();
        for (const auto& rule : e.admissible) {
            nlohmann::ordered_json r;
            r["mod"] = rule.modulus;
            r["residues"] = rule.residues;
            adm.push_back(r);
        }
        j["admissible"] = adm;
        out.push_back(j);
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_verify(const std::string& suite, const std::string& format, const std::string& path,
               std::uint64_t cap) {
    SuiteReport rep = run_suite(suite, cap);
    if (!path.empty())
        export_report(rep, path, format);
    else
        std::cout << (format == "json" ? report_to_json(rep) : report_to_text(rep));
    return rep.pass() ? 0 : 1;
}

int cmd_steinberg(int n, std::uint64_t p, const std::string& gamma,
                  const std::string& module) {
    FpRing ring{std::uint32_t(p)};
    std::vector<Mat<FpRing>> gens;
    if (gamma == "trivial") {
        gens = {Mat<FpRing>::identity(n, ring)};
    } else if (gamma == "sl3x1" && n == 4) {
        Mat<FpRing> a = Mat<FpRing>::identity(4, ring);
        a.at(0, 1) = 1;
        Mat<FpRing> b(4, ring);
        b.at(0, 2) = 1;
        b.at(1, 0) = 1;
        b.at(2, 1) = 1;
        b.at(3, 3) = 1;
        gens = {a, b};
    } else {
        auto doc = load_group_document(gamma);
        if (auto* fp = std::get_if<1>(&doc.group)) {
            if (fp->first.p != p) throw std::invalid_argument("document prime differs");
            gens = fp->second;
        } else {
            throw std::invalid_argument("steinberg expects an fp group document");
        }
        if (gens[0].n != n) throw std::invalid_argument("document dimension differs");
    }
    FpModule mod = module == "natural" ? FpModule::natural(std::uint32_t(p))
                                       : FpModule::trivial(std::uint32_t(p));
    if (module != "natural" && module != "trivial") {
        auto doc = load_group_document(module);
        auto* fp = std::get_if<1>(&doc.group);
        if (!fp || fp->second.size() != gens.size())
            throw std::invalid_argument("module document must list one matrix per generator");
        auto mats = fp->second;
        mod.dim = mats[0].n;
        std::vector<Mat<FpRing>> gens_copy = gens;
        mod.act = [mats, gens_copy, p](const Mat<FpRing>& g) {
            for (size_t i = 0; i < gens_copy.size(); ++i)
                if (g == gens_copy[i]) {
                    FpDenseMat out(std::uint32_t(p), mats[i].n, mats[i].n);
                    for (int r = 0; r < mats[i].n; ++r)
                        for (int c = 0; c < mats[i].n; ++c)
                            out.at(r, c) = std::uint8_t(mats[i].at(r, c));
                    return out;
                }
            throw std::domain_error("module action requested on a non-generator");
        };
    }
    long value = hom_steinberg(n, std::uint32_t(p), gens, mod);
    std::cout << value << "\n";
    return 0;
}

int cmd_normalizer(const std::string& label, std::uint64_t p, int precision) {
    ZpkRing R(p, precision);
    Realization W = build_entry(label);
    auto Wg = reduce_mod_zpk(W, p, precision);
    MatrixGroup<ZpkRing> Wgroup(R, Wg);
    Wgroup.enumerate(env_cap(2'000'000), true);
    std::vector<Mat<ZpkRing>> N;
    if (label == "G(4,2,2)") {
        auto all = reduce_mod_zpk(build_sporadic("G8"), p, precision);
        N = {all[all.size() - 2], all[all.size() - 1]};
    } else if (label == "G(3,3,3)") {
        auto all = reduce_mod_zpk(build_sporadic("G26"), p, precision);
        N = {all[all.size() - 2], all[all.size() - 1]};
    } else if (label == "G5") {
        const CycloField& F3 = CycloField::get(3);
        auto e = RootOfUnityEmbedding::of_subfield(SubfieldGen::whole_field(3), p, precision);
        Cyc w = Cyc::zeta(F3, 1);
        Mat<ZpkRing> b(2, R);
        b.at(0, 0) = e.map(Cyc(F3, Rat(-1)));
        b.at(0, 1) = e.map(Cyc(F3, Rat(1)) + w.scaled(Rat(1, 2)));
        b.at(1, 0) = e.map((Cyc(F3, Rat(1)) - w).scaled(Rat(1, 3)));
        b.at(1, 1) = e.map(Cyc(F3, Rat(1)));
        N = {b};
    } else if (label == "G7") {
        auto all = reduce_mod_zpk(build_sporadic("G10"), p, precision);
        N = {all.back()};
    } else if (label.rfind("G(", 0) == 0) {
        // generic family 2: adjoin diag(1, ..., zeta_m)
        int m, r, n;
        if (sscanf(label.c_str(), "G(%d,%d,%d)", &m, &r, &n) != 3)
            throw std::invalid_argument("bad label");
        auto e = RootOfUnityEmbedding::primitive_root(m, p, precision);
        Mat<ZpkRing> d = Mat<ZpkRing>::identity(n, R);
        d.at(n - 1, n - 1) = e.image;
        N = {d};
    } else {
        throw std::invalid_argument("no normalizer data for entry " + label);
    }
    auto t = quotient_mod_scalars_and_subgroup(R, N, Wgroup, env_cap(4'000'000), 100000);
    std::cout << "quotient order " << t.order << ", identified as "
              << identify_small_group(t) << "\n";
    return 0;
}

int cmd_invariants(const std::string& label, std::uint64_t p, int maxdeg) {
    auto check = polynomial_degree_check(label, p, maxdeg);
    std::cout << "entry " << label << " at p = " << p << ": ";
    if (check.pass)
        std::cout << "PASS (modular prefix matches characteristic zero through degree "
                  << maxdeg << ")\n";
    else
        std::cout << "FAIL at degree " << check.first_mismatch << "\n";
    std::cout << "char-0 degrees:";
    for (long d : check.char0_degrees) std::cout << " " << d;
    std::cout << "\nmodular dims:";
    for (const auto& d : check.modular.dims) std::cout << " " << d.str();
    std::cout << "\n";
    return 0;
}

int cmd_coinvariants(const std::string& label, std::uint64_t p) {
    auto rep = coinvariants_torsion(build_entry(label), p);
    std::cout << "elementary divisors:";
    for (const auto& d : rep.elementary_divisors) std::cout << " " << d.str();
    std::cout << "\nfree rank " << rep.free_rank << ", torsion";
    if (rep.torsion.empty()) std::cout << " none";
    for (const auto& d : rep.torsion) std::cout << " Z/" << d.str();
    std::cout << "\n" << (rep.has_p_torsion ? "has" : "no") << " " << p << "-torsion\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification toolkit for finite reflection groups over Z_p"};
    app.require_subcommand(1);

    auto* cat = app.add_subcommand("catalog", "catalog queries");
    auto* list = cat->add_subcommand("list", "list catalog entries as JSON");
    std::uint64_t prime = 0;
    list->add_option("--prime", prime, "restrict to entries admissible at this odd prime");

    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    std::string suite, format = "text", out_path;
    std::uint64_t cap = 12'000'000;
    verify->add_option("suite", suite, "suite name")->required();
    verify->add_option("--format", format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    verify->add_option("--out", out_path, "write the report to this path");
    verify->add_option("--cap", cap, "enumeration cap");

    auto* st = app.add_subcommand("steinberg", "alternating-sum Hom computation");
    int st_n = 2;
    std::uint64_t st_p = 3;
    std::string st_gamma = "trivial", st_module = "trivial";
    st->add_option("--n", st_n, "dimension")->required();
    st->add_option("--p", st_p, "prime")->required();
    st->add_option("--gamma", st_gamma, "trivial, sl3x1, or a group document path");
    st->add_option("--module", st_module, "natural, trivial, or a module document path");

    auto* nm = app.add_subcommand("normalizer", "normalizer quotient of a catalog entry");
    std::string nm_entry;
    std::uint64_t nm_p = 13;
    int nm_k = 2;
    nm->add_option("--entry", nm_entry, "catalog label")->required();
    nm->add_option("--prime", nm_p, "odd prime")->required();
    nm->add_option("--precision", nm_k, "p-adic precision exponent");

    auto* inv = app.add_subcommand("invariants", "modular degree comparison");
    std::string inv_entry;
    std::uint64_t inv_p = 3;
    int inv_d = 12;
    inv->add_option("--entry", inv_entry, "catalog label")->required();
    inv->add_option("--prime", inv_p, "odd prime")->required();
    inv->add_option("--max-degree", inv_d, "degree bound");

    auto* co = app.add_subcommand("coinvariants", "coinvariant lattice torsion");
    std::string co_entry;
    std::uint64_t co_p = 3;
    co->add_option("--entry", co_entry, "catalog label")->required();
    co->add_option("--prime", co_p, "queried prime");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (list->parsed()) return cmd_catalog_list(prime);
        if (verify->parsed()) return cmd_verify(suite, format, out_path, env_cap(cap));
        if (st->parsed()) return cmd_steinberg(st_n, st_p, st_gamma, st_module);
        if (nm->parsed()) return cmd_normalizer(nm_entry, nm_p, nm_k);
        if (inv->parsed()) return cmd_invariants(inv_entry, inv_p, inv_d);
        if (co->parsed()) return cmd_coinvariants(co_entry, co_p);
        std::cerr << "no subcommand\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
