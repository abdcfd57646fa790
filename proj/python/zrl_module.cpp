#include "zrl/catalog.hpp"
#include "zrl/invariants.hpp"
#include "zrl/models.hpp"
#include "zrl/steinberg.hpp"
#include "zrl/suites.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace zrl;

namespace {

std::vector<Mat<FpRing>> fp_group(std::uint32_t p,
                                  const std::vector<std::vector<std::vector<long>>>& gens) {
    FpRing ring(p);
    std::vector<Mat<FpRing>> out;
    for (const auto& g : gens) {
        int n = int(g.size());
        Mat<FpRing> m(n, ring);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = ring.from_int(g[i][j]);
        out.push_back(std::move(m));
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_zrl, m) {
    m.doc() = "exact verification toolkit for finite reflection groups over Z_p";

    m.def("suite_names", [] { return suite_names(); });
    m.def(
        "run_suite",
        [](const std::string& name, std::uint64_t cap) {
            SuiteReport rep = run_suite(name, cap);
            py::list rows;
            for (const auto& row : rep.rows) {
                py::dict d;
                d["id"] = row.id;
                d["anchor"] = row.anchor;
                d["expected"] = row.expected;
                d["computed"] = row.computed;
                d["status"] = row.status;
                rows.append(d);
            }
            py::dict out;
            out["suite"] = rep.name;
            out["rows"] = rows;
            out["seconds"] = rep.seconds;
            out["pass"] = rep.pass();
            return out;
        },
        py::arg("name"), py::arg("cap") = 12'000'000ull);

    m.def("catalog", [] {
        py::list out;
        for (const auto& e : catalog_entries()) {
            py::dict d;
            d["label"] = e.label;
            d["rank"] = e.rank;
            d["order"] = e.order.str();
            d["degrees"] = e.degrees;
            d["reflections"] = e.reflections;
            d["exotic"] = e.exotic;
            out.append(d);
        }
        return out;
    });

    m.def(
        "group_order_mod_p",
        [](const std::string& label, std::uint64_t p, std::uint64_t cap) {
            FpRing ring{std::uint32_t(p)};
            auto gens = reduce_mod_p(build_entry(label), p);
            auto G = generate_closure(ring, gens, cap, false);
            return G.order();
        },
        py::arg("label"), py::arg("p"), py::arg("cap") = 10'000'000ull);

    m.def(
        "hom_steinberg",
        [](int n, std::uint32_t p, const std::vector<std::vector<std::vector<long>>>& gens,
           const std::string& module) {
            auto gamma = gens.empty()
                             ? std::vector<Mat<FpRing>>{Mat<FpRing>::identity(n, FpRing(p))}
                             : fp_group(p, gens);
            FpModule mod = module == "natural" ? FpModule::natural(p) : FpModule::trivial(p);
            return hom_steinberg(n, p, gamma, mod);
        },
        py::arg("n"), py::arg("p"), py::arg("gens"), py::arg("module") = "trivial");

    m.def(
        "tits_building_oracle",
        [](int n, std::uint32_t p, const std::vector<std::vector<std::vector<long>>>& gens,
           const std::string& module) {
            auto gamma = gens.empty()
                             ? std::vector<Mat<FpRing>>{Mat<FpRing>::identity(n, FpRing(p))}
                             : fp_group(p, gens);
            FpModule mod = module == "natural" ? FpModule::natural(p) : FpModule::trivial(p);
            return tits_building_oracle(n, p, gamma, mod);
        },
        py::arg("n"), py::arg("p"), py::arg("gens"), py::arg("module") = "trivial");

    m.def(
        "class_distribution",
        [](const std::string& ambient, const std::vector<std::string>& names) {
            Model model = ambient == "E8" ? Model::SL9
                          : ambient == "E7-sl6sl3" ? Model::SL6xSL3
                                                   : Model::TripleSL3;
            Ambient amb = ambient == "E8"   ? Ambient::E8
                          : ambient == "E6" ? Ambient::E6
                                            : Ambient::E7;
            std::vector<ModelElem> gens;
            for (const auto& n : names) {
                if (n == "x2x1^-1")
                    gens.push_back(model_mul(named_elements(model).elems.at("x2"),
                                             model_inv(named_elements(model).elems.at("x1"))));
                else if (n == "x3a^-1")
                    gens.push_back(model_mul(named_elements(model).elems.at("x3"),
                                             model_inv(named_elements(model).elems.at("a"))));
                else
                    gens.push_back(named_elements(model).elems.at(n));
            }
            return class_distribution(gens, amb);
        },
        py::arg("ambient"), py::arg("generator_names"));

    m.def(
        "modular_invariant_dims",
        [](const std::string& label, std::uint64_t p, int max_degree) {
            FpRing ring{std::uint32_t(p)};
            Realization real = build_entry(label);
            auto gens = reduce_mod_p(real, p);
            auto dims = modular_invariant_dims(ring, gens, real.rank(), max_degree);
            std::vector<std::string> out;
            for (const auto& d : dims.dims) out.push_back(d.str());
            return out;
        },
        py::arg("label"), py::arg("p"), py::arg("max_degree"));

    m.def(
        "coinvariant_torsion",
        [](const std::string& label, std::uint64_t p) {
            auto rep = coinvariants_torsion(build_entry(label), p);
            py::dict d;
            std::vector<std::string> tors;
            for (const auto& t : rep.torsion) tors.push_back(t.str());
            d["torsion"] = tors;
            d["free_rank"] = rep.free_rank;
            d["has_p_torsion"] = rep.has_p_torsion;
            return d;
        },
        py::arg("label"), py::arg("p"));
}
