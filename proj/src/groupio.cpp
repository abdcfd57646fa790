#include "zrl/groupio.hpp"

#include <json.hpp>

#include <fstream>
#include <stdexcept>

namespace zrl {

namespace {

using nlohmann::json;

template <class R>
std::vector<Mat<R>> parse_matrices(const R& ring, const json& gens,
                                   const std::function<typename R::Elem(const json&)>& entry) {
    std::vector<Mat<R>> out;
    for (const auto& gm : gens) {
        int n = int(gm.size());
        Mat<R> m(n, ring);
        for (int i = 0; i < n; ++i) {
            if (int(gm[i].size()) != n) throw std::invalid_argument("non-square generator");
            for (int j = 0; j < n; ++j) m.at(i, j) = entry(gm[i][j]);
        }
        out.push_back(std::move(m));
    }
    if (out.empty()) throw std::invalid_argument("no generators in document");
    return out;
}

} // namespace

GroupDoc parse_group_document(const std::string& text) {
    json doc = json::parse(text);
    const auto& ring = doc.at("ring");
    std::string kind = ring.at("kind").get<std::string>();
    GroupDoc out;
    if (kind == "fp") {
        FpRing R{ring.at("p").get<std::uint32_t>()};
        std::function<FpRing::Elem(const json&)> entry = [&](const json& e) {
            return R.from_int(std::stol(e.get<std::string>()));
        };
        out.group = std::make_pair(R, parse_matrices(R, doc.at("generators"), entry));
    } else if (kind == "zmodpk") {
        ZpkRing R(ring.at("p").get<std::uint64_t>(), ring.at("k").get<int>());
        std::function<ZpkRing::Elem(const json&)> entry = [&](const json& e) {
            return R.from_int(std::stol(e.get<std::string>()));
        };
        out.group = std::make_pair(R, parse_matrices(R, doc.at("generators"), entry));
    } else if (kind == "cyclotomic") {
        int m = ring.at("m").get<int>();
        CycRing R(CycloField::get(m));
        std::function<CycRing::Elem(const json&)> entry = [&](const json& e) {
            std::vector<Rat> coeffs;
            for (const auto& c : e) coeffs.push_back(rat_from_string(c.get<std::string>()));
            return Cyc::from_coeffs(*R.F, coeffs);
        };
        out.group = std::make_pair(R, parse_matrices(R, doc.at("generators"), entry));
    } else {
        throw std::invalid_argument("unknown ring kind: " + kind);
    }
    return out;
}

GroupDoc load_group_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_group_document(text);
}

} // namespace zrl
