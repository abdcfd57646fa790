#pragma once

#include "zrl/matgroup.hpp"

#include <string>
#include <variant>

namespace zrl {

// Group-description documents: a ring spec plus generator matrices.
//
// {
//   "ring": {"kind": "fp" | "zmodpk" | "cyclotomic", "p": 3, "k": 2, "m": 4},
//   "generators": [ [["1","0"],["0","2"]], ... ]
// }
//
// fp / zmodpk entries are decimal integer strings; cyclotomic entries are
// arrays of rational strings, the coordinates in the power basis of zeta_m.
struct GroupDoc {
    std::variant<std::monostate, std::pair<FpRing, std::vector<Mat<FpRing>>>,
                 std::pair<ZpkRing, std::vector<Mat<ZpkRing>>>,
                 std::pair<CycRing, std::vector<Mat<CycRing>>>>
        group;
};

GroupDoc parse_group_document(const std::string& json_text);
GroupDoc load_group_document(const std::string& path);

} // namespace zrl
