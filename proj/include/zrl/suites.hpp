#pragma once

#include <string>
#include <vector>

namespace zrl {

struct SuiteRow {
    std::string id;
    std::string anchor;   // which table/lemma the expected value comes from
    std::string expected;
    std::string computed;
    std::string status;   // PASS / FAIL / SKIPPED(cap)
};

struct SuiteReport {
    std::string name;
    std::vector<SuiteRow> rows;
    double seconds = 0;

    bool pass() const {
        for (const auto& r : rows)
            if (r.status == "FAIL") return false;
        return true;
    }
};

const std::vector<std::string>& suite_names();
SuiteReport run_suite(const std::string& name, std::uint64_t cap = 12'000'000);

std::string report_to_text(const SuiteReport& r);
std::string report_to_json(const SuiteReport& r);
void export_report(const SuiteReport& r, const std::string& path, const std::string& format);

} // namespace zrl
