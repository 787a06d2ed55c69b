#ifndef TYPEA_REPORT_HPP
#define TYPEA_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "typea/json_io.hpp"

namespace typea {

struct CheckResult {
    std::string id;
    std::string claim;   // the mathematical statement being verified
    std::string status;  // "pass" | "fail" | "skipped"
    std::string witness; // counterexample or context on failure
};

struct Report {
    std::string suite;
    std::optional<unsigned> seed;
    std::vector<CheckResult> checks;
    long long elapsed_ms = 0;

    int count(const std::string& status) const;
    bool ok() const { return count("fail") == 0; }
    void add(const std::string& id, const std::string& claim, bool pass,
             const std::string& witness = "");
};

struct SuiteParams {
    int n = 4;                  // cap for the sweeps that scale in n
    ShiftWindow window{-3, 0};
    unsigned seed = 20250809;
    std::string golden_dir;     // empty: skip golden-file comparisons
};

std::vector<std::string> suite_names();
Report run_suite(const std::string& name, const SuiteParams& params);

json report_to_json(const Report& r);
std::string report_to_markdown(const Report& r);

/// One row of the A_2 aisle classification.
struct A2Row {
    Aisle aisle;
    int type = 0; // 1..8
    bool r1 = false;
    bool r2 = false;
};

/// Which of the eight aisle shapes this is; 0 when none matches.
int a2_type_of(const Algebra& a2, const Aisle& aisle);

/// Enumerate, type and test compatibility for every A_2 aisle in the window.
std::vector<A2Row> classify_a2(ShiftWindow window);

/// Rewrite the golden files from the current engine output.
void write_golden_files(const std::string& dir);

} // namespace typea

#endif
