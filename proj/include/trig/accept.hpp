#pragma once

#include <string>
#include <vector>

namespace trig::accept {

struct CheckResult {
    std::string id;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

/// The full acceptance suite; `only` filters by check id (substring match,
/// empty = everything). Each check is self-contained and enforces its own
/// runtime budget.
std::vector<CheckResult> run_all(const std::string& only = "");

/// One line per criterion: "PASS name -- detail" / "FAIL ...". Timings
/// are optional so command output can stay byte-identical across runs.
void print_report(const std::vector<CheckResult>& results,
                  std::ostream& out, bool with_timing = false);

bool all_passed(const std::vector<CheckResult>& results);

} // namespace trig::accept
