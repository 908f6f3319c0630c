// Runs the full acceptance battery and prints one pass/fail line per
// criterion. Exit code 0 iff everything passes.

#include <cstdio>

#include "apath/suite.hpp"

int main() {
    bool all = true;
    for (const auto& name : apath::suite_criteria()) {
        apath::CriterionResult res = apath::run_criterion(name);
        all = all && res.pass;
        std::printf("%-28s %s  (%.2fs)\n", res.name.c_str(), res.pass ? "PASS" : "FAIL",
                    res.seconds);
        if (!res.pass) {
            for (const auto& [k, v] : res.report.metrics)
                std::printf("    %-32s %.6g\n", k.c_str(), v);
            for (const auto& [k, v] : res.report.provenance)
                std::printf("    %-32s %s\n", k.c_str(), v.c_str());
        }
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
