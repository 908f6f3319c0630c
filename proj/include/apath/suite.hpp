#pragma once

#include <string>
#include <vector>

#include "apath/report.hpp"

namespace apath {

struct CriterionResult {
    std::string name;
    bool pass = false;
    double seconds = 0.0;
    Report report;
};

// The acceptance battery. Every criterion is reachable by name; tolerances
// are pinned here, not configurable.
std::vector<std::string> suite_criteria();
CriterionResult run_criterion(const std::string& name);
std::vector<CriterionResult> run_suite(const std::vector<std::string>& only = {});

// Least-squares slope of log(residual) against log(h) over a grid sweep.
double fit_order(const std::vector<int>& grids, const std::vector<double>& residuals);

// Named convergence studies for the CLI (grid list -> report with order).
Report convergence_study(const std::string& study, const std::vector<int>& grids);

}  // namespace apath
