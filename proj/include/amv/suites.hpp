#pragma once

#include <string>
#include <vector>

#include "amv/config.hpp"
#include "amv/report.hpp"

namespace amv {

std::vector<std::string> suite_names();

// Run one named verification suite.  Deterministic: identical config and
// dataset give an identical report (wall_seconds excluded).
VerificationReport run_suite(const SuiteConfig& cfg);

// Worker pool over independent suites; reports assembled in name order.
std::vector<VerificationReport> run_suites(std::vector<SuiteConfig> cfgs);

}  // namespace amv
