#pragma once

#include <string>
#include <vector>

#include "amv/report.hpp"

namespace amv {

// UTF-8 CSV with a header row and deterministic ordering.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

void emit_csv(const CsvTable& table, const std::string& path);
void emit_csv(const VerificationReport& report, const std::string& path);

}  // namespace amv
