#pragma once

#include <complex>
#include <string>
#include <vector>

#include <json.hpp>

namespace amv {

enum class Outcome { pass, fail, inconclusive };

struct ReportLeg {
    std::string name;
    std::complex<double> value{0.0, 0.0};
    double budget = 0.0;
    bool inconclusive = false;
};

struct Discrepancy {
    std::string between;
    double absolute = 0.0;
    double relative = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct VerificationReport {
    std::string suite;
    std::string table_desc;
    std::vector<ReportLeg> legs;
    std::vector<Discrepancy> discrepancies;
    Outcome outcome = Outcome::inconclusive;
    nlohmann::ordered_json truncation;   // suite-specific metadata
    double wall_seconds = 0.0;           // console summary only, not serialized

    void finalize();                     // derive outcome from the discrepancies
};

const char* outcome_name(Outcome o);
int outcome_exit_code(Outcome o);
Outcome worst_outcome(const std::vector<VerificationReport>& reports);

// Stable-field-order JSON (schema 1).  Wall time is deliberately omitted so
// identical config + dataset give byte-identical files.
nlohmann::ordered_json report_to_json(const VerificationReport& r);
void write_report(const VerificationReport& r, const std::string& path);
std::string report_summary_line(const VerificationReport& r);

}  // namespace amv
