#include "amv/report.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace amv {

void VerificationReport::finalize() {
    bool any_inconclusive = false;
    bool all_pass = true;
    for (const auto& l : legs) any_inconclusive |= l.inconclusive;
    for (const auto& d : discrepancies) all_pass &= d.pass;
    if (any_inconclusive)
        outcome = Outcome::inconclusive;
    else
        outcome = all_pass ? Outcome::pass : Outcome::fail;
}

const char* outcome_name(Outcome o) {
    switch (o) {
        case Outcome::pass: return "pass";
        case Outcome::fail: return "fail";
        default: return "inconclusive";
    }
}

int outcome_exit_code(Outcome o) {
    switch (o) {
        case Outcome::pass: return 0;
        case Outcome::fail: return 1;
        default: return 2;
    }
}

Outcome worst_outcome(const std::vector<VerificationReport>& reports) {
    Outcome w = Outcome::pass;
    for (const auto& r : reports) {
        if (r.outcome == Outcome::fail) return Outcome::fail;
        if (r.outcome == Outcome::inconclusive) w = Outcome::inconclusive;
    }
    return w;
}

nlohmann::ordered_json report_to_json(const VerificationReport& r) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["suite"] = r.suite;
    j["table"] = r.table_desc;
    auto legs = nlohmann::ordered_json::array();
    for (const auto& l : r.legs) {
        nlohmann::ordered_json lj;
        lj["name"] = l.name;
        lj["re"] = l.value.real();
        lj["im"] = l.value.imag();
        lj["budget"] = l.budget;
        lj["inconclusive"] = l.inconclusive;
        legs.push_back(lj);
    }
    j["legs"] = legs;
    auto ds = nlohmann::ordered_json::array();
    for (const auto& d : r.discrepancies) {
        nlohmann::ordered_json dj;
        dj["between"] = d.between;
        dj["absolute"] = d.absolute;
        dj["relative"] = d.relative;
        dj["tolerance"] = d.tolerance;
        dj["pass"] = d.pass;
        ds.push_back(dj);
    }
    j["discrepancies"] = ds;
    j["truncation"] = r.truncation;
    j["outcome"] = outcome_name(r.outcome);
    return j;
}

void write_report(const VerificationReport& r, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write report: " + path);
    out << report_to_json(r).dump(2) << "\n";
}

std::string report_summary_line(const VerificationReport& r) {
    std::ostringstream os;
    os << "[" << outcome_name(r.outcome) << "] " << r.suite;
    if (!r.table_desc.empty()) os << " (" << r.table_desc << ")";
    double worst = 0.0;
    for (const auto& d : r.discrepancies) worst = std::max(worst, d.relative);
    os << "  worst rel " << worst << "  wall " << r.wall_seconds << "s";
    return os.str();
}

}  // namespace amv
