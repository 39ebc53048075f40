#include "amv/csvio.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace amv {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

void emit_csv(const CsvTable& table, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write csv: " + path);
    for (size_t i = 0; i < table.header.size(); ++i)
        out << (i ? "," : "") << table.header[i];
    out << "\n";
    for (const auto& row : table.rows) {
        if (row.size() != table.header.size())
            throw std::runtime_error("csv row width does not match header");
        for (size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << fmt(row[i]);
        out << "\n";
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

void emit_csv(const VerificationReport& report, const std::string& path) {
    CsvTable t;
    t.header = {"leg", "re", "im", "budget"};
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write csv: " + path);
    out << "leg,re,im,budget\n";
    for (const auto& l : report.legs)
        out << '"' << l.name << "\"," << fmt(l.value.real()) << "," << fmt(l.value.imag())
            << "," << fmt(l.budget) << "\n";
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace amv
