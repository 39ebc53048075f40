#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

namespace amv {

// Flat key = value configuration.  '#' starts a comment; keys are
// case-sensitive.  The only environment override honored anywhere is the
// output directory (AMV_OUT_DIR).
struct SuiteConfig {
    std::string suite;
    std::map<std::string, std::string> kv;

    bool has(const std::string& k) const { return kv.count(k) != 0; }
    std::string get(const std::string& k, const std::string& dflt = "") const;
    double get_num(const std::string& k, double dflt) const;
    int get_int(const std::string& k, int dflt) const;
    std::vector<double> get_list(const std::string& k, std::vector<double> dflt) const;

    // Validity floors on behalf of the owning modules; throws with the
    // module rule named.
    void validate() const;
};

SuiteConfig parse_config_file(const std::string& path);
SuiteConfig parse_config_text(const std::string& text);

}  // namespace amv
