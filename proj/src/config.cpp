#include "amv/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace amv {

std::string SuiteConfig::get(const std::string& k, const std::string& dflt) const {
    auto it = kv.find(k);
    return it == kv.end() ? dflt : it->second;
}

double SuiteConfig::get_num(const std::string& k, double dflt) const {
    auto it = kv.find(k);
    if (it == kv.end()) return dflt;
    try {
        return std::stod(it->second);
    } catch (...) {
        throw std::runtime_error("config: key '" + k + "' is not a number: " + it->second);
    }
}

int SuiteConfig::get_int(const std::string& k, int dflt) const {
    return int(get_num(k, double(dflt)));
}

std::vector<double> SuiteConfig::get_list(const std::string& k, std::vector<double> dflt) const {
    auto it = kv.find(k);
    if (it == kv.end()) return dflt;
    std::vector<double> out;
    std::string s = it->second;
    for (char& c : s)
        if (c == ',') c = ' ';
    std::istringstream is(s);
    double v;
    while (is >> v) out.push_back(v);
    if (out.empty()) throw std::runtime_error("config: key '" + k + "' is an empty list");
    return out;
}

void SuiteConfig::validate() const {
    const std::string table = get("table", "divisor");
    if (table != "tau" && table != "divisor" && table != "maass")
        throw std::runtime_error("config: table must be tau, divisor, or maass "
                                 "(coefficients module rule)");
    if (table == "maass" && !has("maass_file"))
        throw std::runtime_error("config: maass table requires maass_file "
                                 "(coefficients module rule)");
    const double u = get_num("u", 1.3), v = get_num("v", 1.3);
    if (u + v <= 2.0)
        throw std::runtime_error("config: Re(u+v) > 2 required "
                                 "(moment module absolute-convergence floor)");
    if (u <= 1.0 || v <= 1.0)
        throw std::runtime_error("config: Re u, Re v > 1 required "
                                 "(moment module series floor)");
    const double alpha = get_num("alpha", 4.0);
    if (alpha < 1.0)
        throw std::runtime_error("config: Re alpha >= 1 required (kirillov module rule)");
    const double xi = get_num("xi", 3.0);
    if (xi <= 2.0)
        throw std::runtime_error("config: Re xi > 2 required (moment module rule)");
    const double T = get_num("T", 2.0);
    if (T <= 0.0) throw std::runtime_error("config: T > 0 required (specfun module rule)");
    const int P = get_int("P", 24);
    if (P < 1) throw std::runtime_error("config: P >= 1 required (kirillov module rule)");
    for (double d : get_list("deltas", {0.4, 0.2, 0.1}))
        if (!(d > 0.0 && d < 1.5))
            throw std::runtime_error("config: deltas must lie in (0, 1.5) "
                                     "(moment module bump rule)");
}

SuiteConfig parse_config_text(const std::string& text) {
    SuiteConfig cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        // trim
        auto l = line.find_first_not_of(" \t\r");
        if (l == std::string::npos) continue;
        auto r = line.find_last_not_of(" \t\r");
        line = line.substr(l, r - l + 1);
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config line " + std::to_string(lineno) +
                                     ": expected key = value");
        std::string key = line.substr(0, eq);
        std::string val = line.substr(eq + 1);
        auto trim = [](std::string& s) {
            const auto a = s.find_first_not_of(" \t");
            const auto b = s.find_last_not_of(" \t");
            s = a == std::string::npos ? "" : s.substr(a, b - a + 1);
        };
        trim(key);
        trim(val);
        if (key.empty()) throw std::runtime_error("config line " + std::to_string(lineno) +
                                                  ": empty key");
        cfg.kv[key] = val;
    }
    if (cfg.kv.count("suite")) cfg.suite = cfg.kv["suite"];
    return cfg;
}

SuiteConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

}  // namespace amv
