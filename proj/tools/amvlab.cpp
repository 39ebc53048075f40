// amvlab: batch verification front end.
//
//   amvlab verify <suite>|all [--config file] [--out dir]
//   amvlab ingest <dataset>
//   amvlab eval <quantity> [--param value ...]
//   amvlab emit --csv <path> --quantity <name> [--param value ...]
//
// Exit code: 0 all suites pass, 1 some failure, 2 inconclusive only.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>

#include "amv/bessel.hpp"
#include "amv/coefficients.hpp"
#include "amv/config.hpp"
#include "amv/csvio.hpp"
#include "amv/gamma.hpp"
#include "amv/geometry.hpp"
#include "amv/jacquet.hpp"
#include "amv/kirillov.hpp"
#include "amv/moment.hpp"
#include "amv/report.hpp"
#include "amv/suites.hpp"
#include "amv/weight.hpp"
#include "amv/zeta.hpp"

namespace {

using cd = std::complex<double>;

std::string out_dir_from_env(const std::string& cli_value) {
    if (!cli_value.empty()) return cli_value;
    if (const char* env = std::getenv("AMV_OUT_DIR")) return env;
    return ".";
}

int cmd_verify(const std::string& suite, const std::string& config_path,
               const std::string& out_dir_cli) {
    amv::SuiteConfig base;
    if (!config_path.empty()) base = amv::parse_config_file(config_path);

    std::vector<amv::SuiteConfig> cfgs;
    if (suite == "all") {
        for (const auto& name : amv::suite_names()) {
            amv::SuiteConfig c = base;
            c.suite = name;
            cfgs.push_back(c);
        }
    } else {
        amv::SuiteConfig c = base;
        c.suite = suite;
        cfgs.push_back(c);
    }
    const auto reports = amv::run_suites(std::move(cfgs));

    const std::string out_dir = out_dir_from_env(out_dir_cli);
    std::filesystem::create_directories(out_dir);
    for (const auto& r : reports) {
        amv::write_report(r, out_dir + "/" + r.suite + ".json");
        std::cout << amv::report_summary_line(r) << "\n";
    }
    return amv::outcome_exit_code(amv::worst_outcome(reports));
}

int cmd_ingest(const std::string& path) {
    const auto rec = amv::parse_maass_file(path);
    const auto table = amv::ingest_maass(path);
    std::cout << "dataset: " << path << "\n";
    std::cout << "R = " << rec.R << ", parity "
              << (rec.parity == amv::Parity::even ? "even" : "odd") << ", " << table.N_max
              << " coefficients, claimed precision " << rec.claimed_precision << "\n";
    std::cout << "hecke residual: " << table.hecke_residual << "\n";

    // automorphy under the inversion as the second oracle
    std::vector<amv::GroupPoint> pts;
    for (double y : {0.9, 1.1, 1.3}) {
        for (double x : {0.05, 0.21}) pts.push_back({x, y, 0.0});
    }
    const int N = std::min(table.N_max, 14);
    const double aut = amv::automorphy_residual(table, pts, amv::weyl_w, N);
    std::cout << "automorphy residual (inversion): " << aut << "\n";
    if (!table.validated) {
        std::cout << "flagged: Hecke residual above 1e-6, table unvalidated\n";
        return 2;
    }
    std::cout << "validated\n";
    return 0;
}

int cmd_eval(const std::string& quantity, const amv::SuiteConfig& p) {
    using std::cout;
    if (quantity == "bessel-k") {
        const cd v = amv::bessel_k(cd(p.get_num("order_re", 0.0), p.get_num("order_im", 1.0)),
                                   p.get_num("x", 1.0));
        cout << v.real() << " " << v.imag() << "\n";
    } else if (quantity == "gamma") {
        const cd v = amv::gamma_complex(cd(p.get_num("re", 1.0), p.get_num("im", 0.0)));
        cout << v.real() << " " << v.imag() << "\n";
    } else if (quantity == "zeta") {
        const cd v = amv::riemann_zeta(cd(p.get_num("re", 2.0), p.get_num("im", 0.0)));
        cout << v.real() << " " << v.imag() << "\n";
    } else if (quantity == "jacquet") {
        const cd v = amv::jacquet_integral(p.get_int("p", 0),
                                           cd(0.0, p.get_num("nu", 0.5)),
                                           p.get_int("delta", 1), p.get_num("u", 1.0));
        cout << v.real() << " " << v.imag() << "\n";
    } else if (quantity == "kirillov-coeff") {
        const cd v = amv::kirillov_coeff_closed(cd(0.0, p.get_num("nu", 0.5)),
                                                cd(p.get_num("alpha", 4.0), 0.0),
                                                p.get_int("p", 0));
        cout << v.real() << " " << v.imag() << "\n";
    } else if (quantity == "l-series") {
        const auto t = amv::divisor_table(cd(0.0, p.get_num("nu", 0.5)),
                                          p.get_int("N", 10000));
        const auto v = amv::l_series(t, cd(p.get_num("s", 3.0), 0.0), t.N_max);
        cout << v.value.real() << " " << v.value.imag() << "  (tail bound " << v.bound
             << ")\n";
    } else {
        std::cerr << "unknown quantity: " << quantity
                  << " (try bessel-k, gamma, zeta, jacquet, kirillov-coeff, l-series)\n";
        return 1;
    }
    return 0;
}

int cmd_emit(const std::string& csv_path, const std::string& quantity,
             const amv::SuiteConfig& p) {
    amv::CsvTable t;
    if (quantity == "ap-grid") {
        const int P = p.get_int("P", 24);
        const auto v = amv::build_kirillov_vector(cd(0.0, p.get_num("nu", 0.5)),
                                                  cd(p.get_num("alpha", 4.0), 0.0), P);
        t.header = {"p", "re", "im", "abs"};
        for (int q = -P; q <= P; ++q)
            t.rows.push_back({double(q), v.ap(q).real(), v.ap(q).imag(),
                              std::abs(v.ap(q))});
    } else if (quantity == "moment-grid") {
        const auto table = amv::divisor_table(cd(0.0, p.get_num("nu", 0.5)),
                                              p.get_int("N", 4000));
        amv::WeightFunction w;
        w.T = p.get_num("T", 2.0);
        const cd u(p.get_num("u", 1.3), 0.0);
        t.header = {"t", "integrand_abs2", "g"};
        const double t_hi = p.get_num("t_range", 12.0);
        const int steps = p.get_int("steps", 240);
        for (int i = 0; i <= steps; ++i) {
            const double tt = -t_hi + 2.0 * t_hi * i / steps;
            const auto L = amv::l_series(table, u + cd(0.0, tt), table.N_max);
            t.rows.push_back({tt, std::norm(L.value), amv::weight_g(w, tt)});
        }
    } else if (quantity == "empty-grid") {
        t.header = {"x", "y"};
    } else {
        std::cerr << "unknown emit quantity: " << quantity
                  << " (try ap-grid, moment-grid, empty-grid)\n";
        return 1;
    }
    amv::emit_csv(t, csv_path);
    std::cout << "wrote " << csv_path << " (" << t.rows.size() << " rows)\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"automorphic mean-value verification lab"};
    app.require_subcommand(1);

    std::string suite, config_path, out_dir, dataset, quantity, csv_path;
    std::vector<std::string> params;

    auto* verify = app.add_subcommand("verify", "run a named verification suite (or 'all')");
    verify->add_option("suite", suite)->required();
    verify->add_option("--config", config_path, "flat key=value config file");
    verify->add_option("--out", out_dir, "report directory (or AMV_OUT_DIR)");

    auto* ingest = app.add_subcommand("ingest", "validate and summarize a Maass dataset");
    ingest->add_option("file", dataset)->required();

    auto* eval = app.add_subcommand("eval", "evaluate a single quantity");
    eval->add_option("quantity", quantity)->required();
    eval->add_option("--param", params, "name=value (repeatable)");

    auto* emit = app.add_subcommand("emit", "write a plot-ready CSV grid");
    emit->add_option("--csv", csv_path, "output path")->required();
    emit->add_option("--quantity", quantity, "grid name")->required();
    emit->add_option("--param", params, "name=value (repeatable)");

    CLI11_PARSE(app, argc, argv);

    amv::SuiteConfig p;
    for (const auto& kvs : params) {
        const auto eq = kvs.find('=');
        if (eq == std::string::npos) {
            std::cerr << "--param expects name=value, got: " << kvs << "\n";
            return 1;
        }
        p.kv[kvs.substr(0, eq)] = kvs.substr(eq + 1);
    }

    try {
        if (verify->parsed()) return cmd_verify(suite, config_path, out_dir);
        if (ingest->parsed()) return cmd_ingest(dataset);
        if (eval->parsed()) return cmd_eval(quantity, p);
        if (emit->parsed()) return cmd_emit(csv_path, quantity, p);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
