#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "zll/fermat.hpp"
#include "zll/functional.hpp"
#include "zll/ladder.hpp"
#include "zll/quadrature.hpp"
#include "zll/zeta_core.hpp"
#include "zll/zprime_lab.hpp"

namespace {

constexpr const char* kToolVersion = "1.0.0";
constexpr int kSchemaVersion = 1;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.16e", v);
    return buf;
}

std::vector<double> parse_list(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stod(item));
    }
    if (out.empty()) throw std::invalid_argument("expected a comma-separated list of numbers");
    return out;
}

struct SinkError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Routes the primary artifact to stdout or --out, collects an optional
// two-column plot series, and writes the run manifest on destruction scope.
struct Output {
    std::string out_path;           // empty: stdout
    std::string text;               // primary artifact (CSV or JSON)
    std::vector<std::pair<double, double>> plot;

    void line(const std::string& s) { text += s + "\n"; }

    void flush() const {
        if (out_path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream f(out_path);
        if (!f) throw SinkError("cannot open output file: " + out_path);
        f << text;
        if (!f.good()) throw SinkError("write failed: " + out_path);
        if (!plot.empty()) {
            std::string plot_path = out_path + ".plot";
            std::ofstream p(plot_path);
            if (!p) throw SinkError("cannot open plot file: " + plot_path);
            for (const auto& [x, y] : plot) p << fmt(x) << " " << fmt(y) << "\n";
            if (!p.good()) throw SinkError("write failed: " + plot_path);
        }
    }
};

std::string config_hash(const std::string& config_path) {
    if (config_path.empty()) return "none";
    std::ifstream f(config_path);
    std::stringstream ss;
    ss << f.rdbuf();
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016zx", std::hash<std::string>{}(ss.str()));
    return buf;
}

void write_manifest(const CLI::App& app, const std::string& command, const std::string& out_path,
                    const std::string& config_path, int threads, double wall_seconds) {
    nlohmann::json manifest;
    manifest["schema_version"] = kSchemaVersion;
    manifest["command"] = command;
    manifest["tool_version"] = kToolVersion;
    manifest["config_hash"] = config_hash(config_path);
    manifest["wall_time_seconds"] = wall_seconds;
    manifest["worker_count"] = threads;
    nlohmann::json params = nlohmann::json::object();
    const CLI::App* sub = app.get_subcommand(command);
    for (const CLI::Option* opt : sub->get_options()) {
        if (opt->get_name().empty() || opt->count() == 0) continue;
        params[opt->get_name()] = opt->as<std::string>();
    }
    manifest["parameters"] = params;
    std::string path = out_path.empty() ? "zll_run.manifest.json" : out_path + ".manifest.json";
    std::ofstream f(path);
    f << manifest.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical laboratory for the Riemann-Siegel Z function, the\n"
                 "Hardy-Littlewood integral, Jacob's-ladder iterates, and the\n"
                 "derived scaling functional."};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "Flat key = value config file; flags override it");

    std::string out_path;
    int threads = 1;
    app.add_option("--out", out_path, "Output file (default: CSV on stdout)")->capture_default_str();
    app.add_option("--threads", threads, "Worker count")->envname("ZLL_THREADS")->capture_default_str();

    int depth = 2;
    double tol = 1e-6;
    int ppw = 8;
    app.add_option("--depth", depth, "Riemann-Siegel correction depth")->capture_default_str();
    app.add_option("--rel-tol", tol, "Quadrature relative tolerance")->capture_default_str();
    app.add_option("--ppw", ppw, "Quadrature points per wavelength")->capture_default_str();

    std::string t_list = "100";
    double T = 1e3, delta = 1.0 / 6.0, a = 0.9, alpha = 1.0, x = 1.0, lo = 10, hi = 100;
    std::string rho_list = "1e3", mode = "asymptotic", target = "z";
    std::string fx = "3", fy = "4", fz = "5";
    int n = 3, k = 3, steps = 4;

    CLI::App* c_zeval = app.add_subcommand("z-eval", "Z(t), theta(t), X(t) at given ordinates");
    c_zeval->add_option("--t", t_list, "Comma-separated ordinates")->required();

    CLI::App* c_theta = app.add_subcommand("theta", "theta(t) and its derivative");
    c_theta->add_option("--t", t_list, "Comma-separated ordinates")->required();

    CLI::App* c_xfn = app.add_subcommand("x-fn", "X(t)/Z(t) ratio against (pi/2)^(1/4)");
    c_xfn->add_option("--t", t_list, "Comma-separated ordinates")->required();

    double lemma_a = 0.6, lemma_alpha = 1.0;
    CLI::App* c_lemma = app.add_subcommand("lemma18", "Second-moment window integral vs pi*sqrt(2pi)*H*U");
    c_lemma->add_option("--T", T, "Window start")->required();
    c_lemma->add_option("--a", lemma_a, "U = T^a")->capture_default_str();
    c_lemma->add_option("--alpha", lemma_alpha, "H = alpha * ln T")->capture_default_str();

    CLI::App* c_hl = app.add_subcommand("hl-integral", "Hardy-Littlewood integral J(T)");
    c_hl->add_option("--T", T, "Upper limit")->required();
    c_hl->add_option("--mode", mode, "asymptotic | quadrature")->capture_default_str();

    CLI::App* c_ladder = app.add_subcommand("ladder", "Reverse-iterate partition report");
    c_ladder->add_option("--T", T, "Base point")->required();
    c_ladder->add_option("--k", k, "Number of reverse iterates")->capture_default_str();
    c_ladder->add_option("--mode", mode, "asymptotic | quadrature")->capture_default_str();

    CLI::App* c_fun = app.add_subcommand("functional", "Scaling functional Phi(x, a, alpha, rho)");
    c_fun->add_option("--x", x, "Scale argument")->capture_default_str();
    c_fun->add_option("--a", a, "Window exponent, in (1/2, 1)")->capture_default_str();
    c_fun->add_option("--alpha", alpha, "Window power")->capture_default_str();
    c_fun->add_option("--rho", rho_list, "Comma-separated rho values")->capture_default_str();
    c_fun->add_option("--mode", mode, "asymptotic | quadrature")->capture_default_str();

    CLI::App* c_fermat = app.add_subcommand("fermat", "Exact Fermat rational and functional trajectory");
    c_fermat->add_option("--x", fx, "First base")->required();
    c_fermat->add_option("--y", fy, "Second base")->required();
    c_fermat->add_option("--z", fz, "Third base")->required();
    c_fermat->add_option("--n", n, "Exponent, >= 3")->required();
    c_fermat->add_option("--a", a, "Window exponent")->capture_default_str();
    c_fermat->add_option("--alpha", alpha, "Window power")->capture_default_str();
    c_fermat->add_option("--rho", rho_list, "Comma-separated rho values")->capture_default_str();

    CLI::App* c_sums = app.add_subcommand("zprime-sums", "Z' sums over the t-bar grid in [T, T + T^delta ln T]");
    c_sums->add_option("--T", T, "Window start")->required();
    c_sums->add_option("--delta", delta, "Window exponent, in (0, 1/6]")->capture_default_str();

    CLI::App* c_scan = app.add_subcommand("scan-zeros", "Odd-order zeros of Z or Z' by sign-change scan");
    c_scan->add_option("--target", target, "z | zprime")->capture_default_str();
    c_scan->add_option("--lo", lo, "Range start, >= 10")->required();
    c_scan->add_option("--hi", hi, "Range end")->required();
    c_scan->add_option("--steps", steps, "Samples per wavelength")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the message and usage pointer
        return 1;
    }

    auto t0 = std::chrono::steady_clock::now();
    Output out;
    out.out_path = out_path;

    try {
        zll::EvaluatorConfig cfg;
        cfg.rs_correction_terms = depth;
        cfg.validate();
        zll::QuadratureSpec spec;
        spec.rel_tol = tol;
        spec.points_per_wavelength = ppw;
        spec.threads = threads;
        spec.validate();
        zll::LadderModel model;
        if (app.got_subcommand(c_ladder) || app.got_subcommand(c_hl) || app.got_subcommand(c_fun)) {
            if (mode == "quadrature") {
                model.j_mode = zll::JMode::quadrature;
            } else if (mode != "asymptotic") {
                throw std::invalid_argument("--mode must be asymptotic or quadrature");
            }
        }

        if (app.got_subcommand(c_zeval)) {
            out.line("t,z,theta,x,log_abs_xi");
            for (double t : parse_list(t_list)) {
                auto v = zll::critical_line_value(t, cfg);
                out.line(fmt(v.t) + "," + fmt(v.z) + "," + fmt(v.theta) + "," + fmt(v.x_hl) + "," +
                         fmt(zll::log_abs_xi(t, cfg)));
                out.plot.push_back({t, v.z});
            }
        } else if (app.got_subcommand(c_theta)) {
            out.line("t,theta,theta_derivative");
            for (double t : parse_list(t_list)) {
                out.line(fmt(t) + "," + fmt(zll::theta(t)) + "," + fmt(zll::theta_derivative(t)));
                out.plot.push_back({t, zll::theta(t)});
            }
        } else if (app.got_subcommand(c_xfn)) {
            out.line("t,z,x,ratio");
            const double target_ratio = 1.1195952337129309;  // (pi/2)^(1/4)
            for (double t : parse_list(t_list)) {
                auto v = zll::critical_line_value(t, cfg);
                double ratio = v.x_hl / v.z;
                out.line(fmt(t) + "," + fmt(v.z) + "," + fmt(v.x_hl) + "," + fmt(ratio));
                out.plot.push_back({t, ratio - target_ratio});
            }
        } else if (app.got_subcommand(c_lemma)) {
            double U = std::pow(T, lemma_a);
            double H = lemma_alpha * std::log(T);
            auto lhs = zll::lemma18_lhs(T, U, H, cfg, spec);
            double rhs = 3.1415926535897932385 * std::sqrt(6.2831853071795864769) * H * U;
            out.line("T,U,H,lhs,rhs,ratio,error_estimate");
            out.line(fmt(T) + "," + fmt(U) + "," + fmt(H) + "," + fmt(lhs.value) + "," + fmt(rhs) +
                     "," + fmt(lhs.value / rhs) + "," + fmt(lhs.error_estimate));
        } else if (app.got_subcommand(c_hl)) {
            auto mode_e = model.j_mode;
            auto r = zll::hardy_littlewood_J(T, mode_e, cfg, spec);
            out.line("T,mode,J,error_estimate");
            out.line(fmt(T) + "," + mode + "," + fmt(r.value) + "," + fmt(r.error_estimate));
        } else if (app.got_subcommand(c_ladder)) {
            auto report = zll::partition_report(T, k, model, cfg, spec);
            out.line("r,iterate,spacing,delta_j,target,ratio");
            for (const auto& row : report.rows) {
                out.line(std::to_string(row.r) + "," + fmt(row.t_cur) + "," + fmt(row.spacing) +
                         "," + fmt(row.delta_j) + "," + fmt(row.target) + "," + fmt(row.ratio));
                out.plot.push_back({static_cast<double>(row.r), row.spacing});
            }
        } else if (app.got_subcommand(c_fun)) {
            out.line("rho,phi,uncertainty");
            for (double rho : parse_list(rho_list)) {
                zll::FunctionalParams p;
                p.x = x;
                p.a = a;
                p.alpha = alpha;
                p.rho = rho;
                auto phi = zll::functional_phi(p, model, cfg, spec);
                out.line(fmt(rho) + "," + fmt(phi.value) + "," + fmt(phi.uncertainty));
                out.plot.push_back({rho, phi.value});
            }
        } else if (app.got_subcommand(c_fermat)) {
            zll::LadderModel fermat_model;  // asymptotic window keeps the probe exact-in-tau
            auto report = zll::fermat_probe(mpz_class(fx), mpz_class(fy), mpz_class(fz), n, a,
                                            alpha, parse_list(rho_list), fermat_model, cfg, spec);
            nlohmann::json j;
            j["schema_version"] = kSchemaVersion;
            j["exact_equal_one"] = report.exact_equal_one;
            j["rational_float"] = fmt(report.rational_float);
            j["verdict"] = report.verdict_text;
            j["trajectory"] = nlohmann::json::array();
            for (const auto& [rho, phi] : report.trajectory) {
                j["trajectory"].push_back({{"rho", fmt(rho)},
                                           {"phi", fmt(phi.value)},
                                           {"uncertainty", fmt(phi.uncertainty)}});
                out.plot.push_back({rho, phi.value});
            }
            out.line(j.dump(2));
        } else if (app.got_subcommand(c_sums)) {
            auto r = zll::zprime_sums(T, delta, cfg, threads);
            out.line("T,H,delta,sum_even,sum_odd,main_term,count_even,count_odd");
            out.line(fmt(r.T) + "," + fmt(r.H) + "," + fmt(r.delta) + "," + fmt(r.sum_even) + "," +
                     fmt(r.sum_odd) + "," + fmt(r.main_term) + "," + std::to_string(r.count_even) +
                     "," + std::to_string(r.count_odd));
        } else if (app.got_subcommand(c_scan)) {
            zll::ScanTarget which;
            if (target == "z") {
                which = zll::ScanTarget::Z;
            } else if (target == "zprime") {
                which = zll::ScanTarget::ZPrime;
            } else {
                throw std::invalid_argument("--target must be z or zprime");
            }
            auto hits = zll::scan_odd_zeros(which, lo, hi, steps, cfg, threads);
            out.line("index,ordinate,residual");
            int idx = 0;
            for (const auto& h : hits) {
                out.line(std::to_string(idx) + "," + fmt(h.ordinate) + "," + fmt(h.residual));
                out.plot.push_back({static_cast<double>(idx), h.ordinate});
                ++idx;
            }
        }

        out.flush();
    } catch (const zll::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const SinkError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    write_manifest(app, app.get_subcommands().front()->get_name(), out_path,
                   app.get_config_ptr() && app.get_config_ptr()->count()
                       ? app.get_config_ptr()->as<std::string>()
                       : "",
                   threads, wall);
    return 0;
}
