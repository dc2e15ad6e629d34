// leeq — command-line workbench for the coupled-oscillator quantization
// pipeline: region classification, the quantization pipeline with fixture
// support, spectrum tables, classical simulation, and the fixture
// verification suite.
//
// Exit codes: 0 success, 1 check failure, 2 usage error, 3 numerical blow-up.

#include "lee/acceptance.hpp"
#include "lee/classical_dynamics.hpp"
#include "lee/fixtures.hpp"
#include "lee/io.hpp"
#include "lee/pipeline.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write: " + out_path);
    out << text;
}

std::optional<lee::Matrix4> load_fixture(const std::string& which,
                                         const std::string& fixture_dir) {
    if (which.empty()) return std::nullopt;
    return lee::load_matrix4(fixture_dir + "/" + which + "_S.txt");
}

// fixture names imply the reference parameter points when none were given
void default_params(const std::string& fixture, std::optional<double>& gamma,
                    std::optional<double>& lambda) {
    if (fixture == "case1") {
        if (!gamma) gamma = -1.0;
        if (!lambda) lambda = 1.0 / 3.0;
    } else if (fixture == "case2") {
        if (!gamma) gamma = 1.0;
        if (!lambda) lambda = 1.0;
    }
}

int run(int argc, char** argv) {
    CLI::App app{"coupled-oscillator quantization workbench"};
    app.require_subcommand(1);

    // ---- classify ----
    auto* classify = app.add_subcommand("classify", "region sweep of f(gamma, lambda) as CSV");
    double gmin = -2.0, gmax = 2.0, lmin = -2.0, lmax = 2.0;
    int steps = 41;
    std::string classify_out;
    classify->add_option("--gamma-min", gmin, "sweep start in gamma")->capture_default_str();
    classify->add_option("--gamma-max", gmax, "sweep end in gamma")->capture_default_str();
    classify->add_option("--lambda-min", lmin, "sweep start in lambda")->capture_default_str();
    classify->add_option("--lambda-max", lmax, "sweep end in lambda")->capture_default_str();
    classify->add_option("--steps", steps, "grid points per axis (>= 2)")->capture_default_str();
    classify->add_option("--out", classify_out, "output file (default stdout)");

    // ---- quantize ----
    auto* quantize = app.add_subcommand("quantize", "full pipeline report as JSON");
    std::optional<double> q_gamma, q_lambda;
    std::string q_fixture, q_fixture_dir = "fixtures", q_out;
    double q_b3 = std::sqrt(40.0 / 21.0), q_b4 = 1.0;
    quantize->add_option("--gamma", q_gamma, "coupling gamma");
    quantize->add_option("--lambda", q_lambda, "coupling lambda");
    quantize->add_option("--fixture", q_fixture, "use a reference S matrix: case1 | case2")
        ->check(CLI::IsMember({"case1", "case2"}));
    quantize->add_option("--fixture-dir", q_fixture_dir, "fixture directory")
        ->capture_default_str();
    quantize->add_option("--b3", q_b3, "free shift parameter b3")->capture_default_str();
    quantize->add_option("--b4", q_b4, "free shift parameter b4")->capture_default_str();
    quantize->add_option("--out", q_out, "output file (default stdout)");

    // ---- spectrum ----
    auto* spectrum = app.add_subcommand("spectrum", "energy levels as a JSON array");
    std::optional<double> s_gamma, s_lambda;
    std::string s_fixture, s_fixture_dir = "fixtures", s_out, s_dump_mode;
    int s_nmax = 3, s_dump_n = 0;
    spectrum->add_option("--gamma", s_gamma, "coupling gamma");
    spectrum->add_option("--lambda", s_lambda, "coupling lambda");
    spectrum->add_option("--fixture", s_fixture, "use a reference S matrix: case1 | case2")
        ->check(CLI::IsMember({"case1", "case2"}));
    spectrum->add_option("--fixture-dir", s_fixture_dir, "fixture directory")
        ->capture_default_str();
    spectrum->add_option("--nmax", s_nmax, "levels n, m = 0..nmax")->capture_default_str();
    spectrum
        ->add_option("--dump-mode", s_dump_mode,
                     "dump one eigenfunction instead of the table: X | Y")
        ->check(CLI::IsMember({"X", "Y"}));
    spectrum->add_option("--dump-n", s_dump_n, "level of the dumped eigenfunction")
        ->capture_default_str();
    spectrum->add_option("--out", s_out, "output file (default stdout)");

    // ---- simulate ----
    auto* simulate = app.add_subcommand("simulate", "integrate a classical system to CSV");
    std::string sys_name = "lee", sim_out;
    double sim_gamma = 0.0, sim_lambda = 0.0, A = 0.0, B = 0.0;
    double x0 = 1.0, y0 = 0.0, vx0 = 0.0, vy0 = 0.0, dt = 1e-3, T = 100.0;
    int stride = 1;
    simulate->add_option("--system", sys_name, "lee | bateman | generalized")
        ->check(CLI::IsMember({"lee", "bateman", "generalized"}))
        ->capture_default_str();
    simulate->add_option("--gamma", sim_gamma, "coupling gamma")->capture_default_str();
    simulate->add_option("--lambda", sim_lambda, "coupling lambda (lee; also p_lambda column)")
        ->capture_default_str();
    simulate->add_option("--A", A, "generalized cross coupling A")->capture_default_str();
    simulate->add_option("--B", B, "generalized cross coupling B")->capture_default_str();
    simulate->add_option("--x0", x0, "initial x")->capture_default_str();
    simulate->add_option("--y0", y0, "initial y")->capture_default_str();
    simulate->add_option("--vx0", vx0, "initial x'")->capture_default_str();
    simulate->add_option("--vy0", vy0, "initial y'")->capture_default_str();
    simulate->add_option("--dt", dt, "step size")->capture_default_str();
    simulate->add_option("--T", T, "final time")->capture_default_str();
    simulate->add_option("--stride", stride, "emit every stride-th sample")
        ->capture_default_str();
    simulate->add_option("--out", sim_out, "output file (default stdout)");

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "run the fixture verification suite");
    std::string v_fixture_dir = "fixtures";
    verify->add_option("--fixture-dir", v_fixture_dir, "fixture directory")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;  // usage error
    }

    if (classify->parsed()) {
        if (steps < 2 || gmin > gmax || lmin > lmax) {
            std::cerr << "error: malformed range (need steps >= 2 and min <= max)\n";
            return 2;
        }
        write_output(lee::region_sweep_csv(gmin, gmax, lmin, lmax, steps), classify_out);
        return 0;
    }

    if (quantize->parsed()) {
        default_params(q_fixture, q_gamma, q_lambda);
        if (!q_gamma || !q_lambda) {
            std::cerr << "error: --gamma and --lambda are required without --fixture\n";
            return 2;
        }
        if (q_b3 == 0.0 || q_b4 == 0.0) {
            std::cerr << "error: --b3 and --b4 must be nonzero\n";
            return 2;
        }
        const auto fixture = load_fixture(q_fixture, q_fixture_dir);
        const lee::RunReport report =
            lee::run_quantize_pipeline({*q_gamma, *q_lambda}, fixture, q_b3, q_b4);
        write_output(lee::run_report_json(report), q_out);
        return 0;
    }

    if (spectrum->parsed()) {
        default_params(s_fixture, s_gamma, s_lambda);
        if (!s_gamma || !s_lambda) {
            std::cerr << "error: --gamma and --lambda are required without --fixture\n";
            return 2;
        }
        const auto fixture = load_fixture(s_fixture, s_fixture_dir);
        const lee::RunReport report = lee::run_quantize_pipeline(
            {*s_gamma, *s_lambda}, fixture, std::sqrt(40.0 / 21.0), 1.0, s_nmax);
        if (!report.decoupled) {
            std::cerr << "error: no decoupled modes for these parameters (branch "
                      << lee::to_string(report.branch) << ")\n";
            return 1;
        }
        if (!s_dump_mode.empty()) {
            lee::ModeFunction f = [&] {
                if (s_dump_mode == "X") {
                    return lee::eigenfunction_standard(report.decoupled->mode_x, s_dump_n);
                }
                const lee::DecoupledMode& my = report.decoupled->mode_y;
                if (my.regime == lee::ModeRegime::Standard) {
                    return lee::eigenfunction_standard(my, s_dump_n);
                }
                const double omega_sq = -my.q_coeff / my.p_coeff;
                const lee::PseudoBosonPair pb = lee::pseudoboson_pair(omega_sq);
                return lee::excited_pseudo(pb.B, lee::vacuum_solve(pb.A), s_dump_n);
            }();
            write_output(lee::eigenfunction_json(f) + "\n", s_out);
        } else {
            write_output(lee::spectrum_json(report.spectrum_sample) + "\n", s_out);
        }
        return 0;
    }

    if (simulate->parsed()) {
        lee::LinearSystem sys;
        if (sys_name == "lee") {
            sys = lee::lee_system({sim_gamma, sim_lambda});
        } else if (sys_name == "bateman") {
            sys = lee::bateman_system(sim_gamma);
        } else {
            sys = lee::generalized_system(sim_gamma, A, B);
        }
        const Eigen::Vector4cd modes = lee::stability_eigenvalues(sys);
        std::cerr << "# first-order eigenvalues:";
        for (int j = 0; j < 4; ++j) {
            std::cerr << " " << modes(j).real() << (modes(j).imag() < 0 ? "-" : "+")
                      << std::abs(modes(j).imag()) << "i";
        }
        std::cerr << "\n";
        const lee::TrajectoryState s0{0.0, {x0, y0}, {vx0, vy0}};
        const lee::Trajectory traj = lee::integrate(sys, s0, dt, T);
        write_output(lee::trajectory_csv(traj, sim_lambda, stride), sim_out);
        return 0;
    }

    if (verify->parsed()) {
        lee::FixtureSet fx;
        fx.case1_S = lee::load_matrix4(v_fixture_dir + "/case1_S.txt");
        fx.case2_S = lee::load_matrix4(v_fixture_dir + "/case2_S.txt");
        const auto results = lee::run_acceptance_checks(fx);
        int failures = 0;
        for (const auto& r : results) {
            std::printf("[%s] %-72s %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                        r.detail.c_str());
            if (!r.pass) ++failures;
        }
        std::printf("%zu checks, %d failed\n", results.size(), failures);
        return failures == 0 ? 0 : 1;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const lee::BlowUpError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
