// fsr: convergence studies and truncation-error probes for the FSR scheme
// family. See README.md for the case/scheme lists and the CSV schema.
#include <cstdio>
#include <exception>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "fsr/cases.hpp"
#include "fsr/errors.hpp"
#include "fsr/mesh.hpp"
#include "fsr/scheme.hpp"

namespace {

std::string joined(const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : " ") + x;
    return s;
}

void add_common(CLI::App* cmd, fsr::CaseConfig& cfg) {
    cmd->add_option("--case", cfg.case_tag, "case tag (" + joined(fsr::CaseConfig::case_names()) + ")")
        ->required();
    cmd->add_option("--scheme", cfg.scheme,
                    "scheme name (" + joined(fsr::SchemeConfig::preset_names()) + ")");
    cmd->add_option("--grids", cfg.grids, "grid sizes, e.g. 32,64,128,256")->delimiter(',');
    cmd->add_option("--grid-family", cfg.grid_family,
                    "2D grid family: quad|right-tri|equilateral-tri|irregular-tri");
    cmd->add_flag("!--no-dissipation", cfg.dissipation, "disable the Roe dissipation term");
    cmd->add_option("--cfl", cfg.cfl, "pseudo-time CFL number");
    cmd->add_option("--drop", cfg.drop, "relative residual drop for steady convergence");
    cmd->add_option("--dt", cfg.dt, "unsteady time step");
    cmd->add_option("--steps", cfg.steps, "unsteady step count");
    cmd->add_option("--max-iter", cfg.max_iter, "pseudo-time iteration cap");
    cmd->add_option("--aspect", cfg.aspect, "quad-grid y scale factor");
    cmd->add_option("--entropy-fix", cfg.entropy_fix,
                    "Harten eigenvalue-floor scale for Euler dissipation (default 0 = off)");
    cmd->add_option("--seed", cfg.seed, "seed for irregular grids");
    cmd->add_option("--out", cfg.out_dir, "output directory for CSV reports");
    cmd->add_flag("--plot", cfg.plot, "emit a gnuplot script next to the CSV");
    cmd->add_option("--threads", cfg.threads, "worker threads (0 = auto, capped by FSR_THREADS)");
    cmd->set_config("--config", "", "key=value config file; flags override it");
}

void print_result(const fsr::StudyResult& res) {
    std::printf("%6s %12s %14s %10s %10s %10s\n", "grid", "h", "error", "order", "iters",
                "seconds");
    for (const auto& r : res.rows)
        std::printf("%6d %12.5e %14.7e %10.4f %10ld %10.2f\n", r.grid, r.h, r.error,
                    r.observed_order, r.iterations, r.wall_seconds);
    if (!res.csv_path.empty()) std::printf("wrote %s\n", res.csv_path.c_str());
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"FSR/CFSR/QFSR flux-and-solution-reconstruction verification driver"};
    app.require_subcommand(1);

    fsr::CaseConfig run_cfg, te_cfg;
    auto* run = app.add_subcommand("run", "solve a case over a grid series");
    add_common(run, run_cfg);
    auto* te = app.add_subcommand("te-probe", "truncation-error probe (no solving)");
    add_common(te, te_cfg);

    std::string dump_family = "quad";
    int dump_n = 9;
    double dump_aspect = 1.0, dump_xlo = 0.0, dump_xhi = 1.0;
    std::uint64_t dump_seed = 1;
    auto* dump = app.add_subcommand("mesh-dump", "print a mesh as plain text");
    dump->add_option("--family", dump_family,
                     "uniform1d|quad|right-tri|equilateral-tri|irregular-tri");
    dump->add_option("--n", dump_n, "nodes (per side in 2D)");
    dump->add_option("--aspect", dump_aspect, "quad y scale");
    dump->add_option("--x-lo", dump_xlo, "1D lower bound");
    dump->add_option("--x-hi", dump_xhi, "1D upper bound");
    dump->add_option("--seed", dump_seed, "irregular-grid seed");

    try {
        app.parse(argc, argv);
        if (run->parsed()) {
            print_result(fsr::run_case(run_cfg));
        } else if (te->parsed()) {
            print_result(fsr::run_te_probe(te_cfg));
        } else if (dump->parsed()) {
            if (dump_family == "uniform1d")
                fsr::build_uniform_1d<double>(dump_n, dump_xlo, dump_xhi).dump(std::cout);
            else if (dump_family == "quad")
                fsr::build_quad_grid(dump_n, dump_aspect).dump(std::cout);
            else
                fsr::build_tri_grid(dump_n, fsr::tri_variant_from_string(
                                                 dump_family.substr(0, dump_family.find("-tri"))),
                                    dump_seed)
                    .dump(std::cout);
        }
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const fsr::SolverDivergence& e) {
        std::cerr << "error: " << e.what() << " (step " << e.step << ")\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
