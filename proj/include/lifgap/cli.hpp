#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lifgap/asymptotics.hpp"
#include "lifgap/heat_transfer.hpp"

namespace lifgap::cli {

/// Everything a subcommand needs; flags override config-file values.
struct RunConfig {
    std::string command;
    std::string model;   // empty -> per-command default
    std::string model2;  // empty -> same as model
    double a_min = 0.0;  // m
    double a_max = 0.0;  // m
    int a_steps = 0;
    double t1 = 300.0;  // K
    double t2 = 300.0;  // K
    double beta_ev = 0.08;
    std::string optical_table;  // empty -> bundled gold table
    double omega_p_ev = gold::omega_p_ev;
    double gamma = gold::gamma_300K;
    double sigma0 = gold::sigma0_300K;
    std::string formulation;  // "imaginary" | "real"; empty -> per-command
    std::string out;          // empty -> stdout
    double tol = 0.0;         // optional accuracy override
};

/// Builds a response model by name: ideal, plasma, infrared-z, drude-eps,
/// drude-z, normal-skin, zp, zt.  Throws std::invalid_argument on unknown
/// names or invalid parameters.
ResponseModel make_model(const std::string& name, const RunConfig& cfg);

/// Separation grid in meters (geometric when steps > 1).
std::vector<double> separation_grid(const RunConfig& cfg);

struct CommandResult {
    std::string csv;
    int exit_code = 0;  // 0 ok, 2 when a computation flagged non-convergence
};

CommandResult cmd_table1(const RunConfig& cfg);
CommandResult cmd_table2(const RunConfig& cfg);
CommandResult cmd_table3(const RunConfig& cfg);
CommandResult cmd_fig3(const RunConfig& cfg);
CommandResult cmd_fig4(const RunConfig& cfg);
CommandResult cmd_nernst(const RunConfig& cfg);
CommandResult cmd_pressure(const RunConfig& cfg);
CommandResult cmd_heat(const RunConfig& cfg);

/// Dispatch on cfg.command and write cfg.out (or stdout).
/// Returns the process exit code (0 ok, 1 usage, 2 non-convergence).
int run(const RunConfig& cfg, std::ostream& diagnostics);

}  // namespace lifgap::cli
