#include <cstdio>
#include <exception>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "selftest.hpp"
#include "twofluid/config.hpp"
#include "twofluid/hyperbolic.hpp"
#include "twofluid/run_io.hpp"
#include "twofluid/vortex.hpp"

namespace {

using namespace twofluid;

struct LawFlags {
    std::string name;
    double gamma = 0.0, c_const = 0.0, rho_l = 0.0, k0 = 0.0, a0 = 0.0;
    double alpha = 0.0, a_coef = 0.0;
    CLI::Option* o_gamma = nullptr;
    CLI::Option* o_c_const = nullptr;
    CLI::Option* o_rho_l = nullptr;
    CLI::Option* o_k0 = nullptr;
    CLI::Option* o_a0 = nullptr;
    CLI::Option* o_alpha = nullptr;
    CLI::Option* o_a_coef = nullptr;

    void attach(CLI::App* app) {
        app->add_option("--law", name, "pressure law name")->required();
        o_gamma = app->add_option("--law.gamma", gamma);
        o_c_const = app->add_option("--law.c_const", c_const);
        o_rho_l = app->add_option("--law.rho_l", rho_l);
        o_k0 = app->add_option("--law.k0", k0);
        o_a0 = app->add_option("--law.a0", a0);
        o_alpha = app->add_option("--law.alpha", alpha);
        o_a_coef = app->add_option("--law.a_coef", a_coef);
    }

    PressureLaw build() const {
        ConfigMap config;
        config.set("law", name);
        auto put = [&](const char* key, const CLI::Option* opt, double v) {
            if (opt->count() > 0) config.set(key, fmt17(v));
        };
        put("law.gamma", o_gamma, gamma);
        put("law.c_const", o_c_const, c_const);
        put("law.rho_l", o_rho_l, rho_l);
        put("law.k0", o_k0, k0);
        put("law.a0", o_a0, a0);
        put("law.alpha", o_alpha, alpha);
        put("law.a_coef", o_a_coef, a_coef);
        return law_from_config(config);
    }
};

void apply_overrides(ConfigMap& config, const std::vector<std::string>& sets) {
    for (const std::string& entry : sets) {
        const auto eq = entry.find('=');
        if (eq == std::string::npos)
            throw ConfigError("--set expects key=value, got: " + entry);
        config.set(entry.substr(0, eq), entry.substr(eq + 1));
    }
}

std::string csv_bool(bool v) { return v ? "1" : "0"; }

int dispatch(int argc, char** argv) {
    CLI::App app{"two-fluid flow laboratory"};
    app.require_subcommand(1);

    // --- eos ---------------------------------------------------------------
    auto* eos_cmd = app.add_subcommand("eos", "evaluate a pressure law");
    LawFlags eos_law;
    eos_law.attach(eos_cmd);
    double eos_m = 0.0, eos_n = 0.0, eos_rho = 0.0, eos_s = 0.0;
    auto* opt_m = eos_cmd->add_option("--m", eos_m, "gas/particle mass density");
    auto* opt_n = eos_cmd->add_option("--n", eos_n, "liquid/fluid mass density");
    auto* opt_rho = eos_cmd->add_option("--rho", eos_rho, "density");
    auto* opt_s = eos_cmd->add_option("--s", eos_s, "entropy S = m/n");
    opt_m->needs(opt_n);
    opt_rho->needs(opt_s);

    // --- speeds ------------------------------------------------------------
    auto* speeds_cmd =
        app.add_subcommand("speeds", "characteristic speeds in a direction");
    LawFlags speeds_law;
    speeds_law.attach(speeds_cmd);
    std::string speeds_state, speeds_xi;
    speeds_cmd->add_option("--state", speeds_state, "state literal")->required();
    speeds_cmd->add_option("--xi", speeds_xi, "direction components, comma separated")
        ->required();

    // --- hugoniot ----------------------------------------------------------
    auto* hugoniot_cmd = app.add_subcommand("hugoniot", "construct planar shocks");
    LawFlags hugoniot_law;
    hugoniot_law.attach(hugoniot_cmd);
    std::string hugoniot_model, hugoniot_upstream, hugoniot_branch = "pos";
    std::string hugoniot_range;
    double hugoniot_rho_plus = 0.0;
    hugoniot_cmd->add_option("--model", hugoniot_model, "liquid_gas or bi_fluid")
        ->required();
    hugoniot_cmd
        ->add_option("--upstream", hugoniot_upstream, "rho=..,un=..,s=.. literal")
        ->required();
    auto* opt_rho_plus =
        hugoniot_cmd->add_option("--rho-plus", hugoniot_rho_plus, "downstream density");
    auto* opt_range = hugoniot_cmd->add_option(
        "--rho-plus-range", hugoniot_range, "sweep lo:hi:steps over rho_plus");
    opt_rho_plus->excludes(opt_range);
    hugoniot_cmd->add_option("--branch", hugoniot_branch, "pos or neg mass flux");

    // --- vortex ------------------------------------------------------------
    auto* vortex_cmd =
        app.add_subcommand("vortex", "vortex-sheet stability classification");
    LawFlags vortex_law;
    vortex_law.attach(vortex_cmd);
    std::string vortex_left, vortex_right, vortex_range;
    vortex_cmd->add_option("--left", vortex_left, "minus-side state literal")
        ->required();
    vortex_cmd->add_option("--right", vortex_right, "plus-side state literal")
        ->required();
    vortex_cmd->add_option("--u2-range", vortex_range, "sweep lo:hi:steps over [u2]");

    // --- simulate ----------------------------------------------------------
    auto* simulate_cmd = app.add_subcommand("simulate", "finite-volume run");
    std::string simulate_config, simulate_out = "./out";
    std::vector<std::string> simulate_sets;
    simulate_cmd->add_option("--config", simulate_config, "config file")->required();
    simulate_cmd->add_option("--out", simulate_out, "output directory");
    simulate_cmd->add_option("--set", simulate_sets,
                             "override config keys (key=value), repeatable");

    // --- energy ------------------------------------------------------------
    auto* energy_cmd =
        app.add_subcommand("energy", "linearized entropy-perturbation run");
    std::string energy_config, energy_out = "./out";
    std::vector<std::string> energy_sets;
    energy_cmd->add_option("--config", energy_config, "config file")->required();
    energy_cmd->add_option("--out", energy_out, "output directory");
    energy_cmd->add_option("--set", energy_sets,
                           "override config keys (key=value), repeatable");

    // --- selftest ----------------------------------------------------------
    auto* selftest_cmd =
        app.add_subcommand("selftest", "run the invariant suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& help) {
        return app.exit(help);
    } catch (const CLI::ParseError& err) {
        app.exit(err);
        return 2;  // invalid input, including unknown flags
    }

    if (eos_cmd->parsed()) {
        const PressureLaw law = eos_law.build();
        double p = 0.0;
        if (opt_m->count() > 0 && opt_rho->count() > 0)
            throw ConfigError("eos: give either --m/--n or --rho/--s, not both");
        if (opt_m->count() > 0)
            p = pressure_mn(law, eos_m, eos_n);
        else if (opt_rho->count() > 0)
            p = pressure_rho_s(law, eos_rho, eos_s);
        else
            throw ConfigError("eos: needs --m/--n or --rho/--s");
        std::printf("p,%s\n", fmt17(p).c_str());
        return 0;
    }

    if (speeds_cmd->parsed()) {
        const PressureLaw law = speeds_law.build();
        const PrimitiveState state = parse_state_literal(speeds_state, law);
        Vec xi = Vec::zero(state.u.dim);
        {
            std::stringstream stream(speeds_xi);
            std::string item;
            int k = 0;
            while (std::getline(stream, item, ',')) {
                if (k >= state.u.dim)
                    throw ConfigError("speeds: direction has more components than the state");
                xi[k++] = std::stod(item);
            }
            if (k != state.u.dim)
                throw ConfigError("speeds: direction dimension mismatch");
        }
        const std::vector<double> speeds = characteristic_speeds(law, state, xi);
        std::string row;
        for (size_t k = 0; k < speeds.size(); ++k) {
            if (k) row += ',';
            row += fmt17(speeds[k]);
        }
        std::printf("%s\n", row.c_str());
        return 0;
    }

    if (hugoniot_cmd->parsed()) {
        const PressureLaw law = hugoniot_law.build();
        if (model_kind_from_name(hugoniot_model) != law.model())
            throw ConfigError("hugoniot: model '" + hugoniot_model +
                              "' does not admit pressure law '" + law.name() + "'");
        const UpstreamLiteral up = parse_upstream_literal(hugoniot_upstream);
        if (hugoniot_branch != "pos" && hugoniot_branch != "neg")
            throw ConfigError("hugoniot: --branch must be pos or neg");
        const FluxSign sign =
            hugoniot_branch == "pos" ? FluxSign::Positive : FluxSign::Negative;

        auto row_of = [&](const ShockSolution& shock) {
            std::string row = fmt17(shock.j_flux);
            row += ',' + fmt17(shock.sigma);
            row += ',' + fmt17(shock.plus.u[0]);
            row += ',' + fmt17(shock.minus.p);
            row += ',' + fmt17(shock.plus.p);
            row += ',' + csv_bool(shock.classification.compressive);
            row += ',' + csv_bool(shock.classification.lax);
            row += ',' + fmt17(shock.classification.mach_minus);
            row += ',' + fmt17(shock.classification.mach_plus);
            return row;
        };

        if (opt_range->count() > 0) {
            const SweepRange range = parse_sweep_range(hugoniot_range);
            std::printf(
                "rho_plus,j,sigma,un_plus,p_minus,p_plus,compressive,lax,"
                "mach_minus,mach_plus\n");
            for (int k = 0; k < range.steps; ++k) {
                const double rho_plus = range.value(k);
                const ShockSolution shock =
                    hugoniot_downstream(law, up.rho, up.un, up.s, rho_plus, sign);
                std::printf("%s,%s\n", fmt17(rho_plus).c_str(),
                            row_of(shock).c_str());
            }
        } else {
            if (opt_rho_plus->count() == 0)
                throw ConfigError("hugoniot: needs --rho-plus or --rho-plus-range");
            const ShockSolution shock =
                hugoniot_downstream(law, up.rho, up.un, up.s, hugoniot_rho_plus, sign);
            std::printf("%s\n", row_of(shock).c_str());
        }
        return 0;
    }

    if (vortex_cmd->parsed()) {
        const PressureLaw law = vortex_law.build();
        const PrimitiveState left = parse_state_literal(vortex_left, law);
        const PrimitiveState right = parse_state_literal(vortex_right, law);

        auto row_of = [&](const VortexSheetAssessment& assessment) {
            std::string row = fmt17(assessment.jump_u2);
            row += ',' + fmt17(assessment.t1);
            row += ',' + fmt17(assessment.t2);
            row += ',';
            row += to_string(assessment.verdict);
            return row;
        };

        if (!vortex_range.empty()) {
            const SweepRange range = parse_sweep_range(vortex_range);
            std::printf("u2_jump,t1,t2,verdict\n");
            for (int k = 0; k < range.steps; ++k) {
                PrimitiveState shifted = right;
                shifted.u[1] = left.u[1] + range.value(k);
                std::printf("%s\n",
                            row_of(supersonic_condition(law, left, shifted)).c_str());
            }
        } else {
            std::printf("%s\n", row_of(supersonic_condition(law, left, right)).c_str());
        }
        return 0;
    }

    if (simulate_cmd->parsed()) {
        ConfigMap config = ConfigMap::parse_file(simulate_config);
        apply_overrides(config, simulate_sets);
        fvm::SimulationConfig sim = simulation_from_config(config);
        config.require_all_consumed();
        write_text_file(simulate_out, "resolved_config.cfg", config.resolved_text());
        const fvm::RunResult result = fvm::run(sim);
        write_simulation_outputs(result, sim.law, simulate_out);
        std::printf("steps,%d\nsnapshots,%zu\n", result.steps,
                    result.snapshots.size());
        return 0;
    }

    if (energy_cmd->parsed()) {
        ConfigMap config = ConfigMap::parse_file(energy_config);
        apply_overrides(config, energy_sets);
        EnergyRunConfig run = energy_from_config(config);
        config.require_all_consumed();
        write_text_file(energy_out, "resolved_config.cfg", config.resolved_text());
        const EntropySolution solution =
            solve_entropy_perturbation(run.problem, run.cells, run.cfl);
        write_energy_outputs(solution, energy_out);
        std::printf("steps,%d\nresidual,%s\n", solution.steps,
                    fmt17(energy_identity_residual(run.problem, solution)).c_str());
        return 0;
    }

    if (selftest_cmd->parsed()) return run_selftest();
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const NonConvergenceError& err) {
        std::fprintf(stderr, "error: %s\n", err.what());
        return 3;
    } catch (const DomainError& err) {
        std::fprintf(stderr, "error: %s\n", err.what());
        return 2;
    } catch (const ConfigError& err) {
        std::fprintf(stderr, "error: %s\n", err.what());
        return 2;
    } catch (const NoBracketError& err) {
        std::fprintf(stderr, "error: %s\n", err.what());
        return 2;
    } catch (const RarefactionBranchError& err) {
        std::fprintf(stderr, "error: %s\n", err.what());
        return 2;
    } catch (const std::invalid_argument& err) {
        std::fprintf(stderr, "error: %s\n", err.what());
        return 2;
    } catch (const std::exception& err) {
        std::fprintf(stderr, "error: %s\n", err.what());
        return 1;
    }
}
