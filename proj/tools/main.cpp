// Command line driver: run experiment grids, re-print reports, emit builtin
// scenarios. Exit code 0 on success, 1 on any error (message names the stage).

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "uavtraj/harness.hpp"
#include "uavtraj/text.hpp"

namespace {

/// "1-30", "1,2,5" or "7" -> explicit seed list.
std::vector<std::uint64_t> parse_seed_spec(const std::string& spec) {
    std::vector<std::uint64_t> seeds;
    for (const std::string_view part : uavtraj::split(spec, ',')) {
        const std::string_view token = uavtraj::trim(part);
        if (token.empty()) continue;
        const std::size_t dash = token.find('-');
        int lo = 0;
        int hi = 0;
        if (dash != std::string_view::npos && dash > 0) {
            if (!uavtraj::parse_int(token.substr(0, dash), lo) ||
                !uavtraj::parse_int(token.substr(dash + 1), hi) || lo < 0 || hi < lo) {
                throw std::runtime_error("bad seed range '" + std::string(token) + "'");
            }
            for (int s = lo; s <= hi; ++s) seeds.push_back(static_cast<std::uint64_t>(s));
        } else {
            if (!uavtraj::parse_int(token, lo) || lo < 0) {
                throw std::runtime_error("bad seed '" + std::string(token) + "'");
            }
            seeds.push_back(static_cast<std::uint64_t>(lo));
        }
    }
    if (seeds.empty()) throw std::runtime_error("empty seed list '" + spec + "'");
    return seeds;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"UAV trajectory optimization benchmark"};
    app.require_subcommand(1);

    // ---- run ------------------------------------------------------------------
    auto* run_cmd = app.add_subcommand("run", "Execute an experiment grid and write artifacts");
    std::vector<std::string> scenario_refs;
    std::vector<std::string> algorithm_tags;
    std::string seed_spec = "1-30";
    uavtraj::ExperimentSpec spec;
    std::string out_dir;
    run_cmd->add_option("--scenario", scenario_refs,
                        "Builtin case tag (ambient, constrict, tangle, complex) or scenario file; "
                        "repeatable. Default: all four builtin cases");
    run_cmd->add_option("--algorithm", algorithm_tags,
                        "Algorithm tag (hgo, pso, gwo, csa, bmo); repeatable. Default: all five");
    run_cmd->add_option("--seeds", seed_spec, "Seed list, e.g. 1-30 or 1,2,5")
        ->capture_default_str();
    run_cmd->add_option("--population", spec.population, "Swarm size")->capture_default_str();
    run_cmd->add_option("--iterations", spec.iterations, "Iterations per run")
        ->capture_default_str();
    run_cmd->add_option("--penalty-weight", spec.penalty_weight, "Collision penalty weight")
        ->capture_default_str();
    run_cmd->add_option("--out", out_dir, "Output directory")->required();
    run_cmd->add_option("--workers", spec.workers, "Parallel runs")->capture_default_str();

    // ---- report ---------------------------------------------------------------
    auto* report_cmd =
        app.add_subcommand("report", "Re-aggregate an output directory and print the ranking");
    std::string report_dir;
    report_cmd->add_option("dir", report_dir, "Experiment output directory")->required();

    // ---- scenario -------------------------------------------------------------
    auto* scenario_cmd =
        app.add_subcommand("scenario", "Generate a builtin scenario and write it to a file");
    std::string case_tag;
    std::uint64_t scenario_seed = 1;
    std::string scenario_out;
    scenario_cmd->add_option("--case", case_tag, "ambient, constrict, tangle or complex")
        ->required();
    scenario_cmd->add_option("--seed", scenario_seed, "Generator seed")->capture_default_str();
    scenario_cmd->add_option("--out", scenario_out, "Destination file")->required();

    CLI11_PARSE(app, argc, argv);

    std::string stage = "setup";
    try {
        if (run_cmd->parsed()) {
            stage = "run";
            spec.scenarios = scenario_refs.empty()
                                 ? std::vector<std::string>{"ambient", "constrict", "tangle", "complex"}
                                 : scenario_refs;
            if (algorithm_tags.empty()) {
                spec.algorithms = {uavtraj::Algorithm::hgo, uavtraj::Algorithm::pso,
                                   uavtraj::Algorithm::gwo, uavtraj::Algorithm::csa,
                                   uavtraj::Algorithm::bmo};
            } else {
                for (const std::string& tag : algorithm_tags) {
                    spec.algorithms.push_back(uavtraj::parse_algorithm(tag));
                }
            }
            spec.seeds = parse_seed_spec(seed_spec);
            spec.output_dir = out_dir;
            const uavtraj::ExperimentResult result = uavtraj::run_experiment(spec);
            std::cout << uavtraj::report_table(result.summary);
            int failed = 0;
            for (const uavtraj::RunRecord& rec : result.records) failed += rec.failed ? 1 : 0;
            if (failed > 0) {
                std::cerr << failed << " run(s) failed; see " << (spec.output_dir / "failures.log")
                          << "\n";
            }
            std::cout << "artifacts written to " << spec.output_dir << "\n";
        } else if (report_cmd->parsed()) {
            stage = "report";
            std::cout << uavtraj::report_table(uavtraj::aggregate_runs(report_dir));
        } else if (scenario_cmd->parsed()) {
            stage = "scenario";
            const uavtraj::Scenario s =
                uavtraj::builtin_scenario(uavtraj::parse_case(case_tag), scenario_seed);
            uavtraj::save_scenario(s, scenario_out);
            std::cout << "wrote " << scenario_out << " (" << s.obstacles.size() << " obstacles)\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error (" << stage << "): " << e.what() << "\n";
        return 1;
    }
    return 0;
}
