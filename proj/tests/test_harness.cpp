#include <doctest.h>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "uavtraj/harness.hpp"
#include "uavtraj/scenario.hpp"

using namespace uavtraj;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& tag) {
    const fs::path dir = fs::temp_directory_path() / ("uavtraj_test_" + tag);
    fs::remove_all(dir);
    return dir;
}

ExperimentSpec tiny_spec(const fs::path& out) {
    ExperimentSpec spec;
    spec.scenarios = {"ambient"};
    spec.algorithms = {Algorithm::hgo, Algorithm::pso};
    spec.seeds = {1, 2, 3};
    spec.population = 15;
    spec.iterations = 12;
    spec.output_dir = out;
    spec.workers = 2;
    return spec;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_SUITE("harness") {

TEST_CASE("default seed list is 1 through 30") {
    const auto seeds = default_seeds();
    REQUIRE(seeds.size() == 30);
    for (std::size_t i = 0; i < seeds.size(); ++i) CHECK(seeds[i] == i + 1);
}

TEST_CASE("experiment writes the full artifact set") {
    const fs::path out = fresh_dir("artifacts");
    const ExperimentResult result = run_experiment(tiny_spec(out));

    REQUIRE(result.records.size() == 6);  // 1 scenario x 2 algorithms x 3 seeds
    CHECK(result.summary.size() == 2);
    for (const auto& rec : result.records) {
        INFO(rec.scenario, " ", rec.algorithm, " seed ", rec.seed, ": ", rec.error);
        CHECK_FALSE(rec.failed);
        CHECK(rec.best_cost > 0.0);
        CHECK(rec.evaluations > 0);
    }

    CHECK(fs::exists(out / "runs.csv"));
    CHECK(fs::exists(out / "summary.csv"));
    CHECK(fs::exists(out / "report.txt"));
    CHECK(fs::exists(out / "scenarios" / "ambient.scn"));
    for (const char* algo : {"hgo", "pso"}) {
        for (int seed = 1; seed <= 3; ++seed) {
            const std::string stem =
                "ambient__" + std::string(algo) + "__s" + std::to_string(seed);
            CHECK(fs::exists(out / "runs" / (stem + ".csv")));
            CHECK(fs::exists(out / "runs" / (stem + "_path.csv")));
        }
    }
    CHECK(fs::exists(out / "plots" / "ambient__hgo_curve.csv"));
    CHECK(fs::exists(out / "plots" / "ambient_overlay.txt"));

    // The resolved scenario copy is the builtin instance for the tag.
    CHECK(load_scenario(out / "scenarios" / "ambient.scn") ==
          builtin_scenario(ScenarioCase::ambient, 1));

    fs::remove_all(out);
}

TEST_CASE("round-trips through runs.csv and summary.csv are exact") {
    const fs::path out = fresh_dir("roundtrip");
    const ExperimentResult result = run_experiment(tiny_spec(out));

    const std::vector<RunRecord> loaded = load_runs(out);
    REQUIRE(loaded.size() == result.records.size());
    for (std::size_t i = 0; i < loaded.size(); ++i) {
        CHECK(loaded[i].scenario == result.records[i].scenario);
        CHECK(loaded[i].algorithm == result.records[i].algorithm);
        CHECK(loaded[i].seed == result.records[i].seed);
        CHECK(loaded[i].best_cost == result.records[i].best_cost);  // bit-exact via text round-trip
        CHECK(loaded[i].evaluations == result.records[i].evaluations);
        CHECK(loaded[i].params == result.records[i].params);
        CHECK(loaded[i].failed == result.records[i].failed);
    }

    const std::vector<SummaryRow> stored = load_summary(out);
    const std::vector<SummaryRow> recomputed = aggregate_runs(out);
    REQUIRE(stored.size() == recomputed.size());
    for (std::size_t i = 0; i < stored.size(); ++i) {
        CHECK(stored[i].scenario == recomputed[i].scenario);
        CHECK(stored[i].algorithm == recomputed[i].algorithm);
        CHECK(stored[i].median_cost == recomputed[i].median_cost);
        CHECK(stored[i].mean_cost == recomputed[i].mean_cost);
        CHECK(stored[i].std_cost == recomputed[i].std_cost);
        CHECK(stored[i].runs == recomputed[i].runs);
    }

    fs::remove_all(out);
}

TEST_CASE("two runs of one spec agree on every cost column") {
    const fs::path out_a = fresh_dir("repeat_a");
    const fs::path out_b = fresh_dir("repeat_b");
    const ExperimentResult a = run_experiment(tiny_spec(out_a));
    const ExperimentResult b = run_experiment(tiny_spec(out_b));

    REQUIRE(a.records.size() == b.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i) {
        CHECK(a.records[i].scenario == b.records[i].scenario);
        CHECK(a.records[i].algorithm == b.records[i].algorithm);
        CHECK(a.records[i].seed == b.records[i].seed);
        CHECK(a.records[i].best_cost == b.records[i].best_cost);
        CHECK(a.records[i].evaluations == b.records[i].evaluations);
    }
    REQUIRE(a.summary.size() == b.summary.size());
    for (std::size_t i = 0; i < a.summary.size(); ++i) {
        CHECK(a.summary[i].median_cost == b.summary[i].median_cost);
        CHECK(a.summary[i].mean_cost == b.summary[i].mean_cost);
        CHECK(a.summary[i].std_cost == b.summary[i].std_cost);
    }

    // Byte-identical per-run convergence files regardless of worker scheduling.
    CHECK(slurp(out_a / "runs" / "ambient__hgo__s2.csv") ==
          slurp(out_b / "runs" / "ambient__hgo__s2.csv"));

    fs::remove_all(out_a);
    fs::remove_all(out_b);
}

TEST_CASE("worker count does not change the results") {
    const fs::path out_serial = fresh_dir("serial");
    const fs::path out_pool = fresh_dir("pool");
    ExperimentSpec serial = tiny_spec(out_serial);
    serial.workers = 1;
    ExperimentSpec pool = tiny_spec(out_pool);
    pool.workers = 4;

    const ExperimentResult a = run_experiment(serial);
    const ExperimentResult b = run_experiment(pool);
    REQUIRE(a.records.size() == b.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i) {
        CHECK(a.records[i].best_cost == b.records[i].best_cost);
        CHECK(a.records[i].seed == b.records[i].seed);
    }

    fs::remove_all(out_serial);
    fs::remove_all(out_pool);
}

TEST_CASE("scenario files load the same as their builtin tags") {
    const fs::path out = fresh_dir("byfile");
    const fs::path scn = out / "custom.scn";
    fs::create_directories(out);
    Scenario renamed = builtin_scenario(ScenarioCase::ambient, 1);
    renamed.name = "custom";  // the record name comes from the file, not the tag
    save_scenario(renamed, scn);

    ExperimentSpec spec = tiny_spec(out / "exp");
    spec.scenarios = {scn.string()};
    spec.algorithms = {Algorithm::pso};
    spec.seeds = {1};
    const ExperimentResult by_file = run_experiment(spec);

    ExperimentSpec tag_spec = tiny_spec(out / "exp_tag");
    tag_spec.scenarios = {"ambient"};
    tag_spec.algorithms = {Algorithm::pso};
    tag_spec.seeds = {1};
    const ExperimentResult by_tag = run_experiment(tag_spec);

    REQUIRE(by_file.records.size() == 1);
    REQUIRE(by_tag.records.size() == 1);
    CHECK(by_file.records[0].best_cost == by_tag.records[0].best_cost);
    CHECK(by_file.records[0].scenario == "custom");

    fs::remove_all(out);
}

TEST_CASE("unknown scenario tags are rejected up front") {
    ExperimentSpec spec = tiny_spec(fresh_dir("reject"));
    spec.scenarios = {"does-not-exist"};
    CHECK_THROWS(run_experiment(spec));
}

TEST_CASE("report flags exactly one winner per scenario") {
    std::vector<SummaryRow> rows;
    rows.push_back({"alpha", "pso", 14.0, 14.2, 0.3, 0.1, 30});
    rows.push_back({"alpha", "hgo", 12.5, 12.6, 0.1, 0.1, 30});
    rows.push_back({"beta", "hgo", 11.0, 11.1, 0.2, 0.1, 30});
    rows.push_back({"beta", "pso", 11.5, 11.6, 0.2, 0.1, 30});
    const std::string table = report_table(rows);
    CHECK(table.find("alpha") != std::string::npos);
    CHECK(table.find("beta") != std::string::npos);
    CHECK(table.find("hgo") != std::string::npos);
    std::size_t stars = 0;
    for (char c : table) {
        if (c == '*') ++stars;
    }
    CHECK(stars == 2);  // one flagged winner per scenario
    // Within a scenario block the winner is listed first.
    CHECK(table.find("hgo") < table.find("pso"));
}

TEST_CASE("emit_plot_data reports missing inputs by name") {
    const fs::path out = fresh_dir("noplots");
    fs::create_directories(out);
    {
        std::ofstream runs(out / "runs.csv");
        runs << "scenario,algorithm,seed,status,best_cost,evaluations,elapsed_seconds,params,error\n";
        runs << "ghost,pso,1,ok,10,100,0.1,,\n";
    }
    try {
        emit_plot_data(out);
        FAIL("expected a missing-file error");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("ghost") != std::string::npos);
    }
    fs::remove_all(out);
}

}  // TEST_SUITE
