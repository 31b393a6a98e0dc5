#include "uavtraj/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "uavtraj/diagnostics.hpp"
#include "uavtraj/hgo.hpp"
#include "uavtraj/text.hpp"

namespace uavtraj {

namespace {

namespace fs = std::filesystem;

// ---- small numeric helpers ---------------------------------------------------

double median_of(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    return (n % 2 == 1) ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

double mean_of(const std::vector<double>& values) {
    return std::accumulate(values.begin(), values.end(), 0.0) /
           static_cast<double>(values.size());
}

double stddev_of(const std::vector<double>& values, double mean) {
    double sum = 0.0;
    for (const double v : values) sum += (v - mean) * (v - mean);
    return std::sqrt(sum / static_cast<double>(values.size()));
}

// ---- file-name and csv helpers -----------------------------------------------

std::string sanitize(std::string_view name) {
    std::string out;
    out.reserve(name.size());
    for (const char c : name) {
        const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                        (c >= '0' && c <= '9') || c == '.' || c == '_' || c == '-';
        out.push_back(ok ? c : '_');
    }
    return out;
}

std::string csv_safe(std::string text) {
    for (char& c : text) {
        if (c == ',' || c == '\n' || c == '\r') c = ';';
    }
    return text;
}

std::ofstream open_out(const fs::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    return out;
}

std::vector<std::string> read_lines(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

double need_field_double(const fs::path& path, std::string_view field) {
    double v = 0.0;
    if (!parse_double(field, v)) {
        throw std::runtime_error("bad number '" + std::string(field) + "' in '" + path.string() +
                                 "'");
    }
    return v;
}

// ---- job plumbing ------------------------------------------------------------

std::string params_string(const std::map<std::string, double>& params) {
    std::string out;
    for (const auto& [key, value] : params) {
        if (!out.empty()) out += ';';
        out += key + "=" + format_double(value);
    }
    return out;
}

std::map<std::string, double> hgo_params_map(const hgo::HgoConfig& cfg) {
    return {{"clusters", static_cast<double>(cfg.clusters)},
            {"henry_init_scale", cfg.henry_init_scale},
            {"pressure_init_scale", cfg.pressure_init_scale},
            {"decay_init_scale", cfg.decay_init_scale},
            {"reference_temperature", cfg.reference_temperature},
            {"fitness_epsilon", cfg.fitness_epsilon},
            {"influence_weight", cfg.influence_weight},
            {"interaction_scale", cfg.interaction_scale},
            {"solubility_scale", cfg.solubility_scale},
            {"worst_fraction_lo", cfg.worst_fraction_lo},
            {"worst_fraction_hi", cfg.worst_fraction_hi}};
}

struct JobOutput {
    RunResult result;
    std::string params;
};

JobOutput execute_run(Algorithm algo, const Scenario& scenario, const ExperimentSpec& spec,
                      std::uint64_t seed) {
    const SearchSpace space = search_space(scenario);
    const Objective objective = make_objective(scenario, spec.penalty_weight);
    if (algo == Algorithm::hgo) {
        hgo::HgoConfig cfg;
        cfg.population = spec.population;
        cfg.iterations = spec.iterations;
        cfg.seed = seed;
        return {hgo::run(cfg, space, objective), params_string(hgo_params_map(cfg))};
    }
    BaselineConfig cfg;
    cfg.algorithm = algo;
    cfg.population = spec.population;
    cfg.iterations = spec.iterations;
    cfg.seed = seed;
    return {run_baseline(cfg, space, objective), params_string(resolved_params(cfg))};
}

std::string run_stem(const std::string& scenario, const std::string& algorithm,
                     std::uint64_t seed) {
    return sanitize(scenario) + "__" + algorithm + "__s" + std::to_string(seed);
}

void write_convergence_csv(const fs::path& path, const RunResult& result) {
    const DiversitySeries series = exploration_exploitation(result.diversity);
    std::ofstream out = open_out(path);
    out << "iteration,best_cost,diversity,exploration_pct,exploitation_pct\n";
    for (std::size_t t = 0; t < result.history.size(); ++t) {
        out << (t + 1) << ',' << format_double(result.history[t]) << ','
            << format_double(result.diversity[t]) << ','
            << format_double(series.exploration_pct[t]) << ','
            << format_double(series.exploitation_pct[t]) << "\n";
    }
}

void write_path_csv(const fs::path& path, const Scenario& scenario, const RunResult& result) {
    const Trajectory best = decode(result.best_vector, scenario);
    std::ofstream out = open_out(path);
    out << "x,y\n";
    out << format_double(best.start.x) << ',' << format_double(best.start.y) << "\n";
    for (const Point2& p : best.control_points) {
        out << format_double(p.x) << ',' << format_double(p.y) << "\n";
    }
    out << format_double(best.destination.x) << ',' << format_double(best.destination.y) << "\n";
}

// ---- aggregation -------------------------------------------------------------

std::vector<SummaryRow> summarize(const std::vector<RunRecord>& records) {
    struct Group {
        std::vector<double> costs;
        std::vector<double> times;
    };
    std::vector<std::pair<std::string, std::string>> order;  // first appearance
    std::map<std::pair<std::string, std::string>, Group> groups;
    for (const RunRecord& r : records) {
        const auto key = std::make_pair(r.scenario, r.algorithm);
        if (groups.find(key) == groups.end()) order.push_back(key);
        Group& g = groups[key];  // creates empty groups for all-failed pairs too
        if (!r.failed) {
            g.costs.push_back(r.best_cost);
            g.times.push_back(r.elapsed_seconds);
        }
    }
    std::vector<SummaryRow> rows;
    for (const auto& key : order) {
        const Group& g = groups[key];
        if (g.costs.empty()) continue;  // nothing finished for this pair
        SummaryRow row;
        row.scenario = key.first;
        row.algorithm = key.second;
        row.median_cost = median_of(g.costs);
        row.mean_cost = mean_of(g.costs);
        row.std_cost = stddev_of(g.costs, row.mean_cost);
        row.median_time = median_of(g.times);
        row.runs = static_cast<int>(g.costs.size());
        rows.push_back(row);
    }
    return rows;
}

void write_runs_csv(const fs::path& path, const std::vector<RunRecord>& records) {
    std::ofstream out = open_out(path);
    out << "scenario,algorithm,seed,status,best_cost,evaluations,elapsed_seconds,params,error\n";
    for (const RunRecord& r : records) {
        out << csv_safe(r.scenario) << ',' << r.algorithm << ',' << r.seed << ','
            << (r.failed ? "failed" : "ok") << ',';
        if (r.failed) {
            out << ",,," << ',' << csv_safe(r.error) << "\n";
        } else {
            out << format_double(r.best_cost) << ',' << r.evaluations << ','
                << format_double(r.elapsed_seconds) << ',' << r.params << ",\n";
        }
    }
}

void write_summary_csv(const fs::path& path, const std::vector<SummaryRow>& rows) {
    std::ofstream out = open_out(path);
    out << "scenario,algorithm,median_cost,mean_cost,std_cost,median_time,runs\n";
    for (const SummaryRow& row : rows) {
        out << csv_safe(row.scenario) << ',' << row.algorithm << ','
            << format_double(row.median_cost) << ',' << format_double(row.mean_cost) << ','
            << format_double(row.std_cost) << ',' << format_double(row.median_time) << ','
            << row.runs << "\n";
    }
}

}  // namespace

std::vector<std::uint64_t> default_seeds() {
    std::vector<std::uint64_t> seeds(30);
    std::iota(seeds.begin(), seeds.end(), 1);
    return seeds;
}

ExperimentResult run_experiment(const ExperimentSpec& spec) {
    if (spec.scenarios.empty()) throw std::invalid_argument("experiment: no scenarios given");
    if (spec.algorithms.empty()) throw std::invalid_argument("experiment: no algorithms given");
    if (spec.seeds.empty()) throw std::invalid_argument("experiment: no seeds given");
    if (spec.workers < 1) throw std::invalid_argument("experiment: workers must be >= 1");
    if (!(spec.penalty_weight >= 0.0)) {
        throw std::invalid_argument("experiment: penalty_weight must be >= 0");
    }
    if (spec.output_dir.empty()) throw std::invalid_argument("experiment: output_dir is empty");

    // Resolve scenarios up front; failures here abort the whole experiment.
    const auto is_case_tag = [](const std::string& ref) {
        return ref == "ambient" || ref == "constrict" || ref == "tangle" || ref == "complex";
    };
    std::vector<Scenario> scenarios;
    for (const std::string& ref : spec.scenarios) {
        Scenario s = is_case_tag(ref) ? builtin_scenario(parse_case(ref), 1) : load_scenario(ref);
        for (const Scenario& existing : scenarios) {
            if (existing.name == s.name) {
                throw std::runtime_error("experiment: duplicate scenario name '" + s.name + "'");
            }
        }
        scenarios.push_back(std::move(s));
    }

    const fs::path out = spec.output_dir;
    fs::create_directories(out / "runs");
    fs::create_directories(out / "plots");
    fs::create_directories(out / "scenarios");
    for (const Scenario& s : scenarios) {
        save_scenario(s, out / "scenarios" / (sanitize(s.name) + ".scn"));
    }

    struct Job {
        std::size_t scenario;
        Algorithm algorithm;
        std::uint64_t seed;
    };
    std::vector<Job> jobs;
    for (std::size_t si = 0; si < scenarios.size(); ++si) {
        for (const Algorithm a : spec.algorithms) {
            for (const std::uint64_t seed : spec.seeds) {
                jobs.push_back({si, a, seed});
            }
        }
    }

    std::vector<RunRecord> records(jobs.size());
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= jobs.size()) break;
            const Job& job = jobs[i];
            const Scenario& scenario = scenarios[job.scenario];
            RunRecord rec;
            rec.scenario = scenario.name;
            rec.algorithm = std::string(algorithm_name(job.algorithm));
            rec.seed = job.seed;
            try {
                JobOutput output = execute_run(job.algorithm, scenario, spec, job.seed);
                rec.best_cost = output.result.best_cost;
                rec.evaluations = output.result.evaluations;
                rec.elapsed_seconds = output.result.elapsed_seconds;
                rec.params = std::move(output.params);
                const std::string stem = run_stem(rec.scenario, rec.algorithm, rec.seed);
                write_convergence_csv(out / "runs" / (stem + ".csv"), output.result);
                write_path_csv(out / "runs" / (stem + "_path.csv"), scenario, output.result);
            } catch (const std::exception& e) {
                rec.failed = true;
                rec.error = e.what();
            }
            records[i] = std::move(rec);
        }
    };
    const std::size_t thread_count =
        std::min<std::size_t>(static_cast<std::size_t>(spec.workers), jobs.size());
    if (thread_count <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(thread_count);
        for (std::size_t i = 0; i < thread_count; ++i) pool.emplace_back(worker);
        for (std::thread& th : pool) th.join();
    }

    ExperimentResult result;
    result.records = std::move(records);
    result.summary = summarize(result.records);

    write_runs_csv(out / "runs.csv", result.records);
    write_summary_csv(out / "summary.csv", result.summary);
    open_out(out / "report.txt") << report_table(result.summary);
    bool any_failed = false;
    for (const RunRecord& r : result.records) any_failed |= r.failed;
    if (any_failed) {
        std::ofstream log = open_out(out / "failures.log");
        for (const RunRecord& r : result.records) {
            if (r.failed) {
                log << r.scenario << ',' << r.algorithm << ',' << r.seed << ": " << r.error << "\n";
            }
        }
    }
    emit_plot_data(out);
    return result;
}

std::string report_table(const std::vector<SummaryRow>& rows) {
    std::ostringstream out;
    std::vector<std::string> scenario_order;
    for (const SummaryRow& row : rows) {
        if (std::find(scenario_order.begin(), scenario_order.end(), row.scenario) ==
            scenario_order.end()) {
            scenario_order.push_back(row.scenario);
        }
    }
    char line[160];
    for (const std::string& scenario : scenario_order) {
        std::vector<SummaryRow> group;
        for (const SummaryRow& row : rows) {
            if (row.scenario == scenario) group.push_back(row);
        }
        std::sort(group.begin(), group.end(), [](const SummaryRow& a, const SummaryRow& b) {
            if (a.median_cost != b.median_cost) return a.median_cost < b.median_cost;
            if (a.mean_cost != b.mean_cost) return a.mean_cost < b.mean_cost;
            return a.algorithm < b.algorithm;
        });
        out << "=== " << scenario << " ===\n";
        std::snprintf(line, sizeof(line), "  %-12s %12s %12s %12s %12s %6s\n", "algorithm",
                      "median", "mean", "std", "median_s", "runs");
        out << line;
        for (std::size_t i = 0; i < group.size(); ++i) {
            const SummaryRow& row = group[i];
            std::snprintf(line, sizeof(line), "%c %-12s %12.4f %12.4f %12.4f %12.4f %6d\n",
                          i == 0 ? '*' : ' ', row.algorithm.c_str(), row.median_cost,
                          row.mean_cost, row.std_cost, row.median_time, row.runs);
            out << line;
        }
        out << "\n";
    }
    return out.str();
}

std::vector<RunRecord> load_runs(const std::filesystem::path& output_dir) {
    const fs::path path = output_dir / "runs.csv";
    const std::vector<std::string> lines = read_lines(path);
    if (lines.empty()) throw std::runtime_error("empty runs.csv in '" + output_dir.string() + "'");
    std::vector<RunRecord> records;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto fields = split(lines[i], ',');
        if (fields.size() != 9) {
            throw std::runtime_error("malformed row " + std::to_string(i + 1) + " in '" +
                                     path.string() + "'");
        }
        RunRecord rec;
        rec.scenario = std::string(fields[0]);
        rec.algorithm = std::string(fields[1]);
        double seed = 0.0;
        seed = need_field_double(path, fields[2]);
        rec.seed = static_cast<std::uint64_t>(seed);
        rec.failed = fields[3] == "failed";
        if (!rec.failed) {
            rec.best_cost = need_field_double(path, fields[4]);
            rec.evaluations = static_cast<std::int64_t>(need_field_double(path, fields[5]));
            rec.elapsed_seconds = need_field_double(path, fields[6]);
            rec.params = std::string(fields[7]);
        } else {
            rec.error = std::string(fields[8]);
        }
        records.push_back(std::move(rec));
    }
    return records;
}

std::vector<SummaryRow> aggregate_runs(const std::filesystem::path& output_dir) {
    return summarize(load_runs(output_dir));
}

std::vector<SummaryRow> load_summary(const std::filesystem::path& output_dir) {
    const fs::path path = output_dir / "summary.csv";
    const std::vector<std::string> lines = read_lines(path);
    std::vector<SummaryRow> rows;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto fields = split(lines[i], ',');
        if (fields.size() != 7) {
            throw std::runtime_error("malformed row " + std::to_string(i + 1) + " in '" +
                                     path.string() + "'");
        }
        SummaryRow row;
        row.scenario = std::string(fields[0]);
        row.algorithm = std::string(fields[1]);
        row.median_cost = need_field_double(path, fields[2]);
        row.mean_cost = need_field_double(path, fields[3]);
        row.std_cost = need_field_double(path, fields[4]);
        row.median_time = need_field_double(path, fields[5]);
        row.runs = static_cast<int>(need_field_double(path, fields[6]));
        rows.push_back(std::move(row));
    }
    return rows;
}

void emit_plot_data(const std::filesystem::path& output_dir) {
    const std::vector<RunRecord> records = load_runs(output_dir);

    struct Pair {
        std::string scenario;
        std::string algorithm;
        std::vector<std::uint64_t> seeds;
        double best_cost = std::numeric_limits<double>::infinity();
        std::uint64_t best_seed = 0;
    };
    std::vector<Pair> pairs;
    std::vector<std::string> scenario_order;
    for (const RunRecord& rec : records) {
        if (rec.failed) continue;
        Pair* pair = nullptr;
        for (Pair& p : pairs) {
            if (p.scenario == rec.scenario && p.algorithm == rec.algorithm) {
                pair = &p;
                break;
            }
        }
        if (pair == nullptr) {
            Pair fresh;
            fresh.scenario = rec.scenario;
            fresh.algorithm = rec.algorithm;
            pairs.push_back(std::move(fresh));
            pair = &pairs.back();
        }
        pair->seeds.push_back(rec.seed);
        if (rec.best_cost < pair->best_cost ||
            (rec.best_cost == pair->best_cost && rec.seed < pair->best_seed)) {
            pair->best_cost = rec.best_cost;
            pair->best_seed = rec.seed;
        }
        if (std::find(scenario_order.begin(), scenario_order.end(), rec.scenario) ==
            scenario_order.end()) {
            scenario_order.push_back(rec.scenario);
        }
    }

    // median convergence curve per (scenario, algorithm)
    for (const Pair& pair : pairs) {
        std::vector<std::vector<double>> curves;
        for (const std::uint64_t seed : pair.seeds) {
            const fs::path path =
                output_dir / "runs" / (run_stem(pair.scenario, pair.algorithm, seed) + ".csv");
            if (!fs::exists(path)) {
                throw std::runtime_error("plot data: missing convergence file '" + path.string() +
                                         "'");
            }
            const std::vector<std::string> lines = read_lines(path);
            std::vector<double> curve;
            for (std::size_t i = 1; i < lines.size(); ++i) {
                const auto fields = split(lines[i], ',');
                if (fields.size() < 2) {
                    throw std::runtime_error("plot data: malformed '" + path.string() + "'");
                }
                curve.push_back(need_field_double(path, fields[1]));
            }
            if (!curves.empty() && curve.size() != curves.front().size()) {
                throw std::runtime_error("plot data: convergence files disagree on length for '" +
                                         pair.scenario + "/" + pair.algorithm + "'");
            }
            curves.push_back(std::move(curve));
        }
        std::ofstream out = open_out(output_dir / "plots" /
                                     (sanitize(pair.scenario) + "__" + pair.algorithm + "_curve.csv"));
        out << "iteration,median_best_cost\n";
        if (curves.empty()) continue;
        std::vector<double> column(curves.size());
        for (std::size_t t = 0; t < curves.front().size(); ++t) {
            for (std::size_t s = 0; s < curves.size(); ++s) column[s] = curves[s][t];
            out << (t + 1) << ',' << format_double(median_of(column)) << "\n";
        }
    }

    // per-scenario overlay: obstacles plus every algorithm's best path
    for (const std::string& scenario : scenario_order) {
        const fs::path scn_path = output_dir / "scenarios" / (sanitize(scenario) + ".scn");
        if (!fs::exists(scn_path)) {
            throw std::runtime_error("plot data: missing scenario file '" + scn_path.string() +
                                     "'");
        }
        const Scenario scn = load_scenario(scn_path);
        std::ofstream out =
            open_out(output_dir / "plots" / (sanitize(scenario) + "_overlay.txt"));
        out << "# overlay: " << scenario << "\n";
        for (const CircleObstacle& o : scn.obstacles) {
            out << "obstacle " << format_double(o.center.x) << ' ' << format_double(o.center.y)
                << ' ' << format_double(o.radius) << "\n";
        }
        for (const Pair& pair : pairs) {
            if (pair.scenario != scenario) continue;
            const fs::path path =
                output_dir / "runs" /
                (run_stem(pair.scenario, pair.algorithm, pair.best_seed) + "_path.csv");
            if (!fs::exists(path)) {
                throw std::runtime_error("plot data: missing path file '" + path.string() + "'");
            }
            const std::vector<std::string> lines = read_lines(path);
            for (std::size_t i = 1; i < lines.size(); ++i) {
                const auto fields = split(lines[i], ',');
                if (fields.size() != 2) {
                    throw std::runtime_error("plot data: malformed '" + path.string() + "'");
                }
                out << "path " << pair.algorithm << ' ' << fields[0] << ' ' << fields[1] << "\n";
            }
        }
    }
}

}  // namespace uavtraj
