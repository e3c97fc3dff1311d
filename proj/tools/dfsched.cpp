// dfsched - scenario generation, scheduling runs, oracle comparison, and
// hierarchy inspection for dual-flow transaction scheduling.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "dualflow/runner.hpp"
#include "dualflow/scenario_io.hpp"

namespace fs = std::filesystem;
using namespace dualflow;

namespace {

std::vector<Scenario> load_scenarios(const std::vector<std::string>& paths) {
  std::vector<Scenario> out;
  out.reserve(paths.size());
  for (const std::string& p : paths) out.push_back(load_scenario(p));
  return out;
}

std::vector<Algorithm> pick_algorithms(const std::vector<std::string>& names,
                                       const std::vector<Scenario>& scenarios) {
  if (!names.empty()) {
    std::vector<Algorithm> out;
    for (const std::string& n : names) out.push_back(parse_algorithm(n));
    return out;
  }
  bool any_multi = false;
  for (const Scenario& sc : scenarios) any_multi |= sc.objects.size() > 1;
  if (any_multi)
    return {Algorithm::direct, Algorithm::multi_global, Algorithm::multi_dist};
  return {Algorithm::direct, Algorithm::single_global, Algorithm::single_dist,
          Algorithm::multi_global, Algorithm::multi_dist};
}

std::vector<TourKind> pick_tours(const std::vector<std::string>& names) {
  if (names.empty()) return {TourKind::mst, TourKind::universal};
  std::vector<TourKind> out;
  for (const std::string& n : names) out.push_back(parse_tour(n));
  return out;
}

void write_text(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw Error(Errc::parse_error, "cannot write " + out_path);
  out << text;
}

int cmd_gen(const std::string& mode, std::uint64_t seed, int count, const std::string& out_path) {
  std::vector<Scenario> scenarios =
      mode == "multi" ? multi_corpus(seed, count) : single_corpus(seed, count);
  if (count == 1 && !out_path.empty() && !fs::is_directory(out_path)) {
    save_scenario(scenarios[0], out_path);
    return 0;
  }
  fs::path dir = out_path.empty() ? fs::path(".") : fs::path(out_path);
  fs::create_directories(dir);
  for (const Scenario& sc : scenarios) save_scenario(sc, (dir / (sc.id + ".json")).string());
  std::cerr << "wrote " << scenarios.size() << " scenario(s) under " << dir << "\n";
  return 0;
}

int cmd_run(const std::vector<std::string>& paths, const std::vector<std::string>& algo_names,
            const std::vector<std::string>& tour_names, const std::string& out_path, bool strict,
            bool timing, bool trace) {
  std::vector<Scenario> scenarios = load_scenarios(paths);
  RunOptions opt;
  opt.strict = strict;
  opt.timing = timing;
  opt.trace_messages = trace;
  ExperimentResult result =
      run_experiment(scenarios, pick_algorithms(algo_names, scenarios), pick_tours(tour_names), opt);
  write_text(out_path, to_csv(result.records, timing));
  if (trace)
    for (const RunRecord& rec : result.records)
      for (const std::string& line : rec.trace)
        std::cerr << rec.scenario_id << " " << algorithm_name(rec.algorithm) << " "
                  << tour_kind_name(rec.tour) << " " << line << "\n";
  return result.invariant_failure ? 1 : 0;
}

int cmd_oracle(const std::string& path) {
  Scenario sc = load_scenario(path);
  DistanceOracle d(sc.graph);
  OracleResult r =
      sc.objects.size() == 1 ? optimal_cost_single(sc, d) : optimal_cost_multi(sc, d);
  std::cout << "scenario=" << sc.id << " c_star=" << r.c_star << "\n";
  for (std::size_t i = 0; i < sc.transactions.size(); ++i)
    std::cout << "txn " << sc.transactions[i].id << " meets at " << r.meeting_node[i] << "\n";
  for (std::size_t j = 0; j < r.object_walk.size(); ++j) {
    std::cout << "object " << sc.objects[j].id << " walk:";
    for (NodeId v : r.object_walk[j]) std::cout << " " << v;
    std::cout << "\n";
  }
  Schedule witness = witness_schedule(sc, r);
  if (!validate_schedule(sc, witness).empty()) {
    std::cerr << "oracle witness failed validation\n";
    return 1;
  }
  return 0;
}

int cmd_compare(const std::vector<std::string>& paths, const std::vector<std::string>& algo_names,
                const std::vector<std::string>& tour_names, const std::string& out_path) {
  std::vector<Scenario> scenarios = load_scenarios(paths);
  ExperimentResult result =
      run_experiment(scenarios, pick_algorithms(algo_names, scenarios), pick_tours(tour_names), {});
  write_text(out_path, to_csv(result.records));
  for (const RunRecord& rec : result.records)
    if (rec.status == "below-oracle")
      std::cerr << rec.scenario_id << " " << algorithm_name(rec.algorithm)
                << ": cost undercuts the oracle\n";
  return result.invariant_failure ? 1 : 0;
}

int cmd_verify_partition(const std::string& path) {
  Scenario sc = load_scenario(path);
  DistanceOracle d(sc.graph);
  PartitionHierarchy h = PartitionHierarchy::build(d, sc.config.sigma);
  bool ok = true;
  for (int l = h.bottom_level(); l <= h.top_level(); ++l) {
    const PartitionLevel& lv = h.level(l);
    PartitionReport report = verify_partition(d, lv);
    bool level_ok = report.max_diameter <= h.params().sigma * lv.radius + 1e-9;
    ok &= level_ok;
    std::cout << "level=" << l << " radius=" << lv.radius << " clusters=" << lv.clusters.size()
              << " max_diameter=" << report.max_diameter
              << " measured_I=" << report.measured_intersections
              << " bound=" << h.params().sigma * lv.radius << (level_ok ? " ok" : " VIOLATION")
              << "\n";
  }
  std::cout << "h=" << h.params().h << " delta=" << h.params().delta
            << " zeta=" << h.params().zeta << " I=" << h.params().intersection_bound << "\n";
  return ok ? 0 : 1;
}

int cmd_dump_hierarchy(const std::string& path) {
  Scenario sc = load_scenario(path);
  DistanceOracle d(sc.graph);
  PartitionHierarchy h = PartitionHierarchy::build(d, sc.config.sigma);
  for (int l = h.bottom_level(); l <= h.top_level(); ++l)
    for (const Cluster& c : h.level(l).clusters) {
      std::cout << "level=" << l << " radius=" << h.level(l).radius << " leader=" << c.leader
                << " members=";
      for (std::size_t i = 0; i < c.members.size(); ++i)
        std::cout << (i ? "," : "") << c.members[i];
      std::cout << "\n";
    }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dual-flow transaction scheduling on low-doubling-dimension graphs"};
  app.require_subcommand(1);

  std::string mode = "single", out_path;
  std::uint64_t seed = 1;
  int count = 1;
  std::vector<std::string> scenario_paths, algo_names, tour_names;
  bool strict = false, timing = false, trace = false;

  CLI::App* gen = app.add_subcommand("gen", "generate scenario files");
  gen->add_option("--mode", mode, "single or multi")->check(CLI::IsMember({"single", "multi"}));
  gen->add_option("--seed", seed, "corpus seed");
  gen->add_option("--count", count, "number of scenarios")->check(CLI::PositiveNumber);
  gen->add_option("--out", out_path, "output file (count 1) or directory");

  CLI::App* run = app.add_subcommand("run", "run schedulers and emit a CSV of records");
  run->add_option("--scenario", scenario_paths, "scenario file(s)")->required()->expected(-1);
  run->add_option("--algorithm", algo_names,
                  "direct, single-global, multi-global, single-dist, multi-dist");
  run->add_option("--tour", tour_names, "mst, universal");
  run->add_flag("--strict", strict, "treat per-record errors as failures");
  run->add_flag("--timing", timing, "append runtime_ms (CSV no longer byte-stable)");
  run->add_flag("--trace-messages", trace, "dump every protocol message to stderr");
  run->add_option("--out", out_path, "CSV path, '-' for stdout");

  CLI::App* oracle = app.add_subcommand("oracle", "print the optimal schedule for a scenario");
  oracle->add_option("--scenario", scenario_paths, "scenario file")->required();

  CLI::App* compare = app.add_subcommand("compare", "run schedulers against the oracle");
  compare->add_option("--scenario", scenario_paths, "scenario file(s)")->required()->expected(-1);
  compare->add_option("--algorithm", algo_names, "algorithms to compare");
  compare->add_option("--tour", tour_names, "mst, universal");
  compare->add_option("--out", out_path, "CSV path, '-' for stdout");

  CLI::App* verify = app.add_subcommand("verify-partition", "measure per-level partition quality");
  verify->add_option("--scenario", scenario_paths, "scenario file")->required();

  CLI::App* dump = app.add_subcommand("dump-hierarchy", "one line per cluster");
  dump->add_option("--scenario", scenario_paths, "scenario file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) return cmd_gen(mode, seed, count, out_path);
    if (run->parsed())
      return cmd_run(scenario_paths, algo_names, tour_names, out_path, strict, timing, trace);
    if (oracle->parsed()) return cmd_oracle(scenario_paths.front());
    if (compare->parsed()) return cmd_compare(scenario_paths, algo_names, tour_names, out_path);
    if (verify->parsed()) return cmd_verify_partition(scenario_paths.front());
    if (dump->parsed()) return cmd_dump_hierarchy(scenario_paths.front());
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
