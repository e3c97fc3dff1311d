#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dualflow/corpus.hpp"
#include "dualflow/distsim.hpp"
#include "dualflow/multi_scheduler.hpp"
#include "dualflow/oracle.hpp"
#include "dualflow/scenario.hpp"

namespace dualflow {

enum class Algorithm { direct, single_global, multi_global, single_dist, multi_dist };

const char* algorithm_name(Algorithm a);
Algorithm parse_algorithm(const std::string& name);
TourKind parse_tour(const std::string& name);

/// Closed-form cost ceiling for the single-object scheduler in terms of the
/// measured hierarchy constants: tour_ratio is the scheduler's tour length
/// over the optimal tour on the same stops.
double analytic_single_bound(double tour_ratio, int h, double zeta, int intersection, double sigma,
                             double rho, double c_star, double diameter);

/// Cost ceiling for the direct baseline that sends every transaction to the
/// object home.
double analytic_direct_bound(long txns, double alpha, double diameter, double c_star);

struct RunRecord {
  std::string scenario_id;
  Algorithm algorithm = Algorithm::direct;
  TourKind tour = TourKind::mst;
  int n = 0;
  int edge_count = 0;
  double diameter = 0.0;
  double sigma = 2.0;
  double rho = 8.0;
  int h = 0;
  int delta = 0;
  double zeta = 1.0;
  int intersection = 1;
  double alpha = 0.0;
  double beta = 0.0;
  long gamma = 0;
  int txns = 0;
  int objects = 0;
  int k = 0;
  bool valid = false;
  double total_cost = 0.0;
  double object_cost = 0.0;
  double txn_cost = 0.0;
  std::optional<double> c_star;
  std::optional<double> ratio;        // total_cost / c_star when c_star > 0
  std::optional<double> tour_len;
  std::optional<double> tour_star;
  std::optional<double> tour_ratio;   // 1 when the tour is trivial
  std::optional<double> cost_bound;   // analytic_single_bound with measured constants
  std::optional<double> direct_bound;
  std::optional<double> msg_total;
  std::optional<double> msg_p1;
  std::optional<double> msg_p2;
  std::optional<double> msg_p3;
  std::optional<long> msg_count;
  std::string status = "ok";
  double runtime_ms = 0.0;
  std::vector<std::string> trace;  // filled when tracing is on
};

struct RunOptions {
  bool strict = false;           // any per-record error fails the experiment
  bool timing = false;           // include runtime_ms in the CSV (breaks byte-stability)
  bool trace_messages = false;   // collect one line per protocol message
};

struct ExperimentResult {
  std::vector<RunRecord> records;
  bool invariant_failure = false;  // a schedule failed validation or undercut the oracle
  bool record_error = false;       // some record hit a module error
};

/// One record per (scenario, algorithm, tour), in the given order. The oracle
/// runs wherever the instance is small enough, and every schedule re-validates
/// before costing.
ExperimentResult run_experiment(const std::vector<Scenario>& scenarios,
                                const std::vector<Algorithm>& algorithms,
                                const std::vector<TourKind>& tours, const RunOptions& opt = {});

std::string csv_header(bool timing = false);
std::string to_csv_row(const RunRecord& r, bool timing = false);
std::string to_csv(const std::vector<RunRecord>& records, bool timing = false);

}  // namespace dualflow
