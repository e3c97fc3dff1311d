#include "dualflow/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

namespace dualflow {

const char* algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::direct: return "direct";
    case Algorithm::single_global: return "single-global";
    case Algorithm::multi_global: return "multi-global";
    case Algorithm::single_dist: return "single-dist";
    case Algorithm::multi_dist: return "multi-dist";
  }
  return "?";
}

Algorithm parse_algorithm(const std::string& name) {
  if (name == "direct") return Algorithm::direct;
  if (name == "single-global") return Algorithm::single_global;
  if (name == "multi-global") return Algorithm::multi_global;
  if (name == "single-dist") return Algorithm::single_dist;
  if (name == "multi-dist") return Algorithm::multi_dist;
  throw Error(Errc::validation_error, "unknown algorithm \"" + name + "\"");
}

TourKind parse_tour(const std::string& name) {
  if (name == "mst") return TourKind::mst;
  if (name == "universal") return TourKind::universal;
  throw Error(Errc::validation_error, "unknown tour \"" + name + "\"");
}

double analytic_single_bound(double tour_ratio, int h, double zeta, int intersection, double sigma,
                             double rho, double c_star, double diameter) {
  const double log_d = diameter > 1.0 ? std::log2(diameter) : 0.0;
  return 74.0 * tour_ratio * (h + 1) * zeta * intersection * sigma * rho * c_star +
         36.0 * (h + 2) * intersection * c_star + 4.0 * c_star * log_d;
}

double analytic_direct_bound(long txns, double alpha, double diameter, double c_star) {
  const double log_d = diameter > 1.0 ? std::log2(diameter) : 0.0;
  return 4.0 * (static_cast<double>(txns) / alpha + log_d) * c_star;
}

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

std::string fmt_opt(const std::optional<double>& v) { return v ? fmt(*v) : std::string(); }

void fill_message_columns(RunRecord& rec, const MessageLog& log) {
  rec.msg_total = log.total_cost();
  rec.msg_p1 = log.phase_cost(1);
  rec.msg_p2 = log.phase_cost(2);
  rec.msg_p3 = log.phase_cost(3);
  rec.msg_count = static_cast<long>(log.messages.size());
}

void fill_trace(RunRecord& rec, const MessageLog& log) {
  for (const SimMessage& m : log.messages) {
    std::ostringstream line;
    line << "round=" << m.round << " phase=" << m.phase << " src=" << m.src << " dst=" << m.dst
         << " kind=" << message_kind_name(m.kind) << " object=" << m.object_id
         << " value=" << m.value << " cost=" << fmt(m.cost);
    rec.trace.push_back(line.str());
  }
}

}  // namespace

ExperimentResult run_experiment(const std::vector<Scenario>& scenarios,
                                const std::vector<Algorithm>& algorithms,
                                const std::vector<TourKind>& tours, const RunOptions& opt) {
  ExperimentResult result;

  for (const Scenario& sc : scenarios) {
    sc.validate();
    DistanceOracle d(sc.graph);
    PartitionHierarchy h = PartitionHierarchy::build(d, sc.config.sigma);

    const bool single = sc.objects.size() == 1;
    std::optional<OracleResult> oracle;
    if (single && sc.graph.node_count() <= 10)
      oracle = optimal_cost_single(sc, d);
    else if (!single && sc.graph.node_count() <= 8 && sc.transactions.size() <= 5)
      oracle = optimal_cost_multi(sc, d);

    for (Algorithm algo : algorithms) {
      for (TourKind tour : tours) {
        RunRecord rec;
        rec.scenario_id = sc.id;
        rec.algorithm = algo;
        rec.tour = tour;
        rec.n = sc.graph.node_count();
        rec.edge_count = static_cast<int>(sc.graph.edges().size());
        rec.diameter = d.diameter();
        rec.sigma = h.params().sigma;
        rec.rho = h.params().rho;
        rec.h = h.params().h;
        rec.delta = h.params().delta;
        rec.zeta = h.params().zeta;
        rec.intersection = h.params().intersection_bound;
        rec.alpha = sc.cost.alpha;
        rec.beta = sc.cost.beta;
        rec.gamma = sc.cost.gamma();
        rec.txns = static_cast<int>(sc.transactions.size());
        rec.objects = static_cast<int>(sc.objects.size());
        rec.k = sc.max_objects_per_txn();

        auto start = std::chrono::steady_clock::now();
        try {
          Schedule schedule;
          switch (algo) {
            case Algorithm::direct: {
              schedule = direct_schedule(sc);
              break;
            }
            case Algorithm::single_global: {
              SingleScheduleResult r = schedule_single(sc, d, h, tour);
              rec.tour_len = r.tour_len;
              rec.tour_star = r.tour_star;
              schedule = std::move(r.schedule);
              break;
            }
            case Algorithm::multi_global: {
              MultiScheduleResult r = schedule_multi(sc, d, h, tour);
              rec.tour_len = tour_length(d, r.tour);
              schedule = std::move(r.schedule);
              break;
            }
            case Algorithm::single_dist: {
              DistributedSingleResult r = run_distributed_single(sc, d, h, tour);
              rec.tour_len = tour_length(d, r.tour);
              std::set<NodeId> stops;
              for (const SuperLeaderRef& ref : r.phase2.surviving) stops.insert(ref.node);
              if (stops.size() + 1 <= 12)
                rec.tour_star =
                    exact_tour(d, {stops.begin(), stops.end()}, sc.object_home()).length;
              fill_message_columns(rec, r.log);
              if (opt.trace_messages) fill_trace(rec, r.log);
              schedule = std::move(r.schedule);
              break;
            }
            case Algorithm::multi_dist: {
              DistributedMultiResult r = run_distributed_multi(sc, d, h, tour);
              rec.tour_len = tour_length(d, r.tour);
              fill_message_columns(rec, r.log);
              if (opt.trace_messages) fill_trace(rec, r.log);
              schedule = std::move(r.schedule);
              break;
            }
          }

          rec.valid = validate_schedule(sc, schedule).empty();
          if (!rec.valid) {
            rec.status = "invalid-schedule";
            result.invariant_failure = true;
          } else {
            CostBreakdown cost = schedule_cost(sc, d, schedule);
            rec.total_cost = cost.total();
            rec.object_cost = cost.object_cost;
            rec.txn_cost = cost.txn_cost;

            if (oracle) {
              rec.c_star = oracle->c_star;
              if (oracle->c_star > 0.0) rec.ratio = rec.total_cost / oracle->c_star;
              if (rec.total_cost < oracle->c_star - 1e-9) {
                rec.status = "below-oracle";
                result.invariant_failure = true;
              }
              if (rec.tour_len) {
                double a = (rec.tour_star && *rec.tour_star > 0.0) ? *rec.tour_len / *rec.tour_star
                                                                   : 1.0;
                rec.tour_ratio = a;
                if (algo == Algorithm::single_global || algo == Algorithm::single_dist)
                  rec.cost_bound =
                      analytic_single_bound(a, rec.h, rec.zeta, rec.intersection, rec.sigma,
                                            rec.rho, oracle->c_star, rec.diameter);
              }
              if (algo == Algorithm::direct)
                rec.direct_bound =
                    analytic_direct_bound(rec.txns, rec.alpha, rec.diameter, oracle->c_star);
            }
          }
        } catch (const Error& e) {
          rec.status = e.what();
          std::replace(rec.status.begin(), rec.status.end(), ',', ';');
          std::replace(rec.status.begin(), rec.status.end(), '\n', ' ');
          result.record_error = true;
        }
        rec.runtime_ms = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - start)
                             .count();
        result.records.push_back(std::move(rec));
      }
    }
  }
  if (opt.strict && result.record_error) result.invariant_failure = true;
  return result;
}

std::string csv_header(bool timing) {
  std::string cols =
      "scenario,algorithm,tour,n,edges,diameter,sigma,rho,h,delta,zeta,intersection,alpha,beta,"
      "gamma,txns,objects,k,valid,total_cost,object_cost,txn_cost,c_star,ratio,tour_len,tour_star,"
      "tour_ratio,cost_bound,direct_bound,msg_total,msg_p1,msg_p2,msg_p3,msg_count,status";
  if (timing) cols += ",runtime_ms";
  return cols + "\n";
}

std::string to_csv_row(const RunRecord& r, bool timing) {
  std::ostringstream out;
  out << r.scenario_id << ',' << algorithm_name(r.algorithm) << ',' << tour_kind_name(r.tour)
      << ',' << r.n << ',' << r.edge_count << ',' << fmt(r.diameter) << ',' << fmt(r.sigma) << ','
      << fmt(r.rho) << ',' << r.h << ',' << r.delta << ',' << fmt(r.zeta) << ',' << r.intersection
      << ',' << fmt(r.alpha) << ',' << fmt(r.beta) << ',' << r.gamma << ',' << r.txns << ','
      << r.objects << ',' << r.k << ',' << (r.valid ? 1 : 0) << ',' << fmt(r.total_cost) << ','
      << fmt(r.object_cost) << ',' << fmt(r.txn_cost) << ',' << fmt_opt(r.c_star) << ','
      << fmt_opt(r.ratio) << ',' << fmt_opt(r.tour_len) << ',' << fmt_opt(r.tour_star) << ','
      << fmt_opt(r.tour_ratio) << ',' << fmt_opt(r.cost_bound) << ',' << fmt_opt(r.direct_bound)
      << ',' << fmt_opt(r.msg_total) << ',' << fmt_opt(r.msg_p1) << ',' << fmt_opt(r.msg_p2) << ','
      << fmt_opt(r.msg_p3) << ',' << (r.msg_count ? std::to_string(*r.msg_count) : std::string())
      << ',' << r.status;
  if (timing) out << ',' << fmt(r.runtime_ms);
  out << '\n';
  return out.str();
}

std::string to_csv(const std::vector<RunRecord>& records, bool timing) {
  std::string out = csv_header(timing);
  for (const RunRecord& r : records) out += to_csv_row(r, timing);
  return out;
}

}  // namespace dualflow
