#include "dualflow/scenario_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace dualflow {

namespace {

using nlohmann::json;

TourKind parse_tour_kind(const std::string& s) {
  if (s == "mst") return TourKind::mst;
  if (s == "universal") return TourKind::universal;
  throw Error(Errc::parse_error, "config.tour must be \"mst\" or \"universal\", got \"" + s + "\"");
}

GeneratorSpec parse_generator(const json& g) {
  const std::string kind = g.at("kind").get<std::string>();
  if (kind == "grid")
    return GeneratorSpec::make_grid(g.at("width").get<int>(), g.at("height").get<int>());
  if (kind == "unit-disk")
    return GeneratorSpec::make_unit_disk(g.at("nodes").get<int>(), g.at("radius").get<double>(),
                                         g.value("area_side", 1.0),
                                         g.at("seed").get<std::uint64_t>());
  throw Error(Errc::parse_error, "graph.generator.kind must be \"grid\" or \"unit-disk\"");
}

}  // namespace

Scenario parse_scenario_text(const std::string& text, const std::string& name) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::parse_error, name + ": " + e.what());
  }

  Scenario sc;
  try {
    sc.id = doc.value("id", name.empty() ? std::string("scenario") : name);

    const json& graph = doc.at("graph");
    if (graph.contains("generator")) {
      sc.graph = generate(parse_generator(graph.at("generator")));
    } else {
      std::vector<Edge> edges;
      for (const json& e : graph.at("edges")) {
        if (!e.is_array() || e.size() != 3)
          throw Error(Errc::parse_error, "graph.edges entries must be [u, v, w]");
        edges.push_back({e[0].get<NodeId>(), e[1].get<NodeId>(), e[2].get<double>()});
      }
      sc.graph = WeightedGraph::build(graph.at("n").get<int>(), std::move(edges));
    }

    const json& cost = doc.at("cost");
    sc.cost.alpha = cost.at("alpha").get<double>();
    sc.cost.beta = cost.at("beta").get<double>();

    for (const json& o : doc.at("objects"))
      sc.objects.push_back({o.at("id").get<int>(), o.at("home").get<NodeId>()});
    for (const json& t : doc.at("transactions")) {
      TransactionSpec spec;
      spec.id = t.at("id").get<int>();
      spec.home = t.at("home").get<NodeId>();
      for (const json& oid : t.at("objs")) spec.objs.push_back(oid.get<int>());
      sc.transactions.push_back(std::move(spec));
    }

    if (doc.contains("config")) {
      const json& cfg = doc.at("config");
      sc.config.sigma = cfg.value("sigma", 2.0);
      sc.config.seed = cfg.value("seed", std::uint64_t{0});
      sc.config.control_weight = cfg.value("control_weight", 1.0);
      if (cfg.contains("tour")) sc.config.tour = parse_tour_kind(cfg.at("tour").get<std::string>());
    }
  } catch (const json::exception& e) {
    throw Error(Errc::parse_error, name + ": " + e.what());
  }

  sc.validate();
  return sc;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse_error, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario_text(buf.str(), path);
}

std::string serialize_scenario(const Scenario& sc) {
  json doc;
  doc["id"] = sc.id;
  json edges = json::array();
  for (const Edge& e : sc.graph.edges()) edges.push_back({e.u, e.v, e.w});
  doc["graph"] = {{"n", sc.graph.node_count()}, {"edges", std::move(edges)}};
  doc["cost"] = {{"alpha", sc.cost.alpha}, {"beta", sc.cost.beta}};
  json objects = json::array();
  for (const ObjectSpec& o : sc.objects) objects.push_back({{"id", o.id}, {"home", o.home}});
  doc["objects"] = std::move(objects);
  json txns = json::array();
  for (const TransactionSpec& t : sc.transactions)
    txns.push_back({{"id", t.id}, {"home", t.home}, {"objs", t.objs}});
  doc["transactions"] = std::move(txns);
  doc["config"] = {{"sigma", sc.config.sigma},
                   {"tour", tour_kind_name(sc.config.tour)},
                   {"seed", sc.config.seed},
                   {"control_weight", sc.config.control_weight}};
  return doc.dump(2) + "\n";
}

void save_scenario(const Scenario& sc, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::parse_error, "cannot write " + path);
  out << serialize_scenario(sc);
}

}  // namespace dualflow
