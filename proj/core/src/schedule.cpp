#include "dualflow/schedule.hpp"

#include <map>

namespace dualflow {

std::vector<Violation> validate_schedule(const Scenario& sc, const Schedule& s) {
  std::vector<Violation> out;
  std::map<int, NodeId> obj_pos, txn_pos;
  std::map<int, bool> executed;
  for (const ObjectSpec& o : sc.objects) obj_pos[o.id] = o.home;
  for (const TransactionSpec& t : sc.transactions) {
    txn_pos[t.id] = t.home;
    executed[t.id] = false;
  }

  for (const Event& e : s.events) {
    switch (e.kind) {
      case Event::Kind::move_object: {
        auto it = obj_pos.find(e.entity);
        if (it == obj_pos.end()) {
          out.push_back({ViolationKind::broken_continuity,
                         "move of unknown object " + std::to_string(e.entity)});
          break;
        }
        if (it->second != e.from)
          out.push_back({ViolationKind::broken_continuity,
                         "object " + std::to_string(e.entity) + " moved from " +
                             std::to_string(e.from) + " but sits at " +
                             std::to_string(it->second)});
        it->second = e.to;
        break;
      }
      case Event::Kind::move_transaction: {
        auto it = txn_pos.find(e.entity);
        if (it == txn_pos.end()) {
          out.push_back({ViolationKind::broken_continuity,
                         "move of unknown transaction " + std::to_string(e.entity)});
          break;
        }
        if (it->second != e.from)
          out.push_back({ViolationKind::broken_continuity,
                         "transaction " + std::to_string(e.entity) + " moved from " +
                             std::to_string(e.from) + " but sits at " +
                             std::to_string(it->second)});
        it->second = e.to;
        break;
      }
      case Event::Kind::execute: {
        auto it = txn_pos.find(e.entity);
        if (it == txn_pos.end()) {
          out.push_back({ViolationKind::missing_execution,
                         "execute of unknown transaction " + std::to_string(e.entity)});
          break;
        }
        if (executed[e.entity])
          out.push_back({ViolationKind::double_execution,
                         "transaction " + std::to_string(e.entity) + " executed twice"});
        executed[e.entity] = true;
        if (it->second != e.to)
          out.push_back({ViolationKind::not_colocated,
                         "transaction " + std::to_string(e.entity) + " executes at " +
                             std::to_string(e.to) + " but sits at " + std::to_string(it->second)});
        const TransactionSpec& spec = sc.transactions[sc.txn_index(e.entity)];
        for (int oid : spec.objs)
          if (obj_pos.at(oid) != e.to)
            out.push_back({ViolationKind::not_colocated,
                           "object " + std::to_string(oid) + " absent from node " +
                               std::to_string(e.to) + " at execution of transaction " +
                               std::to_string(e.entity)});
        break;
      }
    }
  }
  for (const auto& [id, done] : executed)
    if (!done)
      out.push_back(
          {ViolationKind::missing_execution, "transaction " + std::to_string(id) + " never ran"});
  return out;
}

CostBreakdown schedule_cost(const Scenario& sc, const DistanceOracle& d, const Schedule& s) {
  std::vector<Violation> violations = validate_schedule(sc, s);
  if (!violations.empty())
    throw Error(Errc::invalid_schedule, violations.front().detail + " (+" +
                                            std::to_string(violations.size() - 1) + " more)");
  CostBreakdown cost;
  for (const Event& e : s.events) {
    if (e.kind == Event::Kind::move_object)
      cost.object_cost += sc.cost.alpha * d.dist(e.from, e.to);
    else if (e.kind == Event::Kind::move_transaction)
      cost.txn_cost += sc.cost.beta * d.dist(e.from, e.to);
  }
  return cost;
}

Schedule direct_schedule(const Scenario& sc) {
  const NodeId home = sc.object_home();
  Schedule s;
  for (const TransactionSpec& t : sc.transactions)
    if (t.home != home) s.events.push_back(Event::txn_move(t.id, t.home, home));
  for (const TransactionSpec& t : sc.transactions)
    s.events.push_back(Event::execute(t.id, home));
  return s;
}

}  // namespace dualflow
