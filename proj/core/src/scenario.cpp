#include "dualflow/scenario.hpp"

#include <algorithm>
#include <set>

namespace dualflow {

void Scenario::validate() const {
  const int n = graph.node_count();
  if (cost.beta < 1.0) throw Error(Errc::validation_error, "beta must be >= 1");
  if (cost.alpha <= cost.beta) throw Error(Errc::validation_error, "alpha must exceed beta");
  if (config.sigma < 2.0) throw Error(Errc::validation_error, "sigma must be >= 2");
  if (config.control_weight < 0.0)
    throw Error(Errc::validation_error, "control_weight must be >= 0");
  if (objects.empty()) throw Error(Errc::validation_error, "scenario needs at least one object");
  if (transactions.empty())
    throw Error(Errc::validation_error, "scenario needs at least one transaction");

  std::set<int> object_ids;
  for (const ObjectSpec& o : objects) {
    if (o.home < 0 || o.home >= n)
      throw Error(Errc::validation_error, "object " + std::to_string(o.id) + " home out of range");
    if (!object_ids.insert(o.id).second)
      throw Error(Errc::validation_error, "duplicate object id " + std::to_string(o.id));
  }
  if (objects.size() > 1)
    for (const ObjectSpec& o : objects)
      if (o.home != objects.front().home)
        throw Error(Errc::validation_error,
                    "multi-object scenarios require a common object home");

  std::set<int> txn_ids;
  for (const TransactionSpec& t : transactions) {
    if (t.home < 0 || t.home >= n)
      throw Error(Errc::validation_error,
                  "transaction " + std::to_string(t.id) + " home out of range");
    if (!txn_ids.insert(t.id).second)
      throw Error(Errc::validation_error, "duplicate transaction id " + std::to_string(t.id));
    if (t.objs.empty())
      throw Error(Errc::validation_error,
                  "transaction " + std::to_string(t.id) + " accesses no objects");
    std::set<int> seen;
    for (int oid : t.objs) {
      if (!object_ids.count(oid))
        throw Error(Errc::validation_error, "transaction " + std::to_string(t.id) +
                                                " references unknown object " + std::to_string(oid));
      if (!seen.insert(oid).second)
        throw Error(Errc::validation_error, "transaction " + std::to_string(t.id) +
                                                " repeats object " + std::to_string(oid));
    }
  }

  if (!std::is_sorted(objects.begin(), objects.end(),
                      [](const auto& a, const auto& b) { return a.id < b.id; }) ||
      !std::is_sorted(transactions.begin(), transactions.end(),
                      [](const auto& a, const auto& b) { return a.id < b.id; }))
    throw Error(Errc::validation_error, "objects and transactions must be sorted by id");
}

int Scenario::max_objects_per_txn() const {
  std::size_t k = 0;
  for (const TransactionSpec& t : transactions) k = std::max(k, t.objs.size());
  return static_cast<int>(k);
}

int Scenario::object_index(int object_id) const {
  for (std::size_t i = 0; i < objects.size(); ++i)
    if (objects[i].id == object_id) return static_cast<int>(i);
  throw Error(Errc::validation_error, "unknown object id " + std::to_string(object_id));
}

int Scenario::txn_index(int txn_id) const {
  for (std::size_t i = 0; i < transactions.size(); ++i)
    if (transactions[i].id == txn_id) return static_cast<int>(i);
  throw Error(Errc::validation_error, "unknown transaction id " + std::to_string(txn_id));
}

}  // namespace dualflow
