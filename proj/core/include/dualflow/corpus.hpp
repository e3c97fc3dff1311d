#pragma once

#include <cstdint>
#include <vector>

#include "dualflow/scenario.hpp"

namespace dualflow {

/// Deterministic single-object test corpus: small grids and unit-disk graphs
/// with diameter in [2, 8], the object at node 0, alpha cycling through
/// {2, 4, 8} with beta 1, and at least one transaction away from the object.
/// Scenario count and shapes stay within the exhaustive oracle's reach.
std::vector<Scenario> single_corpus(std::uint64_t seed, int count);

/// Deterministic multi-object corpus: up to 8 nodes, two shared objects at
/// node 0, at most 4 transactions accessing one or both objects.
std::vector<Scenario> multi_corpus(std::uint64_t seed, int count);

}  // namespace dualflow
