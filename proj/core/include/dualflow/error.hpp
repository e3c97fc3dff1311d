#pragma once

#include <stdexcept>
#include <string>

namespace dualflow {

enum class Errc {
  disconnected_graph,
  invalid_weight,
  duplicate_edge,
  invalid_node,
  generation_failed,
  invariant_violation,
  no_parent,
  too_large,
  invalid_schedule,
  parse_error,
  validation_error,
};

const char* errc_name(Errc code);

/// Library-wide exception carrying a machine-checkable error code.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

inline const char* errc_name(Errc code) {
  switch (code) {
    case Errc::disconnected_graph: return "DisconnectedGraph";
    case Errc::invalid_weight: return "InvalidWeight";
    case Errc::duplicate_edge: return "DuplicateEdge";
    case Errc::invalid_node: return "InvalidNode";
    case Errc::generation_failed: return "GenerationFailed";
    case Errc::invariant_violation: return "InvariantViolation";
    case Errc::no_parent: return "NoParent";
    case Errc::too_large: return "TooLarge";
    case Errc::invalid_schedule: return "InvalidSchedule";
    case Errc::parse_error: return "ParseError";
    case Errc::validation_error: return "ValidationError";
  }
  return "Error";
}

}  // namespace dualflow
