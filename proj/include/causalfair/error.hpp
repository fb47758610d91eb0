#pragma once

#include <stdexcept>
#include <string>

namespace causalfair {

enum class Errc {
  cycle_detected,
  duplicate_node,
  unknown_endpoint,
  multiple_protected,
  missing_protected,
  unknown_node,
  endpoint_in_blocker_set,
  proxy_in_input_set,
  role_mismatch,
  orphan_equation,
  non_parent_reference,
  bad_noise_param,
  nonlinear_equation,
  nonadditive_proxy_influence,
  degenerate_design,
  proxy_not_input,
  inexpressible,
  protected_not_root,
  infeasible_constraint,
  adjustment_not_identifiable,
  too_few_bins,
  missing_hypothesis,
  duplicate_equation,
  bad_argument,
  io_error,
};

inline const char* errc_name(Errc c) noexcept {
  switch (c) {
    case Errc::cycle_detected: return "CycleDetected";
    case Errc::duplicate_node: return "DuplicateNode";
    case Errc::unknown_endpoint: return "UnknownEndpoint";
    case Errc::multiple_protected: return "MultipleProtected";
    case Errc::missing_protected: return "MissingProtected";
    case Errc::unknown_node: return "UnknownNode";
    case Errc::endpoint_in_blocker_set: return "EndpointInBlockerSet";
    case Errc::proxy_in_input_set: return "ProxyInInputSet";
    case Errc::role_mismatch: return "RoleMismatch";
    case Errc::orphan_equation: return "OrphanEquation";
    case Errc::non_parent_reference: return "NonParentReference";
    case Errc::bad_noise_param: return "BadNoiseParam";
    case Errc::nonlinear_equation: return "NonlinearEquation";
    case Errc::nonadditive_proxy_influence: return "NonadditiveProxyInfluence";
    case Errc::degenerate_design: return "DegenerateDesign";
    case Errc::proxy_not_input: return "ProxyNotInput";
    case Errc::inexpressible: return "Inexpressible";
    case Errc::protected_not_root: return "ProtectedNotRoot";
    case Errc::infeasible_constraint: return "InfeasibleConstraint";
    case Errc::adjustment_not_identifiable: return "AdjustmentNotIdentifiable";
    case Errc::too_few_bins: return "TooFewBins";
    case Errc::missing_hypothesis: return "MissingHypothesis";
    case Errc::duplicate_equation: return "DuplicateEquation";
    case Errc::bad_argument: return "BadArgument";
    case Errc::io_error: return "IoError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }
  const char* code_name() const noexcept { return errc_name(code_); }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) { throw Error(code, message); }

}  // namespace causalfair
