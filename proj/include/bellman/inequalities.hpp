#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bellman/hermitian.hpp"
#include "bellman/instance_gen.hpp"

namespace bellman {

enum class Status { holds, violated, not_applicable };

std::string to_string(Status status);
Status status_from_string(std::string_view name);

struct ChainLink {
  std::string name;
  double slack = 0.0;
  double scale = 0.0;
};

/// Result of one check on one instance. slack is lambda_min(dominant -
/// dominated), so a positive value means the inequality held strictly.
/// For chains it is the smallest link slack.
struct CheckOutcome {
  std::string id;
  Status status = Status::not_applicable;
  double slack = 0.0;
  double scale = 0.0;
  std::string guard;  // set when not_applicable
  std::vector<ChainLink> links;

  double normalized_slack() const { return scale > 0.0 ? slack / scale : slack; }
};

/// One parameter cell. Checks read only the fields their axes name.
struct CheckParams {
  int dim = 2;
  int n = 2;
  double m = 0.5;
  double M = 2.0;
  double p = 0.5;
  double lambda = 0.5;
  std::string mean = "geom:0.5";
  std::string map = "id";
  int k = 1;
};

enum class Group { forward, reverse, chain, scalar };

std::string to_string(Group group);

struct Axes {
  bool n = false;
  bool interval = false;
  bool p = false;
  bool lambda = false;
  bool mean = false;
  bool map = false;
  bool k = false;
};

struct CheckInfo {
  std::string id;
  Group group;
  std::string statement;   // the inequality, dominated side first
  std::string hypothesis;
  Axes axes;
};

/// All checks in a fixed order.
const std::vector<CheckInfo>& registry();

/// Throws ParameterError on an unknown id.
const CheckInfo& check_info(std::string_view id);

/// Why a cell cannot host the check (interval outside the statement's range,
/// n too small for a split, ...), or nothing if it can.
std::optional<std::string> incompatible(std::string_view id, const CheckParams& params);

struct GenOptions {
  double margin = 1e-6;
  int max_rejects = 1000;
};

/// Random instance satisfying the check's hypotheses for this cell.
Generated generate(std::string_view id, const CheckParams& params, Rng& rng, const GenOptions& options = {});

/// Evaluates both sides. Hypothesis and power-domain failures give
/// not_applicable with the guard named; a missing operand or shape mismatch
/// throws (SchemaError, DimensionError); an unknown id throws ParameterError.
CheckOutcome check(std::string_view id, const InstanceFamily& inst, const CheckParams& params,
                   const Tolerance& tol = {});

/// Exponent actually used by a scalar check for grid value p.
double scalar_exponent(ScalarKind kind, double p);

}  // namespace bellman
