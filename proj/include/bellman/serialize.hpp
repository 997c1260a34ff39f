#pragma once

#include <json.hpp>

#include "bellman/hermitian.hpp"
#include "bellman/inequalities.hpp"
#include "bellman/instance_gen.hpp"
#include "bellman/positive_maps.hpp"

namespace bellman {

using Json = nlohmann::json;

/// {"dim": d, "re": [row-major], "im": [row-major]}
Json to_json(const HermitianMatrix& h);
HermitianMatrix hermitian_from_json(const Json& j);

/// {"rows": r, "cols": c, "re": [...], "im": [...]} for non-Hermitian data
/// (isometries, unitaries).
Json to_json(const ComplexMatrix& m);
ComplexMatrix complex_from_json(const Json& j);

/// {"kind": ..., ...variant fields}
Json to_json(const PositiveMap& map);
PositiveMap positive_map_from_json(const Json& j);

Json to_json(const Tolerance& tol);
Tolerance tolerance_from_json(const Json& j);

Json to_json(const InstanceFamily& inst);
InstanceFamily instance_from_json(const Json& j);

Json to_json(const CheckParams& params);
CheckParams params_from_json(const Json& j);

Json to_json(const CheckOutcome& outcome);
CheckOutcome outcome_from_json(const Json& j);

/// Everything needed to re-run one check on one instance.
struct Witness {
  std::string id;
  CheckParams params;
  Tolerance tol;
  InstanceFamily instance;
  CheckOutcome recorded;
};

Json to_json(const Witness& w);
/// Throws SchemaError on malformed input, naming the offending field.
Witness witness_from_json(const Json& j);

struct Replay {
  CheckOutcome outcome;
  double slack_diff = 0.0;
  bool reproduced = false;  // same status and slack within 1e-12 (1 + |slack|)
};

Replay replay(const Witness& w);

}  // namespace bellman
