#include "bellman/serialize.hpp"

#include <cmath>

#include "bellman/errors.hpp"

namespace bellman {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("missing field '") + key + "'");
  return j.at(key);
}

int positive_int(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    throw SchemaError(std::string("field '") + key + "' must be a positive integer");
  }
  return v.get<int>();
}

std::vector<double> number_array(const Json& j, const char* key, std::size_t expected) {
  const Json& v = field(j, key);
  if (!v.is_array() || v.size() != expected) {
    throw SchemaError(std::string("field '") + key + "' must be an array of " + std::to_string(expected) + " numbers");
  }
  std::vector<double> out;
  out.reserve(expected);
  for (const auto& x : v) {
    if (!x.is_number()) throw SchemaError(std::string("field '") + key + "' holds a non-number");
    out.push_back(x.get<double>());
  }
  return out;
}

Json flatten(const ComplexMatrix& m, Json out) {
  Json re = Json::array(), im = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      re.push_back(m(i, k).real());
      im.push_back(m(i, k).imag());
    }
  }
  out["re"] = std::move(re);
  out["im"] = std::move(im);
  return out;
}

ComplexMatrix unflatten(const Json& j, int rows, int cols) {
  const auto n = static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
  const auto re = number_array(j, "re", n);
  const auto im = number_array(j, "im", n);
  ComplexMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int k = 0; k < cols; ++k) m(i, k) = Complex(re[i * cols + k], im[i * cols + k]);
  }
  return m;
}

}  // namespace

Json to_json(const HermitianMatrix& h) { return flatten(h.matrix(), Json{{"dim", h.dim()}}); }

HermitianMatrix hermitian_from_json(const Json& j) {
  const int dim = positive_int(j, "dim");
  const ComplexMatrix m = unflatten(j, dim, dim);
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * (1.0 + m.cwiseAbs().maxCoeff())) {
    throw SchemaError("matrix entries are not Hermitian");
  }
  return HermitianMatrix(m);
}

Json to_json(const ComplexMatrix& m) {
  return flatten(m, Json{{"rows", m.rows()}, {"cols", m.cols()}});
}

ComplexMatrix complex_from_json(const Json& j) {
  return unflatten(j, positive_int(j, "rows"), positive_int(j, "cols"));
}

Json to_json(const PositiveMap& map) {
  Json out{{"kind", map.kind()}};
  std::visit(Overloaded{
                 [&](const maps::Identity& m) { out["dim"] = m.dim; },
                 [&](const maps::Compression& m) { out["V"] = to_json(m.v); },
                 [&](const maps::UnitaryMixture& m) {
                   out["weights"] = m.weights;
                   Json us = Json::array();
                   for (const auto& u : m.unitaries) us.push_back(to_json(u));
                   out["unitaries"] = std::move(us);
                 },
                 [&](const maps::Pinching& m) { out["blocks"] = m.blocks; },
                 [&](const maps::BlockAverage& m) {
                   out["n"] = m.n;
                   out["block_dim"] = m.block_dim;
                 },
                 [&](const maps::WeightedFamily& m) {
                   out["weights"] = m.weights;
                   Json inner = Json::array();
                   for (const auto& x : m.maps) inner.push_back(to_json(x));
                   out["maps"] = std::move(inner);
                 },
             },
             map.variant());
  return out;
}

PositiveMap positive_map_from_json(const Json& j) {
  const Json& kind_field = field(j, "kind");
  if (!kind_field.is_string()) throw SchemaError("map field 'kind' must be a string");
  const std::string kind = kind_field.get<std::string>();
  try {
    if (kind == "identity") return PositiveMap::identity(positive_int(j, "dim"));
    if (kind == "compression") return PositiveMap::compression(complex_from_json(field(j, "V")));
    if (kind == "unitary_mixture") {
      const Json& us = field(j, "unitaries");
      if (!us.is_array() || us.empty()) throw SchemaError("'unitaries' must be a nonempty array");
      std::vector<ComplexMatrix> unitaries;
      for (const auto& u : us) unitaries.push_back(complex_from_json(u));
      auto weights = number_array(j, "weights", unitaries.size());
      return PositiveMap::unitary_mixture(std::move(weights), std::move(unitaries));
    }
    if (kind == "pinching") {
      const Json& b = field(j, "blocks");
      if (!b.is_array()) throw SchemaError("'blocks' must be an array");
      return PositiveMap::pinching(b.get<std::vector<int>>());
    }
    if (kind == "block_average") return PositiveMap::block_average(positive_int(j, "n"), positive_int(j, "block_dim"));
    if (kind == "weighted_family") {
      const Json& inner = field(j, "maps");
      if (!inner.is_array() || inner.empty()) throw SchemaError("'maps' must be a nonempty array");
      std::vector<PositiveMap> maps;
      for (const auto& x : inner) maps.push_back(positive_map_from_json(x));
      auto weights = number_array(j, "weights", maps.size());
      return PositiveMap::weighted_family(std::move(weights), std::move(maps));
    }
  } catch (const ParameterError& e) {
    throw SchemaError(std::string("invalid ") + kind + " map: " + e.what());
  } catch (const Json::exception& e) {
    throw SchemaError(std::string("invalid ") + kind + " map: " + e.what());
  }
  throw SchemaError("unknown map kind '" + kind + "'");
}

}  // namespace bellman

namespace bellman {

namespace {

double number(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number()) throw SchemaError(std::string("field '") + key + "' must be a number");
  return v.get<double>();
}

std::string text(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) throw SchemaError(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

std::vector<double> numbers(const Json& v, const char* what) {
  if (!v.is_array()) throw SchemaError(std::string(what) + " must be an array");
  std::vector<double> out;
  for (const auto& x : v) {
    if (!x.is_number()) throw SchemaError(std::string(what) + " holds a non-number");
    out.push_back(x.get<double>());
  }
  return out;
}

Json matrices(const std::vector<HermitianMatrix>& list) {
  Json out = Json::array();
  for (const auto& h : list) out.push_back(to_json(h));
  return out;
}

std::vector<HermitianMatrix> matrices_from(const Json& j, const char* key) {
  std::vector<HermitianMatrix> out;
  if (!j.contains(key)) return out;
  const Json& v = j.at(key);
  if (!v.is_array()) throw SchemaError(std::string("field '") + key + "' must be an array");
  for (const auto& x : v) out.push_back(hermitian_from_json(x));
  return out;
}

// Non-finite slacks (never produced by a check) serialize as null.
Json finite_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

}  // namespace

Json to_json(const Tolerance& tol) { return Json{{"atol", tol.atol}, {"rtol", tol.rtol}}; }

Tolerance tolerance_from_json(const Json& j) {
  Tolerance tol{number(j, "atol"), number(j, "rtol")};
  try {
    validate(tol);
  } catch (const ParameterError& e) {
    throw SchemaError(e.what());
  }
  return tol;
}

Json to_json(const InstanceFamily& inst) {
  Json out{{"hypothesis_tag", inst.hypothesis_tag}, {"subseed", inst.subseed}};
  out["A"] = matrices(inst.A);
  out["B"] = matrices(inst.B);
  out["weights"] = inst.weights;
  Json maps = Json::array();
  for (const auto& m : inst.maps) maps.push_back(to_json(m));
  out["maps"] = std::move(maps);
  Json named = Json::object();
  for (const auto& [name, h] : inst.named) named[name] = to_json(h);
  out["named"] = std::move(named);
  out["scalars"] = inst.scalars;
  return out;
}

InstanceFamily instance_from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("instance must be an object");
  InstanceFamily inst;
  inst.hypothesis_tag = text(j, "hypothesis_tag");
  const Json& seed = field(j, "subseed");
  if (!seed.is_number_unsigned() && !(seed.is_number_integer() && seed.get<long long>() >= 0)) {
    throw SchemaError("field 'subseed' must be a nonnegative integer");
  }
  inst.subseed = seed.get<std::uint64_t>();
  inst.A = matrices_from(j, "A");
  inst.B = matrices_from(j, "B");
  if (j.contains("weights")) inst.weights = numbers(j.at("weights"), "'weights'");
  if (j.contains("maps")) {
    if (!j.at("maps").is_array()) throw SchemaError("field 'maps' must be an array");
    for (const auto& m : j.at("maps")) inst.maps.push_back(positive_map_from_json(m));
  }
  if (j.contains("named")) {
    if (!j.at("named").is_object()) throw SchemaError("field 'named' must be an object");
    for (const auto& [name, h] : j.at("named").items()) inst.named.emplace(name, hermitian_from_json(h));
  }
  if (j.contains("scalars")) {
    if (!j.at("scalars").is_array()) throw SchemaError("field 'scalars' must be an array");
    for (const auto& row : j.at("scalars")) inst.scalars.push_back(numbers(row, "scalar row"));
  }
  return inst;
}

Json to_json(const CheckParams& params) {
  return Json{{"dim", params.dim}, {"n", params.n},       {"m", params.m},       {"M", params.M},
              {"p", params.p},     {"lambda", params.lambda}, {"mean", params.mean}, {"map", params.map},
              {"k", params.k}};
}

CheckParams params_from_json(const Json& j) {
  CheckParams params;
  params.dim = positive_int(j, "dim");
  params.n = positive_int(j, "n");
  params.m = number(j, "m");
  params.M = number(j, "M");
  params.p = number(j, "p");
  params.lambda = number(j, "lambda");
  params.mean = text(j, "mean");
  params.map = text(j, "map");
  params.k = positive_int(j, "k");
  return params;
}

Json to_json(const CheckOutcome& outcome) {
  Json out{{"id", outcome.id},
           {"status", to_string(outcome.status)},
           {"slack", finite_or_null(outcome.slack)},
           {"scale", finite_or_null(outcome.scale)}};
  if (!outcome.guard.empty()) out["guard"] = outcome.guard;
  if (!outcome.links.empty()) {
    Json links = Json::array();
    for (const auto& l : outcome.links) {
      links.push_back(Json{{"name", l.name}, {"slack", finite_or_null(l.slack)}, {"scale", finite_or_null(l.scale)}});
    }
    out["links"] = std::move(links);
  }
  return out;
}

CheckOutcome outcome_from_json(const Json& j) {
  CheckOutcome out;
  out.id = text(j, "id");
  out.status = status_from_string(text(j, "status"));
  out.slack = number(j, "slack");
  out.scale = number(j, "scale");
  if (j.contains("guard")) out.guard = text(j, "guard");
  if (j.contains("links")) {
    for (const auto& l : j.at("links")) out.links.push_back({text(l, "name"), number(l, "slack"), number(l, "scale")});
  }
  return out;
}

Json to_json(const Witness& w) {
  return Json{{"id", w.id},
              {"params", to_json(w.params)},
              {"tolerance", to_json(w.tol)},
              {"instance", to_json(w.instance)},
              {"outcome", to_json(w.recorded)}};
}

Witness witness_from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("witness must be a JSON object");
  Witness w;
  w.id = text(j, "id");
  try {
    check_info(w.id);
  } catch (const ParameterError& e) {
    throw SchemaError(e.what());
  }
  w.params = params_from_json(field(j, "params"));
  w.tol = tolerance_from_json(field(j, "tolerance"));
  w.instance = instance_from_json(field(j, "instance"));
  w.recorded = outcome_from_json(field(j, "outcome"));
  return w;
}

Replay replay(const Witness& w) {
  Replay r;
  r.outcome = check(w.id, w.instance, w.params, w.tol);
  r.slack_diff = std::abs(r.outcome.slack - w.recorded.slack);
  r.reproduced = r.outcome.status == w.recorded.status &&
                 r.slack_diff <= 1e-12 * (1.0 + std::abs(w.recorded.slack));
  return r;
}

}  // namespace bellman
