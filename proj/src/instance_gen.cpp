#include "bellman/instance_gen.hpp"

#include <cmath>
#include <functional>
#include <numeric>

#include "bellman/constants.hpp"
#include "bellman/errors.hpp"

namespace bellman {

namespace {

// Fraction of an interval kept free at each end, so that every released
// hypothesis clears the margin.
constexpr double kInset = 1e-3;
constexpr double kSandwichInset = 1e-2;

double inset_lo(double lo, double hi, double frac) { return lo + frac * (hi - lo); }
double inset_hi(double lo, double hi, double frac) { return hi - frac * (hi - lo); }

HermitianMatrix interior_spectrum(int dim, double lo, double hi, Rng& rng) {
  return random_spectrum_matrix(dim, inset_lo(lo, hi, kInset), inset_hi(lo, hi, kInset), rng);
}

HermitianMatrix sum(const std::vector<HermitianMatrix>& terms) {
  HermitianMatrix total = HermitianMatrix::zero(terms.front().dim());
  for (const auto& t : terms) total = total + t;
  return total;
}

bool clears(const HermitianMatrix& x, const HermitianMatrix& y, double margin) {
  return loewner_leq(x, y).slack >= margin;
}

// A draw either yields an instance or the name of the hypothesis it failed.
using Draw = std::variant<InstanceFamily, std::string>;

Generated with_rejection(const GenConfig& cfg, const std::string& tag, Rng& rng,
                         const std::function<Draw(Rng&)>& draw) {
  std::string reason = "no attempt";
  for (int attempt = 1; attempt <= cfg.max_rejects; ++attempt) {
    Draw d = [&]() -> Draw {
      try {
        return draw(rng);
      } catch (const ConditioningError& e) {
        return std::string("conditioning: ") + e.what();
      }
    }();
    if (auto* inst = std::get_if<InstanceFamily>(&d)) {
      inst->hypothesis_tag = tag;
      return std::move(*inst);
    }
    reason = std::get<std::string>(d);
  }
  return Rejection{tag, reason, cfg.max_rejects};
}

std::pair<std::string, int> split_id(std::string_view id) {
  const auto colon = id.find(':');
  if (colon == std::string_view::npos) return {std::string(id), 0};
  const double k = parse_number(id.substr(colon + 1));
  if (k != std::floor(k) || k < 1 || k > 64) {
    throw ParameterError("map id '" + std::string(id) + "': count must be an integer in [1, 64]");
  }
  return {std::string(id.substr(0, colon)), static_cast<int>(k)};
}

}  // namespace

const HermitianMatrix& InstanceFamily::get(const std::string& name) const {
  const auto it = named.find(name);
  if (it == named.end()) throw SchemaError("instance has no operator named '" + name + "'");
  return it->second;
}

void validate(const GenConfig& cfg) {
  if (cfg.dim < 1) throw ParameterError("dim must be >= 1");
  if (cfg.n < 1) throw ParameterError("n must be >= 1");
  if (!(cfg.m < cfg.M) || !std::isfinite(cfg.m) || !std::isfinite(cfg.M)) throw ParameterError("need m < M");
  if (!(cfg.p > 0.0 && cfg.p < 1.0)) throw ParameterError("p must lie in (0, 1)");
  if (!(cfg.lambda > 0.0 && cfg.lambda < 1.0)) throw ParameterError("lambda must lie in (0, 1)");
  if (!(cfg.margin > 0.0)) throw ParameterError("margin must be positive");
  if (cfg.max_rejects < 1) throw ParameterError("max_rejects must be >= 1");
}

std::pair<HermitianMatrix, HermitianMatrix> random_sandwich_pair(const HermitianMatrix& a, double m, double M,
                                                                 Rng& rng) {
  if (!(0.0 < m && m < M)) throw ParameterError("random_sandwich_pair: need 0 < m < M");
  const auto roots = sqrt_pair(a);
  const HermitianMatrix t =
      random_spectrum_matrix(a.dim(), inset_lo(m, M, kSandwichInset), inset_hi(m, M, kSandwichInset), rng);
  return {a, congruence(roots.sqrt.matrix(), t)};
}

std::vector<HermitianMatrix> random_subidentity_family(int n, int dim, Rng& rng, double cap) {
  if (n < 1) throw ParameterError("random_subidentity_family: n must be >= 1");
  if (!(cap > 0.0 && cap <= 1.0)) throw ParameterError("random_subidentity_family: cap must lie in (0, 1]");
  std::vector<HermitianMatrix> family;
  family.reserve(n);
  for (int j = 0; j < n; ++j) family.push_back(random_spectrum_matrix(dim, 0.05, 1.0, rng));
  const double scale = cap / lambda_max(sum(family));
  for (auto& a : family) a = a * scale;
  return family;
}

PositiveMap random_map(std::string_view id, int dim, Rng& rng) {
  const auto [name, k] = split_id(id);
  if (name == "id") return PositiveMap::identity(dim);
  if (name == "compress") return PositiveMap::compression(random_isometry(dim + k, dim, rng));
  if (name == "unitary-mix") {
    std::vector<ComplexMatrix> unitaries;
    for (int i = 0; i < k; ++i) unitaries.push_back(haar_unitary(dim, rng));
    return PositiveMap::unitary_mixture(random_weights(k, rng), std::move(unitaries));
  }
  if (name == "pinch") {
    const int count = std::min(k, dim);
    std::vector<int> blocks(count, dim / count);
    for (int i = 0; i < dim % count; ++i) ++blocks[i];
    return PositiveMap::pinching(std::move(blocks));
  }
  if (name == "block-avg") return PositiveMap::block_average(k, dim);
  if (name == "weighted") {
    std::vector<PositiveMap> inner;
    for (int i = 0; i < k; ++i) inner.push_back(random_map(uniform(rng, 0, 1) < 0.5 ? "compress:1" : "unitary-mix:2", dim, rng));
    return PositiveMap::weighted_family(random_weights(k, rng), std::move(inner));
  }
  throw ParameterError("unknown map id '" + std::string(id) + "'");
}

Generated spectrum_family(const GenConfig& cfg, double lo, double hi, const std::vector<PositiveMap>& maps,
                          Rng& rng) {
  const int count = maps.empty() ? cfg.n : static_cast<int>(maps.size());
  return with_rejection(cfg, "spectrum", rng, [&](Rng& r) -> Draw {
    InstanceFamily inst;
    for (int j = 0; j < count; ++j) {
      const int d = maps.empty() ? cfg.dim : maps[j].input_dim();
      HermitianMatrix a = interior_spectrum(d, lo, hi, r);
      const auto eye = HermitianMatrix::identity(d);
      if (!clears(lo * eye, a, cfg.margin) || !clears(a, hi * eye, cfg.margin)) return "spectrum bounds";
      inst.A.push_back(std::move(a));
    }
    inst.weights = random_weights(count, r);
    inst.maps = maps;
    return inst;
  });
}

Generated contraction_family(const GenConfig& cfg, int input_dim, Rng& rng) {
  return with_rejection(cfg, "contraction", rng, [&](Rng& r) -> Draw {
    InstanceFamily inst;
    const auto eye = HermitianMatrix::identity(input_dim);
    for (int j = 0; j < cfg.n; ++j) {
      HermitianMatrix a = interior_spectrum(input_dim, 0.0, 1.0, r);
      if (!clears(HermitianMatrix::zero(input_dim), a, cfg.margin) || !clears(a, eye, cfg.margin)) {
        return "0 <= A_j <= I";
      }
      inst.A.push_back(std::move(a));
    }
    inst.weights = random_weights(cfg.n, r);
    return inst;
  });
}

Generated sandwich_family(const GenConfig& cfg, Rng& rng) {
  return with_rejection(cfg, "sandwich", rng, [&](Rng& r) -> Draw {
    InstanceFamily inst;
    for (int j = 0; j < cfg.n; ++j) {
      auto [a, b] = random_sandwich_pair(random_spectrum_matrix(cfg.dim, 0.1, 1.0, r), cfg.m, cfg.M, r);
      if (!clears(cfg.m * a, b, cfg.margin) || !clears(b, cfg.M * a, cfg.margin)) return "m A_j <= B_j <= M A_j";
      inst.A.push_back(std::move(a));
      inst.B.push_back(std::move(b));
    }
    inst.weights = random_weights(cfg.n, r);
    return inst;
  });
}

Generated complement_sandwich_instance(const GenConfig& cfg, double gamma, Rng& rng) {
  if (!(cfg.m < 1.0 && 1.0 < cfg.M)) return Rejection{"complement_sandwich", "requires m < 1 < M", 0};
  if (!(gamma >= 1.0)) throw ParameterError("complement_sandwich_instance: gamma must be >= 1");
  const auto eye = HermitianMatrix::identity(cfg.dim);

  auto complements_ok = [&](const HermitianMatrix& sa, const HermitianMatrix& sb, double g) {
    const HermitianMatrix x = eye - g * sa;
    const HermitianMatrix y = eye - g * sb;
    return lambda_min(x) >= cfg.margin && lambda_min(y) >= cfg.margin && clears(cfg.m * x, y, cfg.margin) &&
           clears(y, cfg.M * x, cfg.margin);
  };
  auto admissible = [&](const HermitianMatrix& sa, const HermitianMatrix& sb, double s) {
    return complements_ok(s * sa, s * sb, gamma) && (gamma == 1.0 || complements_ok(s * sa, s * sb, 1.0));
  };

  return with_rejection(cfg, "complement_sandwich", rng, [&](Rng& r) -> Draw {
    std::vector<HermitianMatrix> as, bs;
    for (int j = 0; j < cfg.n; ++j) {
      auto [a, b] = random_sandwich_pair(random_spectrum_matrix(cfg.dim, 0.1, 1.0, r), cfg.m, cfg.M, r);
      as.push_back(std::move(a));
      bs.push_back(std::move(b));
    }
    const HermitianMatrix sa = sum(as);
    const HermitianMatrix sb = sum(bs);

    double lo = 0.0;
    double hi = 1.0;
    if (admissible(sa, sb, 1.0)) {
      lo = 1.0;
    } else {
      for (int it = 0; it < 50; ++it) {
        const double mid = 0.5 * (lo + hi);
        (admissible(sa, sb, mid) ? lo : hi) = mid;
      }
    }
    if (lo <= 0.0) return "no scale satisfies the complement sandwich";
    const double s = lo * uniform(r, 0.5, 1.0);
    if (!admissible(sa, sb, s)) return "complement sandwich at the drawn scale";

    InstanceFamily inst;
    for (int j = 0; j < cfg.n; ++j) {
      HermitianMatrix a = s * as[j];
      HermitianMatrix b = s * bs[j];
      if (!clears(cfg.m * a, b, 0.0) || !clears(b, cfg.M * a, 0.0)) return "m A_j <= B_j <= M A_j";
      inst.A.push_back(std::move(a));
      inst.B.push_back(std::move(b));
    }
    inst.weights = random_weights(cfg.n, r);
    return inst;
  });
}

Generated thm21_instance(const GenConfig& cfg, const MeanSpec& f, Rng& rng) {
  const double gamma = ratio_constant(f.function(), cfg.m, cfg.M).value;
  return complement_sandwich_instance(cfg, std::max(gamma, 1.0), rng);
}

Generated subidentity_pairs(const GenConfig& cfg, Rng& rng) {
  const auto eye = HermitianMatrix::identity(cfg.dim);
  return with_rejection(cfg, "subidentity", rng, [&](Rng& r) -> Draw {
    InstanceFamily inst;
    inst.A = random_subidentity_family(cfg.n, cfg.dim, r, uniform(r, 0.5, 0.995));
    inst.B = random_subidentity_family(cfg.n, cfg.dim, r, uniform(r, 0.5, 0.995));
    if (!clears(sum(inst.A), eye, cfg.margin) || !clears(sum(inst.B), eye, cfg.margin)) return "sum <= I";
    for (int j = 0; j < cfg.n; ++j) {
      if (lambda_min(inst.A[j]) < cfg.margin || lambda_min(inst.B[j]) < cfg.margin) return "A_j, B_j > 0";
    }
    inst.weights = random_weights(cfg.n, r);
    return inst;
  });
}

Generated positive_pairs(const GenConfig& cfg, Rng& rng) {
  return with_rejection(cfg, "positive", rng, [&](Rng& r) -> Draw {
    InstanceFamily inst;
    for (int j = 0; j < cfg.n; ++j) {
      inst.A.push_back(random_spectrum_matrix(cfg.dim, 0.05, 2.0, r));
      inst.B.push_back(random_spectrum_matrix(cfg.dim, 0.05, 2.0, r));
      if (lambda_min(inst.A[j]) < cfg.margin || lambda_min(inst.B[j]) < cfg.margin) return "X_j, Y_j > 0";
    }
    return inst;
  });
}

Generated dominated_family(const GenConfig& cfg, Rng& rng) {
  return with_rejection(cfg, "dominated", rng, [&](Rng& r) -> Draw {
    InstanceFamily inst;
    for (int j = 0; j < cfg.n; ++j) {
      inst.A.push_back(random_spectrum_matrix(cfg.dim, 0.05, 1.0, r));
      inst.B.push_back(random_spectrum_matrix(cfg.dim, 0.05, 1.0, r));
    }
    const HermitianMatrix sa = sum(inst.A);
    const HermitianMatrix sb = sum(inst.B);
    const HermitianMatrix a = sa + random_spectrum_matrix(cfg.dim, 0.05, 1.0, r);
    const HermitianMatrix b = sb + random_spectrum_matrix(cfg.dim, 0.05, 1.0, r);
    if (!clears(sa, a, cfg.margin) || !clears(sb, b, cfg.margin)) return "sum A_j <= A, sum B_j <= B";
    inst.named.emplace("A", a);
    inst.named.emplace("B", b);
    return inst;
  });
}

Generated contraction_spectrum_pair(const GenConfig& cfg, Rng& rng) {
  const auto eye = HermitianMatrix::identity(cfg.dim);
  return with_rejection(cfg, "contraction_spectrum", rng, [&](Rng& r) -> Draw {
    const HermitianMatrix c = interior_spectrum(cfg.dim, -1.0, 1.0, r);
    const HermitianMatrix x = interior_spectrum(cfg.dim, cfg.m, cfg.M, r);
    if (is_contraction(c).slack < cfg.margin) return "C*C <= I";
    if (!clears(cfg.m * eye, x, cfg.margin) || !clears(x, cfg.M * eye, cfg.margin)) return "mI <= X <= MI";
    InstanceFamily inst;
    inst.named.emplace("C", c);
    inst.named.emplace("X", x);
    return inst;
  });
}

Generated contraction_sandwich_pair(const GenConfig& cfg, Rng& rng) {
  return with_rejection(cfg, "contraction_sandwich", rng, [&](Rng& r) -> Draw {
    auto [a, b] = random_sandwich_pair(interior_spectrum(cfg.dim, 0.05, 1.0, r), cfg.m, cfg.M, r);
    if (is_contraction(a).slack < cfg.margin) return "A*A <= I";
    if (!clears(cfg.m * a, b, cfg.margin) || !clears(b, cfg.M * a, cfg.margin)) return "m A <= B <= M A";
    InstanceFamily inst;
    inst.named.emplace("A", a);
    inst.named.emplace("B", b);
    return inst;
  });
}

Generated contraction_psd_pair(const GenConfig& cfg, Rng& rng) {
  return with_rejection(cfg, "contraction_psd", rng, [&](Rng& r) -> Draw {
    const HermitianMatrix a = interior_spectrum(cfg.dim, 0.05, 1.0, r);
    const HermitianMatrix b = interior_spectrum(cfg.dim, 0.0, 2.0, r);
    if (is_contraction(a).slack < cfg.margin) return "A*A <= I";
    if (lambda_min(b) < cfg.margin) return "B >= 0";
    InstanceFamily inst;
    inst.named.emplace("A", a);
    inst.named.emplace("B", b);
    return inst;
  });
}

std::string to_string(ScalarKind kind) {
  switch (kind) {
    case ScalarKind::bellman_classical: return "bellman_classical";
    case ScalarKind::aczel: return "aczel";
    case ScalarKind::popoviciu: return "popoviciu";
    case ScalarKind::mp3: return "mp3";
    case ScalarKind::mp1: return "mp1";
    case ScalarKind::eq3: return "eq3";
  }
  return "?";
}

ScalarKind scalar_kind_from_string(std::string_view name) {
  for (auto kind : {ScalarKind::bellman_classical, ScalarKind::aczel, ScalarKind::popoviciu, ScalarKind::mp3,
                    ScalarKind::mp1, ScalarKind::eq3}) {
    if (to_string(kind) == name) return kind;
  }
  throw ParameterError("unknown scalar kind '" + std::string(name) + "'");
}

namespace {

std::vector<double> uniform_row(int n, double a, double b, Rng& rng) {
  std::vector<double> row(n);
  for (auto& x : row) x = uniform(rng, a, b);
  return row;
}

// Leading entry chosen so that lead^q exceeds the sum of the others' q-th powers.
void lead_dominates(std::vector<double>& row, double q, Rng& rng) {
  double tail = 0.0;
  for (std::size_t j = 1; j < row.size(); ++j) tail += std::pow(row[j], q);
  row[0] = tail > 0.0 ? std::pow(tail, 1.0 / q) * uniform(rng, 1.01, 2.0) : uniform(rng, 0.1, 2.0);
}

// Rows i = 1..m with column sums sum_i a_ij^{1/p} = budget_j.
std::vector<std::vector<double>> budgeted_rows(int m, const std::vector<double>& budget, double p, Rng& rng) {
  const int n = static_cast<int>(budget.size());
  std::vector<std::vector<double>> rows(m, std::vector<double>(n));
  for (int j = 0; j < n; ++j) {
    double total = 0.0;
    for (int i = 0; i < m; ++i) {
      rows[i][j] = uniform(rng, 0.05, 1.0);
      total += std::pow(rows[i][j], 1.0 / p);
    }
    const double scale = std::pow(budget[j] / total, p);
    for (int i = 0; i < m; ++i) rows[i][j] *= scale;
  }
  return rows;
}

}  // namespace

InstanceFamily scalar_instance(ScalarKind kind, int n, int m, double exponent, Rng& rng) {
  if (n < 1 || m < 1) throw ParameterError("scalar_instance: sizes must be >= 1");
  InstanceFamily inst;
  inst.hypothesis_tag = "scalar_" + to_string(kind);
  switch (kind) {
    case ScalarKind::bellman_classical: {
      if (!(exponent >= 1.0)) throw ParameterError("classical Bellman needs exponent >= 1");
      auto a = uniform_row(n, 0.05, 1.0, rng);
      auto b = uniform_row(n, 0.05, 1.0, rng);
      auto cap = [&](const std::vector<double>& row) {
        double s = 0.0;
        for (double x : row) s += std::pow(x, exponent);
        return std::pow(s, 1.0 / exponent) * uniform(rng, 1.01, 2.0);
      };
      const double ca = cap(a);
      const double cb = cap(b);
      inst.scalars = {{ca, cb}, a, b};
      break;
    }
    case ScalarKind::aczel:
    case ScalarKind::popoviciu: {
      const double q = kind == ScalarKind::aczel ? 2.0 : exponent;
      if (!(q >= 1.0 && q <= 2.0)) throw ParameterError("Popoviciu needs exponent in [1, 2]");
      auto a = uniform_row(n, 0.05, 1.0, rng);
      auto b = uniform_row(n, 0.05, 1.0, rng);
      lead_dominates(a, q, rng);
      // the hypothesis is a disjunction; Aczel also sees draws where only a leads
      if (kind == ScalarKind::popoviciu || uniform(rng, 0.0, 1.0) < 0.75) lead_dominates(b, q, rng);
      inst.scalars = {a, b};
      break;
    }
    case ScalarKind::mp3:
    case ScalarKind::eq3: {
      if (!(exponent > 0.0 && exponent < 1.0)) throw ParameterError("exponent must lie in (0, 1)");
      std::vector<double> budget = uniform_row(n, 0.05, 0.999, rng);
      inst.scalars.push_back(random_weights(n, rng));
      for (auto& row : budgeted_rows(m, budget, exponent, rng)) inst.scalars.push_back(std::move(row));
      break;
    }
    case ScalarKind::mp1: {
      if (!(exponent > 0.0 && exponent < 1.0)) throw ParameterError("exponent must lie in (0, 1)");
      std::vector<double> caps = uniform_row(n, 0.2, 2.0, rng);
      std::vector<double> budget(n);
      for (int j = 0; j < n; ++j) budget[j] = uniform(rng, 0.05, 0.999) * std::pow(caps[j], 1.0 / exponent);
      inst.scalars.push_back(caps);
      for (auto& row : budgeted_rows(m, budget, exponent, rng)) inst.scalars.push_back(std::move(row));
      break;
    }
  }
  return inst;
}

}  // namespace bellman
