#include "bellman/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "bellman/constants.hpp"
#include "bellman/errors.hpp"
#include "bellman/high_precision.hpp"
#include "bellman/means.hpp"

namespace bellman {

namespace {

using H = HermitianMatrix;

// Thrown inside a check body; the dispatcher turns it into not_applicable.
struct GuardFailure {
  std::string name;
};

void require(bool ok, const char* guard) {
  if (!ok) throw GuardFailure{guard};
}

H eye(int dim) { return H::identity(dim); }

H total(const std::vector<H>& terms) {
  if (terms.empty()) throw SchemaError("empty operator family");
  H s = H::zero(terms.front().dim());
  for (const auto& t : terms) s = s + t;
  return s;
}

H weighted_total(const std::vector<double>& w, const std::vector<H>& terms) {
  H s = H::zero(terms.front().dim());
  for (std::size_t j = 0; j < terms.size(); ++j) s = s + w[j] * terms[j];
  return s;
}

H sum_means(const std::vector<H>& a, const std::vector<H>& b, const MeanSpec& f, std::size_t from = 0,
            std::size_t to = std::string::npos) {
  to = std::min(to, a.size());
  H s = H::zero(a.front().dim());
  for (std::size_t j = from; j < to; ++j) s = s + mean(a[j], b[j], f);
  return s;
}

// Base of a real power: must be PSD up to the clipping margin of the
// functional calculus.
const H& psd_base(const H& base, const char* guard) {
  require(lambda_min(base) >= -clip_margin(spectral_norm(base)), guard);
  return base;
}

// Hypotheses are re-checked at the comparison tolerance, not the generator margin.
bool leq(const H& x, const H& y, const Tolerance& tol) { return loewner_leq(x, y, tol).holds; }

bool spectrum_within(const H& a, double lo, double hi, const Tolerance& tol) {
  return leq(lo * eye(a.dim()), a, tol) && leq(a, hi * eye(a.dim()), tol);
}

bool sandwiched(const H& a, const H& b, double m, double M, const Tolerance& tol) {
  return leq(m * a, b, tol) && leq(b, M * a, tol);
}

CheckOutcome compare(const H& dominated, const H& dominant, const Tolerance& tol) {
  const OrderVerdict v = loewner_leq(dominated, dominant, tol);
  CheckOutcome out;
  out.status = v.holds ? Status::holds : Status::violated;
  out.slack = v.slack;
  out.scale = v.scale;
  return out;
}

ChainLink link(const std::string& name, const H& dominated, const H& dominant) {
  const OrderVerdict v = loewner_leq(dominated, dominant);
  return {name, v.slack, v.scale};
}

CheckOutcome chain(std::vector<ChainLink> links, std::size_t decisive, const Tolerance& tol) {
  CheckOutcome out;
  out.slack = links.front().slack;
  out.scale = links.front().scale;
  for (std::size_t i = 0; i < decisive; ++i) {
    if (links[i].slack - out.slack < 0.0) {
      out.slack = links[i].slack;
      out.scale = links[i].scale;
    }
  }
  bool ok = true;
  for (std::size_t i = 0; i < decisive; ++i) ok = ok && links[i].slack >= -tol.bound(links[i].scale);
  out.status = ok ? Status::holds : Status::violated;
  out.links = std::move(links);
  return out;
}

void need(bool ok, const std::string& what) {
  if (!ok) throw SchemaError("instance lacks " + what);
}

void need_family(const InstanceFamily& inst, bool pairs) {
  need(!inst.A.empty(), "operators A_j");
  if (pairs) need(inst.B.size() == inst.A.size(), "one B_j per A_j");
  for (std::size_t j = 0; j < inst.A.size(); ++j) {
    if (inst.A[j].dim() != inst.A.front().dim() || (pairs && inst.B[j].dim() != inst.A[j].dim())) {
      throw DimensionError("operator family has mixed dimensions");
    }
  }
}

void need_weights(const InstanceFamily& inst) {
  need(inst.weights.size() == inst.A.size(), "one weight per operator");
}

const PositiveMap& single_map(const InstanceFamily& inst) {
  need(inst.maps.size() == 1, "a single positive map");
  return inst.maps.front();
}

MeanSpec mean_of(const CheckParams& params) { return MeanSpec::parse(params.mean); }

MeanSpec powered_mean(const MeanSpec& f, double p) {
  return MeanSpec(RepresentingFunction::powered(f.function(), p));
}

// -- forward ------------------------------------------------------------------

CheckOutcome bell_forward(const InstanceFamily& inst, const CheckParams& par, const Tolerance& tol) {
  need_family(inst, false);
  need_weights(inst);
  const PositiveMap& phi = single_map(inst);
  const int d = inst.A.front().dim();
  for (const auto& a : inst.A) require(spectrum_within(a, 0.0, 1.0, tol), "hypothesis_0_le_A_le_I");
  std::vector<H> complements;
  for (const auto& a : inst.A) complements.push_back(power(eye(d) - a, par.p));
  const H lhs = power(psd_base(phi.apply(eye(d) - weighted_total(inst.weights, inst.A)), "lhs_base_not_psd"), par.p);
  const H rhs = phi.apply(weighted_total(inst.weights, complements));
  return compare(rhs, lhs, tol);
}

CheckOutcome mor2(const InstanceFamily& inst, const CheckParams& par, const Tolerance& tol) {
  need_family(inst, true);
  const MeanSpec f = mean_of(par);
  const int d = inst.A.front().dim();
  const H sa = total(inst.A);
  const H sb = total(inst.B);
  require(leq(sa, eye(d), tol) && leq(sb, eye(d), tol), "hypothesis_sum_le_I");
  const H lhs = mean(eye(d) - sa, eye(d) - sb, powered_mean(f, par.p));
  const H rhs = power(psd_base(eye(d) - sum_means(inst.A, inst.B, f), "rhs_base_not_psd"), par.p);
  return compare(lhs, rhs, tol);
}

CheckOutcome choi_davis_jensen(const InstanceFamily& inst, const CheckParams& par, const Tolerance& tol) {
  need_family(inst, false);
  const PositiveMap& phi = single_map(inst);
  const RepresentingFunction f = mean_of(par).function();
  const H& a = inst.A.front();
  return compare(phi.apply(f.apply(a)), f.apply(phi.apply(a)), tol);
}

CheckOutcome superadditivity(const InstanceFamily& inst, const CheckParams& par, const Tolerance& tol) {
  need_family(inst, true);
  const MeanSpec f = mean_of(par);
  return compare(sum_means(inst.A, inst.B, f), mean(total(inst.A), total(inst.B), f), tol);
}

CheckOutcome lemma31(const InstanceFamily& inst, const CheckParams& par, const Tolerance& tol) {
  need_family(inst, true);
  const MeanSpec f = mean_of(par);
  const H& a = inst.get("A");
  const H& b = inst.get("B");
  const H sa = total(inst.A);
  const H sb = total(inst.B);
  require(leq(sa, a, tol) && leq(sb, b, tol), "hypothesis_sum_dominated");
  return compare(mean(a - sa, b - sb, f), mean(a, b, f) - sum_means(inst.A, inst.B, f), tol);
}

CheckOutcome lemma32(const InstanceFamily& inst, const CheckParams& par, const Tolerance& tol) {
  const MeanSpec f = mean_of(par);
  const H& a = inst.get("A");
  const H& b = inst.get("B");
  require(is_contraction(a, tol).holds, "hypothesis_A_contraction");
  require(lambda_min(b) >= -tol.bound(spectral_norm(b)), "hypothesis_B_psd");
  return compare(mean(a, b, powered_mean(f, par.p)), power(mean(a, b, f), par.p), tol);
}

// -- multiplicative reverses ----------------------------------------------------

double ratio_of(const MeanSpec& f, const CheckParams& par) {
  return ratio_constant(f.function(), par.m, par.M).value;
}

CheckOutcome gamma_mond1(const InstanceFamily& inst, const CheckParams& par, const Tolerance& tol) {
  need_family(inst, false);
  const PositiveMap& phi = single_map(inst);
  const MeanSpec f = mean_of(par);
  const H& a = inst.A.front();
  require(spectrum_within(a, par.m, par.M, tol), "hypothesis_spectrum_in_interval");
  const double gamma = ratio_of(f, par);
  return compare(f.function().apply(phi.apply(a)), gamma * phi.apply(f.function().apply(a)), tol);
}

CheckOutcome gamma_mond2(const InstanceFamily& inst, const CheckParams& par, const Tolerance& tol) {
  need_family(inst, true);
  const PositiveMap& psi = single_map(inst);
  const MeanSpec f = mean_of(par);
  const H& a = inst.A.front();
  const H& b = inst.B.front();
  require(sandwiched(a, b, par.m, par.M, tol), "hypothesis_sandwich");
  const double gamma = ratio_of(f, par);
  return compare(mean(psi.apply(a), psi.apply(b), f), gamma * psi.apply(mean(a, b, f)), tol);
}

CheckOutcome gamma_main(const InstanceFamily& inst, const CheckParams& par, const Tolerance& tol) {
  need_family(inst, true);
  const MeanSpec f = mean_of(par);
  for (std::size_t j = 0; j < inst.A.size(); ++j) {
    require(sandwiched(inst.A[j], inst.B[j], par.m, par.M, tol), "hypothesis_sandwich");
  }
  const double gamma = ratio_of(f, par);
  return compare(mean(total(inst.A), total(inst.B), f), gamma * sum_means(inst.A, inst.B, f), tol);
}

void require_pair_sandwiches(const InstanceFamily& inst, const CheckParams& par, const Tolerance& tol) {
  for (std::size_t j = 0; j < inst.A.size(); ++j) {
    require(sandwiched(inst.A[j], inst.B[j], par.m, par.M, tol), "hypothesis_sandwich");
  }
}

void require_complement_sandwich(const H& x, const H& y, const CheckParams& par, const Tolerance& tol) {
  require(lambda_min(x) > 0.0 && lambda_min(y) > 0.0, "hypothesis_complement_positive");
  require(sandwiched(x, y, par.m, par.M, tol), "hypothesis_complement_sandwich");
}

CheckOutcome thm21(const InstanceFamily& inst, const CheckParams& par, const Tolerance& tol) {
  need_family(inst, true);
  const MeanSpec f = mean_of(par);
  const int d = inst.A.front().dim();
  const double gamma = ratio_of(f, par);
  require_pair_sandwiches(inst, par, tol);
  const H sa = total(inst.A);
  const H sb = total(inst.B);
  require_complement_sandwich(eye(d) - gamma * sa, eye(d) - gamma * sb, par, tol);
  const H base = mean(eye(d) - sa, eye(d) - sb, f);
  const H lhs = std::pow(gamma, par.p) * power(psd_base(base, "lhs_base_not_psd"), par.p);
  const H rhs = power(psd_base(eye(d) - gamma * sum_means(inst.A, inst.B, f), "rhs_base_not_psd"), par.p);
  return compare(rhs, lhs, tol);
}

CheckOutcome lemma_bomb(const InstanceFamily& inst, const CheckParams& par, const Tolerance& tol) {
  const RepresentingFunction f = mean_of(par).function();
  const H& c = inst.get("C");
  const H& x = inst.get("X");
  require(par.m >= 1e-3, "m_below_domain_floor");
  require(is_contraction(c, tol).holds, "hypothesis_C_contraction");
  require(spectrum_within(x, par.m, par.M, tol), "hypothesis_spectrum_in_interval");
  const double gamma = ratio_constant(f, par.m, par.M).value;
  const H cc(c.matrix().adjoint() * c.matrix());
  const H dominant = gamma * (congruence(c.matrix(), f.apply(x)) + f(par.m) * (eye(c.dim()) - cc));
  return compare(f.apply(congruence(c.matrix(), x)), dominant, tol);
}

CheckOutcome lemma_bos12(const InstanceFamily& inst, const CheckParams& par, const Tolerance& tol) {
  const MeanSpec f = mean_of(par);
  const H& a = inst.get("A");
  const H& b = inst.get("B");
  require(is_contraction(a, tol).holds, "hypothesis_A_contraction");
  require(sandwiched(a, b, par.m, par.M, tol), "hypothesis_sandwich");
  const double fm = f.function()(par.m);
  const double fM = f.function()(par.M);
  const double gamma_h = power_ratio_constant(fm, fM, par.p).value;
  const H dominant = gamma_h * (std::pow(fm, par.p) * (eye(a.dim()) - a) + mean(a, b, powered_mean(f, par.p)));
  return compare(power(mean(a, b, f), par.p), dominant, tol);
}

CheckOutcome cor24(const InstanceFamily& inst, const CheckParams& par, const Tolerance& tol) {
  need_family(inst, true);
  const MeanSpec f(RepresentingFunction::arithmetic(par.lambda));
  const int d = inst.A.front().dim();
  require_pair_sandwiches(inst, par, tol);
  const H sa = total(inst.A);
  const H sb = total(inst.B);
  require_complement_sandwich(eye(d) - sa, eye(d) - sb, par, tol);
  const double delta = affine_power_ratio_constant(par.lambda, par.m, par.M, par.p).value;
  const double fm = f.function()(par.m);
  const H dominant =
      delta * (std::pow(fm, par.p) * sa + mean(eye(d) - sa, eye(d) - sb, powered_mean(f, par.p)));
  const H rhs = power(psd_base(eye(d) - sum_means(inst.A, inst.B, f), "rhs_base_not_psd"), par.p);
  return compare(rhs, dominant, tol);
}

// -- additive reverses ------------------------------------------------------------

double gap_of(const MeanSpec& f, const CheckParams& par) {
  return gap_constant(f.function(), par.m, par.M).value;
}

CheckOutcome additive_mond1o1(const InstanceFamily& inst, const CheckParams& par, const Tolerance& tol) {
  need_family(inst, false);
  const PositiveMap& phi = single_map(inst);
  const MeanSpec f = mean_of(par);
  const H& a = inst.A.front();
  require(spectrum_within(a, par.m, par.M, tol), "hypothesis_spectrum_in_interval");
  const double beta = gap_of(f, par);
  const H dominant = beta * eye(phi.output_dim()) + phi.apply(f.function().apply(a));
  return compare(f.function().apply(phi.apply(a)), dominant, tol);
}

CheckOutcome additive_kour(const InstanceFamily& inst, const CheckParams& par, const Tolerance& tol) {
  need_family(inst, true);
  const PositiveMap& psi = single_map(inst);
  const MeanSpec f = mean_of(par);
  const H& x = inst.A.front();
  const H& y = inst.B.front();
  require(sandwiched(x, y, par.m, par.M, tol), "hypothesis_sandwich");
  const double beta = gap_of(f, par);
  const H dominant = beta * psi.apply(x) + psi.apply(mean(x, y, f));
  return compare(mean(psi.apply(x), psi.apply(y), f), dominant, tol);
}

CheckOutcome additive_reverse234(const InstanceFamily& inst, const CheckParams& par, const Tolerance& tol) {
  need_family(inst, true);
  const MeanSpec f = mean_of(par);
  require_pair_sandwiches(inst, par, tol);
  const double beta = gap_of(f, par);
  const H sx = total(inst.A);
  return compare(mean(sx, total(inst.B), f), beta * sx + sum_means(inst.A, inst.B, f), tol);
}

CheckOutcome additive_jr(const InstanceFamily& inst, const CheckParams& par, const Tolerance& tol) {
  need(!inst.A.empty() && inst.maps.size() == inst.A.size(), "one map per operator");
  need_weights(inst);
  const RepresentingFunction f = mean_of(par).function();
  for (const auto& a : inst.A) require(spectrum_within(a, par.m, par.M, tol), "hypothesis_spectrum_in_interval");
  const double beta = gap_of(mean_of(par), par);
  const int d = inst.maps.front().output_dim();
  H mixed = H::zero(d);
  H images = H::zero(d);
  for (std::size_t j = 0; j < inst.A.size(); ++j) {
    mixed = mixed + inst.weights[j] * inst.maps[j].apply(inst.A[j]);
    images = images + inst.weights[j] * inst.maps[j].apply(f.apply(inst.A[j]));
  }
  return compare(f.apply(mixed), beta * eye(d) + images, tol);
}

CheckOutcome additive_complement(const InstanceFamily& inst, const CheckParams& par, const MeanSpec& f,
                                 double constant, const Tolerance& tol) {
  need_family(inst, true);
  const int d = inst.A.front().dim();
  require_pair_sandwiches(inst, par, tol);
  const H sa = total(inst.A);
  const H sb = total(inst.B);
  require_complement_sandwich(eye(d) - sa, eye(d) - sb, par, tol);
  const H lhs_base = constant * eye(d) + mean(eye(d) - sa, eye(d) - sb, f);
  const H lhs = power(psd_base(lhs_base, "lhs_base_not_psd"), par.p);
  const H rhs = power(psd_base(eye(d) - sum_means(inst.A, inst.B, f), "rhs_base_not_psd"), par.p);
  return compare(rhs, lhs, tol);
}

CheckOutcome prop25(const InstanceFamily& inst, const CheckParams& par, const Tolerance& tol) {
  const MeanSpec f = mean_of(par);
  return additive_complement(inst, par, f, gap_of(f, par), tol);
}

CheckOutcome cor26(const InstanceFamily& inst, const CheckParams& par, const Tolerance& tol) {
  const MeanSpec f(RepresentingFunction::geometric(par.lambda));
  return additive_complement(inst, par, f, aczel_gap_constant(par.m, par.M, par.lambda).value, tol);
}

void require_below_one(const InstanceFamily& inst, const CheckParams& par, const Tolerance& tol) {
  require(par.m >= 0.0 && par.M < 1.0, "interval_not_below_one");
  for (const auto& a : inst.A) require(spectrum_within(a, par.m, par.M, tol), "hypothesis_spectrum_in_interval");
}

CheckOutcome cor28(const InstanceFamily& inst, const CheckParams& par, const Tolerance& tol) {
  need(!inst.A.empty() && inst.maps.size() == inst.A.size(), "one map per operator");
  need_weights(inst);
  require_below_one(inst, par, tol);
  const double delta = bellman_gap_constant(par.m, par.M, par.p).value;
  const int d = inst.maps.front().output_dim();
  H powered = H::zero(d);
  H plain = H::zero(d);
  for (std::size_t j = 0; j < inst.A.size(); ++j) {
    const H complement = eye(inst.A[j].dim()) - inst.A[j];
    powered = powered + inst.weights[j] * inst.maps[j].apply(power(complement, par.p));
    plain = plain + inst.weights[j] * inst.maps[j].apply(complement);
  }
  return compare(power(psd_base(plain, "rhs_base_not_psd"), par.p), delta * eye(d) + powered, tol);
}

CheckOutcome cor28_eq2(const InstanceFamily& inst, const CheckParams& par, const Tolerance& tol) {
  need_family(inst, false);
  need_weights(inst);
  const PositiveMap& phi = single_map(inst);
  require_below_one(inst, par, tol);
  const double delta = bellman_gap_constant(par.m, par.M, par.p).value;
  const int d = inst.A.front().dim();
  std::vector<H> powered, plain;
  for (const auto& a : inst.A) {
    powered.push_back(power(eye(d) - a, par.p));
    plain.push_back(eye(d) - a);
  }
  const H dominant = delta * eye(phi.output_dim()) + phi.apply(weighted_total(inst.weights, powered));
  const H rhs = power(psd_base(phi.apply(weighted_total(inst.weights, plain)), "rhs_base_not_psd"), par.p);
  return compare(rhs, dominant, tol);
}

CheckOutcome cor210(const InstanceFamily& inst, const CheckParams& par, const Tolerance& tol) {
  need_family(inst, false);
  need_weights(inst);
  const PositiveMap& phi = single_map(inst);
  require(par.m > 0.0, "interval_not_positive");
  for (const auto& a : inst.A) require(spectrum_within(a, par.m, par.M, tol), "hypothesis_spectrum_in_interval");
  const auto log = RepresentingFunction::log();
  const double beta = log_gap_constant(par.m, par.M).value;
  std::vector<H> logs;
  for (const auto& a : inst.A) logs.push_back(log.apply(a));
  const H dominant = beta * eye(phi.output_dim()) + phi.apply(weighted_total(inst.weights, logs));
  return compare(log.apply(phi.apply(weighted_total(inst.weights, inst.A))), dominant, tol);
}

// -- refinement chains ------------------------------------------------------------

CheckOutcome thm33(const InstanceFamily& inst, const CheckParams& par, const Tolerance& tol) {
  need_family(inst, true);
  const int n = static_cast<int>(inst.A.size());
  if (par.k < 1 || par.k > n - 1) throw ParameterError("split k must lie in [1, n - 1]");
  const MeanSpec f = mean_of(par);
  const int d = inst.A.front().dim();
  const H sa = total(inst.A);
  const H sb = total(inst.B);
  require(leq(sa, eye(d), tol) && leq(sb, eye(d), tol), "hypothesis_sum_le_I");
  const std::vector<H> head_a(inst.A.begin(), inst.A.begin() + par.k);
  const std::vector<H> head_b(inst.B.begin(), inst.B.begin() + par.k);
  const H lhs = mean(eye(d) - sa, eye(d) - sb, powered_mean(f, par.p));
  const H mid_base = mean(eye(d) - total(head_a), eye(d) - total(head_b), f) - sum_means(inst.A, inst.B, f, par.k);
  const H mid = power(psd_base(mid_base, "mid_base_not_psd"), par.p);
  const H rhs = power(psd_base(eye(d) - sum_means(inst.A, inst.B, f), "rhs_base_not_psd"), par.p);
  return chain({link("lhs_to_mid", lhs, mid), link("mid_to_rhs", mid, rhs), link("total", lhs, rhs)}, 2, tol);
}

CheckOutcome thm34(const InstanceFamily& inst, const CheckParams& par, const Tolerance& tol) {
  need_family(inst, true);
  need(inst.scalars.size() == 1 && inst.scalars[0].size() == inst.A.size(), "one weight t_j per pair");
  const auto& t = inst.scalars[0];
  for (double tj : t) {
    if (!(tj >= 0.0 && tj <= 1.0)) throw ParameterError("t_j must lie in [0, 1]");
  }
  const MeanSpec f = mean_of(par);
  const int d = inst.A.front().dim();
  const H sa = total(inst.A);
  const H sb = total(inst.B);
  require(leq(sa, eye(d), tol) && leq(sb, eye(d), tol), "hypothesis_sum_le_I");
  H ta = H::zero(d);
  H tb = H::zero(d);
  H rest = H::zero(d);
  for (std::size_t j = 0; j < t.size(); ++j) {
    ta = ta + t[j] * inst.A[j];
    tb = tb + t[j] * inst.B[j];
    if (t[j] != 1.0) rest = rest + (1.0 - t[j]) * mean(inst.A[j], inst.B[j], f);
  }
  const H lhs_base = mean(eye(d) - sa, eye(d) - sb, f);
  const H lhs = mean(eye(d) - sa, eye(d) - sb, powered_mean(f, par.p));
  const H mid_base = mean(eye(d) - ta, eye(d) - tb, f) - rest;
  const H mid = power(psd_base(mid_base, "mid_base_not_psd"), par.p);
  const H rhs = power(psd_base(eye(d) - sum_means(inst.A, inst.B, f), "rhs_base_not_psd"), par.p);
  return chain({link("lhs_to_mid", lhs, mid), link("mid_to_rhs", mid, rhs), link("total", lhs, rhs),
                link("base_lhs_to_mid", lhs_base, mid_base)},
               2, tol);
}

// -- scalar inequalities ------------------------------------------------------------

using HP = HighPrec;

HP hp_sum(const std::vector<double>& row, const std::function<HP(HP)>& g, std::size_t from = 0) {
  HP s = 0;
  for (std::size_t j = from; j < row.size(); ++j) s += g(HP(row[j]));
  return s;
}

CheckOutcome scalar_compare(const HP& dominated, const HP& dominant, const Tolerance& tol) {
  CheckOutcome out;
  out.slack = static_cast<double>(dominant - dominated);
  out.scale = static_cast<double>(std::max(abs(dominated), abs(dominant)));
  out.status = out.slack >= -tol.bound(out.scale) ? Status::holds : Status::violated;
  return out;
}

void need_rows(const InstanceFamily& inst, std::size_t min_rows) {
  need(inst.scalars.size() >= min_rows, "scalar rows");
  for (const auto& row : inst.scalars) need(!row.empty(), "nonempty scalar rows");
}

void need_positive(const InstanceFamily& inst, std::size_t first_row) {
  for (std::size_t i = first_row; i < inst.scalars.size(); ++i) {
    for (double x : inst.scalars[i]) require(x > 0.0, "hypothesis_positive_entries");
  }
}

CheckOutcome scalar_bellman(const InstanceFamily& inst, const CheckParams& par, const Tolerance& tol) {
  need_rows(inst, 3);
  need(inst.scalars[0].size() == 2 && inst.scalars[1].size() == inst.scalars[2].size(), "Bellman row shapes");
  need_positive(inst, 0);
  const HP q = scalar_exponent(ScalarKind::bellman_classical, par.p);
  auto pw = [&](HP x) { return pow(x, q); };
  const HP a = inst.scalars[0][0];
  const HP b = inst.scalars[0][1];
  const HP left_a = pw(a) - hp_sum(inst.scalars[1], pw);
  const HP left_b = pw(b) - hp_sum(inst.scalars[2], pw);
  require(left_a >= 0 && left_b >= 0, "hypothesis_sum_le_cap");
  HP right = pw(a + b);
  for (std::size_t j = 0; j < inst.scalars[1].size(); ++j) right -= pw(HP(inst.scalars[1][j]) + inst.scalars[2][j]);
  require(right >= 0, "rhs_base_negative");
  return scalar_compare(pow(left_a, 1 / q) + pow(left_b, 1 / q), pow(right, 1 / q), tol);
}

CheckOutcome scalar_aczel(const InstanceFamily& inst, const CheckParams& par, const Tolerance& tol,
                          ScalarKind kind) {
  need_rows(inst, 2);
  need(inst.scalars[0].size() == inst.scalars[1].size(), "matching a and b rows");
  need_positive(inst, 0);
  const HP q = scalar_exponent(kind, par.p);
  auto pw = [&](HP x) { return pow(x, q); };
  const auto& a = inst.scalars[0];
  const auto& b = inst.scalars[1];
  const HP la = pw(a[0]) - hp_sum(a, pw, 1);
  const HP lb = pw(b[0]) - hp_sum(b, pw, 1);
  require(la > 0 || lb > 0, "hypothesis_leading_term_dominates");
  HP base = HP(a[0]) * b[0];
  for (std::size_t j = 1; j < a.size(); ++j) base -= HP(a[j]) * b[j];
  if (kind == ScalarKind::popoviciu) require(base >= 0, "rhs_base_negative");
  return scalar_compare(la * lb, kind == ScalarKind::aczel ? base * base : pw(base), tol);
}

// Column budgets sum_i a_ij^{1/p} for the Bellman forms with rows from `first`.
std::vector<HP> column_budgets(const InstanceFamily& inst, std::size_t first, const HP& inv) {
  std::vector<HP> budget(inst.scalars[first].size(), HP(0));
  for (std::size_t i = first; i < inst.scalars.size(); ++i) {
    need(inst.scalars[i].size() == budget.size(), "rectangular a_ij rows");
    for (std::size_t j = 0; j < budget.size(); ++j) budget[j] += pow(HP(inst.scalars[i][j]), inv);
  }
  return budget;
}

CheckOutcome scalar_mp3(const InstanceFamily& inst, const CheckParams& par, const Tolerance& tol, bool eq3) {
  need_rows(inst, 2);
  need_positive(inst, 0);
  const HP p = scalar_exponent(eq3 ? ScalarKind::eq3 : ScalarKind::mp3, par.p);
  const HP inv = 1 / p;
  const auto& w = inst.scalars[0];
  const auto budget = column_budgets(inst, 1, inv);
  need(w.size() == budget.size(), "one weight per column");
  HP lhs = 0;
  for (std::size_t j = 0; j < w.size(); ++j) {
    require(budget[j] <= 1, "hypothesis_column_budget");
    lhs += HP(w[j]) * pow(1 - budget[j], p);
  }
  if (eq3) {
    HP inner = 0;
    for (std::size_t j = 0; j < w.size(); ++j) inner += HP(w[j]) * budget[j];
    const HP delta = (1 - p) * pow(p, p / (1 - p));
    return scalar_compare(pow(1 - inner, p), delta + lhs, tol);
  }
  HP inner = 0;
  for (std::size_t i = 1; i < inst.scalars.size(); ++i) {
    HP mixed = 0;
    for (std::size_t j = 0; j < w.size(); ++j) mixed += HP(w[j]) * inst.scalars[i][j];
    inner += pow(mixed, inv);
  }
  require(inner <= 1, "rhs_base_negative");
  return scalar_compare(lhs, pow(1 - inner, p), tol);
}

CheckOutcome scalar_mp1(const InstanceFamily& inst, const CheckParams& par, const Tolerance& tol) {
  need_rows(inst, 2);
  need_positive(inst, 0);
  const HP p = scalar_exponent(ScalarKind::mp1, par.p);
  const HP inv = 1 / p;
  const auto& caps = inst.scalars[0];
  const auto budget = column_budgets(inst, 1, inv);
  need(caps.size() == budget.size(), "one cap per column");
  HP lhs = 0;
  HP cap_total = 0;
  for (std::size_t j = 0; j < caps.size(); ++j) {
    const HP room = pow(HP(caps[j]), inv) - budget[j];
    require(room >= 0, "hypothesis_column_budget");
    lhs += pow(room, p);
    cap_total += caps[j];
  }
  HP right = pow(cap_total, inv);
  for (std::size_t i = 1; i < inst.scalars.size(); ++i) right -= pow(hp_sum(inst.scalars[i], [](HP x) { return x; }), inv);
  require(right >= 0, "rhs_base_negative");
  return scalar_compare(lhs, pow(right, p), tol);
}

// -- registry ---------------------------------------------------------------------

using CheckFn = std::function<CheckOutcome(const InstanceFamily&, const CheckParams&, const Tolerance&)>;
using GenerateFn = std::function<Generated(const CheckParams&, const GenConfig&, Rng&)>;
using FilterFn = std::function<std::optional<std::string>(const CheckParams&)>;

struct Entry {
  CheckInfo info;
  FilterFn filter;
  GenerateFn generate;
  CheckFn check;
};

std::optional<std::string> any_interval(const CheckParams&) { return std::nullopt; }

std::optional<std::string> positive_interval(const CheckParams& par) {
  if (!(par.m > 0.0)) return "needs 0 < m";
  return std::nullopt;
}

std::optional<std::string> straddles_one(const CheckParams& par) {
  if (!(par.m > 0.0 && par.m < 1.0 && par.M > 1.0)) return "needs 0 < m < 1 < M";
  return std::nullopt;
}

std::optional<std::string> below_one(const CheckParams& par) {
  if (!(par.m >= 0.0 && par.M < 1.0)) return "needs 0 <= m < M < 1";
  return std::nullopt;
}

std::optional<std::string> splittable(const CheckParams& par) {
  if (par.n < 2) return "needs n >= 2";
  if (par.k < 1 || par.k > par.n - 1) return "needs 1 <= k <= n - 1";
  return std::nullopt;
}

GenConfig with_dim(GenConfig cfg, int dim) {
  cfg.dim = dim;
  return cfg;
}

GenConfig with_n(GenConfig cfg, int n) {
  cfg.n = n;
  return cfg;
}

// The operators live in the map's input space.
template <class Family>
Generated on_single_map(const CheckParams& par, const GenConfig& cfg, Rng& rng, Family family) {
  PositiveMap phi = random_map(par.map, par.dim, rng);
  Generated g = family(with_dim(cfg, phi.input_dim()), rng);
  if (auto* inst = std::get_if<InstanceFamily>(&g)) inst->maps = {std::move(phi)};
  return g;
}

Generated on_map_family(const CheckParams& par, const GenConfig& cfg, Rng& rng, double lo, double hi) {
  std::vector<PositiveMap> maps;
  for (int j = 0; j < par.n; ++j) maps.push_back(random_map(par.map, par.dim, rng));
  return spectrum_family(cfg, lo, hi, maps, rng);
}

Generated scalar_generate(ScalarKind kind, const CheckParams& par, Rng& rng) {
  return scalar_instance(kind, par.n, par.dim, scalar_exponent(kind, par.p), rng);
}

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = [] {
    const Axes fam_map{.n = true, .p = true, .map = true};
    std::vector<Entry> t;

    t.push_back({{"bell_forward", Group::forward, "Phi(sum w_j (I - A_j)^p) <= (Phi(I - sum w_j A_j))^p",
                  "0 <= A_j <= I, w on the simplex, Phi unital positive", fam_map},
                 any_interval,
                 [](const CheckParams& par, const GenConfig& cfg, Rng& rng) {
                   return on_single_map(par, cfg, rng, [](const GenConfig& c, Rng& r) {
                     return contraction_family(c, c.dim, r);
                   });
                 },
                 bell_forward});
    t.push_back({{"mor2", Group::forward, "(I - sum A_j) s_{f^p} (I - sum B_j) <= (I - sum A_j s_f B_j)^p",
                  "A_j, B_j > 0, sum A_j <= I, sum B_j <= I", {.n = true, .p = true, .mean = true}},
                 any_interval,
                 [](const CheckParams&, const GenConfig& cfg, Rng& rng) { return subidentity_pairs(cfg, rng); },
                 mor2});
    t.push_back({{"choi_davis_jensen", Group::forward, "Phi(f(A)) <= f(Phi(A))",
                  "f operator concave, A > 0, Phi unital positive", {.mean = true, .map = true}},
                 any_interval,
                 [](const CheckParams& par, const GenConfig& cfg, Rng& rng) {
                   return on_single_map(par, cfg, rng, [](const GenConfig& c, Rng& r) {
                     return spectrum_family(with_n(c, 1), 0.0, 3.0, {}, r);
                   });
                 },
                 choi_davis_jensen});
    t.push_back({{"superadditivity", Group::forward, "sum X_j s Y_j <= (sum X_j) s (sum Y_j)", "X_j, Y_j > 0",
                  {.n = true, .mean = true}},
                 any_interval,
                 [](const CheckParams&, const GenConfig& cfg, Rng& rng) { return positive_pairs(cfg, rng); },
                 superadditivity});
    t.push_back({{"lemma31", Group::forward, "(A - sum A_j) s (B - sum B_j) <= A s B - sum A_j s B_j",
                  "A_j, B_j > 0, sum A_j <= A, sum B_j <= B", {.n = true, .mean = true}},
                 any_interval,
                 [](const CheckParams&, const GenConfig& cfg, Rng& rng) { return dominated_family(cfg, rng); },
                 lemma31});
    t.push_back({{"lemma32", Group::forward, "A s_{h o f} B <= h(A s_f B), h(t) = t^p",
                  "A > 0 contraction, B >= 0", {.p = true, .mean = true}},
                 any_interval,
                 [](const CheckParams&, const GenConfig& cfg, Rng& rng) { return contraction_psd_pair(cfg, rng); },
                 lemma32});

    t.push_back({{"gamma_mond1", Group::reverse, "f(Phi(A)) <= gamma_f Phi(f(A))", "mI <= A <= MI, 0 < m",
                  {.interval = true, .mean = true, .map = true}},
                 positive_interval,
                 [](const CheckParams& par, const GenConfig& cfg, Rng& rng) {
                   return on_single_map(par, cfg, rng, [](const GenConfig& c, Rng& r) {
                     return spectrum_family(with_n(c, 1), c.m, c.M, {}, r);
                   });
                 },
                 gamma_mond1});
    t.push_back({{"gamma_mond2", Group::reverse, "Psi(A) s Psi(B) <= gamma_f Psi(A s B)", "0 < mA <= B <= MA",
                  {.interval = true, .mean = true, .map = true}},
                 positive_interval,
                 [](const CheckParams& par, const GenConfig& cfg, Rng& rng) {
                   return on_single_map(par, cfg, rng,
                                        [](const GenConfig& c, Rng& r) { return sandwich_family(with_n(c, 1), r); });
                 },
                 gamma_mond2});
    t.push_back({{"gamma_main", Group::reverse, "(sum A_j) s (sum B_j) <= gamma_f sum A_j s B_j",
                  "0 < m A_j <= B_j <= M A_j", {.n = true, .interval = true, .mean = true}},
                 positive_interval,
                 [](const CheckParams&, const GenConfig& cfg, Rng& rng) { return sandwich_family(cfg, rng); },
                 gamma_main});
    t.push_back({{"thm21", Group::reverse,
                  "(I - gamma_f sum A_j s B_j)^p <= gamma_f^p ((I - sum A_j) s (I - sum B_j))^p",
                  "0 < m A_j <= B_j <= M A_j, m(I - g sum A_j) <= I - g sum B_j <= M(I - g sum A_j) for g = "
                  "gamma_f and g = 1, m < 1 < M",
                  {.n = true, .interval = true, .p = true, .mean = true}},
                 straddles_one,
                 [](const CheckParams& par, const GenConfig& cfg, Rng& rng) {
                   return thm21_instance(cfg, MeanSpec::parse(par.mean), rng);
                 },
                 thm21});
    t.push_back({{"lemma_bomb", Group::reverse, "f(C*XC) <= gamma_f [C* f(X) C + f(m)(I - C*C)]",
                  "C Hermitian contraction, mI <= X <= MI, m >= 1e-3", {.interval = true, .mean = true}},
                 [](const CheckParams& par) -> std::optional<std::string> {
                   if (!(par.m >= 1e-3)) return "needs m >= 1e-3";
                   return std::nullopt;
                 },
                 [](const CheckParams&, const GenConfig& cfg, Rng& rng) {
                   return contraction_spectrum_pair(cfg, rng);
                 },
                 lemma_bomb});
    t.push_back({{"lemma_bos12", Group::reverse,
                  "(A s_f B)^p <= gamma_h [f(m)^p (I - A) + A s_{f^p} B]", "0 < mA <= B <= MA, A contraction",
                  {.interval = true, .p = true, .mean = true}},
                 positive_interval,
                 [](const CheckParams&, const GenConfig& cfg, Rng& rng) {
                   return contraction_sandwich_pair(cfg, rng);
                 },
                 lemma_bos12});
    t.push_back({{"cor24", Group::reverse,
                  "(I - sum A_j n_l B_j)^p <= delta (f(m)^p sum A_j + (I - sum A_j) s_{f^p} (I - sum B_j))",
                  "0 < m A_j <= B_j <= M A_j, m(I - sum A_j) <= I - sum B_j <= M(I - sum A_j), m < 1 < M, "
                  "f(t) = 1 - l + l t",
                  {.n = true, .interval = true, .p = true, .lambda = true}},
                 straddles_one,
                 [](const CheckParams&, const GenConfig& cfg, Rng& rng) {
                   return complement_sandwich_instance(cfg, 1.0, rng);
                 },
                 cor24});

    t.push_back({{"additive_mond1o1", Group::reverse, "f(Phi(A)) <= beta_f I + Phi(f(A))", "mI <= A <= MI, 0 < m",
                  {.interval = true, .mean = true, .map = true}},
                 positive_interval,
                 [](const CheckParams& par, const GenConfig& cfg, Rng& rng) {
                   return on_single_map(par, cfg, rng, [](const GenConfig& c, Rng& r) {
                     return spectrum_family(with_n(c, 1), c.m, c.M, {}, r);
                   });
                 },
                 additive_mond1o1});
    t.push_back({{"additive_kour", Group::reverse, "Psi(X) s Psi(Y) <= beta_f Psi(X) + Psi(X s Y)",
                  "0 < mX <= Y <= MX", {.interval = true, .mean = true, .map = true}},
                 positive_interval,
                 [](const CheckParams& par, const GenConfig& cfg, Rng& rng) {
                   return on_single_map(par, cfg, rng,
                                        [](const GenConfig& c, Rng& r) { return sandwich_family(with_n(c, 1), r); });
                 },
                 additive_kour});
    t.push_back({{"additive_reverse234", Group::reverse, "(sum X_j) s (sum Y_j) <= beta_f sum X_j + sum X_j s Y_j",
                  "0 < m X_j <= Y_j <= M X_j", {.n = true, .interval = true, .mean = true}},
                 positive_interval,
                 [](const CheckParams&, const GenConfig& cfg, Rng& rng) { return sandwich_family(cfg, rng); },
                 additive_reverse234});
    t.push_back({{"additive_jr", Group::reverse, "f(sum w_j Phi_j(A_j)) <= beta_f I + sum w_j Phi_j(f(A_j))",
                  "mI <= A_j <= MI, 0 < m, w on the simplex",
                  {.n = true, .interval = true, .mean = true, .map = true}},
                 positive_interval,
                 [](const CheckParams& par, const GenConfig& cfg, Rng& rng) {
                   return on_map_family(par, cfg, rng, par.m, par.M);
                 },
                 additive_jr});
    t.push_back({{"prop25", Group::reverse,
                  "(I - sum A_j s B_j)^p <= (beta_f I + (I - sum A_j) s (I - sum B_j))^p",
                  "0 < m A_j <= B_j <= M A_j, m(I - sum A_j) <= I - sum B_j <= M(I - sum A_j), m < 1 < M",
                  {.n = true, .interval = true, .p = true, .mean = true}},
                 straddles_one,
                 [](const CheckParams&, const GenConfig& cfg, Rng& rng) {
                   return complement_sandwich_instance(cfg, 1.0, rng);
                 },
                 prop25});
    t.push_back({{"cor26", Group::reverse,
                  "(I - sum A_j #_l B_j)^p <= (zeta I + (I - sum A_j) #_l (I - sum B_j))^p",
                  "0 < m A_j <= B_j <= M A_j, m(I - sum A_j) <= I - sum B_j <= M(I - sum A_j), m < 1 < M; zeta is "
                  "the gap constant of t^l",
                  {.n = true, .interval = true, .p = true, .lambda = true}},
                 straddles_one,
                 [](const CheckParams&, const GenConfig& cfg, Rng& rng) {
                   return complement_sandwich_instance(cfg, 1.0, rng);
                 },
                 cor26});
    t.push_back({{"cor28", Group::reverse,
                  "(sum w_j Phi_j(I - A_j))^p <= delta I + sum w_j Phi_j((I - A_j)^p)",
                  "0 <= mI <= A_j <= MI < I, w on the simplex", {.n = true, .interval = true, .p = true, .map = true}},
                 below_one,
                 [](const CheckParams& par, const GenConfig& cfg, Rng& rng) {
                   return on_map_family(par, cfg, rng, par.m, par.M);
                 },
                 cor28});
    t.push_back({{"cor28_eq2", Group::reverse,
                  "(Phi(sum w_j (I - A_j)))^p <= delta I + Phi(sum w_j (I - A_j)^p)",
                  "0 <= mI <= A_j <= MI < I, w on the simplex", {.n = true, .interval = true, .p = true, .map = true}},
                 below_one,
                 [](const CheckParams& par, const GenConfig& cfg, Rng& rng) {
                   return on_single_map(par, cfg, rng, [&](const GenConfig& c, Rng& r) {
                     return spectrum_family(c, par.m, par.M, {}, r);
                   });
                 },
                 cor28_eq2});
    t.push_back({{"cor210", Group::reverse,
                  "log(sum w_j Phi(A_j)) <= beta_log I + Phi(sum w_j log A_j)", "0 < mI <= A_j <= MI",
                  {.n = true, .interval = true, .map = true}},
                 positive_interval,
                 [](const CheckParams& par, const GenConfig& cfg, Rng& rng) {
                   return on_single_map(par, cfg, rng, [&](const GenConfig& c, Rng& r) {
                     return spectrum_family(c, par.m, par.M, {}, r);
                   });
                 },
                 cor210});

    t.push_back({{"thm33", Group::chain,
                  "(I - sum A_j) s_{f^p} (I - sum B_j) <= ((I - sum_{j<=k} A_j) s (I - sum_{j<=k} B_j) - "
                  "sum_{j>k} A_j s B_j)^p <= (I - sum A_j s B_j)^p",
                  "A_j, B_j > 0, sum A_j <= I, sum B_j <= I, 1 <= k <= n - 1",
                  {.n = true, .p = true, .mean = true, .k = true}},
                 splittable,
                 [](const CheckParams&, const GenConfig& cfg, Rng& rng) { return subidentity_pairs(cfg, rng); },
                 thm33});
    t.push_back({{"thm34", Group::chain,
                  "(I - sum A_j) s_{f^p} (I - sum B_j) <= ((I - sum t_j A_j) s (I - sum t_j B_j) - "
                  "sum (1 - t_j) A_j s B_j)^p <= (I - sum A_j s B_j)^p",
                  "A_j, B_j > 0, sum A_j <= I, sum B_j <= I, t_j in [0, 1]", {.n = true, .p = true, .mean = true}},
                 any_interval,
                 [](const CheckParams&, const GenConfig& cfg, Rng& rng) {
                   Generated g = subidentity_pairs(cfg, rng);
                   if (auto* inst = std::get_if<InstanceFamily>(&g)) {
                     std::vector<double> t(cfg.n);
                     for (auto& tj : t) tj = uniform(rng, 0.0, 1.0);
                     inst->scalars = {t};
                   }
                   return g;
                 },
                 thm34});

    const Axes scalar_axes{.n = true, .p = true};
    t.push_back({{"bellman_classical", Group::scalar,
                  "(a^q - sum a_j^q)^{1/q} + (b^q - sum b_j^q)^{1/q} <= ((a + b)^q - sum (a_j + b_j)^q)^{1/q}",
                  "sum a_j^q <= a^q, sum b_j^q <= b^q, q = 1/p", scalar_axes},
                 any_interval,
                 [](const CheckParams& par, const GenConfig&, Rng& rng) {
                   return scalar_generate(ScalarKind::bellman_classical, par, rng);
                 },
                 scalar_bellman});
    t.push_back({{"aczel", Group::scalar, "(a_1^2 - sum a_j^2)(b_1^2 - sum b_j^2) <= (a_1 b_1 - sum a_j b_j)^2",
                  "a_1^2 > sum a_j^2 or b_1^2 > sum b_j^2", {.n = true}},
                 any_interval,
                 [](const CheckParams& par, const GenConfig&, Rng& rng) {
                   return scalar_generate(ScalarKind::aczel, par, rng);
                 },
                 [](const InstanceFamily& inst, const CheckParams& par, const Tolerance& tol) {
                   return scalar_aczel(inst, par, tol, ScalarKind::aczel);
                 }});
    t.push_back({{"popoviciu", Group::scalar, "(a_1^q - sum a_j^q)(b_1^q - sum b_j^q) <= (a_1 b_1 - sum a_j b_j)^q",
                  "a_1^q > sum a_j^q, b_1^q > sum b_j^q, q = 1 + p", scalar_axes},
                 any_interval,
                 [](const CheckParams& par, const GenConfig&, Rng& rng) {
                   return scalar_generate(ScalarKind::popoviciu, par, rng);
                 },
                 [](const InstanceFamily& inst, const CheckParams& par, const Tolerance& tol) {
                   return scalar_aczel(inst, par, tol, ScalarKind::popoviciu);
                 }});
    t.push_back({{"mp3", Group::scalar,
                  "sum w_j (1 - sum_i a_ij^{1/p})^p <= (1 - sum_i (sum_j w_j a_ij)^{1/p})^p",
                  "sum_i a_ij^{1/p} <= 1, w on the simplex; dim is the inner count", scalar_axes},
                 any_interval,
                 [](const CheckParams& par, const GenConfig&, Rng& rng) {
                   return scalar_generate(ScalarKind::mp3, par, rng);
                 },
                 [](const InstanceFamily& inst, const CheckParams& par, const Tolerance& tol) {
                   return scalar_mp3(inst, par, tol, false);
                 }});
    t.push_back({{"mp1", Group::scalar,
                  "sum_j (M_j^{1/p} - sum_i a_ij^{1/p})^p <= ((sum_j M_j)^{1/p} - sum_i (sum_j a_ij)^{1/p})^p",
                  "sum_i a_ij^{1/p} <= M_j^{1/p}; dim is the inner count", scalar_axes},
                 any_interval,
                 [](const CheckParams& par, const GenConfig&, Rng& rng) {
                   return scalar_generate(ScalarKind::mp1, par, rng);
                 },
                 scalar_mp1});
    t.push_back({{"eq3", Group::scalar,
                  "(1 - sum_i sum_j w_j a_ij^{1/p})^p <= (1 - p) p^{p/(1-p)} + sum w_j (1 - sum_i a_ij^{1/p})^p",
                  "sum_i a_ij^{1/p} <= 1, w on the simplex; dim is the inner count", scalar_axes},
                 any_interval,
                 [](const CheckParams& par, const GenConfig&, Rng& rng) {
                   return scalar_generate(ScalarKind::eq3, par, rng);
                 },
                 [](const InstanceFamily& inst, const CheckParams& par, const Tolerance& tol) {
                   return scalar_mp3(inst, par, tol, true);
                 }});
    return t;
  }();
  return table;
}

const Entry& entry(std::string_view id) {
  for (const auto& e : entries()) {
    if (e.info.id == id) return e;
  }
  throw ParameterError("unknown check id '" + std::string(id) + "'");
}

}  // namespace

std::string to_string(Status status) {
  switch (status) {
    case Status::holds: return "holds";
    case Status::violated: return "violated";
    case Status::not_applicable: return "not_applicable";
  }
  return "?";
}

Status status_from_string(std::string_view name) {
  for (auto s : {Status::holds, Status::violated, Status::not_applicable}) {
    if (to_string(s) == name) return s;
  }
  throw SchemaError("unknown status '" + std::string(name) + "'");
}

std::string to_string(Group group) {
  switch (group) {
    case Group::forward: return "forward";
    case Group::reverse: return "reverse";
    case Group::chain: return "chain";
    case Group::scalar: return "scalar";
  }
  return "?";
}

const std::vector<CheckInfo>& registry() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

const CheckInfo& check_info(std::string_view id) { return entry(id).info; }

double scalar_exponent(ScalarKind kind, double p) {
  switch (kind) {
    case ScalarKind::bellman_classical: return 1.0 / p;
    case ScalarKind::aczel: return 2.0;
    case ScalarKind::popoviciu: return 1.0 + p;
    default: return p;
  }
}

std::optional<std::string> incompatible(std::string_view id, const CheckParams& params) {
  return entry(id).filter(params);
}

Generated generate(std::string_view id, const CheckParams& params, Rng& rng, const GenOptions& options) {
  const Entry& e = entry(id);
  if (auto reason = e.filter(params)) throw ParameterError(std::string(id) + ": " + *reason);
  GenConfig cfg;
  cfg.dim = params.dim;
  cfg.n = params.n;
  cfg.m = params.m;
  cfg.M = params.M;
  cfg.p = params.p;
  cfg.lambda = params.lambda;
  cfg.margin = options.margin;
  cfg.max_rejects = options.max_rejects;
  return e.generate(params, cfg, rng);
}

CheckOutcome check(std::string_view id, const InstanceFamily& inst, const CheckParams& params,
                   const Tolerance& tol) {
  const Entry& e = entry(id);
  CheckOutcome out;
  try {
    out = e.check(inst, params, tol);
  } catch (const GuardFailure& g) {
    out = CheckOutcome{};
    out.guard = g.name;
  } catch (const ConditioningError&) {
    out = CheckOutcome{};
    out.guard = "operand_conditioning";
  } catch (const DomainError&) {
    out = CheckOutcome{};
    out.guard = "spectrum_outside_domain";
  }
  out.id = std::string(id);
  if (!out.guard.empty()) out.status = Status::not_applicable;
  return out;
}

}  // namespace bellman
