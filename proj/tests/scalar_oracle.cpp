#include "scalar_oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "bellman/constants.hpp"
#include "bellman/high_precision.hpp"

namespace oracle {

namespace {

using bellman::CheckParams;
using bellman::HighPrec;
using bellman::InstanceFamily;
using bellman::RepresentingFunction;
using HP = HighPrec;

struct Sides {
  HP dominated;
  HP dominant;
};

HP entry(const bellman::HermitianMatrix& h) { return HP(h(0, 0).real()); }

std::vector<HP> column(const std::vector<bellman::HermitianMatrix>& ops) {
  std::vector<HP> out;
  for (const auto& h : ops) out.push_back(entry(h));
  return out;
}

HP sum(const std::vector<HP>& v) {
  HP s = 0;
  for (const auto& x : v) s += x;
  return s;
}

HP dot(const std::vector<double>& w, const std::vector<HP>& v) {
  HP s = 0;
  for (std::size_t j = 0; j < v.size(); ++j) s += HP(w[j]) * v[j];
  return s;
}

// Scalar connection: x s_f y = x f(y / x).
struct Mean {
  RepresentingFunction f;
  HP operator()(const HP& x, const HP& y) const { return x * f.eval(y / x); }
  HP powered(const HP& x, const HP& y, const HP& p) const { return x * pow(f.eval(y / x), p); }
};

Mean mean_of(const CheckParams& par) { return {RepresentingFunction::parse(par.mean)}; }

HP sum_means(const Mean& s, const std::vector<HP>& a, const std::vector<HP>& b, std::size_t from = 0) {
  HP out = 0;
  for (std::size_t j = from; j < a.size(); ++j) out += s(a[j], b[j]);
  return out;
}

HP gamma(const CheckParams& par) {
  return HP(bellman::ratio_constant(RepresentingFunction::parse(par.mean), par.m, par.M).value);
}

HP beta(const CheckParams& par) {
  return HP(bellman::gap_constant(RepresentingFunction::parse(par.mean), par.m, par.M).value);
}

using Rule = std::function<Sides(const InstanceFamily&, const CheckParams&)>;

Sides complement_pair(const InstanceFamily& inst, const CheckParams& par, const Mean& s, const HP& shift) {
  const auto a = column(inst.A);
  const auto b = column(inst.B);
  const HP p = par.p;
  return {pow(1 - sum_means(s, a, b), p), pow(shift + s(1 - sum(a), 1 - sum(b)), p)};
}

const std::map<std::string, Rule, std::less<>>& rules() {
  static const std::map<std::string, Rule, std::less<>> table{
      {"bell_forward",
       [](const InstanceFamily& inst, const CheckParams& par) {
         const auto a = column(inst.A);
         HP powered = 0;
         for (std::size_t j = 0; j < a.size(); ++j) powered += HP(inst.weights[j]) * pow(1 - a[j], HP(par.p));
         return Sides{powered, pow(1 - dot(inst.weights, a), HP(par.p))};
       }},
      {"mor2",
       [](const InstanceFamily& inst, const CheckParams& par) {
         const auto a = column(inst.A);
         const auto b = column(inst.B);
         const Mean s = mean_of(par);
         return Sides{s.powered(1 - sum(a), 1 - sum(b), par.p), pow(1 - sum_means(s, a, b), HP(par.p))};
       }},
      {"choi_davis_jensen",
       [](const InstanceFamily& inst, const CheckParams& par) {
         const HP fa = mean_of(par).f.eval(entry(inst.A[0]));
         return Sides{fa, fa};
       }},
      {"superadditivity",
       [](const InstanceFamily& inst, const CheckParams& par) {
         const auto a = column(inst.A);
         const auto b = column(inst.B);
         const Mean s = mean_of(par);
         return Sides{sum_means(s, a, b), s(sum(a), sum(b))};
       }},
      {"lemma31",
       [](const InstanceFamily& inst, const CheckParams& par) {
         const auto a = column(inst.A);
         const auto b = column(inst.B);
         const HP x = entry(inst.get("A"));
         const HP y = entry(inst.get("B"));
         const Mean s = mean_of(par);
         return Sides{s(x - sum(a), y - sum(b)), s(x, y) - sum_means(s, a, b)};
       }},
      {"lemma32",
       [](const InstanceFamily& inst, const CheckParams& par) {
         const HP x = entry(inst.get("A"));
         const HP y = entry(inst.get("B"));
         const Mean s = mean_of(par);
         return Sides{s.powered(x, y, par.p), pow(s(x, y), HP(par.p))};
       }},
      {"gamma_mond1",
       [](const InstanceFamily& inst, const CheckParams& par) {
         const HP fa = mean_of(par).f.eval(entry(inst.A[0]));
         return Sides{fa, gamma(par) * fa};
       }},
      {"gamma_mond2",
       [](const InstanceFamily& inst, const CheckParams& par) {
         const HP v = mean_of(par)(entry(inst.A[0]), entry(inst.B[0]));
         return Sides{v, gamma(par) * v};
       }},
      {"gamma_main",
       [](const InstanceFamily& inst, const CheckParams& par) {
         const auto a = column(inst.A);
         const auto b = column(inst.B);
         const Mean s = mean_of(par);
         return Sides{s(sum(a), sum(b)), gamma(par) * sum_means(s, a, b)};
       }},
      {"thm21",
       [](const InstanceFamily& inst, const CheckParams& par) {
         const auto a = column(inst.A);
         const auto b = column(inst.B);
         const Mean s = mean_of(par);
         const HP g = gamma(par);
         const HP p = par.p;
         return Sides{pow(1 - g * sum_means(s, a, b), p), pow(g, p) * pow(s(1 - sum(a), 1 - sum(b)), p)};
       }},
      {"lemma_bomb",
       [](const InstanceFamily& inst, const CheckParams& par) {
         const HP c = entry(inst.get("C"));
         const HP x = entry(inst.get("X"));
         const auto& f = mean_of(par).f;
         return Sides{f.eval(c * c * x), gamma(par) * (c * c * f.eval(x) + f.eval(HP(par.m)) * (1 - c * c))};
       }},
      {"lemma_bos12",
       [](const InstanceFamily& inst, const CheckParams& par) {
         const HP x = entry(inst.get("A"));
         const HP y = entry(inst.get("B"));
         const Mean s = mean_of(par);
         const HP p = par.p;
         const HP fm = s.f.eval(HP(par.m));
         const HP fM = s.f.eval(HP(par.M));
         const HP gh = bellman::power_ratio_constant(static_cast<double>(fm), static_cast<double>(fM), par.p).value;
         return Sides{pow(s(x, y), p), gh * (pow(fm, p) * (1 - x) + s.powered(x, y, p))};
       }},
      {"cor24",
       [](const InstanceFamily& inst, const CheckParams& par) {
         const auto a = column(inst.A);
         const auto b = column(inst.B);
         const Mean s{RepresentingFunction::arithmetic(par.lambda)};
         const HP p = par.p;
         const HP delta = bellman::affine_power_ratio_constant(par.lambda, par.m, par.M, par.p).value;
         const HP fm = s.f.eval(HP(par.m));
         return Sides{pow(1 - sum_means(s, a, b), p),
                      delta * (pow(fm, p) * sum(a) + s.powered(1 - sum(a), 1 - sum(b), p))};
       }},
      {"additive_mond1o1",
       [](const InstanceFamily& inst, const CheckParams& par) {
         const HP fa = mean_of(par).f.eval(entry(inst.A[0]));
         return Sides{fa, beta(par) + fa};
       }},
      {"additive_kour",
       [](const InstanceFamily& inst, const CheckParams& par) {
         const HP x = entry(inst.A[0]);
         const HP v = mean_of(par)(x, entry(inst.B[0]));
         return Sides{v, beta(par) * x + v};
       }},
      {"additive_reverse234",
       [](const InstanceFamily& inst, const CheckParams& par) {
         const auto a = column(inst.A);
         const auto b = column(inst.B);
         const Mean s = mean_of(par);
         return Sides{s(sum(a), sum(b)), beta(par) * sum(a) + sum_means(s, a, b)};
       }},
      {"additive_jr",
       [](const InstanceFamily& inst, const CheckParams& par) {
         const auto a = column(inst.A);
         const auto& f = mean_of(par).f;
         HP images = 0;
         for (std::size_t j = 0; j < a.size(); ++j) images += HP(inst.weights[j]) * f.eval(a[j]);
         return Sides{f.eval(dot(inst.weights, a)), beta(par) + images};
       }},
      {"prop25",
       [](const InstanceFamily& inst, const CheckParams& par) {
         return complement_pair(inst, par, mean_of(par), beta(par));
       }},
      {"cor26",
       [](const InstanceFamily& inst, const CheckParams& par) {
         const HP zeta = bellman::aczel_gap_constant(par.m, par.M, par.lambda).value;
         return complement_pair(inst, par, Mean{RepresentingFunction::geometric(par.lambda)}, zeta);
       }},
      {"cor28",
       [](const InstanceFamily& inst, const CheckParams& par) {
         const auto a = column(inst.A);
         const HP p = par.p;
         const HP delta = bellman::bellman_gap_constant(par.m, par.M, par.p).value;
         HP plain = 0;
         HP powered = 0;
         for (std::size_t j = 0; j < a.size(); ++j) {
           plain += HP(inst.weights[j]) * (1 - a[j]);
           powered += HP(inst.weights[j]) * pow(1 - a[j], p);
         }
         return Sides{pow(plain, p), delta + powered};
       }},
      {"cor210",
       [](const InstanceFamily& inst, const CheckParams& par) {
         const auto a = column(inst.A);
         HP logs = 0;
         for (std::size_t j = 0; j < a.size(); ++j) logs += HP(inst.weights[j]) * log(a[j]);
         return Sides{log(dot(inst.weights, a)), HP(bellman::log_gap_constant(par.m, par.M).value) + logs};
       }},
  };
  return table;
}

// lhs <= mid <= rhs; the weaker link decides.
ScalarSides chain(const HP& lhs, const HP& mid, const HP& rhs) {
  const HP first = mid - lhs;
  const HP second = rhs - mid;
  const bool first_weaker = first <= second;
  const HP scale = first_weaker ? std::max(abs(lhs), abs(mid)) : std::max(abs(mid), abs(rhs));
  return {static_cast<double>(first_weaker ? first : second), static_cast<double>(scale)};
}

}  // namespace

std::optional<ScalarSides> evaluate(std::string_view id, const InstanceFamily& inst, const CheckParams& par) {
  if (id == "cor28_eq2") return evaluate("cor28", inst, par);
  if (id == "thm33" || id == "thm34") {
    const auto a = column(inst.A);
    const auto b = column(inst.B);
    const Mean s = mean_of(par);
    const HP p = par.p;
    std::vector<HP> t(a.size(), HP(0));
    if (id == "thm33") {
      std::fill(t.begin(), t.begin() + par.k, HP(1));
    } else {
      for (std::size_t j = 0; j < t.size(); ++j) t[j] = inst.scalars[0][j];
    }
    HP ta = 0, tb = 0, rest = 0;
    for (std::size_t j = 0; j < a.size(); ++j) {
      ta += t[j] * a[j];
      tb += t[j] * b[j];
      rest += (1 - t[j]) * s(a[j], b[j]);
    }
    return chain(s.powered(1 - sum(a), 1 - sum(b), p), pow(s(1 - ta, 1 - tb) - rest, p),
                 pow(1 - sum_means(s, a, b), p));
  }
  const auto it = rules().find(id);
  if (it == rules().end()) return std::nullopt;
  const Sides sides = it->second(inst, par);
  return ScalarSides{static_cast<double>(sides.dominant - sides.dominated),
                     static_cast<double>(std::max(abs(sides.dominated), abs(sides.dominant)))};
}

}  // namespace oracle
