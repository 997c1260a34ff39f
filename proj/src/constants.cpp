#include "bellman/constants.hpp"

#include <cmath>
#include <limits>

#include "bellman/errors.hpp"

namespace bellman {

std::string to_string(Method method) { return method == Method::closed_form ? "closed_form" : "oracle"; }

namespace {

constexpr int kGridPoints = 10000;
constexpr double kGoldenWidth = 1e-12;

void require_interval(double m, double M) {
  if (!std::isfinite(m) || !std::isfinite(M)) throw ParameterError("interval endpoints must be finite");
  if (!(M - m >= 1e-12)) {
    throw ParameterError("degenerate interval [" + format_number(m) + ", " + format_number(M) + "]");
  }
}

void require_exponent(double p) {
  if (!(p >= kMinExponent && p <= 1.0 - kMinExponent)) {
    throw ParameterError("exponent p = " + format_number(p) + " outside [" + format_number(kMinExponent) + ", " +
                         format_number(1.0 - kMinExponent) + "]");
  }
}

void require_in_domain(const RepresentingFunction& f, double m, double M) {
  const Interval dom = f.domain();
  if (!dom.contains(m) || !dom.contains(M)) {
    throw DomainError("[" + format_number(m) + ", " + format_number(M) + "] is not inside the domain of " +
                      f.label());
  }
}

struct HighChord {
  HighPrec mu;
  HighPrec nu;
};

HighChord high_chord(const RepresentingFunction& f, double m, double M) {
  const HighPrec hm(m), hM(M);
  const HighPrec fm = f.eval(hm), fM = f.eval(hM);
  return {(fM - fm) / (hM - hm), (hM * fm - hm * fM) / (hM - hm)};
}

}  // namespace

namespace detail {

struct OracleMax {
  HighPrec value;
  HighPrec argmax;
  double grid_max;
};

// Brackets the maximum on a 10^4-point grid in double precision, then
// golden-section refines in quad precision down to an interval width of
// 1e-12. Unimodality is assumed and checked against the raw grid maximum.
template <class DoubleObjective, class HighObjective>
OracleMax maximize_unimodal(const DoubleObjective& fd, const HighObjective& fh, double lo, double hi) {
  int best = 0;
  double grid_max = -std::numeric_limits<double>::infinity();
  const double step = (hi - lo) / (kGridPoints - 1);
  for (int i = 0; i < kGridPoints; ++i) {
    const double t = i == kGridPoints - 1 ? hi : lo + step * i;
    const double v = fd(t);
    if (v > grid_max) {
      grid_max = v;
      best = i;
    }
  }
  const double left = best == 0 ? lo : lo + step * (best - 1);
  const double right = best == kGridPoints - 1 ? hi : lo + step * (best + 1);

  const HighPrec inv_phi = (boost::multiprecision::sqrt(HighPrec(5)) - 1) / 2;
  HighPrec a(left), b(right);
  HighPrec c = b - inv_phi * (b - a);
  HighPrec d = a + inv_phi * (b - a);
  HighPrec fc = fh(c), fdv = fh(d);
  while (b - a > HighPrec(kGoldenWidth)) {
    if (fc >= fdv) {
      b = d;
      d = c;
      fdv = fc;
      c = b - inv_phi * (b - a);
      fc = fh(c);
    } else {
      a = c;
      c = d;
      fc = fdv;
      d = a + inv_phi * (b - a);
      fdv = fh(d);
    }
  }
  OracleMax out{fh((a + b) / 2), (a + b) / 2, grid_max};
  // The grid point and the interval ends compete as well; a flat or
  // boundary maximum is then reported at the point that attains it.
  for (const HighPrec& t : {HighPrec(left), HighPrec(right), HighPrec(lo + step * best)}) {
    const HighPrec v = fh(t);
    if (v > out.value) {
      out.value = v;
      out.argmax = t;
    }
  }
  if (out.value < HighPrec(grid_max) - HighPrec(1e-12) * (1 + boost::multiprecision::abs(HighPrec(grid_max)))) {
    throw Error("golden-section refinement fell below the grid maximum; objective is not unimodal");
  }
  return out;
}

}  // namespace detail

Chord chord(const RepresentingFunction& f, double m, double M) {
  require_interval(m, M);
  require_in_domain(f, m, M);
  const double fm = f(m), fM = f(M);
  return {(fM - fm) / (M - m), (M * fm - m * fM) / (M - m), m, M};
}

ConstantResult ratio_constant(const RepresentingFunction& f, double m, double M) {
  const Chord line = chord(f, m, M);
  if (!(line(m) > 0.0) || !(line(M) > 0.0)) {
    throw DomainError("chord of " + f.label() + " is not positive on [" + format_number(m) + ", " +
                      format_number(M) + "]; the ratio is unbounded");
  }
  const HighChord hc = high_chord(f, m, M);
  const auto result = detail::maximize_unimodal([&](double t) { return f(t) / line(t); },
                                                [&](const HighPrec& t) { return f.eval(t) / (hc.mu * t + hc.nu); },
                                                m, M);
  return {static_cast<double>(result.value), static_cast<double>(result.argmax), Method::oracle};
}

ConstantResult gap_constant(const RepresentingFunction& f, double m, double M) {
  const Chord line = chord(f, m, M);
  const HighChord hc = high_chord(f, m, M);
  const auto result = detail::maximize_unimodal([&](double t) { return f(t) - line(t); },
                                                [&](const HighPrec& t) { return f.eval(t) - (hc.mu * t + hc.nu); },
                                                m, M);
  return {static_cast<double>(result.value), static_cast<double>(result.argmax), Method::oracle};
}

ConstantResult power_ratio_constant(double a, double b, double p) {
  require_exponent(p);
  if (!(a > 0.0)) throw ParameterError("power_ratio_constant: need a > 0");
  require_interval(a, b);
  const double ap = std::pow(a, p), bp = std::pow(b, p);
  const double cross = b * ap - a * bp;
  const double value = std::pow(p, p) * (b - a) * std::pow(cross, p - 1.0) /
                       (std::pow(1.0 - p, p - 1.0) * std::pow(bp - ap, p));
  const double argmax = p * cross / ((1.0 - p) * (bp - ap));
  return {value, argmax, Method::closed_form};
}

ConstantResult affine_power_ratio_constant(double lambda, double m, double M, double p) {
  if (!(lambda > 0.0 && lambda <= 1.0)) {
    throw ParameterError("affine_power_ratio_constant: lambda must lie in (0, 1]; lambda = 0 makes f constant");
  }
  if (!(m > 0.0)) throw ParameterError("affine_power_ratio_constant: need m > 0");
  require_interval(m, M);
  const double fm = 1.0 + lambda * (m - 1.0);
  const double fM = 1.0 + lambda * (M - 1.0);
  return power_ratio_constant(fm, fM, p);
}

double bellman_gap_argmax(double m, double M, double p) {
  require_exponent(p);
  if (!(m >= 0.0)) throw ParameterError("bellman gap: need m >= 0");
  if (M > 1.0) throw HypothesisError("bellman gap: need M <= 1 (the operators must lie below the identity)");
  require_interval(m, M);
  const double k = (std::pow(1.0 - m, p) - std::pow(1.0 - M, p)) / (p * (M - m));
  return 1.0 - std::pow(k, 1.0 / (p - 1.0));
}

ConstantResult bellman_gap_constant(double m, double M, double p) {
  const double t0 = bellman_gap_argmax(m, M, p);
  const double k = (std::pow(1.0 - m, p) - std::pow(1.0 - M, p)) / (p * (M - m));
  const double value = (1.0 - p) * std::pow(k, p / (p - 1.0)) +
                       ((1.0 - M) * std::pow(1.0 - m, p) - (1.0 - m) * std::pow(1.0 - M, p)) / (M - m);
  return {value, t0, Method::closed_form};
}

ConstantResult aczel_gap_constant(double m, double M, double p) {
  require_exponent(p);
  if (!(m > 0.0)) throw ParameterError("aczel gap: need m > 0");
  require_interval(m, M);
  const double slope_ratio = (std::pow(M, p) - std::pow(m, p)) / (p * (M - m));
  const double value =
      (1.0 - p) * std::pow(slope_ratio, p / (p - 1.0)) - (M * std::pow(m, p) - m * std::pow(M, p)) / (M - m);
  return {value, std::pow(slope_ratio, 1.0 / (p - 1.0)), Method::closed_form};
}

double log_mean(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw ParameterError("log_mean: arguments must be positive");
  if (a == b) return a;
  const double denom = std::log(b / a);
  if (denom == 0.0) return a;
  return (b - a) / denom;
}

ConstantResult log_gap_constant(double m, double M) {
  if (!(m > 0.0)) throw ParameterError("log gap: need m > 0");
  require_interval(m, M);
  const double l = log_mean(m, M);
  const double value = -1.0 + (m * std::log(M) - M * std::log(m)) / (M - m) + std::log(l);
  return {value, l, Method::closed_form};
}

}  // namespace bellman
