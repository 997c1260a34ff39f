#pragma once

#include <string>

#include "bellman/functions.hpp"

namespace bellman {

/// Secant line t -> mu t + nu of f through (m, f(m)) and (M, f(M)).
struct Chord {
  double mu = 0.0;
  double nu = 0.0;
  double m = 0.0;
  double M = 0.0;

  double operator()(double t) const { return mu * t + nu; }
};

enum class Method { closed_form, oracle };

std::string to_string(Method method);

struct ConstantResult {
  double value = 0.0;
  double argmax = 0.0;  // maximizer, in [m, M] or in the image interval
  Method method = Method::oracle;
};

/// Exponents are confined to [kMinExponent, 1 - kMinExponent]; the closed
/// forms raise to p / (p - 1) and lose all accuracy near the ends.
inline constexpr double kMinExponent = 1e-3;

/// Throws ParameterError if M - m < 1e-12 and DomainError if [m, M] leaves
/// the domain of f.
Chord chord(const RepresentingFunction& f, double m, double M);

/// gamma_f = max_{[m, M]} f(t) / (mu t + nu), by the grid + golden-section
/// oracle in quad precision. DomainError if the chord is not positive on
/// [m, M] (the ratio would be unbounded).
ConstantResult ratio_constant(const RepresentingFunction& f, double m, double M);

/// beta_f = max_{[m, M]} f(t) - mu t - nu, same oracle.
ConstantResult gap_constant(const RepresentingFunction& f, double m, double M);

/// Closed form of the ratio constant for h(t) = t^p on [a, b], 0 < a < b.
ConstantResult power_ratio_constant(double a, double b, double p);

/// Ratio constant of t^p over the image [f(m), f(M)] of the weighted
/// arithmetic representing function f(t) = (1 - lambda) + lambda t.
ConstantResult affine_power_ratio_constant(double lambda, double m, double M, double p);

/// Closed form of the gap constant of (1 - t)^p on [m, M], 0 <= m < M <= 1.
/// M = 1 is accepted (the limit is finite); M > 1 is a HypothesisError.
ConstantResult bellman_gap_constant(double m, double M, double p);

/// Maximizer of (1 - t)^p minus its chord on [m, M].
double bellman_gap_argmax(double m, double M, double p);

/// Closed form of the gap constant of t^p on [m, M], 0 < m < M.
ConstantResult aczel_gap_constant(double m, double M, double p);

/// L(a, b) = (b - a) / (log b - log a), with L(a, a) = a.
double log_mean(double a, double b);

/// Closed form of the gap constant of log on [m, M]:
/// log[(1/e) (M^m / m^M)^{1/(M-m)} L(m, M)], attained at t = L(m, M).
ConstantResult log_gap_constant(double m, double M);

}  // namespace bellman
