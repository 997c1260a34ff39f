#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "bellman/hermitian.hpp"
#include "bellman/high_precision.hpp"

namespace bellman {

/// A scalar function on an interval, with the attributes the inequalities
/// care about. Built-ins cover the weighted arithmetic and geometric means,
/// powers, log, (1 - t)^p, and the two composition forms h(f(t)) and
/// f(t)^p. Values are immutable and cheap to copy.
///
/// Textual ids:
///   "arith:l"               t -> (1 - l) + l t
///   "geom:l"                t -> t^l
///   "power:p"               t -> t^p
///   "log"                   t -> log t
///   "cpow:p"                t -> (1 - t)^p
///   "powered:<id>:p"        t -> f(t)^p
///   "composed:power:p:<id>" t -> (f(t))^p written as h o f with h = t^p
class RepresentingFunction {
 public:
  static RepresentingFunction arithmetic(double lambda);
  static RepresentingFunction geometric(double lambda);
  static RepresentingFunction power(double p);
  static RepresentingFunction log();
  static RepresentingFunction complement_power(double p);
  static RepresentingFunction composed(const RepresentingFunction& outer, const RepresentingFunction& inner);
  static RepresentingFunction powered(const RepresentingFunction& inner, double p);

  /// Throws ParameterError on an unknown or malformed id.
  static RepresentingFunction parse(std::string_view id);

  const std::string& label() const;
  double operator()(double t) const;
  HighPrec eval(const HighPrec& t) const;
  double derivative(double t) const;
  Interval domain() const;

  bool operator_monotone() const;
  bool concave() const;
  /// f(1) == 1 exactly.
  bool normalized() const;

  /// Matrix functional calculus with the function's own domain as guard.
  HermitianMatrix apply(const HermitianMatrix& h) const;

  struct Node;

 private:
  explicit RepresentingFunction(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

/// Shortest round-trip decimal form of a double, as used in ids and labels.
std::string format_number(double value);

/// Parses a full string as a double; throws ParameterError otherwise.
double parse_number(std::string_view text);

}  // namespace bellman
