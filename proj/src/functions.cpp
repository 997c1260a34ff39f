#include "bellman/functions.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <system_error>
#include <variant>

#include "bellman/errors.hpp"

namespace bellman {

std::string format_number(double value) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

double parse_number(std::string_view text) {
  double value = 0.0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size() || text.empty()) {
    throw ParameterError("not a number: '" + std::string(text) + "'");
  }
  return value;
}

namespace {

struct Affine {
  double lambda;
};
struct Power {
  double p;
  bool geometric;  // label as "geom:" rather than "power:"
};
struct Log {};
struct ComplementPower {
  double p;
};
struct Composed {
  RepresentingFunction outer;
  RepresentingFunction inner;
};
struct Powered {
  RepresentingFunction inner;
  double p;
};

}  // namespace

struct RepresentingFunction::Node {
  std::variant<Affine, Power, Log, ComplementPower, Composed, Powered> kind;
  std::string label;
};

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_unit(double v, const char* what) {
  if (!(v >= 0.0 && v <= 1.0)) throw ParameterError(std::string(what) + " must lie in [0, 1], got " + format_number(v));
}

}  // namespace

RepresentingFunction::RepresentingFunction(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

RepresentingFunction RepresentingFunction::arithmetic(double lambda) {
  require_unit(lambda, "arithmetic weight");
  return RepresentingFunction(std::make_shared<const Node>(Node{Affine{lambda}, "arith:" + format_number(lambda)}));
}

RepresentingFunction RepresentingFunction::geometric(double lambda) {
  require_unit(lambda, "geometric weight");
  return RepresentingFunction(
      std::make_shared<const Node>(Node{Power{lambda, true}, "geom:" + format_number(lambda)}));
}

RepresentingFunction RepresentingFunction::power(double p) {
  require_unit(p, "power exponent");
  return RepresentingFunction(std::make_shared<const Node>(Node{Power{p, false}, "power:" + format_number(p)}));
}

RepresentingFunction RepresentingFunction::log() {
  return RepresentingFunction(std::make_shared<const Node>(Node{Log{}, "log"}));
}

RepresentingFunction RepresentingFunction::complement_power(double p) {
  if (!(p > 0.0 && p <= 1.0)) throw ParameterError("complement power exponent must lie in (0, 1]");
  return RepresentingFunction(std::make_shared<const Node>(Node{ComplementPower{p}, "cpow:" + format_number(p)}));
}

RepresentingFunction RepresentingFunction::composed(const RepresentingFunction& outer,
                                                    const RepresentingFunction& inner) {
  return RepresentingFunction(
      std::make_shared<const Node>(Node{Composed{outer, inner}, "composed:" + outer.label() + ":" + inner.label()}));
}

RepresentingFunction RepresentingFunction::powered(const RepresentingFunction& inner, double p) {
  require_unit(p, "powered exponent");
  return RepresentingFunction(
      std::make_shared<const Node>(Node{Powered{inner, p}, "powered:" + inner.label() + ":" + format_number(p)}));
}

RepresentingFunction RepresentingFunction::parse(std::string_view id) {
  auto starts = [&](std::string_view prefix) { return id.substr(0, prefix.size()) == prefix; };
  if (id == "log") return log();
  if (starts("arith:")) return arithmetic(parse_number(id.substr(6)));
  if (starts("geom:")) return geometric(parse_number(id.substr(5)));
  if (starts("power:")) return power(parse_number(id.substr(6)));
  if (starts("cpow:")) return complement_power(parse_number(id.substr(5)));
  if (starts("powered:")) {
    std::string_view rest = id.substr(8);
    const auto colon = rest.rfind(':');
    if (colon == std::string_view::npos) throw ParameterError("malformed function id '" + std::string(id) + "'");
    return powered(parse(rest.substr(0, colon)), parse_number(rest.substr(colon + 1)));
  }
  if (starts("composed:power:")) {
    std::string_view rest = id.substr(15);
    const auto colon = rest.find(':');
    if (colon == std::string_view::npos) throw ParameterError("malformed function id '" + std::string(id) + "'");
    return composed(power(parse_number(rest.substr(0, colon))), parse(rest.substr(colon + 1)));
  }
  throw ParameterError("unknown function id '" + std::string(id) + "'");
}

const std::string& RepresentingFunction::label() const { return node_->label; }

double RepresentingFunction::operator()(double t) const {
  return std::visit(
      Overloaded{
          [&](const Affine& a) { return 1.0 + a.lambda * (t - 1.0); },
          [&](const Power& p) { return std::pow(t, p.p); },
          [&](const Log&) { return std::log(t); },
          [&](const ComplementPower& c) { return std::pow(1.0 - t, c.p); },
          [&](const Composed& c) { return c.outer(c.inner(t)); },
          [&](const Powered& pw) { return std::pow(pw.inner(t), pw.p); },
      },
      node_->kind);
}

HighPrec RepresentingFunction::eval(const HighPrec& t) const {
  using boost::multiprecision::log;
  using boost::multiprecision::pow;
  return std::visit(
      Overloaded{
          [&](const Affine& a) { return HighPrec(1) + HighPrec(a.lambda) * (t - HighPrec(1)); },
          [&](const Power& p) {
            if (t == 0) return p.p == 0.0 ? HighPrec(1) : HighPrec(0);
            return HighPrec(pow(t, HighPrec(p.p)));
          },
          [&](const Log&) { return HighPrec(log(t)); },
          [&](const ComplementPower& c) {
            const HighPrec base = HighPrec(1) - t;
            if (base == 0) return HighPrec(0);
            return HighPrec(pow(base, HighPrec(c.p)));
          },
          [&](const Composed& c) { return c.outer.eval(c.inner.eval(t)); },
          [&](const Powered& pw) {
            const HighPrec base = pw.inner.eval(t);
            if (base == 0) return pw.p == 0.0 ? HighPrec(1) : HighPrec(0);
            return HighPrec(pow(base, HighPrec(pw.p)));
          },
      },
      node_->kind);
}

double RepresentingFunction::derivative(double t) const {
  return std::visit(Overloaded{
                        [&](const Affine& a) { return a.lambda; },
                        [&](const Power& p) { return p.p == 0.0 ? 0.0 : p.p * std::pow(t, p.p - 1.0); },
                        [&](const Log&) { return 1.0 / t; },
                        [&](const ComplementPower& c) { return -c.p * std::pow(1.0 - t, c.p - 1.0); },
                        [&](const Composed& c) { return c.outer.derivative(c.inner(t)) * c.inner.derivative(t); },
                        [&](const Powered& pw) {
                          return pw.p == 0.0 ? 0.0
                                             : pw.p * std::pow(pw.inner(t), pw.p - 1.0) * pw.inner.derivative(t);
                        },
                    },
                    node_->kind);
}

Interval RepresentingFunction::domain() const {
  return std::visit(Overloaded{
                        [](const Affine&) { return Interval::nonnegative(); },
                        [](const Power&) { return Interval::nonnegative(); },
                        [](const Log&) { return Interval::positive(); },
                        [](const ComplementPower&) {
                          return Interval{-std::numeric_limits<double>::infinity(), 1.0, false};
                        },
                        [](const Composed& c) { return c.inner.domain(); },
                        [](const Powered& pw) { return pw.inner.domain(); },
                    },
                    node_->kind);
}

bool RepresentingFunction::operator_monotone() const {
  return std::visit(Overloaded{
                        [](const Affine&) { return true; },
                        [](const Power&) { return true; },
                        [](const Log&) { return true; },
                        [](const ComplementPower&) { return false; },
                        [](const Composed& c) { return c.outer.operator_monotone() && c.inner.operator_monotone(); },
                        [](const Powered& pw) { return pw.inner.operator_monotone(); },
                    },
                    node_->kind);
}

bool RepresentingFunction::concave() const {
  return std::visit(Overloaded{
                        [](const Affine&) { return true; },
                        [](const Power&) { return true; },
                        [](const Log&) { return true; },
                        [](const ComplementPower&) { return true; },
                        // concave nondecreasing outer of concave inner
                        [](const Composed& c) {
                          return c.outer.operator_monotone() && c.outer.concave() && c.inner.concave();
                        },
                        [](const Powered& pw) { return pw.inner.concave(); },
                    },
                    node_->kind);
}

bool RepresentingFunction::normalized() const {
  if (!domain().contains(1.0)) return false;
  return (*this)(1.0) == 1.0;
}

HermitianMatrix RepresentingFunction::apply(const HermitianMatrix& h) const {
  return apply_function(h, [this](double t) { return (*this)(t); }, domain());
}

}  // namespace bellman
