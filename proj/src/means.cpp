#include "bellman/means.hpp"

#include <cmath>

#include "bellman/errors.hpp"

namespace bellman {

MeanSpec::MeanSpec(RepresentingFunction f) : f_(std::move(f)) {
  if (!f_.normalized()) throw ParameterError("'" + f_.label() + "' is not normalized (f(1) != 1), not a mean");
  if (!f_.operator_monotone()) throw ParameterError("'" + f_.label() + "' is not operator monotone, not a mean");
}

namespace {

void require_same_dim(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("mean: dimension mismatch " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
  }
}

}  // namespace

HermitianMatrix mean(const HermitianMatrix& a, const HermitianMatrix& b, const MeanSpec& f) {
  require_same_dim(a, b);
  const SqrtPair roots = sqrt_pair(a);
  const HermitianMatrix inner = congruence(roots.inv_sqrt.matrix(), b);
  return congruence(roots.sqrt.matrix(), f.function().apply(inner));
}

HermitianMatrix weighted_arithmetic(const HermitianMatrix& a, const HermitianMatrix& b, double lambda) {
  require_same_dim(a, b);
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw ParameterError("weighted_arithmetic: lambda must lie in [0, 1]");
  return HermitianMatrix((1.0 - lambda) * a.matrix() + lambda * b.matrix());
}

HermitianMatrix weighted_geometric(const HermitianMatrix& a, const HermitianMatrix& b, double lambda) {
  require_same_dim(a, b);
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw ParameterError("weighted_geometric: lambda must lie in [0, 1]");
  const SqrtPair roots = sqrt_pair(a);
  return congruence(roots.sqrt.matrix(), power(congruence(roots.inv_sqrt.matrix(), b), lambda));
}

}  // namespace bellman
