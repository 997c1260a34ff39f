#pragma once

#include <string_view>

#include "bellman/functions.hpp"
#include "bellman/hermitian.hpp"

namespace bellman {

/// A Kubo-Ando mean: an operator monotone representing function with
/// f(1) = 1. Construction rejects anything else (log, (1 - t)^p, ...).
class MeanSpec {
 public:
  explicit MeanSpec(RepresentingFunction f);
  static MeanSpec parse(std::string_view id) { return MeanSpec(RepresentingFunction::parse(id)); }

  const RepresentingFunction& function() const { return f_; }
  const std::string& label() const { return f_.label(); }

 private:
  RepresentingFunction f_;
};

/// A sigma_f B = A^{1/2} f(A^{-1/2} B A^{-1/2}) A^{1/2}.
///
/// A must clear the positivity floor (ConditioningError otherwise; the
/// operation never regularizes). B must be positive semidefinite up to the
/// clipping margin of the functional calculus.
HermitianMatrix mean(const HermitianMatrix& a, const HermitianMatrix& b, const MeanSpec& f);

/// (1 - lambda) A + lambda B. Accepts singular operands.
HermitianMatrix weighted_arithmetic(const HermitianMatrix& a, const HermitianMatrix& b, double lambda);

/// A^{1/2} (A^{-1/2} B A^{-1/2})^lambda A^{1/2}.
HermitianMatrix weighted_geometric(const HermitianMatrix& a, const HermitianMatrix& b, double lambda);

}  // namespace bellman
