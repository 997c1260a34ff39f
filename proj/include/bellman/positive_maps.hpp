#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "bellman/hermitian.hpp"
#include "bellman/random.hpp"

namespace bellman {

class PositiveMap;

namespace maps {

struct Identity {
  int dim;
};

/// X -> V* X V with V (dim_in x dim_out) an isometry.
struct Compression {
  ComplexMatrix v;
};

/// X -> sum_i w_i U_i* X U_i.
struct UnitaryMixture {
  std::vector<double> weights;
  std::vector<ComplexMatrix> unitaries;
};

/// Keeps the diagonal blocks of the given sizes, zeroes the rest.
struct Pinching {
  std::vector<int> blocks;
};

/// diag(X_1, ..., X_n) -> (1/n) sum_j X_j on n blocks of size block_dim.
/// Off-diagonal blocks of the input are ignored.
struct BlockAverage {
  int n;
  int block_dim;
};

/// diag(A_1, ..., A_n) -> sum_j w_j Phi_j(A_j); the inner maps share one
/// output dimension.
struct WeightedFamily {
  std::vector<double> weights;
  std::vector<PositiveMap> maps;
};

using Variant = std::variant<Identity, Compression, UnitaryMixture, Pinching, BlockAverage, WeightedFamily>;

}  // namespace maps

/// A concrete unital positive linear map. Construction validates the
/// variant's invariants (isometry, unitarity, weights on the simplex,
/// matching dimensions) and throws ParameterError otherwise.
class PositiveMap {
 public:
  static PositiveMap identity(int dim);
  static PositiveMap compression(ComplexMatrix v, const Tolerance& tol = {});
  static PositiveMap unitary_mixture(std::vector<double> weights, std::vector<ComplexMatrix> unitaries,
                                     const Tolerance& tol = {});
  static PositiveMap pinching(std::vector<int> blocks);
  static PositiveMap block_average(int n, int block_dim);
  static PositiveMap weighted_family(std::vector<double> weights, std::vector<PositiveMap> maps);

  int input_dim() const;
  int output_dim() const;
  std::string kind() const;
  const maps::Variant& variant() const { return *spec_; }

  /// Throws DimensionError if x.dim() != input_dim().
  HermitianMatrix apply(const HermitianMatrix& x) const;

 private:
  explicit PositiveMap(maps::Variant spec);
  std::shared_ptr<const maps::Variant> spec_;
};

/// slack = -||Phi(I) - I||; holds when within tolerance.
OrderVerdict check_unital(const PositiveMap& map, const Tolerance& tol = {});

/// Applies the map to `samples` random PSD inputs and checks that every
/// output is PSD within tolerance.
bool check_positive(const PositiveMap& map, int samples, Rng& rng, const Tolerance& tol = {});

/// diag(X_1, ..., X_n).
HermitianMatrix block_diagonal(const std::vector<HermitianMatrix>& blocks);

}  // namespace bellman
