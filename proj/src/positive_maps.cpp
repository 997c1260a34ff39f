#include "bellman/positive_maps.hpp"

#include <cmath>
#include <numeric>

#include "bellman/errors.hpp"

namespace bellman {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_simplex(const std::vector<double>& w, const char* what) {
  if (w.empty()) throw ParameterError(std::string(what) + ": needs at least one weight");
  double total = 0.0;
  for (double x : w) {
    if (!(x > 0.0) || !std::isfinite(x)) throw ParameterError(std::string(what) + ": weights must be positive");
    total += x;
  }
  if (std::abs(total - 1.0) > 1e-12) throw ParameterError(std::string(what) + ": weights must sum to 1");
}

}  // namespace

PositiveMap::PositiveMap(maps::Variant spec) : spec_(std::make_shared<const maps::Variant>(std::move(spec))) {}

PositiveMap PositiveMap::identity(int dim) {
  if (dim < 1) throw ParameterError("identity map: dim must be >= 1");
  return PositiveMap(maps::Identity{dim});
}

PositiveMap PositiveMap::compression(ComplexMatrix v, const Tolerance& tol) {
  if (v.cols() < 1 || v.rows() < v.cols()) throw ParameterError("compression: V must be dim_in x dim_out, dim_in >= dim_out");
  const double defect = (v.adjoint() * v - ComplexMatrix::Identity(v.cols(), v.cols())).cwiseAbs().maxCoeff();
  if (defect > tol.bound(1.0)) {
    throw ParameterError("compression: V is not an isometry, ||V*V - I||_max = " + std::to_string(defect));
  }
  return PositiveMap(maps::Compression{std::move(v)});
}

PositiveMap PositiveMap::unitary_mixture(std::vector<double> weights, std::vector<ComplexMatrix> unitaries,
                                         const Tolerance& tol) {
  require_simplex(weights, "unitary mixture");
  if (weights.size() != unitaries.size()) throw ParameterError("unitary mixture: one weight per unitary");
  const auto dim = unitaries.front().rows();
  for (const auto& u : unitaries) {
    if (u.rows() != dim || u.cols() != dim) throw ParameterError("unitary mixture: unitaries must share one square shape");
    const double defect = (u.adjoint() * u - ComplexMatrix::Identity(dim, dim)).cwiseAbs().maxCoeff();
    if (defect > tol.bound(1.0)) throw ParameterError("unitary mixture: matrix is not unitary");
  }
  return PositiveMap(maps::UnitaryMixture{std::move(weights), std::move(unitaries)});
}

PositiveMap PositiveMap::pinching(std::vector<int> blocks) {
  if (blocks.empty()) throw ParameterError("pinching: needs at least one block");
  for (int b : blocks) {
    if (b < 1) throw ParameterError("pinching: block sizes must be >= 1");
  }
  return PositiveMap(maps::Pinching{std::move(blocks)});
}

PositiveMap PositiveMap::block_average(int n, int block_dim) {
  if (n < 1 || block_dim < 1) throw ParameterError("block average: n and block_dim must be >= 1");
  return PositiveMap(maps::BlockAverage{n, block_dim});
}

PositiveMap PositiveMap::weighted_family(std::vector<double> weights, std::vector<PositiveMap> inner) {
  require_simplex(weights, "weighted family");
  if (weights.size() != inner.size()) throw ParameterError("weighted family: one weight per inner map");
  const int out = inner.front().output_dim();
  for (const auto& m : inner) {
    if (m.output_dim() != out) throw ParameterError("weighted family: inner maps must share an output dimension");
  }
  return PositiveMap(maps::WeightedFamily{std::move(weights), std::move(inner)});
}

int PositiveMap::input_dim() const {
  return std::visit(Overloaded{
                        [](const maps::Identity& m) { return m.dim; },
                        [](const maps::Compression& m) { return static_cast<int>(m.v.rows()); },
                        [](const maps::UnitaryMixture& m) { return static_cast<int>(m.unitaries.front().rows()); },
                        [](const maps::Pinching& m) { return std::accumulate(m.blocks.begin(), m.blocks.end(), 0); },
                        [](const maps::BlockAverage& m) { return m.n * m.block_dim; },
                        [](const maps::WeightedFamily& m) {
                          int total = 0;
                          for (const auto& inner : m.maps) total += inner.input_dim();
                          return total;
                        },
                    },
                    *spec_);
}

int PositiveMap::output_dim() const {
  return std::visit(Overloaded{
                        [](const maps::Identity& m) { return m.dim; },
                        [](const maps::Compression& m) { return static_cast<int>(m.v.cols()); },
                        [](const maps::UnitaryMixture& m) { return static_cast<int>(m.unitaries.front().rows()); },
                        [](const maps::Pinching& m) { return std::accumulate(m.blocks.begin(), m.blocks.end(), 0); },
                        [](const maps::BlockAverage& m) { return m.block_dim; },
                        [](const maps::WeightedFamily& m) { return m.maps.front().output_dim(); },
                    },
                    *spec_);
}

std::string PositiveMap::kind() const {
  return std::visit(Overloaded{
                        [](const maps::Identity&) { return std::string("identity"); },
                        [](const maps::Compression&) { return std::string("compression"); },
                        [](const maps::UnitaryMixture&) { return std::string("unitary_mixture"); },
                        [](const maps::Pinching&) { return std::string("pinching"); },
                        [](const maps::BlockAverage&) { return std::string("block_average"); },
                        [](const maps::WeightedFamily&) { return std::string("weighted_family"); },
                    },
                    *spec_);
}

HermitianMatrix PositiveMap::apply(const HermitianMatrix& x) const {
  if (x.dim() != input_dim()) {
    throw DimensionError(kind() + " map expects input dim " + std::to_string(input_dim()) + ", got " +
                         std::to_string(x.dim()));
  }
  return std::visit(
      Overloaded{
          [&](const maps::Identity&) { return x; },
          [&](const maps::Compression& m) { return congruence(m.v, x); },
          [&](const maps::UnitaryMixture& m) {
            ComplexMatrix acc = ComplexMatrix::Zero(x.dim(), x.dim());
            for (std::size_t i = 0; i < m.weights.size(); ++i) {
              acc += m.weights[i] * (m.unitaries[i].adjoint() * x.matrix() * m.unitaries[i]);
            }
            return HermitianMatrix(acc);
          },
          [&](const maps::Pinching& m) {
            ComplexMatrix out = ComplexMatrix::Zero(x.dim(), x.dim());
            int offset = 0;
            for (int b : m.blocks) {
              out.block(offset, offset, b, b) = x.matrix().block(offset, offset, b, b);
              offset += b;
            }
            return HermitianMatrix(out);
          },
          [&](const maps::BlockAverage& m) {
            ComplexMatrix acc = ComplexMatrix::Zero(m.block_dim, m.block_dim);
            for (int j = 0; j < m.n; ++j) {
              acc += x.matrix().block(j * m.block_dim, j * m.block_dim, m.block_dim, m.block_dim);
            }
            return HermitianMatrix(acc / static_cast<double>(m.n));
          },
          [&](const maps::WeightedFamily& m) {
            const int out = m.maps.front().output_dim();
            ComplexMatrix acc = ComplexMatrix::Zero(out, out);
            int offset = 0;
            for (std::size_t j = 0; j < m.maps.size(); ++j) {
              const int d = m.maps[j].input_dim();
              const HermitianMatrix block(x.matrix().block(offset, offset, d, d));
              acc += m.weights[j] * m.maps[j].apply(block).matrix();
              offset += d;
            }
            return HermitianMatrix(acc);
          },
      },
      *spec_);
}

OrderVerdict check_unital(const PositiveMap& map, const Tolerance& tol) {
  const HermitianMatrix image = map.apply(HermitianMatrix::identity(map.input_dim()));
  const HermitianMatrix defect = image - HermitianMatrix::identity(map.output_dim());
  OrderVerdict v;
  v.slack = -spectral_norm(defect);
  v.scale = 1.0;
  v.holds = v.slack >= -tol.bound(v.scale);
  return v;
}

bool check_positive(const PositiveMap& map, int samples, Rng& rng, const Tolerance& tol) {
  for (int s = 0; s < samples; ++s) {
    const HermitianMatrix x = random_spectrum_matrix(map.input_dim(), 0.0, 1.0, rng);
    const HermitianMatrix y = map.apply(x);
    if (lambda_min(y) < -tol.bound(spectral_norm(y))) return false;
  }
  return true;
}

HermitianMatrix block_diagonal(const std::vector<HermitianMatrix>& blocks) {
  if (blocks.empty()) throw DimensionError("block_diagonal: no blocks");
  int total = 0;
  for (const auto& b : blocks) total += b.dim();
  ComplexMatrix out = ComplexMatrix::Zero(total, total);
  int offset = 0;
  for (const auto& b : blocks) {
    out.block(offset, offset, b.dim(), b.dim()) = b.matrix();
    offset += b.dim();
  }
  return HermitianMatrix(out);
}

}  // namespace bellman
