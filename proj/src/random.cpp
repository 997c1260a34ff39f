#include "bellman/random.hpp"

#include <cmath>
#include <numeric>

#include "bellman/errors.hpp"

namespace bellman {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over a mix of both words
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double uniform(Rng& rng, double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); }

ComplexMatrix haar_unitary(int dim, Rng& rng) {
  if (dim < 1) throw ParameterError("haar_unitary: dim must be >= 1");
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix z(dim, dim);
  for (int j = 0; j < dim; ++j) {
    for (int i = 0; i < dim; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      z(i, j) = Complex(re, im) / std::sqrt(2.0);
    }
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(dim, dim);
  const ComplexMatrix& r = qr.matrixQR();
  for (int j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    q.col(j) *= mag > 0.0 ? d / mag : Complex(1.0, 0.0);
  }
  return q;
}

ComplexMatrix random_isometry(int dim_in, int dim_out, Rng& rng) {
  if (dim_out < 1 || dim_out > dim_in) throw ParameterError("random_isometry: need 1 <= dim_out <= dim_in");
  return haar_unitary(dim_in, rng).leftCols(dim_out);
}

HermitianMatrix random_spectrum_matrix(int dim, double a, double b, Rng& rng, bool pin_endpoints) {
  if (dim < 1) throw ParameterError("random_spectrum_matrix: dim must be >= 1");
  if (!(a <= b)) throw ParameterError("random_spectrum_matrix: need a <= b");
  if (pin_endpoints && dim < 2) throw ParameterError("random_spectrum_matrix: pinning both endpoints needs dim >= 2");
  RealVector lambda(dim);
  for (int i = 0; i < dim; ++i) lambda(i) = a == b ? a : uniform(rng, a, b);
  if (pin_endpoints) {
    lambda(0) = a;
    lambda(1) = b;
  }
  const ComplexMatrix u = haar_unitary(dim, rng);
  return HermitianMatrix(u * lambda.cast<Complex>().asDiagonal() * u.adjoint());
}

std::vector<double> random_weights(int n, Rng& rng) {
  if (n < 1) throw ParameterError("random_weights: n must be >= 1");
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> w(n);
  for (auto& x : w) x = expo(rng) + 1e-3;
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  for (auto& x : w) x /= total;
  // put the rounding residue on the largest weight
  const auto largest = std::max_element(w.begin(), w.end()) - w.begin();
  double rest = 0.0;
  for (int j = 0; j < n; ++j) {
    if (j != largest) rest += w[j];
  }
  w[largest] = 1.0 - rest;
  return w;
}

}  // namespace bellman
