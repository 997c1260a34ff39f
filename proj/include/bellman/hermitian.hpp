#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <limits>
#include <span>

#include <Eigen/Dense>

namespace bellman {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

/// Mixed absolute/relative tolerance. A comparison at scale s accepts
/// errors up to atol + rtol * s.
struct Tolerance {
  double atol = 1e-10;
  double rtol = 1e-10;

  double bound(double scale) const { return atol + rtol * scale; }
};

/// Throws ParameterError unless both fields are finite and nonnegative.
void validate(const Tolerance& tol);

/// Relative floor on the smallest eigenvalue of an operand that gets
/// inverted (inverse square roots, congruences A^{-1/2} B A^{-1/2}).
inline constexpr double kPositivityFloor = 1e-8;

/// Dense complex Hermitian matrix. The constructor symmetrizes its input,
/// so entries(i, j) == conj(entries(j, i)) holds bit-exactly afterwards.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(const ComplexMatrix& entries);

  static HermitianMatrix identity(int dim);
  static HermitianMatrix zero(int dim);
  static HermitianMatrix diagonal(std::span<const double> values);
  static HermitianMatrix diagonal(std::initializer_list<double> values);
  static HermitianMatrix scalar(double value);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const ComplexMatrix& matrix() const { return entries_; }
  Complex operator()(int row, int col) const { return entries_(row, col); }

  HermitianMatrix operator+(const HermitianMatrix& other) const;
  HermitianMatrix operator-(const HermitianMatrix& other) const;
  HermitianMatrix operator-() const;
  HermitianMatrix operator*(double factor) const;
  friend HermitianMatrix operator*(double factor, const HermitianMatrix& m) { return m * factor; }

  /// Largest absolute difference between corresponding entries.
  double max_abs_diff(const HermitianMatrix& other) const;

 private:
  ComplexMatrix entries_;
};

/// (X + X*) / 2.
HermitianMatrix hermitize(const ComplexMatrix& x);

/// T* X T, Hermitian for any (possibly rectangular) T.
HermitianMatrix congruence(const ComplexMatrix& t, const HermitianMatrix& x);

struct SpectralDecomposition {
  RealVector eigenvalues;     // ascending
  ComplexMatrix eigenvectors;  // unitary, columns match eigenvalues

  HermitianMatrix reconstruct() const;
  int dim() const { return static_cast<int>(eigenvalues.size()); }
};

/// Full eigendecomposition. Throws ConvergenceError (with a hash of the
/// input) if the solver does not converge.
SpectralDecomposition eig(const HermitianMatrix& h);

/// Ascending eigenvalues only.
RealVector eigenvalues(const HermitianMatrix& h);
double lambda_min(const HermitianMatrix& h);
double lambda_max(const HermitianMatrix& h);
double spectral_norm(const HermitianMatrix& h);

/// FNV-1a over the raw entries; used to name matrices in error messages.
std::uint64_t matrix_hash(const HermitianMatrix& h);

/// Closed interval [lo, hi]; open_lo excludes the left end (log on (0, inf)).
struct Interval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  bool open_lo = false;

  static Interval whole() { return {}; }
  static Interval nonnegative() { return {0.0, std::numeric_limits<double>::infinity(), false}; }
  static Interval positive() { return {0.0, std::numeric_limits<double>::infinity(), true}; }
  static Interval closed(double lo, double hi) { return {lo, hi, false}; }

  bool contains(double t) const { return (open_lo ? t > lo : t >= lo) && t <= hi; }
};

/// Eigenvalues that leave the guard by at most this much are clipped back.
double clip_margin(double norm);

using ScalarFunction = std::function<double(double)>;

/// U diag(phi(lambda_i)) U*. Eigenvalues within clip_margin of the guard are
/// clipped to its boundary; anything farther out, or a non-finite phi value,
/// raises DomainError naming the eigenvalue.
HermitianMatrix apply_function(const HermitianMatrix& h, const ScalarFunction& phi, const Interval& guard);
HermitianMatrix apply_function(const SpectralDecomposition& decomposition, const ScalarFunction& phi,
                               const Interval& guard);

struct OrderVerdict {
  bool holds = false;
  double slack = 0.0;  // lambda_min of the Hermitized difference
  double scale = 0.0;  // max spectral norm of the operands
};

/// X <= Y in the Loewner order: slack = lambda_min(Y - X).
OrderVerdict loewner_leq(const HermitianMatrix& x, const HermitianMatrix& y, const Tolerance& tol = {});

/// A*A <= I.
OrderVerdict is_contraction(const HermitianMatrix& a, const Tolerance& tol = {});

HermitianMatrix matrix_sqrt(const HermitianMatrix& h);
HermitianMatrix inv_sqrt(const HermitianMatrix& h);
HermitianMatrix power(const HermitianMatrix& h, double p);

/// Square root and inverse square root from a single decomposition. Throws
/// ConditioningError if lambda_min(h) < kPositivityFloor * ||h||.
struct SqrtPair {
  HermitianMatrix sqrt;
  HermitianMatrix inv_sqrt;
};
SqrtPair sqrt_pair(const HermitianMatrix& h);

}  // namespace bellman
