#include "bellman/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <sstream>

#include "bellman/errors.hpp"

namespace bellman {

void validate(const Tolerance& tol) {
  if (!std::isfinite(tol.atol) || !std::isfinite(tol.rtol) || tol.atol < 0.0 || tol.rtol < 0.0) {
    throw ParameterError("tolerance fields must be finite and nonnegative");
  }
}

HermitianMatrix::HermitianMatrix(const ComplexMatrix& entries) {
  if (entries.rows() != entries.cols()) {
    throw DimensionError("Hermitian matrix must be square, got " + std::to_string(entries.rows()) + "x" +
                         std::to_string(entries.cols()));
  }
  if (entries.rows() < 1) throw DimensionError("Hermitian matrix must have dim >= 1");
  entries_ = (entries + entries.adjoint()) * 0.5;
  // (x + conj(x)) / 2 may leave a rounding residue in the imaginary part.
  for (Eigen::Index i = 0; i < entries_.rows(); ++i) entries_(i, i).imag(0.0);
}

HermitianMatrix HermitianMatrix::identity(int dim) {
  return HermitianMatrix(ComplexMatrix::Identity(dim, dim));
}

HermitianMatrix HermitianMatrix::zero(int dim) { return HermitianMatrix(ComplexMatrix::Zero(dim, dim)); }

HermitianMatrix HermitianMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(values.size()),
                                        static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return HermitianMatrix(m);
}

HermitianMatrix HermitianMatrix::diagonal(std::initializer_list<double> values) {
  return diagonal(std::span<const double>(values.begin(), values.size()));
}

HermitianMatrix HermitianMatrix::scalar(double value) {
  ComplexMatrix m(1, 1);
  m(0, 0) = value;
  return HermitianMatrix(m);
}

namespace {

void require_same_dim(const HermitianMatrix& a, const HermitianMatrix& b, const char* what) {
  if (a.dim() != b.dim()) {
    throw DimensionError(std::string(what) + ": dimension mismatch " + std::to_string(a.dim()) + " vs " +
                         std::to_string(b.dim()));
  }
}

}  // namespace

HermitianMatrix HermitianMatrix::operator+(const HermitianMatrix& other) const {
  require_same_dim(*this, other, "operator+");
  return HermitianMatrix(entries_ + other.entries_);
}

HermitianMatrix HermitianMatrix::operator-(const HermitianMatrix& other) const {
  require_same_dim(*this, other, "operator-");
  return HermitianMatrix(entries_ - other.entries_);
}

HermitianMatrix HermitianMatrix::operator-() const { return HermitianMatrix(-entries_); }

HermitianMatrix HermitianMatrix::operator*(double factor) const { return HermitianMatrix(entries_ * factor); }

double HermitianMatrix::max_abs_diff(const HermitianMatrix& other) const {
  require_same_dim(*this, other, "max_abs_diff");
  return (entries_ - other.entries_).cwiseAbs().maxCoeff();
}

HermitianMatrix hermitize(const ComplexMatrix& x) { return HermitianMatrix(x); }

HermitianMatrix congruence(const ComplexMatrix& t, const HermitianMatrix& x) {
  if (t.rows() != x.dim()) {
    throw DimensionError("congruence: T has " + std::to_string(t.rows()) + " rows, X has dim " +
                         std::to_string(x.dim()));
  }
  return HermitianMatrix(t.adjoint() * x.matrix() * t);
}

HermitianMatrix SpectralDecomposition::reconstruct() const {
  return HermitianMatrix(eigenvectors * eigenvalues.cast<Complex>().asDiagonal() * eigenvectors.adjoint());
}

std::uint64_t matrix_hash(const HermitianMatrix& h) {
  std::uint64_t hash = 1469598103934665603ULL;
  const auto& m = h.matrix();
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      double parts[2] = {m(i, j).real(), m(i, j).imag()};
      unsigned char bytes[sizeof(parts)];
      std::memcpy(bytes, parts, sizeof(parts));
      for (unsigned char b : bytes) {
        hash ^= b;
        hash *= 1099511628211ULL;
      }
    }
  }
  return hash;
}

namespace {

[[noreturn]] void throw_nonconvergence(const HermitianMatrix& h) {
  std::ostringstream msg;
  msg << "eigensolver did not converge for " << h.dim() << "x" << h.dim() << " matrix (hash 0x" << std::hex
      << matrix_hash(h) << ")";
  throw ConvergenceError(msg.str());
}

}  // namespace

SpectralDecomposition eig(const HermitianMatrix& h) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h.matrix(), Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) throw_nonconvergence(h);
  return {solver.eigenvalues(), solver.eigenvectors()};
}

RealVector eigenvalues(const HermitianMatrix& h) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h.matrix(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw_nonconvergence(h);
  return solver.eigenvalues();
}

double lambda_min(const HermitianMatrix& h) { return eigenvalues(h)(0); }

double lambda_max(const HermitianMatrix& h) {
  const RealVector ev = eigenvalues(h);
  return ev(ev.size() - 1);
}

double spectral_norm(const HermitianMatrix& h) {
  const RealVector ev = eigenvalues(h);
  return std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
}

double clip_margin(double norm) { return 1e-12 * (1.0 + norm); }

HermitianMatrix apply_function(const SpectralDecomposition& d, const ScalarFunction& phi, const Interval& guard) {
  const Eigen::Index n = d.eigenvalues.size();
  const double norm = std::max(std::abs(d.eigenvalues(0)), std::abs(d.eigenvalues(n - 1)));
  const double kappa = clip_margin(norm);
  RealVector mapped(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    double t = d.eigenvalues(i);
    if (t < guard.lo) {
      if (guard.lo - t > kappa) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "eigenvalue " << t << " lies below the function domain [" << guard.lo << ", " << guard.hi << "]";
        throw DomainError(msg.str());
      }
      t = guard.lo;
    } else if (t > guard.hi) {
      if (t - guard.hi > kappa) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "eigenvalue " << t << " lies above the function domain [" << guard.lo << ", " << guard.hi << "]";
        throw DomainError(msg.str());
      }
      t = guard.hi;
    }
    if (guard.open_lo && t <= guard.lo) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "eigenvalue " << d.eigenvalues(i) << " is not inside the open end of the domain at " << guard.lo;
      throw DomainError(msg.str());
    }
    const double value = phi(t);
    if (!std::isfinite(value)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "function value at eigenvalue " << t << " is not finite";
      throw DomainError(msg.str());
    }
    mapped(i) = value;
  }
  return HermitianMatrix(d.eigenvectors * mapped.cast<Complex>().asDiagonal() * d.eigenvectors.adjoint());
}

HermitianMatrix apply_function(const HermitianMatrix& h, const ScalarFunction& phi, const Interval& guard) {
  return apply_function(eig(h), phi, guard);
}

OrderVerdict loewner_leq(const HermitianMatrix& x, const HermitianMatrix& y, const Tolerance& tol) {
  if (x.dim() != y.dim()) {
    throw DimensionError("loewner_leq: dimension mismatch " + std::to_string(x.dim()) + " vs " +
                         std::to_string(y.dim()));
  }
  OrderVerdict v;
  v.slack = lambda_min(hermitize(y.matrix() - x.matrix()));
  v.scale = std::max(spectral_norm(x), spectral_norm(y));
  v.holds = v.slack >= -tol.bound(v.scale);
  return v;
}

OrderVerdict is_contraction(const HermitianMatrix& a, const Tolerance& tol) {
  const HermitianMatrix gram(a.matrix().adjoint() * a.matrix());
  return loewner_leq(gram, HermitianMatrix::identity(a.dim()), tol);
}

HermitianMatrix power(const HermitianMatrix& h, double p) {
  if (!std::isfinite(p)) throw ParameterError("power: exponent must be finite");
  const SpectralDecomposition d = eig(h);
  if (p < 0.0) {
    const double norm = std::max(std::abs(d.eigenvalues(0)), std::abs(d.eigenvalues(d.dim() - 1)));
    if (d.eigenvalues(0) < kPositivityFloor * norm || norm == 0.0) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "negative power of a near-singular matrix, lambda_min = " << d.eigenvalues(0);
      throw ConditioningError(msg.str());
    }
  }
  return apply_function(d, [p](double t) { return std::pow(t, p); }, Interval::nonnegative());
}

HermitianMatrix matrix_sqrt(const HermitianMatrix& h) {
  return apply_function(h, [](double t) { return std::sqrt(t); }, Interval::nonnegative());
}

SqrtPair sqrt_pair(const HermitianMatrix& h) {
  const SpectralDecomposition d = eig(h);
  const double norm = std::max(std::abs(d.eigenvalues(0)), std::abs(d.eigenvalues(d.dim() - 1)));
  if (norm == 0.0 || d.eigenvalues(0) < kPositivityFloor * norm) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "matrix is below the positivity floor: lambda_min = " << d.eigenvalues(0) << ", norm = " << norm;
    throw ConditioningError(msg.str());
  }
  const Eigen::Index n = d.eigenvalues.size();
  RealVector root(n), inv_root(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    root(i) = std::sqrt(d.eigenvalues(i));
    inv_root(i) = 1.0 / root(i);
  }
  const ComplexMatrix& u = d.eigenvectors;
  return {HermitianMatrix(u * root.cast<Complex>().asDiagonal() * u.adjoint()),
          HermitianMatrix(u * inv_root.cast<Complex>().asDiagonal() * u.adjoint())};
}

HermitianMatrix inv_sqrt(const HermitianMatrix& h) { return sqrt_pair(h).inv_sqrt; }

}  // namespace bellman
