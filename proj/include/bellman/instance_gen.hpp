#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "bellman/hermitian.hpp"
#include "bellman/means.hpp"
#include "bellman/positive_maps.hpp"
#include "bellman/random.hpp"

namespace bellman {

struct GenConfig {
  int dim = 2;
  int n = 2;
  double m = 0.5;
  double M = 2.0;
  double p = 0.5;
  double lambda = 0.5;
  std::uint64_t seed = 0;
  double margin = 1e-6;  // every released hypothesis holds with at least this slack
  int max_rejects = 1000;
};

/// Throws ParameterError on m >= M, p or lambda outside (0, 1), margin <= 0,
/// dim < 1, n < 1 or max_rejects < 1.
void validate(const GenConfig& cfg);

/// Operators of one random instance. Which members are populated depends
/// on hypothesis_tag; `named` holds the single operators of two-operand
/// statements (C and X, or A and B) and `scalars` the arrays of the scalar
/// inequalities.
struct InstanceFamily {
  std::string hypothesis_tag;
  std::vector<HermitianMatrix> A;
  std::vector<HermitianMatrix> B;
  std::vector<double> weights;
  std::vector<PositiveMap> maps;
  std::map<std::string, HermitianMatrix> named;
  std::vector<std::vector<double>> scalars;
  std::uint64_t subseed = 0;

  const HermitianMatrix& get(const std::string& name) const;
};

/// Returned instead of an instance when max_rejects draws all failed
/// re-verification. Rejection is data, not an error.
struct Rejection {
  std::string hypothesis_tag;
  std::string reason;
  int attempts = 0;
};

using Generated = std::variant<InstanceFamily, Rejection>;

// -- primitives --------------------------------------------------------------

/// B = A^{1/2} T A^{1/2} with spectrum(T) strictly inside [m, M], so that
/// mA <= B <= MA. Throws ConditioningError if A is below the positivity floor.
std::pair<HermitianMatrix, HermitianMatrix> random_sandwich_pair(const HermitianMatrix& a, double m, double M,
                                                                 Rng& rng);

/// n positive definite operators with lambda_max(sum A_j) = cap.
std::vector<HermitianMatrix> random_subidentity_family(int n, int dim, Rng& rng, double cap);

/// Builds a random unital positive map from a textual id with the given
/// output dimension: "id", "compress:k" (input dim + k), "unitary-mix:r",
/// "pinch:b", "block-avg:n" (input n * dim), "weighted:n".
PositiveMap random_map(std::string_view id, int dim, Rng& rng);

// -- hypothesis families ------------------------------------------------------
// Each draws from `rng`, re-verifies every declared hypothesis with
// loewner_leq at slack >= cfg.margin, and redraws up to cfg.max_rejects.

/// n operators with spectrum inside [lo, hi] and input dims matching `maps`
/// (or cfg.dim when maps is empty).
Generated spectrum_family(const GenConfig& cfg, double lo, double hi, const std::vector<PositiveMap>& maps,
                          Rng& rng);

/// Hermitian contractions 0 <= A_j <= I.
Generated contraction_family(const GenConfig& cfg, int input_dim, Rng& rng);

/// Pairs 0 < m A_j <= B_j <= M A_j.
Generated sandwich_family(const GenConfig& cfg, Rng& rng);

/// Sandwich pairs scaled by a common factor s chosen by bisection so that
/// m (I - g sum A_j) <= I - g sum B_j <= M (I - g sum A_j) with both
/// complements >= margin, for g = gamma and, when gamma > 1, also g = 1.
Generated complement_sandwich_instance(const GenConfig& cfg, double gamma, Rng& rng);

/// complement_sandwich_instance with gamma = ratio constant of f on [m, M].
Generated thm21_instance(const GenConfig& cfg, const MeanSpec& f, Rng& rng);

/// Positive definite A_j, B_j with sum A_j <= sI, sum B_j <= sI, s < 1.
Generated subidentity_pairs(const GenConfig& cfg, Rng& rng);

/// Positive definite X_j, Y_j without further constraints.
Generated positive_pairs(const GenConfig& cfg, Rng& rng);

/// A_j, B_j and named A, B with sum A_j <= A and sum B_j <= B.
Generated dominated_family(const GenConfig& cfg, Rng& rng);

/// Named C (Hermitian contraction) and X with mI <= X <= MI.
Generated contraction_spectrum_pair(const GenConfig& cfg, Rng& rng);

/// Named A (positive definite contraction) and B with mA <= B <= MA.
Generated contraction_sandwich_pair(const GenConfig& cfg, Rng& rng);

/// Named A (positive definite contraction) and B >= 0.
Generated contraction_psd_pair(const GenConfig& cfg, Rng& rng);

// -- scalar instances ---------------------------------------------------------

enum class ScalarKind { bellman_classical, aczel, popoviciu, mp3, mp1, eq3 };

std::string to_string(ScalarKind kind);
ScalarKind scalar_kind_from_string(std::string_view name);

/// Arrays satisfying the hypothesis of the scalar inequality, row layout:
///   bellman_classical: [a, b], [a_1..a_n], [b_1..b_n]          (exponent >= 1)
///   aczel, popoviciu:  [a_1..a_n], [b_1..b_n]  (a_1, b_1 lead) (popoviciu exponent in [1, 2])
///   mp3, eq3:          [w_1..w_n], then rows i = 1..m of a_ij   (sum_i a_ij^{1/p} <= 1)
///   mp1:               [M_1..M_n], then rows of a_ij           (sum_i a_ij^{1/p} <= M_j^{1/p})
/// `n` is the family size, `m` the inner count of the Bellman forms.
InstanceFamily scalar_instance(ScalarKind kind, int n, int m, double exponent, Rng& rng);

}  // namespace bellman
