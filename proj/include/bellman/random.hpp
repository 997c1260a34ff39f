#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "bellman/hermitian.hpp"

namespace bellman {

using Rng = std::mt19937_64;

/// Counter-derived subseed: trial k of a campaign seeded with `seed` draws
/// from Rng(derive_seed(seed, k)), independent of evaluation order.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Haar-distributed unitary: QR of a complex Ginibre matrix with the phases
/// of R's diagonal folded back into Q.
ComplexMatrix haar_unitary(int dim, Rng& rng);

/// dim_in x dim_out isometry (V*V = I): leading columns of a Haar unitary.
ComplexMatrix random_isometry(int dim_in, int dim_out, Rng& rng);

/// U diag(lambda) U* with U Haar and lambda uniform on [a, b]. With
/// pin_endpoints the spectrum contains both a and b (needs dim >= 2).
HermitianMatrix random_spectrum_matrix(int dim, double a, double b, Rng& rng, bool pin_endpoints = false);

/// Positive weights summing to one (flat Dirichlet).
std::vector<double> random_weights(int n, Rng& rng);

double uniform(Rng& rng, double a, double b);

}  // namespace bellman
