#pragma once

// Deterministic random instances for probes, the verify suites and tests.
// Every consumer derives its engine from a (seed, stream) pair so results
// are reproducible regardless of evaluation order.

#include <cstdint>
#include <random>

#include "ccrflow/star_linalg.hpp"

namespace ccrflow {

std::uint64_t split_mix(std::uint64_t x);
std::mt19937_64 seeded_engine(std::uint64_t seed, std::uint64_t stream);

MatrixXd random_orthogonal(int n, std::mt19937_64& eng);

// Well-conditioned random invertible real matrix, singular values in
// [1/cond, cond].
MatrixXd random_invertible(int n, std::mt19937_64& eng, double cond = 2.0);

// Covariance form with `modes` symplectic modes of invariants mu_j drawn
// uniformly from [mu_min, mu_max] plus `degenerate` sigma = 0 directions,
// conjugated by a random invertible real map (dim = 2*modes + degenerate).
CovarianceForm random_form(int modes, int degenerate, double mu_min, double mu_max,
                           std::mt19937_64& eng, double cond = 2.0);

// Extremal form: every mode has mu = 1/2 (ratio operator a projection).
CovarianceForm random_extremal_form(int modes, std::mt19937_64& eng, double cond = 2.0);

// Random real symplectic map for the sigma of S (requires nondegenerate sigma).
MatrixXd random_symplectic(const CovarianceForm& S, std::mt19937_64& eng, double scale = 0.3);

} // namespace ccrflow
