#ifndef PERMSEP_STATES_HPP
#define PERMSEP_STATES_HPP

#include <random>
#include <span>
#include <vector>

#include "permsep/matrix.hpp"

namespace permsep {

using Rng = std::mt19937_64;

/// The 3x3 chess-board bound entangled state (d = 3, r = 2).
DensityMatrix chessboard_state();

/// (1/d) sum_ij |ii><jj| on two d-dimensional parties.
DensityMatrix bell_state(int dim = 2);

DensityMatrix maximally_mixed(int dim, int parties);

/// Kronecker product; parties of `a` come first. Local dimensions must agree.
DensityMatrix tensor_product(const DensityMatrix &a, const DensityMatrix &b);

/// (1 - beta) rho + beta I/n.
DensityMatrix mix_with_noise(const DensityMatrix &rho, double beta);

/// New party k is old party order[k-1]; `order` is a bijection of 1..r.
DensityMatrix reorder_parties(const DensityMatrix &rho, std::span<const int> order);

/// Slot permutation that implements reorder_parties for the given order.
Permutation party_reordering(std::span<const int> order);

/// Uniform point of the probability simplex (normalized exponentials).
std::vector<double> sample_simplex(int n, Rng &rng);

/// Haar unitary: Ginibre matrix, Householder QR, phases of diag(R) removed.
ComplexMatrix random_unitary(int n, Rng &rng);

/// U diag(lambda) U^dagger with U Haar and lambda uniform on the simplex.
/// With 0 < rank < d^r only the first `rank` eigenvalues are nonzero.
DensityMatrix random_density(int dim, int parties, Rng &rng, int rank = 0);

/// Normalized complex Gaussian vector.
Eigen::VectorXcd random_pure_vector(int n, Rng &rng);

/// Mixture of `terms` random pure product states with simplex weights.
DensityMatrix random_separable(int dim, int parties, int terms, Rng &rng);

}  // namespace permsep

#endif
