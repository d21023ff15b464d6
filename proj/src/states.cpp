#include "permsep/states.hpp"

#include <stdexcept>

namespace permsep {

namespace {

ComplexMatrix hermitian_part(const ComplexMatrix &m) { return (m + m.adjoint()) / 2.0; }

}  // namespace

DensityMatrix chessboard_state() {
  // clang-format off
  static constexpr int entries[9][9] = {
      {1,  0,  1,  0,  0,  0,  1,  0, 0},
      {0,  1,  0,  0,  0, -1,  0, -1, 0},
      {1,  0,  2,  0, -1,  0,  0,  0, 0},
      {0,  0,  0,  1,  0, -1,  0,  1, 0},
      {0,  0, -1,  0,  1,  0,  1,  0, 0},
      {0, -1,  0, -1,  0,  2,  0,  0, 0},
      {1,  0,  0,  0,  1,  0,  2,  0, 0},
      {0, -1,  0,  1,  0,  0,  0,  2, 0},
      {0,  0,  0,  0,  0,  0,  0,  0, 0},
  };
  // clang-format on
  ComplexMatrix m(9, 9);
  for (int i = 0; i < 9; ++i) {
    for (int j = 0; j < 9; ++j) m(i, j) = entries[i][j] / 12.0;
  }
  return DensityMatrix(std::move(m), 3, 2);
}

DensityMatrix bell_state(int dim) {
  const int n = hilbert_dimension(dim, 2);
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) m(i * dim + i, j * dim + j) = 1.0 / dim;
  }
  return DensityMatrix(std::move(m), dim, 2);
}

DensityMatrix maximally_mixed(int dim, int parties) {
  const int n = hilbert_dimension(dim, parties);
  ComplexMatrix m = ComplexMatrix::Identity(n, n) / static_cast<double>(n);
  return DensityMatrix(std::move(m), dim, parties);
}

DensityMatrix tensor_product(const DensityMatrix &a, const DensityMatrix &b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("tensor product needs equal local dimensions, got " + std::to_string(a.dim()) +
                                " and " + std::to_string(b.dim()));
  }
  return DensityMatrix(hermitian_part(kron(a.matrix(), b.matrix())), a.dim(), a.parties() + b.parties());
}

DensityMatrix mix_with_noise(const DensityMatrix &rho, double beta) {
  if (!(beta >= 0.0 && beta <= 1.0)) {
    throw std::invalid_argument("noise weight beta must lie in [0, 1], got " + std::to_string(beta));
  }
  const int n = rho.size();
  ComplexMatrix m = (1.0 - beta) * rho.matrix() + (beta / n) * ComplexMatrix::Identity(n, n);
  return DensityMatrix(std::move(m), rho.dim(), rho.parties());
}

Permutation party_reordering(std::span<const int> order) {
  const int r = static_cast<int>(order.size());
  if (r < 1) throw std::invalid_argument("party order is empty");
  std::vector<bool> seen(r + 1, false);
  std::vector<int> w(2 * r);
  for (int k = 1; k <= r; ++k) {
    const int old = order[k - 1];
    if (old < 1 || old > r || seen[old]) {
      throw std::invalid_argument("party order is not a bijection of 1.." + std::to_string(r));
    }
    seen[old] = true;
    // Old slots move to the new party's slots.
    w[2 * old - 2] = 2 * k - 1;
    w[2 * old - 1] = 2 * k;
  }
  return Permutation(std::move(w));
}

DensityMatrix reorder_parties(const DensityMatrix &rho, std::span<const int> order) {
  if (static_cast<int>(order.size()) != rho.parties()) {
    throw std::invalid_argument("party order has " + std::to_string(order.size()) + " entries for a " +
                                std::to_string(rho.parties()) + "-party state");
  }
  return DensityMatrix(apply_criterion(rho, party_reordering(order)), rho.dim(), rho.parties());
}

std::vector<double> sample_simplex(int n, Rng &rng) {
  if (n < 1) throw std::invalid_argument("simplex dimension must be >= 1");
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> w(n);
  double total = 0.0;
  for (double &x : w) total += (x = expo(rng));
  for (double &x : w) x /= total;
  return w;
}

ComplexMatrix random_unitary(int n, Rng &rng) {
  std::normal_distribution<double> normal(0.0, 1.0 / std::sqrt(2.0));
  Eigen::MatrixXcd g(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) g(i, j) = Complex(normal(rng), normal(rng));
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd &r = qr.matrixQR();
  for (int j = 0; j < n; ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    if (mag > 0.0) q.col(j) *= d / mag;
  }
  return q;
}

DensityMatrix random_density(int dim, int parties, Rng &rng, int rank) {
  const int n = hilbert_dimension(dim, parties);
  if (n < 2) throw std::invalid_argument("random density needs dimension >= 2");
  if (rank < 0 || rank > n) {
    throw std::invalid_argument("rank " + std::to_string(rank) + " outside 0.." + std::to_string(n));
  }
  const int k = rank == 0 ? n : rank;
  const ComplexMatrix u = random_unitary(n, rng);
  const auto lambda = sample_simplex(k, rng);
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (int i = 0; i < k; ++i) m += lambda[i] * (u.col(i) * u.col(i).adjoint());
  return DensityMatrix(hermitian_part(m), dim, parties);
}

Eigen::VectorXcd random_pure_vector(int n, Rng &rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXcd v(n);
  for (int i = 0; i < n; ++i) v(i) = Complex(normal(rng), normal(rng));
  return v / v.norm();
}

DensityMatrix random_separable(int dim, int parties, int terms, Rng &rng) {
  if (terms < 1) throw std::invalid_argument("separable mixture needs at least one term");
  const int n = hilbert_dimension(dim, parties);
  const auto weights = sample_simplex(terms, rng);
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (int t = 0; t < terms; ++t) {
    Eigen::VectorXcd psi = random_pure_vector(dim, rng);
    for (int p = 1; p < parties; ++p) {
      const Eigen::VectorXcd factor = random_pure_vector(dim, rng);
      Eigen::VectorXcd next(psi.size() * dim);
      for (Eigen::Index i = 0; i < psi.size(); ++i) next.segment(i * dim, dim) = psi(i) * factor;
      psi = std::move(next);
    }
    m += weights[t] * (psi * psi.adjoint());
  }
  return DensityMatrix(hermitian_part(m), dim, parties);
}

}  // namespace permsep
