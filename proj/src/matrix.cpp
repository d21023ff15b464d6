#include "permsep/matrix.hpp"

#include <limits>
#include <vector>

#include <Eigen/Eigenvalues>

namespace permsep {

int hilbert_dimension(int dim, int parties) {
  if (dim < 1) throw std::invalid_argument("local dimension must be >= 1, got " + std::to_string(dim));
  if (parties < 1) throw std::invalid_argument("party count must be >= 1, got " + std::to_string(parties));
  long long n = 1;
  for (int k = 0; k < parties; ++k) {
    n *= dim;
    if (n > std::numeric_limits<int>::max()) {
      throw std::invalid_argument("d^r overflows for d = " + std::to_string(dim) + ", r = " + std::to_string(parties));
    }
  }
  return static_cast<int>(n);
}

ComplexMatrix apply_criterion(const ComplexMatrix &a, int dim, const Permutation &sigma) {
  const int r = sigma.parties();
  const int n = hilbert_dimension(dim, r);
  if (a.rows() != n || a.cols() != n) {
    throw std::invalid_argument("matrix is " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                " but d^r = " + std::to_string(n) + " for d = " + std::to_string(dim) +
                                ", r = " + std::to_string(r));
  }

  // Flat row-major weight of each source slot.
  std::vector<long long> weight(2 * r + 1);
  long long place = 1;
  for (int p = r; p >= 1; --p) {
    weight[2 * p] = place;
    weight[2 * p - 1] = place * n;
    place *= dim;
  }
  // The output digit at slot s sits at source slot sigma^{-1}(s).
  const auto inv = sigma.inverse();
  auto offsets = [&](int first_slot) {
    std::vector<long long> table(n, 0);
    for (int idx = 0; idx < n; ++idx) {
      int rest = idx;
      long long off = 0;
      for (int p = r; p >= 1; --p) {
        off += static_cast<long long>(rest % dim) * weight[inv(2 * p - 2 + first_slot)];
        rest /= dim;
      }
      table[idx] = off;
    }
    return table;
  };
  const auto row_off = offsets(1);
  const auto col_off = offsets(2);

  ComplexMatrix b(n, n);
  const Complex *src = a.data();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) b(i, j) = src[row_off[i] + col_off[j]];
  }
  return b;
}

double trace_norm(const ComplexMatrix &a) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("trace norm needs a square matrix, got " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()));
  }
  if (a.size() == 0) return 0.0;
  // Eigenvalues of [[0, A], [A^dagger, 0]] are +-sigma_i. Eigen 3.4's BDCSVD
  // loses up to ~1e-3 on inputs with repeated singular values (e.g. with a
  // maximally mixed factor); the self-adjoint solver does not.
  const Eigen::Index n = a.rows();
  Eigen::MatrixXcd dilation = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  dilation.topRightCorner(n, n) = a;
  dilation.bottomLeftCorner(n, n) = a.adjoint();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(dilation, Eigen::EigenvaluesOnly);
  return 0.5 * eig.eigenvalues().cwiseAbs().sum();
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

void validate_density(const ComplexMatrix &m, int dim, int parties) {
  if (m.rows() != m.cols()) {
    throw InvariantError("square", "density matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                                       ", not square");
  }
  if (dim < 2) throw std::invalid_argument("local dimension must be >= 2, got " + std::to_string(dim));
  const int n = hilbert_dimension(dim, parties);
  if (m.rows() != n) {
    throw InvariantError("dimension", "matrix size " + std::to_string(m.rows()) + " does not equal d^r = " +
                                          std::to_string(n) + " for d = " + std::to_string(dim) +
                                          ", r = " + std::to_string(parties));
  }
  const double asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (asym > kHermitianTolerance) {
    throw InvariantError("hermitian", "matrix is not Hermitian: max |A - A^dagger| = " + std::to_string(asym));
  }
  const Complex tr = m.trace();
  if (std::abs(tr - Complex(1.0)) > kTraceTolerance) {
    throw InvariantError("trace", "trace is " + std::to_string(tr.real()) + "+" + std::to_string(tr.imag()) +
                                      "i, expected 1");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(m, Eigen::EigenvaluesOnly);
  const double min_eig = eig.eigenvalues().minCoeff();
  if (min_eig < -kPositivityTolerance) {
    throw InvariantError("positive", "matrix is not positive semidefinite: min eigenvalue " + std::to_string(min_eig));
  }
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix, int dim, int parties)
    : matrix_(std::move(matrix)), dim_(dim), parties_(parties) {
  validate_density(matrix_, dim_, parties_);
}

}  // namespace permsep
