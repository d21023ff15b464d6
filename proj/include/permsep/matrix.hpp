#ifndef PERMSEP_MATRIX_HPP
#define PERMSEP_MATRIX_HPP

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "permsep/permutation.hpp"

namespace permsep {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Thrown when a matrix fails one of the physical-state checks. `invariant()`
/// names the check: "square", "dimension", "hermitian", "trace", "positive".
class InvariantError : public std::invalid_argument {
 public:
  InvariantError(std::string invariant, const std::string &what)
      : std::invalid_argument(what), invariant_(std::move(invariant)) {}
  const std::string &invariant() const { return invariant_; }

 private:
  std::string invariant_;
};

/// Size d^r, throwing std::invalid_argument for d < 1, r < 1 or overflow.
int hilbert_dimension(int dim, int parties);

/// [B]_{j_1 ... j_2r} = A_{j_sigma(1) ... j_sigma(2r)} for an operator on r
/// subsystems of dimension `dim`. Odd slots index the row, even slots the
/// column; party 1 is the most significant digit of each.
ComplexMatrix apply_criterion(const ComplexMatrix &a, int dim, const Permutation &sigma);

/// Sum of singular values.
double trace_norm(const ComplexMatrix &a);

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kTraceTolerance = 1e-12;
inline constexpr double kPositivityTolerance = 1e-10;

/// A validated quantum state on `parties` subsystems of equal dimension.
class DensityMatrix {
 public:
  /// Throws InvariantError naming the first violated invariant.
  DensityMatrix(ComplexMatrix matrix, int dim, int parties);

  const ComplexMatrix &matrix() const { return matrix_; }
  int dim() const { return dim_; }
  int parties() const { return parties_; }
  int size() const { return static_cast<int>(matrix_.rows()); }

 private:
  ComplexMatrix matrix_;
  int dim_;
  int parties_;
};

/// Hermiticity, trace and positivity checks of DensityMatrix, without
/// constructing one.
void validate_density(const ComplexMatrix &matrix, int dim, int parties);

inline ComplexMatrix apply_criterion(const DensityMatrix &rho, const Permutation &sigma) {
  return apply_criterion(rho.matrix(), rho.dim(), sigma);
}

}  // namespace permsep

#endif
