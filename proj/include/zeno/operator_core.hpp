#pragma once

#include <complex>
#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace zeno {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

// Shared tolerances: structural invariants at 1e-12, derived equalities
// at 1e-10. Every module reuses these two.
inline constexpr double kStructuralTol = 1e-12;
inline constexpr double kDerivedTol = 1e-10;

bool all_finite(const ComplexMatrix& m);

/// Largest singular value, computed as sqrt(lambda_max(A* A)).
double operator_norm(const ComplexMatrix& a);

/// max_{jk} |A_jk - conj(A_kj)|
double hermiticity_defect(const ComplexMatrix& m);

ComplexMatrix identity_matrix(Eigen::Index dim);

/// Kronecker product. The left factor occupies the most significant
/// index block: (A (x) B)(i*rows(B)+k, j*cols(B)+l) = A(i,j) B(k,l).
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b);

class HermitianOperator {
 public:
  explicit HermitianOperator(ComplexMatrix m);
  const ComplexMatrix& matrix() const { return mat_; }
  Eigen::Index dim() const { return mat_.rows(); }

 private:
  ComplexMatrix mat_;
};

class UnitaryOperator {
 public:
  explicit UnitaryOperator(ComplexMatrix m);
  const ComplexMatrix& matrix() const { return mat_; }
  Eigen::Index dim() const { return mat_.rows(); }

 private:
  ComplexMatrix mat_;
};

class Projection {
 public:
  explicit Projection(ComplexMatrix m);
  const ComplexMatrix& matrix() const { return mat_; }
  Eigen::Index dim() const { return mat_.rows(); }
  Eigen::Index rank() const { return rank_; }

  /// E_perp = 1 - E
  ComplexMatrix complement() const;

  /// dim x rank matrix whose orthonormal columns span range(E).
  ComplexMatrix range_basis() const;

 private:
  ComplexMatrix mat_;
  Eigen::Index rank_;
};

class DensityState {
 public:
  explicit DensityState(ComplexMatrix m);
  const ComplexMatrix& matrix() const { return mat_; }
  Eigen::Index dim() const { return mat_.rows(); }

 private:
  ComplexMatrix mat_;
};

/// Eigendecomposition of a Hermitian operator, eigenvalues ascending.
struct Spectrum {
  Eigen::VectorXd values;
  ComplexMatrix vectors;
};

Spectrum diagonalize(const HermitianOperator& h);

/// U(t) = e^{itH} through the spectral decomposition of H.
UnitaryOperator hermitian_evolution(const HermitianOperator& h, double t);

/// V f(D) V* for H = V D V*. Throws std::domain_error naming the
/// eigenvalue when f is not finite there.
HermitianOperator matrix_function(const HermitianOperator& h,
                                  const std::function<double(double)>& f);

/// Reduced density matrix over the kept tensor factors. `dims` lists the
/// factor dimensions, leftmost factor most significant; `keep` indexes
/// into that list.
DensityState partial_trace(const DensityState& rho, const std::vector<int>& keep,
                           const std::vector<Eigen::Index>& dims);

/// B* A B for an isometry B (columns orthonormal), e.g. a range basis.
ComplexMatrix subspace_compress(const ComplexMatrix& a, const ComplexMatrix& basis);

/// B A B*, the adjoint embedding of subspace_compress.
ComplexMatrix subspace_embed(const ComplexMatrix& a, const ComplexMatrix& basis);

}  // namespace zeno
