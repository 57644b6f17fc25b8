#pragma once

#include "zeno/operator_core.hpp"

namespace zeno {

/// Vector in the Hilbert-Schmidt representation space: a matrix X with
/// inner product <X, Y> = tr(X* Y).
struct GnsVector {
  ComplexMatrix matrix;
  double norm() const { return matrix.norm(); }
};

Complex gns_inner(const GnsVector& x, const GnsVector& y);

/// Standard-form representation of a faithful stationary state: vectors
/// are matrices, the cyclic vector is rho^{1/2}, the algebra acts by
/// left multiplication, and the dynamics acts by two-sided conjugation
/// X -> e^{i zeta H} X e^{-i zeta H}, entire analytic in zeta.
class GnsSpace {
 public:
  const DensityState& rho() const { return rho_; }
  const HermitianOperator& hamiltonian() const { return h_; }
  const ComplexMatrix& omega() const { return omega_; }
  GnsVector cyclic_vector() const { return GnsVector{omega_}; }

  GnsVector act(const ComplexMatrix& a, const GnsVector& v) const;
  GnsVector evolve(const GnsVector& v, Complex zeta) const;

  /// <Omega, A Omega>; reproduces tr(rho A).
  Complex expectation(const ComplexMatrix& a) const;

  friend GnsSpace gns_construct(const DensityState& rho,
                                const HermitianOperator& h);

 private:
  GnsSpace(DensityState rho, HermitianOperator h, ComplexMatrix omega,
           Spectrum hspec);

  DensityState rho_;
  HermitianOperator h_;
  ComplexMatrix omega_;  // rho^{1/2}
  Spectrum hspec_;
};

/// Builds the space; requires rho faithful (smallest eigenvalue above
/// 1e-14) and stationary under H.
GnsSpace gns_construct(const DensityState& rho, const HermitianOperator& h);

struct AzcCheckResult {
  bool passed = false;
  double lhs = 0.0;    // ||E_perp U(zeta) E A Omega||
  double bound = 0.0;  // C ||A Omega|| |zeta|
  double ratio = 0.0;  // lhs / bound
};

/// Vector-level short-time bound at complex time zeta (Im zeta >= 0,
/// |zeta| < r0): compares ||E_perp U(zeta) E A Omega|| against
/// C ||A Omega|| |zeta|.
AzcCheckResult vector_azc_check(const GnsSpace& space, const Projection& e,
                                const ComplexMatrix& a, Complex zeta, double c,
                                double r0);

/// || (F_n - F_m)(t + i beta/2) A Omega || where F_k alternates
/// compression by E with complex-time evolution by (t + i beta/2)/k.
double complex_zeno_cauchy(const GnsSpace& space, const Projection& e,
                           const ComplexMatrix& a, double t, double beta, int n,
                           int m);

}  // namespace zeno
