#pragma once

#include "zeno/operator_core.hpp"

namespace zeno {

struct GibbsSpec {
  HermitianOperator h;
  double beta;  // inverse temperature, > 0
};

/// e^{-beta H} / tr e^{-beta H}, with the ground eigenvalue subtracted
/// before exponentiating.
DensityState gibbs_state(const GibbsSpec& spec);

/// Gibbs state of the compressed generator E H E with the trace taken
/// over range(E); the result is embedded back into the full space and
/// supported on range(E).
DensityState zeno_gibbs_state(const GibbsSpec& spec, const Projection& e);

/// |tr(rho A e^{-beta H} B e^{beta H}) - tr(rho B A)| / (||A|| ||B||),
/// the finite-dimensional equilibrium boundary-condition residual.
double kms_residual(const DensityState& rho, const HermitianOperator& h,
                    double beta, const ComplexMatrix& a, const ComplexMatrix& b);

/// S(omega, phi) = tr(rho_phi log rho_phi) - tr(rho_phi log rho_omega)
/// when supp(phi) lies inside supp(omega); +infinity otherwise.
double relative_entropy(const DensityState& omega, const DensityState& phi);

struct EntropyReport {
  double relative_entropy = 0.0;
  double bound = 0.0;         // -log omega(E)
  double equality_gap = 0.0;  // relative_entropy - bound
};

/// Entropy-versus-projection-weight estimate for a state omega_tilde
/// concentrated on range(E): S(omega, omega_tilde) >= -log omega(E),
/// with equality exactly for the compressed-renormalized state when E
/// commutes with omega.
EntropyReport raggio_werner_check(const DensityState& omega, const Projection& e,
                                  const DensityState& omega_tilde);

double trace_distance(const DensityState& a, const DensityState& b);

/// Uhlmann fidelity (tr sqrt(sqrt(a) b sqrt(a)))^2.
double fidelity(const DensityState& a, const DensityState& b);

}  // namespace zeno
