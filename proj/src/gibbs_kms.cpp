#include "zeno/gibbs_kms.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace zeno {

namespace {

constexpr double kMaxBetaWidth = 700.0;  // overflow guard for e^{beta H}

// Eigenvalues of a density matrix below this are treated as zero when
// deciding supports.
constexpr double kSupportCut = 1e-12;

ComplexMatrix boltzmann_weights(const Spectrum& spec, double beta, double shift,
                                double sign) {
  Eigen::VectorXd w(spec.values.size());
  for (Eigen::Index k = 0; k < spec.values.size(); ++k) {
    w[k] = std::exp(sign * beta * (spec.values[k] - shift));
  }
  return spec.vectors * w.asDiagonal() * spec.vectors.adjoint();
}

}  // namespace

DensityState gibbs_state(const GibbsSpec& spec) {
  if (!(spec.beta > 0.0) || !std::isfinite(spec.beta)) {
    throw std::invalid_argument("gibbs_state: beta must be positive and finite");
  }
  const Spectrum s = diagonalize(spec.h);
  const double ground = s.values.minCoeff();
  Eigen::VectorXd w(s.values.size());
  for (Eigen::Index k = 0; k < s.values.size(); ++k) {
    w[k] = std::exp(-spec.beta * (s.values[k] - ground));
  }
  const double z = w.sum();
  ComplexMatrix rho = s.vectors * (w / z).asDiagonal() * s.vectors.adjoint();
  return DensityState((rho + rho.adjoint().eval()) / 2.0);
}

DensityState zeno_gibbs_state(const GibbsSpec& spec, const Projection& e) {
  if (e.rank() < 1) {
    throw std::invalid_argument("zeno_gibbs_state: projection has rank 0");
  }
  if (e.dim() != spec.h.dim()) {
    throw std::invalid_argument("zeno_gibbs_state: dimension mismatch");
  }
  // E B = B for a range basis B, so B* (EHE) B = B* H B.
  const ComplexMatrix basis = e.range_basis();
  const HermitianOperator compressed(subspace_compress(spec.h.matrix(), basis));
  const DensityState small = gibbs_state(GibbsSpec{compressed, spec.beta});
  ComplexMatrix rho = subspace_embed(small.matrix(), basis);
  return DensityState((rho + rho.adjoint().eval()) / 2.0);
}

double kms_residual(const DensityState& rho, const HermitianOperator& h,
                    double beta, const ComplexMatrix& a, const ComplexMatrix& b) {
  if (rho.dim() != h.dim() || a.rows() != h.dim() || b.rows() != h.dim()) {
    throw std::invalid_argument("kms_residual: dimension mismatch");
  }
  const Spectrum s = diagonalize(h);
  const double width = s.values.maxCoeff() - s.values.minCoeff();
  if (beta * width > kMaxBetaWidth) {
    std::ostringstream os;
    os << "kms_residual: beta * spectral width = " << beta * width
       << " would overflow; rescale the Hamiltonian or lower beta";
    throw std::runtime_error(os.str());
  }
  // Shift to the spectral midpoint: the shifts cancel between the two
  // exponentials, but keep both factors representable.
  const double mid = (s.values.maxCoeff() + s.values.minCoeff()) / 2.0;
  const ComplexMatrix em = boltzmann_weights(s, beta, mid, -1.0);
  const ComplexMatrix ep = boltzmann_weights(s, beta, mid, +1.0);

  const Complex lhs = (rho.matrix() * a * em * b * ep).trace();
  const Complex rhs = (rho.matrix() * b * a).trace();
  const double denom = operator_norm(a) * operator_norm(b);
  if (denom == 0.0) return 0.0;
  return std::abs(lhs - rhs) / denom;
}

double relative_entropy(const DensityState& omega, const DensityState& phi) {
  if (omega.dim() != phi.dim()) {
    throw std::invalid_argument("relative_entropy: dimension mismatch");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eo(omega.matrix());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> ep(phi.matrix());
  if (eo.info() != Eigen::Success || ep.info() != Eigen::Success) {
    throw std::runtime_error("relative_entropy: eigensolver failed");
  }
  const Eigen::VectorXd q = eo.eigenvalues();
  const Eigen::VectorXd p = ep.eigenvalues();
  const ComplexMatrix vo = eo.eigenvectors();
  const ComplexMatrix vp = ep.eigenvectors();

  // support check: weight of phi's support that leaks into ker(omega)
  double leak = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (p[i] <= kSupportCut) continue;
    for (Eigen::Index j = 0; j < q.size(); ++j) {
      if (q[j] > kSupportCut) continue;
      leak += p[i] * std::norm(vo.col(j).dot(vp.col(i)));
    }
  }
  if (leak > 1e-10) {
    return std::numeric_limits<double>::infinity();
  }

  double s = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (p[i] > kSupportCut) s += p[i] * std::log(p[i]);
  }
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (p[i] <= kSupportCut) continue;
    for (Eigen::Index j = 0; j < q.size(); ++j) {
      if (q[j] <= kSupportCut) continue;
      const double overlap = std::norm(vo.col(j).dot(vp.col(i)));
      s -= p[i] * overlap * std::log(q[j]);
    }
  }
  return s;
}

EntropyReport raggio_werner_check(const DensityState& omega, const Projection& e,
                                  const DensityState& omega_tilde) {
  if (omega.dim() != e.dim() || omega_tilde.dim() != e.dim()) {
    throw std::invalid_argument("raggio_werner_check: dimension mismatch");
  }
  const double tilde_weight =
      (omega_tilde.matrix() * e.matrix()).trace().real();
  if (std::abs(tilde_weight - 1.0) > 1e-10) {
    std::ostringstream os;
    os << "raggio_werner_check: omega_tilde(E) = " << tilde_weight
       << ", expected 1";
    throw std::invalid_argument(os.str());
  }
  EntropyReport report;
  report.relative_entropy = relative_entropy(omega, omega_tilde);
  const double omega_weight = (omega.matrix() * e.matrix()).trace().real();
  report.bound = -std::log(omega_weight);
  report.equality_gap = report.relative_entropy - report.bound;
  return report;
}

double trace_distance(const DensityState& a, const DensityState& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("trace_distance: dimension mismatch");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(a.matrix() - b.matrix(),
                                                  Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("trace_distance: eigensolver failed");
  }
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

double fidelity(const DensityState& a, const DensityState& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("fidelity: dimension mismatch");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> ea(a.matrix());
  if (ea.info() != Eigen::Success) {
    throw std::runtime_error("fidelity: eigensolver failed");
  }
  Eigen::VectorXd roots = ea.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  const ComplexMatrix sqrt_a =
      ea.eigenvectors() * roots.asDiagonal() * ea.eigenvectors().adjoint();
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> em(sqrt_a * b.matrix() * sqrt_a,
                                                  Eigen::EigenvaluesOnly);
  if (em.info() != Eigen::Success) {
    throw std::runtime_error("fidelity: eigensolver failed");
  }
  const double root_sum = em.eigenvalues().cwiseMax(0.0).cwiseSqrt().sum();
  return root_sum * root_sum;
}

}  // namespace zeno
