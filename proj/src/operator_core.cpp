#include "zeno/operator_core.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace zeno {

namespace {

void require_square_finite(const ComplexMatrix& m, const char* who) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    std::ostringstream os;
    os << who << ": expected a nonempty square matrix, got " << m.rows() << "x"
       << m.cols();
    throw std::invalid_argument(os.str());
  }
  if (!m.allFinite()) {
    throw std::invalid_argument(std::string(who) + ": non-finite entries");
  }
}

}  // namespace

bool all_finite(const ComplexMatrix& m) { return m.allFinite(); }

double operator_norm(const ComplexMatrix& a) {
  require_square_finite(a, "operator_norm");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(a.adjoint() * a,
                                                  Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("operator_norm: eigensolver failed");
  }
  return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

double hermiticity_defect(const ComplexMatrix& m) {
  return (m - m.adjoint().eval()).cwiseAbs().maxCoeff();
}

ComplexMatrix identity_matrix(Eigen::Index dim) {
  return ComplexMatrix::Identity(dim, dim);
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b - b * a;
}

ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b + b * a;
}

HermitianOperator::HermitianOperator(ComplexMatrix m) : mat_(std::move(m)) {
  require_square_finite(mat_, "HermitianOperator");
  const double defect = hermiticity_defect(mat_);
  // Cheap path first: the bound can only grow with the norm.
  if (defect > kStructuralTol &&
      defect > kStructuralTol * (1.0 + operator_norm(mat_))) {
    std::ostringstream os;
    os << "HermitianOperator: hermiticity defect " << defect;
    throw std::invalid_argument(os.str());
  }
}

UnitaryOperator::UnitaryOperator(ComplexMatrix m) : mat_(std::move(m)) {
  require_square_finite(mat_, "UnitaryOperator");
  const ComplexMatrix residue =
      mat_.adjoint() * mat_ - identity_matrix(mat_.rows());
  const double defect = operator_norm(residue);
  if (defect > 1e-10) {
    std::ostringstream os;
    os << "UnitaryOperator: ||U*U - 1|| = " << defect;
    throw std::invalid_argument(os.str());
  }
}

Projection::Projection(ComplexMatrix m) : mat_(std::move(m)) {
  require_square_finite(mat_, "Projection");
  const double herm = operator_norm(mat_ - mat_.adjoint().eval());
  const double idem = operator_norm(mat_ * mat_ - mat_);
  if (herm > kStructuralTol || idem > kStructuralTol) {
    std::ostringstream os;
    os << "Projection: ||E^2 - E|| = " << idem << ", ||E - E*|| = " << herm;
    throw std::invalid_argument(os.str());
  }
  rank_ = static_cast<Eigen::Index>(std::llround(mat_.trace().real()));
  if (rank_ < 0 || rank_ > mat_.rows()) {
    throw std::invalid_argument("Projection: trace outside [0, dim]");
  }
}

ComplexMatrix Projection::complement() const {
  return identity_matrix(mat_.rows()) - mat_;
}

ComplexMatrix Projection::range_basis() const {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(mat_);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("Projection::range_basis: eigensolver failed");
  }
  // Eigenvalues ascending, so the range eigenvectors sit in the last
  // rank_ columns.
  return es.eigenvectors().rightCols(rank_);
}

DensityState::DensityState(ComplexMatrix m) : mat_(std::move(m)) {
  require_square_finite(mat_, "DensityState");
  const double herm = hermiticity_defect(mat_);
  if (herm > kStructuralTol) {
    std::ostringstream os;
    os << "DensityState: hermiticity defect " << herm;
    throw std::invalid_argument(os.str());
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(mat_, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("DensityState: eigensolver failed");
  }
  if (es.eigenvalues().minCoeff() < -kStructuralTol) {
    std::ostringstream os;
    os << "DensityState: negative eigenvalue " << es.eigenvalues().minCoeff();
    throw std::invalid_argument(os.str());
  }
  const double trace_defect = std::abs(mat_.trace() - Complex(1.0, 0.0));
  if (trace_defect > 1e-10) {
    std::ostringstream os;
    os << "DensityState: |trace - 1| = " << trace_defect;
    throw std::invalid_argument(os.str());
  }
}

Spectrum diagonalize(const HermitianOperator& h) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h.matrix());
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("diagonalize: eigensolver failed");
  }
  return Spectrum{es.eigenvalues(), es.eigenvectors()};
}

UnitaryOperator hermitian_evolution(const HermitianOperator& h, double t) {
  if (!std::isfinite(t)) {
    throw std::invalid_argument("hermitian_evolution: non-finite time");
  }
  const Spectrum spec = diagonalize(h);
  Eigen::VectorXcd phases(spec.values.size());
  for (Eigen::Index k = 0; k < spec.values.size(); ++k) {
    phases[k] = std::exp(Complex(0.0, t * spec.values[k]));
  }
  return UnitaryOperator(spec.vectors * phases.asDiagonal() *
                         spec.vectors.adjoint());
}

HermitianOperator matrix_function(const HermitianOperator& h,
                                  const std::function<double(double)>& f) {
  const Spectrum spec = diagonalize(h);
  Eigen::VectorXd mapped(spec.values.size());
  for (Eigen::Index k = 0; k < spec.values.size(); ++k) {
    const double fx = f(spec.values[k]);
    if (!std::isfinite(fx)) {
      std::ostringstream os;
      os << "matrix_function: map not finite at eigenvalue " << spec.values[k];
      throw std::domain_error(os.str());
    }
    mapped[k] = fx;
  }
  return HermitianOperator(spec.vectors * mapped.asDiagonal() *
                           spec.vectors.adjoint());
}

namespace {

// Strides for a mixed-radix index, leftmost factor most significant.
std::vector<Eigen::Index> factor_strides(const std::vector<Eigen::Index>& dims) {
  std::vector<Eigen::Index> strides(dims.size());
  Eigen::Index s = 1;
  for (int p = static_cast<int>(dims.size()) - 1; p >= 0; --p) {
    strides[p] = s;
    s *= dims[p];
  }
  return strides;
}

}  // namespace

DensityState partial_trace(const DensityState& rho, const std::vector<int>& keep,
                           const std::vector<Eigen::Index>& dims) {
  Eigen::Index total = 1;
  for (Eigen::Index d : dims) {
    if (d < 1) throw std::invalid_argument("partial_trace: factor dim < 1");
    total *= d;
  }
  if (total != rho.dim()) {
    throw std::invalid_argument(
        "partial_trace: factorization inconsistent with state dimension");
  }
  std::vector<int> kept = keep;
  std::sort(kept.begin(), kept.end());
  if (std::unique(kept.begin(), kept.end()) != kept.end()) {
    throw std::invalid_argument("partial_trace: duplicate kept factor");
  }
  for (int k : kept) {
    if (k < 0 || k >= static_cast<int>(dims.size())) {
      throw std::invalid_argument("partial_trace: kept factor out of range");
    }
  }

  std::vector<int> traced;
  for (int p = 0; p < static_cast<int>(dims.size()); ++p) {
    if (!std::binary_search(kept.begin(), kept.end(), p)) traced.push_back(p);
  }

  const std::vector<Eigen::Index> strides = factor_strides(dims);
  Eigen::Index kept_dim = 1, traced_dim = 1;
  for (int p : kept) kept_dim *= dims[p];
  for (int p : traced) traced_dim *= dims[p];

  // Decompose a linear index over a factor subset, then recompose a full
  // index by summing strides.
  auto expand = [&](Eigen::Index idx, const std::vector<int>& which) {
    Eigen::Index full = 0;
    for (int q = static_cast<int>(which.size()) - 1; q >= 0; --q) {
      const int p = which[q];
      full += (idx % dims[p]) * strides[p];
      idx /= dims[p];
    }
    return full;
  };

  ComplexMatrix out = ComplexMatrix::Zero(kept_dim, kept_dim);
  const ComplexMatrix& in = rho.matrix();
  for (Eigen::Index i = 0; i < kept_dim; ++i) {
    const Eigen::Index base_i = expand(i, kept);
    for (Eigen::Index j = 0; j < kept_dim; ++j) {
      const Eigen::Index base_j = expand(j, kept);
      Complex sum = 0.0;
      for (Eigen::Index tr = 0; tr < traced_dim; ++tr) {
        const Eigen::Index off = expand(tr, traced);
        sum += in(base_i + off, base_j + off);
      }
      out(i, j) = sum;
    }
  }
  return DensityState(out);
}

ComplexMatrix subspace_compress(const ComplexMatrix& a, const ComplexMatrix& basis) {
  return basis.adjoint() * a * basis;
}

ComplexMatrix subspace_embed(const ComplexMatrix& a, const ComplexMatrix& basis) {
  return basis * a * basis.adjoint();
}

}  // namespace zeno
