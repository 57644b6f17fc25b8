#include "zeno/lattice_model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace zeno {

namespace {

void require_valid_interval(const ChainGeometry& g, const char* who) {
  if (g.lo > g.hi) {
    std::ostringstream os;
    os << who << ": empty interval [" << g.lo << ", " << g.hi << "]";
    throw std::invalid_argument(os.str());
  }
  if (g.local_dim != 2) {
    throw std::invalid_argument(std::string(who) + ": local_dim must be 2");
  }
}

ComplexMatrix pauli_z() {
  ComplexMatrix z(2, 2);
  z << 1.0, 0.0, 0.0, -1.0;
  return z;
}

}  // namespace

Eigen::Index ChainGeometry::dim() const {
  Eigen::Index d = 1;
  for (int i = 0; i < num_sites(); ++i) d *= local_dim;
  return d;
}

SitePureState::SitePureState(Complex amp_empty, Complex amp_occupied)
    : amp_empty_(amp_empty), amp_occupied_(amp_occupied) {
  const double norm2 = std::norm(amp_empty_) + std::norm(amp_occupied_);
  if (std::abs(norm2 - 1.0) > kStructuralTol) {
    std::ostringstream os;
    os << "SitePureState: |amplitudes|^2 = " << norm2;
    throw std::invalid_argument(os.str());
  }
}

Eigen::Vector2cd SitePureState::vector() const {
  Eigen::Vector2cd v;
  v << amp_empty_, amp_occupied_;
  return v;
}

ComplexMatrix SitePureState::projector() const {
  const Eigen::Vector2cd v = vector();
  return v * v.adjoint();
}

Complex SitePureState::lowering_expectation() const {
  // <psi| a |psi> with a |1> = |0>.
  return std::conj(amp_empty_) * amp_occupied_;
}

double SitePureState::occupation() const { return std::norm(amp_occupied_); }

Interaction::Interaction(int max_diameter) : max_diameter_(max_diameter) {
  if (max_diameter < 0) {
    throw std::invalid_argument("Interaction: negative range bound");
  }
}

void Interaction::add_term(const std::vector<int>& sites,
                           const ComplexMatrix& term) {
  if (sites.empty()) {
    throw std::invalid_argument("Interaction: empty site set");
  }
  if (!std::is_sorted(sites.begin(), sites.end()) ||
      std::adjacent_find(sites.begin(), sites.end()) != sites.end()) {
    throw std::invalid_argument("Interaction: sites must be sorted and unique");
  }
  if (sites.back() - sites.front() > max_diameter_) {
    throw std::invalid_argument("Interaction: term exceeds the range bound");
  }
  Eigen::Index want = 1;
  for (size_t i = 0; i < sites.size(); ++i) want *= 2;
  if (term.rows() != want || term.cols() != want) {
    throw std::invalid_argument("Interaction: term dimension mismatch");
  }
  if (hermiticity_defect(term) > kStructuralTol * (1.0 + operator_norm(term))) {
    throw std::invalid_argument("Interaction: non-Hermitian term");
  }
  auto it = terms_.find(sites);
  if (it == terms_.end()) {
    terms_.emplace(sites, term);
  } else {
    it->second += term;
  }
}

ComplexMatrix lowering_matrix() {
  ComplexMatrix a(2, 2);
  a << 0.0, 1.0, 0.0, 0.0;
  return a;
}

ComplexMatrix jw_annihilation(int site, const ChainGeometry& g) {
  require_valid_interval(g, "jw_annihilation");
  if (!g.contains(site)) {
    std::ostringstream os;
    os << "jw_annihilation: site " << site << " outside [" << g.lo << ", "
       << g.hi << "]";
    throw std::invalid_argument(os.str());
  }
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  const ComplexMatrix z = pauli_z();
  const ComplexMatrix a = lowering_matrix();
  const ComplexMatrix one = identity_matrix(2);
  for (int y = g.lo; y <= g.hi; ++y) {
    out = tensor(out, y < site ? z : (y == site ? a : one));
  }
  return out;
}

ComplexMatrix embed_on_chain(const ComplexMatrix& local,
                             const std::vector<int>& sites,
                             const ChainGeometry& g) {
  require_valid_interval(g, "embed_on_chain");
  if (sites.empty() || !std::is_sorted(sites.begin(), sites.end()) ||
      std::adjacent_find(sites.begin(), sites.end()) != sites.end()) {
    throw std::invalid_argument("embed_on_chain: bad site list");
  }
  for (int s : sites) {
    if (!g.contains(s)) {
      throw std::invalid_argument("embed_on_chain: site outside the chain");
    }
  }
  const int n = g.num_sites();
  const int k = static_cast<int>(sites.size());
  const Eigen::Index local_dim = Eigen::Index(1) << k;
  if (local.rows() != local_dim || local.cols() != local_dim) {
    throw std::invalid_argument("embed_on_chain: operator dimension mismatch");
  }

  // Bit p of a chain index addresses the site at position p from the
  // left, i.e. bit (n-1-p) of the integer.
  std::vector<int> shifts(k);
  for (int q = 0; q < k; ++q) shifts[q] = n - 1 - g.position(sites[q]);
  std::vector<int> rest_shifts;
  for (int p = 0; p < n; ++p) {
    const int shift = n - 1 - p;
    if (std::find(shifts.begin(), shifts.end(), shift) == shifts.end()) {
      rest_shifts.push_back(shift);
    }
  }

  auto compose = [&](Eigen::Index local_idx, Eigen::Index rest_idx) {
    Eigen::Index full = 0;
    for (int q = 0; q < k; ++q) {
      full |= ((local_idx >> (k - 1 - q)) & 1) << shifts[q];
    }
    for (size_t q = 0; q < rest_shifts.size(); ++q) {
      full |= ((rest_idx >> (rest_shifts.size() - 1 - q)) & 1) << rest_shifts[q];
    }
    return full;
  };

  const Eigen::Index rest_dim = Eigen::Index(1) << (n - k);
  ComplexMatrix out = ComplexMatrix::Zero(g.dim(), g.dim());
  for (Eigen::Index i = 0; i < local_dim; ++i) {
    for (Eigen::Index j = 0; j < local_dim; ++j) {
      const Complex v = local(i, j);
      if (v == Complex(0.0, 0.0)) continue;
      for (Eigen::Index r = 0; r < rest_dim; ++r) {
        out(compose(i, r), compose(j, r)) += v;
      }
    }
  }
  return out;
}

HermitianOperator number_operator(const ChainGeometry& g) {
  require_valid_interval(g, "number_operator");
  ComplexMatrix n_local(2, 2);
  n_local << 0.0, 0.0, 0.0, 1.0;
  ComplexMatrix sum = ComplexMatrix::Zero(g.dim(), g.dim());
  for (int x = g.lo; x <= g.hi; ++x) {
    sum += embed_on_chain(n_local, {x}, g);
  }
  return HermitianOperator(sum);
}

Interaction xy_interaction(const XYParameters& p, const ChainGeometry& ambient) {
  require_valid_interval(ambient, "xy_interaction");
  if (!std::isfinite(p.J) || !std::isfinite(p.h)) {
    throw std::invalid_argument("xy_interaction: non-finite parameters");
  }
  Interaction phi(1);

  ComplexMatrix n_local(2, 2);
  n_local << 0.0, 0.0, 0.0, 1.0;

  // For adjacent sites the Jordan-Wigner strings cancel and the hopping
  // term is local: a*_x a_{x+1} + a*_{x+1} a_x = a* (x) a + a (x) a*.
  const ComplexMatrix a = lowering_matrix();
  const ComplexMatrix bond =
      (p.J / 2.0) * (tensor(a.adjoint(), a) + tensor(a, a.adjoint()));

  for (int x = ambient.lo; x <= ambient.hi; ++x) {
    phi.add_term({x}, p.h * n_local);
    if (x < ambient.hi) phi.add_term({x, x + 1}, bond);
  }
  return phi;
}

HermitianOperator build_xy_hamiltonian(const XYParameters& p,
                                       const ChainGeometry& g, int dense_cap) {
  require_valid_interval(g, "build_xy_hamiltonian");
  if (g.num_sites() > dense_cap) {
    std::ostringstream os;
    os << "build_xy_hamiltonian: " << g.num_sites()
       << " sites exceed the dense-size cap of " << dense_cap
       << "; use the quasifree backend for long chains";
    throw std::length_error(os.str());
  }
  if (!std::isfinite(p.J) || !std::isfinite(p.h)) {
    throw std::invalid_argument("build_xy_hamiltonian: non-finite parameters");
  }
  const Eigen::Index d = g.dim();
  ComplexMatrix h = ComplexMatrix::Zero(d, d);
  for (int x = g.lo; x <= g.hi; ++x) {
    const ComplexMatrix ax = jw_annihilation(x, g);
    h += p.h * (ax.adjoint() * ax);
    if (x < g.hi) {
      const ComplexMatrix ax1 = jw_annihilation(x + 1, g);
      h += (p.J / 2.0) * (ax.adjoint() * ax1 + ax1.adjoint() * ax);
    }
  }
  return HermitianOperator(h);
}

HermitianOperator build_p0(const XYParameters& p, const ChainGeometry& g) {
  require_valid_interval(g, "build_p0");
  if (!(g.lo <= -1 && g.hi >= 1)) {
    throw std::invalid_argument(
        "build_p0: geometry must contain site 0 and both neighbours");
  }
  const ComplexMatrix am1 = jw_annihilation(-1, g);
  const ComplexMatrix a0 = jw_annihilation(0, g);
  const ComplexMatrix ap1 = jw_annihilation(1, g);
  ComplexMatrix out = -(p.J / 2.0) * (am1.adjoint() * a0 + a0.adjoint() * ap1 +
                                      a0.adjoint() * am1 + ap1.adjoint() * a0);
  out -= p.h * (a0.adjoint() * a0);
  return HermitianOperator(out);
}

std::set<int> interval_sites(const ChainGeometry& g) {
  std::set<int> s;
  for (int x = g.lo; x <= g.hi; ++x) s.insert(x);
  return s;
}

HermitianOperator local_hamiltonian(const Interaction& phi,
                                    const std::set<int>& region,
                                    const ChainGeometry& ambient) {
  require_valid_interval(ambient, "local_hamiltonian");
  for (int s : region) {
    if (!ambient.contains(s)) {
      throw std::invalid_argument("local_hamiltonian: region not in ambient");
    }
  }
  ComplexMatrix sum = ComplexMatrix::Zero(ambient.dim(), ambient.dim());
  for (const auto& [sites, term] : phi.terms()) {
    const bool inside = std::all_of(sites.begin(), sites.end(), [&](int x) {
      return region.count(x) > 0;
    });
    if (inside) sum += embed_on_chain(term, sites, ambient);
  }
  return HermitianOperator(sum);
}

HermitianOperator local_hamiltonian(const Interaction& phi,
                                    const ChainGeometry& lambda,
                                    const ChainGeometry& ambient) {
  if (!ambient.contains(lambda)) {
    throw std::invalid_argument("local_hamiltonian: lambda not in ambient");
  }
  return local_hamiltonian(phi, interval_sites(lambda), ambient);
}

HermitianOperator surface_energy(const Interaction& phi,
                                 const ChainGeometry& lambda,
                                 const ChainGeometry& lambda_prime) {
  if (!lambda_prime.contains(lambda)) {
    throw std::invalid_argument("surface_energy: lambda not inside lambda'");
  }
  ComplexMatrix sum =
      ComplexMatrix::Zero(lambda_prime.dim(), lambda_prime.dim());
  for (const auto& [sites, term] : phi.terms()) {
    bool in_prime = true, meets_lambda = false, meets_complement = false;
    for (int x : sites) {
      if (!lambda_prime.contains(x)) in_prime = false;
      if (lambda.contains(x)) {
        meets_lambda = true;
      } else if (lambda_prime.contains(x)) {
        meets_complement = true;
      }
    }
    if (in_prime && meets_lambda && meets_complement) {
      sum += embed_on_chain(term, sites, lambda_prime);
    }
  }
  return HermitianOperator(sum);
}

HermitianOperator removal_perturbation(const Interaction& phi,
                                       const ChainGeometry& lambda,
                                       const ChainGeometry& lambda_prime) {
  const HermitianOperator h_lambda =
      local_hamiltonian(phi, lambda, lambda_prime);
  const HermitianOperator w = surface_energy(phi, lambda, lambda_prime);
  return HermitianOperator(h_lambda.matrix() + w.matrix());
}

Projection build_site_projection(const SitePureState& psi, int site,
                                 const ChainGeometry& g) {
  require_valid_interval(g, "build_site_projection");
  if (!g.contains(site)) {
    throw std::invalid_argument("build_site_projection: site out of range");
  }
  return Projection(embed_on_chain(psi.projector(), {site}, g));
}

Projection build_region_projection(const Eigen::VectorXcd& psi,
                                   const ChainGeometry& region,
                                   const ChainGeometry& g) {
  require_valid_interval(g, "build_region_projection");
  if (!g.contains(region)) {
    throw std::invalid_argument("build_region_projection: region out of range");
  }
  if (psi.size() != region.dim()) {
    throw std::invalid_argument(
        "build_region_projection: vector dimension mismatch");
  }
  if (std::abs(psi.norm() - 1.0) > kStructuralTol) {
    throw std::invalid_argument("build_region_projection: vector not normalized");
  }
  std::vector<int> sites;
  for (int x = region.lo; x <= region.hi; ++x) sites.push_back(x);
  const ComplexMatrix p = psi * psi.adjoint();
  return Projection(embed_on_chain(p, sites, g));
}

AveragedHamiltonian averaged_hamiltonian(const HermitianOperator& h,
                                         const SitePureState& psi, int site,
                                         const ChainGeometry& g) {
  require_valid_interval(g, "averaged_hamiltonian");
  if (!g.contains(site)) {
    throw std::invalid_argument("averaged_hamiltonian: site out of range");
  }
  if (h.dim() != g.dim()) {
    throw std::invalid_argument("averaged_hamiltonian: dimension mismatch");
  }
  const int pos = g.position(site);
  const Eigen::Index left = Eigen::Index(1) << pos;
  const Eigen::Index right = Eigen::Index(1) << (g.num_sites() - 1 - pos);
  const Eigen::Index reduced_dim = left * right;
  const Eigen::Vector2cd v = psi.vector();
  const ComplexMatrix& m = h.matrix();

  // K = (1 (x) <psi| (x) 1) H (1 (x) |psi> (x) 1); then E H E is exactly
  // K (x) |psi><psi| in the (left, site, right) factorization.
  ComplexMatrix k = ComplexMatrix::Zero(reduced_dim, reduced_dim);
  for (Eigen::Index l = 0; l < left; ++l) {
    for (Eigen::Index r = 0; r < right; ++r) {
      const Eigen::Index row = l * right + r;
      for (Eigen::Index lp = 0; lp < left; ++lp) {
        for (Eigen::Index rp = 0; rp < right; ++rp) {
          const Eigen::Index col = lp * right + rp;
          Complex sum = 0.0;
          for (int s = 0; s < 2; ++s) {
            for (int sp = 0; sp < 2; ++sp) {
              sum += std::conj(v[s]) *
                     m((l * 2 + s) * right + r, (lp * 2 + sp) * right + rp) *
                     v[sp];
            }
          }
          k(row, col) = sum;
        }
      }
    }
  }

  // Pin the otherwise free identity shift by making the reduced operator
  // vanish on the all-empty configuration (basis index 0).
  const double scalar = k(0, 0).real();
  k -= scalar * ComplexMatrix::Identity(reduced_dim, reduced_dim);
  return AveragedHamiltonian{HermitianOperator(std::move(k)), scalar};
}

ComplexMatrix embed_reduced_with_site(const ComplexMatrix& reduced,
                                      const SitePureState& psi, int site,
                                      const ChainGeometry& g) {
  require_valid_interval(g, "embed_reduced_with_site");
  if (!g.contains(site)) {
    throw std::invalid_argument("embed_reduced_with_site: site out of range");
  }
  const int pos = g.position(site);
  const Eigen::Index left = Eigen::Index(1) << pos;
  const Eigen::Index right = Eigen::Index(1) << (g.num_sites() - 1 - pos);
  if (reduced.rows() != left * right || reduced.cols() != left * right) {
    throw std::invalid_argument("embed_reduced_with_site: dimension mismatch");
  }
  const ComplexMatrix p = psi.projector();
  ComplexMatrix out = ComplexMatrix::Zero(g.dim(), g.dim());
  for (Eigen::Index l = 0; l < left; ++l) {
    for (Eigen::Index r = 0; r < right; ++r) {
      for (Eigen::Index lp = 0; lp < left; ++lp) {
        for (Eigen::Index rp = 0; rp < right; ++rp) {
          const Complex val = reduced(l * right + r, lp * right + rp);
          if (val == Complex(0.0, 0.0)) continue;
          for (int s = 0; s < 2; ++s) {
            for (int sp = 0; sp < 2; ++sp) {
              out((l * 2 + s) * right + r, (lp * 2 + sp) * right + rp) +=
                  val * p(s, sp);
            }
          }
        }
      }
    }
  }
  return out;
}

}  // namespace zeno
