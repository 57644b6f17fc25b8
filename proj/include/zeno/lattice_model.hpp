#pragma once

#include <map>
#include <set>
#include <vector>

#include "zeno/operator_core.hpp"

namespace zeno {

/// Interval of lattice sites [lo, hi] with a two-dimensional space per
/// site. Basis convention per site: index 0 = empty, index 1 = occupied;
/// the site with the smallest label occupies the most significant index
/// block of the chain space.
struct ChainGeometry {
  int lo = 0;
  int hi = 0;
  int local_dim = 2;

  int num_sites() const { return hi - lo + 1; }
  bool contains(int site) const { return site >= lo && site <= hi; }
  bool contains(const ChainGeometry& other) const {
    return lo <= other.lo && other.hi <= hi;
  }
  int position(int site) const { return site - lo; }
  Eigen::Index dim() const;
};

struct XYParameters {
  double J = 1.0;  // hopping amplitude
  double h = 0.0;  // on-site field
};

/// Pure state of a single site: amp_empty |0> + amp_occupied |1>,
/// normalized within 1e-12.
class SitePureState {
 public:
  SitePureState(Complex amp_empty, Complex amp_occupied);
  Complex amp_empty() const { return amp_empty_; }
  Complex amp_occupied() const { return amp_occupied_; }
  Eigen::Vector2cd vector() const;
  ComplexMatrix projector() const;  // |psi><psi|

  /// <psi| a |psi>, the order parameter that controls the averaged
  /// boundary terms.
  Complex lowering_expectation() const;
  /// <psi| a* a |psi>
  double occupation() const;

 private:
  Complex amp_empty_;
  Complex amp_occupied_;
};

/// Finite-range interaction: a map from finite site subsets X to
/// Hermitian terms on the tensor product of the sites in X.
class Interaction {
 public:
  explicit Interaction(int max_diameter);

  /// Adds (accumulates) a term over the sorted, duplicate-free site set.
  void add_term(const std::vector<int>& sites, const ComplexMatrix& term);

  const std::map<std::vector<int>, ComplexMatrix>& terms() const {
    return terms_;
  }
  int max_diameter() const { return max_diameter_; }

 private:
  int max_diameter_;
  std::map<std::vector<int>, ComplexMatrix> terms_;
};

// -- elementary operators ---------------------------------------------------

/// Local lowering matrix a: sends |occupied> to |empty>.
ComplexMatrix lowering_matrix();

/// Jordan-Wigner annihilator a_x = (tensor_{y<x} sigma_z) (x) a (x) 1.
/// Strings extend over sites strictly to the left (smaller labels).
ComplexMatrix jw_annihilation(int site, const ChainGeometry& g);

/// Embeds an operator supported on `sites` (sorted ascending, matching
/// the tensor order of `local`) into the full chain space.
ComplexMatrix embed_on_chain(const ComplexMatrix& local,
                             const std::vector<int>& sites,
                             const ChainGeometry& g);

/// sum_x a*_x a_x over the chain.
HermitianOperator number_operator(const ChainGeometry& g);

// -- model constructions ----------------------------------------------------

/// Nearest-neighbour interaction of the X-Y chain: hopping bonds
/// (J/2)(a*_x a_{x+1} + a*_{x+1} a_x) plus on-site fields h a*_x a_x.
Interaction xy_interaction(const XYParameters& p, const ChainGeometry& ambient);

/// H = (J/2) sum_x (a*_x a_{x+1} + a*_{x+1} a_x) + h sum_x a*_x a_x via
/// Jordan-Wigner fermions. Chains longer than `dense_cap` sites are
/// rejected; use the quasifree backend for those.
HermitianOperator build_xy_hamiltonian(const XYParameters& p,
                                       const ChainGeometry& g,
                                       int dense_cap = 14);

/// P_0 = -(J/2)(a*_{-1}a_0 + a*_0 a_1 + a*_0 a_{-1} + a*_1 a_0) - h a*_0 a_0,
/// the perturbation removing the particle at site 0. Requires the
/// geometry to cover [-1, 1].
HermitianOperator build_p0(const XYParameters& p, const ChainGeometry& g);

/// H(region) = sum of the interaction terms supported inside `region`,
/// embedded on the ambient chain.
HermitianOperator local_hamiltonian(const Interaction& phi,
                                    const std::set<int>& region,
                                    const ChainGeometry& ambient);
HermitianOperator local_hamiltonian(const Interaction& phi,
                                    const ChainGeometry& lambda,
                                    const ChainGeometry& ambient);

std::set<int> interval_sites(const ChainGeometry& g);

/// Surface interaction W(lambda; lambda'): every term inside lambda'
/// that meets both lambda and its complement. Embedded on lambda'.
HermitianOperator surface_energy(const Interaction& phi,
                                 const ChainGeometry& lambda,
                                 const ChainGeometry& lambda_prime);

/// P(lambda; lambda') = H(lambda) + W(lambda; lambda'); subtracting it
/// from H(lambda') leaves the Hamiltonian of the complement.
HermitianOperator removal_perturbation(const Interaction& phi,
                                       const ChainGeometry& lambda,
                                       const ChainGeometry& lambda_prime);

/// E = 1 (x) |psi><psi| (x) 1 with the rank-one factor at `site`.
Projection build_site_projection(const SitePureState& psi, int site,
                                 const ChainGeometry& g);

/// Same, for a pure vector over a whole subinterval of the chain.
Projection build_region_projection(const Eigen::VectorXcd& psi,
                                   const ChainGeometry& region,
                                   const ChainGeometry& g);

struct AveragedHamiltonian {
  HermitianOperator reduced;  // on the chain with the site removed
  double scalar;
};

/// Compression of H by E = 1 (x) P_psi (x) 1, returned as an operator on
/// the reduced chain plus a scalar: embedding (reduced (x) P_psi) plus
/// scalar * E reproduces E H E. The split is fixed by giving the reduced
/// part zero expectation in the all-empty configuration.
AveragedHamiltonian averaged_hamiltonian(const HermitianOperator& h,
                                         const SitePureState& psi, int site,
                                         const ChainGeometry& g);

/// Embeds an operator on the reduced chain back to the full chain as
/// reduced (x) |psi><psi| at `site`.
ComplexMatrix embed_reduced_with_site(const ComplexMatrix& reduced,
                                      const SitePureState& psi, int site,
                                      const ChainGeometry& g);

}  // namespace zeno
