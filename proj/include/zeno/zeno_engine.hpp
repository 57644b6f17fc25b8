#pragma once

#include <vector>

#include "zeno/operator_core.hpp"

namespace zeno {

/// F_n(t) = [E U(t/n) E]^n, the evolution interrupted by n projective
/// measurement events.
ComplexMatrix zeno_product(const HermitianOperator& h, const Projection& e,
                           double t, int n);

/// Z(t) = e^{itEHE} E, the closed-form limit of the products: a partial
/// isometry with initial and final projection E.
ComplexMatrix zeno_target(const HermitianOperator& h, const Projection& e,
                          double t);

/// ||(F_n(t) - Z(t)) E||, the distance to the limit dynamics on the
/// measurement subspace.
double generator_defect(const HermitianOperator& h, const Projection& e,
                        double t, int n);

/// ||F_n(t) - F_m(t)|| for m > n >= 1.
double cauchy_defect(const HermitianOperator& h, const Projection& e, double t,
                     int n, int m);

/// Short-time linear bound on the off-diagonal block: samples the ratio
/// ||E_perp U(tau) E|| / |tau| on a dyadic grid and reports the maximum.
struct AzcEstimate {
  double constant = 0.0;
  std::vector<double> grid;    // sampled tau values
  std::vector<double> ratios;  // ratio per sample
};

/// Grid is {+-t_max 2^{-k} : 0 <= k < levels}; the returned constant is
/// verified against a grid one level finer within 5% slack.
AzcEstimate azc_constant(const HermitianOperator& h, const Projection& e,
                         double t_max, int levels);

/// U_K(t) = e^{it(H + K E_perp)}: strong coupling to the measurement
/// apparatus; approaches Z(t) on range(E) as K grows.
UnitaryOperator continuous_measurement(const HermitianOperator& h,
                                       const Projection& e, double coupling,
                                       double t);

struct ZenoDefectRecord {
  int n = 0;
  double cauchy_defect = 0.0;     // against m = 2n
  double generator_defect = 0.0;
};

struct ZenoRun {
  HermitianOperator h;
  Projection e;
  double t;
  std::vector<int> n_grid;
  std::vector<ZenoDefectRecord> results;
};

/// Sweeps a strictly increasing n grid, recording both defects per n.
ZenoRun run_zeno_grid(const HermitianOperator& h, const Projection& e, double t,
                      const std::vector<int>& n_grid);

}  // namespace zeno
