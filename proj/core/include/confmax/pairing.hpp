#pragma once

#include <vector>

#include "confmax/conformal.hpp"
#include "confmax/fields.hpp"

namespace confmax {

struct PairingResult {
  Complex value{0.0};
  int quadrature_order = 0;
  double estimated_error = 0.0;
};

/// Invariant Hermitian form <omega, mu> = integral over SU(2) of
/// alpha ^ conj(mu), where alpha is the potential attached to omega.
/// Both arguments must lie in the J-eigenspace of the given sign
/// (+1 for Maxw_i, -1 for Maxw_{-i}); this is spot-checked at sampled
/// points.  order = 0 selects adaptive doubling (8,16,...,128, stop on
/// relative change < 1e-4); a positive order fixes the grid and estimates
/// the error from one refinement step.
PairingResult hermitian_pair(const FormField& omega, const FormField& mu,
                             int eigen_sign, int order = 0);

struct GramResult {
  std::vector<MaxwellBasisLabel> labels;
  Eigen::MatrixXcd matrix;
  int quadrature_order = 0;
  double estimated_error = 0.0;
};

/// Gram matrix of basis solutions; all labels must share one J-eigenspace.
GramResult gram_matrix(const std::vector<MaxwellBasisLabel>& labels,
                       int order = 0);

struct InvarianceReport {
  Complex before{0.0};
  Complex after{0.0};
  double rel_error = 0.0;
};

/// Compares <omega, mu> with <g*omega, g*mu>; the pullback potential of
/// g*omega is transported alongside.
InvarianceReport invariance_check(const ConformalElement& g,
                                  const FormField& omega, const FormField& mu,
                                  int eigen_sign, int order = 0);

}  // namespace confmax
