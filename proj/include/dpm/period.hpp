#ifndef DPM_PERIOD_HPP
#define DPM_PERIOD_HPP

#include <vector>

#include "dpm/homology.hpp"
#include "dpm/numeric.hpp"

namespace dpm {

// Discrete 1-form: one value per edge on the fixed orientation, implicitly
// antisymmetric under reversal.
struct OneForm {
  RatVector values;
};

struct LaplacianData {
  RatMatrix d;         // |E| x |V| signed incidence (head +1, tail -1)
  RatMatrix delta;     // d^t C d
  RatMatrix delta_oo;  // reduced Laplacian, root row/column removed
  Rat tree_sum;        // det(delta_oo); spanning-tree weight sum
  int root;
};

LaplacianData laplacian(const RibbonGraph& g, int root = 0);

struct PeriodData {
  RatMatrix OmegaL;  // 2g x 2g, symmetric positive definite
  RatMatrix L;       // Omega^{-1} OmegaL
  Rat tree_sum;
  int root;
  // Pieces kept for the Schur-route minor cross-check.
  RatMatrix delta_oo;
  RatMatrix dbar_t_CM;  // d_obar^t C M
  RatMatrix MtCM;       // M^t C M
};

// OmegaL = M^t C M - M^t C d_obar delta_oo^{-1} d_obar^t C M.
PeriodData omega_l(const RibbonGraph& g, const HomologyFrame& frame,
                   int root = 0);

struct HarmonicForm {
  OneForm omega;
  RatVector potentials;  // h with h(root) = 0
};

// The unique harmonic 1-form with periods A over the basis cycles, built as
// omega = dh + M A with h solved from the reduced Laplacian.
HarmonicForm harmonic_form(const RibbonGraph& g, const HomologyFrame& frame,
                           const RatVector& A, int root = 0);

bool is_closed(const RibbonGraph& g, const FaceSet& fs, const OneForm& omega);
bool is_coclosed(const RibbonGraph& g, const OneForm& omega);

// Periods over the basis cycles gamma_j.
RatVector periods(const RibbonGraph& g, const HomologyFrame& frame,
                  const OneForm& omega);

// Periods of the conjugate form *omega = c omega over the dual cell
// structure; equals L A. Throws NotHarmonic if omega is not harmonic.
RatVector dual_periods(const RibbonGraph& g, const HomologyFrame& frame,
                       const OneForm& omega);

// det of the I x J submatrix of OmegaL; I, J use the 1-based basis labels
// 1..2g. Cross-checked internally against the Schur-complement route
// det [[delta_oo, d^t C M_J],[M_I^t C d, M_I^t C M_J]] / tree_sum.
Rat minor(const PeriodData& pd, const std::vector<int>& I,
          const std::vector<int>& J);

struct WpPotential {
  Rat product;       // tree_sum * det (OmegaL)_{I,I}, I = {g+1..2g}
  double log_value;  // approximate, for reporting only
};

WpPotential wp_potential(const RibbonGraph& g, const HomologyFrame& frame);

struct NormalizedPeriodBlocks {
  RatMatrix ImPi;      // inverse of the lower-right g x g block; SPD
  RatMatrix RePi;      // -ImPi * (lower-left block)
  RatMatrix residual;  // P - (ImPi + RePi ImPi^{-1} RePi); reported, not asserted
};

NormalizedPeriodBlocks normalized_period_blocks(const PeriodData& pd);

}  // namespace dpm

#endif
