#ifndef DPM_BUNDLE_HPP
#define DPM_BUNDLE_HPP

#include "dpm/homology.hpp"
#include "dpm/jet.hpp"
#include "dpm/report.hpp"
#include "dpm/ribbon.hpp"

namespace dpm {

// Laplacian twisted by a flat line-bundle connection: crossing edge e
// multiplies by phi_e = prod_k z_k^(M(e,k)). At z = 1 this is the ordinary
// Laplacian.
struct BundleLaplacian {
  int num_vertices = 0;
  std::vector<int> tails, heads;
  std::vector<Rat> weights;
  IntMatrix exponents;  // |E| x 2g, rows of the frame's M matrix
};

BundleLaplacian bundle_laplacian(const RibbonGraph& g,
                                 const HomologyFrame& frame);

// det Delta(z) at an exact rational point; every z_k must be nonzero.
Rat evaluate_P(const BundleLaplacian& bl, const RatVector& z);

// Gradient of P at z = 1 (a zero vector; checked exactly by callers).
RatVector gradient_P_at_one(const BundleLaplacian& bl);

// Hessian at z = 1 via degree-2 jets z_k = 1 + t_k (with z_k^{-1} expanded
// to 1 - t_k + t_k^2) and the division-free determinant.
RatMatrix hessian_P_at_one(const BundleLaplacian& bl);

// Full jet of P at 1: constant (= P(1)), gradient, and quadratic part.
Jet2 jet_P_at_one(const BundleLaplacian& bl);

// Checks P(1) = 0, grad P(1) = 0 and Hess P(1) = -2 tree_sum OmegaL, the
// period matrix pipeline being independent of the jet pipeline.
Report verify_theorem3(const RibbonGraph& g, const HomologyFrame& frame);

}  // namespace dpm

#endif
