#include "dpm/bundle.hpp"

#include <sstream>

#include "dpm/exactla.hpp"
#include "dpm/period.hpp"

namespace dpm {

BundleLaplacian bundle_laplacian(const RibbonGraph& g,
                                 const HomologyFrame& frame) {
  BundleLaplacian bl;
  bl.num_vertices = g.num_vertices();
  bl.tails.resize(g.num_edges());
  bl.heads.resize(g.num_edges());
  for (int e = 0; e < g.num_edges(); ++e) {
    bl.tails[e] = g.tail(e);
    bl.heads[e] = g.head(e);
  }
  bl.weights = g.weights();
  bl.exponents = frame.M;
  return bl;
}

namespace {

Rat holonomy(const BundleLaplacian& bl, const RatVector& z, int e, int dir) {
  Rat phi(1);
  for (Eigen::Index k = 0; k < bl.exponents.cols(); ++k) {
    long p = bl.exponents(e, k).convert_to<long>() * dir;
    if (p == 0) continue;
    Rat base = z(k);
    if (p < 0) {
      base = Rat(1) / base;
      p = -p;
    }
    for (long i = 0; i < p; ++i) phi *= base;
  }
  return phi;
}

Jet2 holonomy_jet(const BundleLaplacian& bl, int vars, int e, int dir) {
  Jet2 phi = Jet2::constant(vars, Rat(1));
  for (int k = 0; k < vars; ++k) {
    const long p = bl.exponents(e, k).convert_to<long>() * dir;
    if (p == 0) continue;
    phi = phi * Jet2::one_plus_var_pow(vars, k, p);
  }
  return phi;
}

}  // namespace

Rat evaluate_P(const BundleLaplacian& bl, const RatVector& z) {
  if (z.size() != bl.exponents.cols())
    throw BadIndex("evaluate_P: holonomy vector has wrong length");
  for (Eigen::Index k = 0; k < z.size(); ++k)
    if (z(k) == 0) throw ZeroConnection("holonomy value must be nonzero");
  const int v = bl.num_vertices;
  RatMatrix delta = RatMatrix::Constant(v, v, Rat(0));
  for (size_t e = 0; e < bl.weights.size(); ++e) {
    const int a = bl.tails[e], b = bl.heads[e];
    const Rat& c = bl.weights[e];
    const Rat phi = holonomy(bl, z, static_cast<int>(e), 1);
    delta(b, b) += c;
    delta(b, a) -= c * phi;
    delta(a, a) += c;
    delta(a, b) -= c / phi;
  }
  return det_bareiss(delta);
}

Jet2 jet_P_at_one(const BundleLaplacian& bl) {
  const int vars = static_cast<int>(bl.exponents.cols());
  const int v = bl.num_vertices;
  const Jet2 zero = Jet2::constant(vars, Rat(0));
  std::vector<Jet2> delta(static_cast<size_t>(v) * v, zero);
  auto at = [&](int i, int j) -> Jet2& {
    return delta[static_cast<size_t>(i) * v + j];
  };
  for (size_t e = 0; e < bl.weights.size(); ++e) {
    const int a = bl.tails[e], b = bl.heads[e];
    const Jet2 c = Jet2::constant(vars, bl.weights[e]);
    const Jet2 phi = holonomy_jet(bl, vars, static_cast<int>(e), 1);
    const Jet2 phi_inv = holonomy_jet(bl, vars, static_cast<int>(e), -1);
    at(b, b) = at(b, b) + c;
    at(b, a) = at(b, a) - c * phi;
    at(a, a) = at(a, a) + c;
    at(a, b) = at(a, b) - c * phi_inv;
  }
  return berkowitz_det(delta, v, zero, Jet2::constant(vars, Rat(1)));
}

RatVector gradient_P_at_one(const BundleLaplacian& bl) {
  return jet_P_at_one(bl).grad();
}

RatMatrix hessian_P_at_one(const BundleLaplacian& bl) {
  return jet_P_at_one(bl).hessian();
}

Report verify_theorem3(const RibbonGraph& g, const HomologyFrame& frame) {
  Report rep;
  rep.suite = "theorem3";
  const BundleLaplacian bl = bundle_laplacian(g, frame);
  const Jet2 jet = jet_P_at_one(bl);
  const PeriodData pd = omega_l(g, frame);

  rep.add("theorem3.P1", "P(1,...,1)", rat_to_string(jet.value()), "0",
          jet.value() == 0);
  bool grad_zero = true;
  for (Eigen::Index i = 0; i < jet.grad().size(); ++i)
    if (jet.grad()(i) != 0) grad_zero = false;
  rep.add("theorem3.grad", "grad P at 1",
          grad_zero ? "0" : matrix_to_string(RatMatrix(jet.grad())), "0",
          grad_zero);

  const RatMatrix hess = jet.hessian();
  const Rat scale = Rat(-2) * pd.tree_sum;
  const RatMatrix want = scale * pd.OmegaL;
  rep.add("theorem3.hessian", "Hess P at 1 vs -2 tree_sum OmegaL",
          matrix_to_string(hess), matrix_to_string(want),
          exact_equal(hess, want));
  return rep;
}

}  // namespace dpm
