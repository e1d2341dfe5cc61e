#include "dpm/period.hpp"

#include <cmath>

#include "dpm/exactla.hpp"

namespace dpm {

namespace {

RatMatrix conductance_matrix(const RibbonGraph& g) {
  RatMatrix c = RatMatrix::Constant(g.num_edges(), g.num_edges(), Rat(0));
  for (int e = 0; e < g.num_edges(); ++e) c(e, e) = g.weight(e);
  return c;
}

RatMatrix drop_column(const RatMatrix& m, int col) {
  RatMatrix out(m.rows(), m.cols() - 1);
  for (Eigen::Index j = 0, t = 0; j < m.cols(); ++j) {
    if (j == col) continue;
    out.col(t++) = m.col(j);
  }
  return out;
}

RatMatrix submatrix(const RatMatrix& m, const std::vector<int>& rows,
                    const std::vector<int>& cols) {
  RatMatrix out(rows.size(), cols.size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j)
      out(i, j) = m(rows[i], cols[j]);
  return out;
}

std::vector<int> to_zero_based(const std::vector<int>& labels, int two_g) {
  std::vector<int> out;
  out.reserve(labels.size());
  for (int i : labels) {
    if (i < 1 || i > two_g)
      throw BadIndex("basis label " + std::to_string(i) + " outside 1..2g");
    out.push_back(i - 1);
  }
  return out;
}

}  // namespace

LaplacianData laplacian(const RibbonGraph& g, int root) {
  if (!g.is_connected())
    throw InvariantViolation("laplacian requires a connected graph");
  if (root < 0 || root >= g.num_vertices()) throw BadIndex("root out of range");
  const int V = g.num_vertices(), E = g.num_edges();
  RatMatrix d = RatMatrix::Constant(E, V, Rat(0));
  for (int e = 0; e < E; ++e) {
    d(e, g.head(e)) += 1;
    d(e, g.tail(e)) -= 1;  // loops cancel to 0
  }
  const RatMatrix c = conductance_matrix(g);
  RatMatrix delta = d.transpose() * c * d;
  RatMatrix delta_oo(V - 1, V - 1);
  for (int i = 0, r = 0; i < V; ++i) {
    if (i == root) continue;
    for (int j = 0, s = 0; j < V; ++j) {
      if (j == root) continue;
      delta_oo(r, s) = delta(i, j);
      ++s;
    }
    ++r;
  }
  Rat tree_sum = det_bareiss(delta_oo);
  return LaplacianData{std::move(d), std::move(delta), std::move(delta_oo),
                       std::move(tree_sum), root};
}

PeriodData omega_l(const RibbonGraph& g, const HomologyFrame& frame,
                   int root) {
  const LaplacianData lap = laplacian(g, root);
  const RatMatrix c = conductance_matrix(g);
  const RatMatrix m = to_rat(frame.M);
  const RatMatrix d_bar = drop_column(lap.d, root);
  const RatMatrix mtcm = m.transpose() * c * m;
  const RatMatrix dbar_t_cm = d_bar.transpose() * c * m;

  RatMatrix omega_l_mat = mtcm;
  if (d_bar.cols() > 0)
    omega_l_mat -= dbar_t_cm.transpose() *
                   solve_linear(lap.delta_oo, dbar_t_cm);

  PeriodData pd;
  pd.OmegaL = omega_l_mat;
  pd.L = solve_linear(to_rat(frame.omega), omega_l_mat);
  pd.tree_sum = lap.tree_sum;
  pd.root = root;
  pd.delta_oo = lap.delta_oo;
  pd.dbar_t_CM = dbar_t_cm;
  pd.MtCM = mtcm;
  return pd;
}

HarmonicForm harmonic_form(const RibbonGraph& g, const HomologyFrame& frame,
                           const RatVector& A, int root) {
  const LaplacianData lap = laplacian(g, root);
  const RatMatrix c = conductance_matrix(g);
  const RatMatrix m = to_rat(frame.M);
  if (A.size() != m.cols()) throw BadIndex("period vector has wrong length");
  const RatMatrix d_bar = drop_column(lap.d, root);
  const int V = g.num_vertices();
  RatVector h = RatVector::Constant(V, Rat(0));
  if (V > 1) {
    RatVector rhs = d_bar.transpose() * (c * (m * A));
    RatVector h_bar = solve_linear(lap.delta_oo, RatMatrix(-rhs));
    for (int v = 0, r = 0; v < V; ++v) {
      if (v == root) continue;
      h(v) = h_bar(r++);
    }
  }
  OneForm omega{lap.d * h + m * A};
  return HarmonicForm{std::move(omega), std::move(h)};
}

bool is_closed(const RibbonGraph&, const FaceSet& fs, const OneForm& omega) {
  for (const auto& walk : fs.faces) {
    Rat acc(0);
    for (int d : walk) {
      const int e = RibbonGraph::edge_of(d);
      acc += (d % 2 == 0) ? omega.values(e) : Rat(-omega.values(e));
    }
    if (acc != 0) return false;
  }
  return true;
}

bool is_coclosed(const RibbonGraph& g, const OneForm& omega) {
  for (int v = 0; v < g.num_vertices(); ++v) {
    Rat acc(0);
    for (int e = 0; e < g.num_edges(); ++e) {
      if (g.head(e) == v) acc += g.weight(e) * omega.values(e);
      if (g.tail(e) == v) acc -= g.weight(e) * omega.values(e);
    }
    if (acc != 0) return false;
  }
  return true;
}

RatVector periods(const RibbonGraph& g, const HomologyFrame& frame,
                  const OneForm& omega) {
  const int two_g = 2 * frame.genus;
  RatVector out = RatVector::Constant(two_g, Rat(0));
  for (int j = 0; j < two_g; ++j) {
    Rat acc(0);
    for (int e = 0; e < g.num_edges(); ++e)
      acc += Rat(frame.basis[j].coeffs(e)) * omega.values(e);
    out(j) = acc;
  }
  return out;
}

RatVector dual_periods(const RibbonGraph& g, const HomologyFrame& frame,
                       const OneForm& omega) {
  if (!is_closed(g, frame.faces, omega) || !is_coclosed(g, omega))
    throw NotHarmonic("dual_periods: form is not harmonic");
  const RatMatrix c = conductance_matrix(g);
  const RatMatrix m = to_rat(frame.M);
  RatVector mtcw = m.transpose() * (c * omega.values);
  return solve_linear(to_rat(frame.omega), RatMatrix(mtcw));
}

Rat minor(const PeriodData& pd, const std::vector<int>& I,
          const std::vector<int>& J) {
  const int two_g = static_cast<int>(pd.OmegaL.rows());
  if (I.size() != J.size() || I.empty())
    throw BadIndex("minor: index sets must be nonempty and equal size");
  const std::vector<int> iz = to_zero_based(I, two_g);
  const std::vector<int> jz = to_zero_based(J, two_g);
  const Rat direct = det_bareiss(submatrix(pd.OmegaL, iz, jz));
  // Independent route through the Schur block identity.
  RatMatrix q(pd.dbar_t_CM.rows(), jz.size());
  RatMatrix r(iz.size(), pd.dbar_t_CM.rows());
  for (size_t t = 0; t < jz.size(); ++t) q.col(t) = pd.dbar_t_CM.col(jz[t]);
  for (size_t t = 0; t < iz.size(); ++t)
    r.row(t) = pd.dbar_t_CM.col(iz[t]).transpose();
  const RatMatrix s = submatrix(pd.MtCM, iz, jz);
  Rat via_schur;
  if (pd.delta_oo.rows() == 0) {
    via_schur = det_bareiss(s);
  } else {
    via_schur = schur_minor_oracle(pd.delta_oo, q, r, s) / pd.tree_sum;
  }
  if (via_schur != direct)
    throw Error("minor: Schur route disagrees with the direct determinant");
  return direct;
}

WpPotential wp_potential(const RibbonGraph& g, const HomologyFrame& frame) {
  if (frame.genus < 1)
    throw BadParams("wp_potential requires genus >= 1");
  const PeriodData pd = omega_l(g, frame);
  std::vector<int> idx;
  for (int i = frame.genus + 1; i <= 2 * frame.genus; ++i) idx.push_back(i);
  const Rat product = pd.tree_sum * minor(pd, idx, idx);
  return WpPotential{product, std::log(rat_to_double(product))};
}

NormalizedPeriodBlocks normalized_period_blocks(const PeriodData& pd) {
  const int two_g = static_cast<int>(pd.OmegaL.rows());
  if (two_g == 0 || two_g % 2 != 0)
    throw BadParams("normalized blocks require genus >= 1");
  const int gg = two_g / 2;
  const RatMatrix p = pd.OmegaL.topLeftCorner(gg, gg);
  const RatMatrix r = pd.OmegaL.bottomLeftCorner(gg, gg);
  const RatMatrix s = pd.OmegaL.bottomRightCorner(gg, gg);
  NormalizedPeriodBlocks out;
  out.ImPi = inverse(s);
  out.RePi = -(out.ImPi * r);
  out.residual = p - (out.ImPi + out.RePi * s * out.RePi);
  return out;
}

}  // namespace dpm
