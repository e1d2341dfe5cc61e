#ifndef DPM_QUASITREE_HPP
#define DPM_QUASITREE_HPP

#include <vector>

#include "dpm/homology.hpp"
#include "dpm/period.hpp"
#include "dpm/report.hpp"
#include "dpm/ribbon.hpp"

namespace dpm {

// A k-homological quasi-tree: connected spanning subgraph with |V|-1+k
// edges whose cycle classes span a rank-k sublattice of H_1 of the surface.
struct QuasiTree {
  std::vector<int> edges;       // ascending
  int k = 0;
  std::vector<int> inner_tree;  // greedy lowest-id spanning tree inside edges
  std::vector<int> extra;       // edges minus inner_tree; generates H_1
  IntMatrix class_matrix;       // 2g x k; column s = coordinates of mu_s
};

// All k-quasi-trees in ascending bitmask order. The enumeration is
// exhaustive over edge subsets; max_edges guards against runaway input.
std::vector<QuasiTree> enumerate_quasitrees(const RibbonGraph& g,
                                            const HomologyFrame& frame, int k,
                                            int max_edges = 16);

// det of the rows of class_matrix selected by the 1-based labels in I
// (|I| = k); the empty determinant is 1.
Int t_det(const QuasiTree& qt, const std::vector<int>& I);

// Right-hand side of the minor expansion: the quasi-tree sum
//   sum_T det T_I det T_J prod_{e in T} c_e / (spanning tree sum).
Rat theorem1_rhs(const RibbonGraph& g, const HomologyFrame& frame, int k,
                 const std::vector<int>& I, const std::vector<int>& J,
                 int max_edges = 16);

// Complement dual quasi-tree: edges E \ qt.edges read on the dual graph,
// with class columns paired against the primal basis.
QuasiTree dual_quasitree(const RibbonGraph& g, const HomologyFrame& frame,
                         const QuasiTree& qt);

struct CoveringCount {
  bool infinite = false;
  Int components = 0;
};

// Component count of the complement of the quasi-tree lift in the abelian
// cover determined by the labels {g+1..2g}, computed as the index of the
// cycle-voltage lattice. Requires a rank-g quasi-tree whose intrinsic ribbon
// structure is planar (throws NotRankG / NotSphereEmbedded).
CoveringCount covering_components(const RibbonGraph& g,
                                  const HomologyFrame& frame,
                                  const QuasiTree& qt);

// A subgraph is a ribbon-graph quasi-tree when its induced ribbon structure
// has exactly one boundary component (one face, counting dartless vertices).
bool is_ribbon_quasitree(const RibbonGraph& g, const std::vector<int>& edges);

// Exhaustive spanning-tree count (subsets of size V-1 spanning all of V).
long count_spanning_trees(const RibbonGraph& g);

// Verification suites. Failures become report records, not errors.
Report verify_theorem1(const RibbonGraph& g, const HomologyFrame& frame,
                       int max_edges = 16);
Report verify_duality(const RibbonGraph& g, const HomologyFrame& frame, int k,
                      const std::vector<int>& I, const std::vector<int>& J,
                      int max_edges = 16);
Report verify_duality_all(const RibbonGraph& g, const HomologyFrame& frame,
                          int max_edges = 16);
Report verify_det_corollary(const RibbonGraph& g, const HomologyFrame& frame,
                            int max_edges = 16);
Report verify_wp_identity(const RibbonGraph& g, const HomologyFrame& frame,
                          int max_edges = 16);
Report delta_matroid_check(const RibbonGraph& g, const HomologyFrame& frame,
                           int max_edges = 16);
Report verify_covering_components(const RibbonGraph& g,
                                  const HomologyFrame& frame,
                                  int max_edges = 16);

}  // namespace dpm

#endif
