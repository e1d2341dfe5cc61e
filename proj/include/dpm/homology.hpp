#ifndef DPM_HOMOLOGY_HPP
#define DPM_HOMOLOGY_HPP

#include <optional>
#include <vector>

#include "dpm/numeric.hpp"
#include "dpm/ribbon.hpp"

namespace dpm {

enum class Side { primal, dual };

// Integer 1-chain. Primal chains live on the edges of G, dual chains on the
// dual edges (indexed by the shared edge id, e <-> e*). Coefficients are
// orientation-signed: primal edges run tail -> head, dual edges run right
// face -> left face.
struct Chain1 {
  Side side = Side::primal;
  IntVector coeffs;

  static Chain1 zero(Side s, int num_edges) {
    return Chain1{s, IntVector::Constant(num_edges, Int(0))};
  }
  static Chain1 unit(Side s, int num_edges, int e) {
    Chain1 c = zero(s, num_edges);
    c.coeffs(e) = 1;
    return c;
  }
};

// Net boundary flow of a primal chain at a vertex (in-degree minus
// out-degree, weighted by coefficients); zero everywhere iff cycle.
Int boundary_at_vertex(const RibbonGraph& g, const Chain1& c, int v);
bool is_cycle(const RibbonGraph& g, const FaceSet& fs, const Chain1& c);

// Face boundary of f as a primal chain (columns of the boundary map from
// 2-cells): each walk dart contributes +1 on its edge when the walk follows
// the edge orientation, -1 otherwise.
Chain1 face_boundary(const RibbonGraph& g, const FaceSet& fs, int f);

// Boundary of the dual face sitting over primal vertex v, as a dual chain;
// adding it to any dual cycle is a homologous change.
Chain1 dual_face_boundary(const RibbonGraph& g, int v);

// Algebraic intersection of a dual chain with a primal chain under the
// fixed crossing convention iota(e*, e) = +1.
Int intersection(const Chain1& dual_chain, const Chain1& primal_chain);

struct TreeCotree {
  std::vector<int> T0;  // spanning tree of G
  std::vector<int> R;   // the 2g leftover edges
  std::vector<int> C0;  // duals form a spanning tree of G*
};

// Deterministic tree-cotree decomposition: T0 is grown greedily by edge id
// starting from seed_tree (which must be a forest), then C0* greedily by
// edge id on the dual.
TreeCotree tree_cotree(const RibbonGraph& g,
                       const std::optional<std::vector<int>>& seed_tree = {});

// The unique cycle in T0 + {e}, with coefficient +1 on e.
Chain1 fundamental_cycle(const RibbonGraph& g, const std::vector<int>& T0,
                         int e);
// The unique dual cycle in C0* + {e*}, with coefficient +1 on e*.
Chain1 fundamental_cocycle(const RibbonGraph& g, const std::vector<int>& C0,
                           int e);

struct HomologyFrame {
  int genus = 0;
  TreeCotree tc;
  FaceSet faces;
  std::vector<Chain1> basis;       // gamma_1 .. gamma_2g (primal cycles)
  std::vector<Chain1> dual_basis;  // gamma^1 .. gamma^2g (dual cycles)
  IntMatrix M;       // |E| x 2g; M(e, i) = coefficient of gamma^i on e*
  IntMatrix omega;   // standard [[0, I],[-I, 0]]
  IntMatrix fund_gram;  // intersection Gram of the R fundamental cycles
};

// Builds a symplectic homology frame from a tree-cotree decomposition: the
// fundamental cycles of R are reduced to a basis with standard intersection
// matrix by an integer congruence, and the fundamental cocycles follow with
// the inverse-transpose so that iota(gamma^i, gamma_j) = delta_ij exactly.
HomologyFrame symplectic_frame(const RibbonGraph& g, const TreeCotree& tc);
HomologyFrame symplectic_frame(const RibbonGraph& g);

// Coordinates of a primal cycle in the gamma basis, a_i = iota(gamma^i, z);
// equals M^t z. Throws NotACycle.
IntVector class_coordinates(const RibbonGraph& g, const HomologyFrame& frame,
                            const Chain1& z);

// Coordinates of a dual cycle against the primal basis: the j-th entry is
// the crossing sum of the dual chain with gamma_j. For the dual basis chains
// this yields the Kronecker columns.
IntVector dual_pairing_coordinates(const RibbonGraph& g,
                                   const HomologyFrame& frame,
                                   const Chain1& dual_cycle);

// Algebraic intersection number of two primal cycles, computed by pushing
// both into the one-vertex quotient of the decomposition and evaluating the
// chord-interleaving form there.
Int intersection_primal(const RibbonGraph& g, const HomologyFrame& frame,
                        const Chain1& x, const Chain1& y);

}  // namespace dpm

#endif
