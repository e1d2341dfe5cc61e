#ifndef DPM_RIBBON_HPP
#define DPM_RIBBON_HPP

#include <string>
#include <vector>

#include "dpm/errors.hpp"
#include "dpm/numeric.hpp"

namespace dpm {

// A ribbon graph (rotation system): vertices carry counterclockwise cyclic
// dart orderings. Edge e owns darts 2e and 2e+1; the edge is oriented from
// the vertex of dart 2e (tail) to the vertex of dart 2e+1 (head); the dart
// pairing is d <-> d^1. Immutable after construction.
//
// Dartless vertices are allowed so that induced subgraphs of spanning edge
// subsets stay well-formed; operations that need connectivity say so.
class RibbonGraph {
 public:
  // rotation[v] lists the darts at vertex v in counterclockwise order; every
  // dart in [0, 2|weights|) must appear exactly once overall.
  RibbonGraph(std::vector<std::vector<int>> rotation, std::vector<Rat> weights,
              std::string name = "");

  int num_vertices() const { return static_cast<int>(rotation_.size()); }
  int num_edges() const { return static_cast<int>(weights_.size()); }
  int num_darts() const { return 2 * num_edges(); }

  const std::vector<int>& rotation(int v) const { return rotation_[v]; }
  const Rat& weight(int e) const { return weights_[at_edge(e)]; }
  const std::vector<Rat>& weights() const { return weights_; }
  const std::string& name() const { return name_; }

  static int edge_of(int dart) { return dart / 2; }
  static int paired(int dart) { return dart ^ 1; }
  int vertex_of(int dart) const { return vertex_of_[at_dart(dart)]; }
  int tail(int e) const { return vertex_of_[2 * at_edge(e)]; }
  int head(int e) const { return vertex_of_[2 * at_edge(e) + 1]; }
  bool is_loop(int e) const { return tail(e) == head(e); }

  // Next dart counterclockwise at the same vertex.
  int next_ccw(int dart) const;

  bool is_connected() const;
  int num_components() const;

  RibbonGraph with_weights(std::vector<Rat> weights) const;

 private:
  int at_edge(int e) const;
  int at_dart(int d) const;

  std::vector<std::vector<int>> rotation_;
  std::vector<int> vertex_of_;
  std::vector<int> pos_;  // dart -> index inside its rotation list
  std::vector<Rat> weights_;
  std::string name_;
};

struct FaceSet {
  // Each face is the closed dart walk with the face on the left of every
  // dart; dartless vertices contribute one empty walk each.
  std::vector<std::vector<int>> faces;
  std::vector<int> face_of;  // dart -> face id

  int num_faces() const { return static_cast<int>(faces.size()); }
};

// Face tracing under the fixed convention: the walk successor of dart d is
// the next dart counterclockwise after paired(d) at its vertex.
FaceSet trace_faces(const RibbonGraph& g);

// Total genus over components, (2C - V + E - F) / 2; equals the usual Euler
// genus for connected graphs. Throws InvariantViolation when the count is
// not a nonnegative integer.
int genus(const RibbonGraph& g);

struct DualResult {
  RibbonGraph graph;  // vertices are the faces of the primal
  // Edge ids are shared: dual edge e crosses primal edge e, oriented from
  // the right face of e to its left face; dual weights are 1/c_e.
  FaceSet primal_faces;
};

// Requires a connected primal graph.
DualResult dual(const RibbonGraph& g);

struct SubgraphOps {
  bool is_connected;  // of the spanning subgraph (all vertices kept)
  int ribbon_genus;   // total genus of the induced ribbon structure
  RibbonGraph induced;
  std::vector<int> edge_map;  // original edge id -> induced edge id
};

SubgraphOps subgraph_ops(const RibbonGraph& g, const std::vector<int>& edges);

struct ContractDeleteResult {
  RibbonGraph graph;
  std::vector<int> edge_map;    // old edge id -> new edge id, -1 if removed
  std::vector<int> vertex_map;  // old vertex id -> new vertex id
};

// Ribbon contraction/deletion. The contract set must contain no loops (a
// loop contraction is rejected) and no cycle; the two sets must be disjoint.
ContractDeleteResult contract_delete(const RibbonGraph& g,
                                     const std::vector<int>& contract,
                                     const std::vector<int>& del);

}  // namespace dpm

#endif
