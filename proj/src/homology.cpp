#include "dpm/homology.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "dpm/exactla.hpp"

namespace dpm {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

// Abstract digraph view used for both the primal graph and the dual graph:
// edge e runs tails[e] -> heads[e] over num_nodes nodes.
struct DigraphView {
  int num_nodes;
  std::vector<int> tails, heads;
};

DigraphView primal_view(const RibbonGraph& g) {
  DigraphView v{g.num_vertices(), {}, {}};
  v.tails.resize(g.num_edges());
  v.heads.resize(g.num_edges());
  for (int e = 0; e < g.num_edges(); ++e) {
    v.tails[e] = g.tail(e);
    v.heads[e] = g.head(e);
  }
  return v;
}

// Dual edge e* runs from the right face of e (the face of dart 2e+1) to the
// left face (the face of dart 2e).
DigraphView dual_view(const RibbonGraph& g, const FaceSet& fs) {
  DigraphView v{fs.num_faces(), {}, {}};
  v.tails.resize(g.num_edges());
  v.heads.resize(g.num_edges());
  for (int e = 0; e < g.num_edges(); ++e) {
    v.tails[e] = fs.face_of[2 * e + 1];
    v.heads[e] = fs.face_of[2 * e];
  }
  return v;
}

// Rooted tree structure inside a digraph view.
struct TreeIndex {
  std::vector<int> parent_edge;  // -1 at roots
  std::vector<int> parent_node;
  std::vector<int> depth;
  std::vector<int> bfs_order;  // nodes in visiting order
};

TreeIndex index_tree(const DigraphView& dg, const std::vector<int>& tree) {
  std::vector<std::vector<std::pair<int, int>>> adj(dg.num_nodes);
  for (int e : tree) {
    adj[dg.tails[e]].push_back({dg.heads[e], e});
    adj[dg.heads[e]].push_back({dg.tails[e], e});
  }
  TreeIndex t;
  t.parent_edge.assign(dg.num_nodes, -1);
  t.parent_node.assign(dg.num_nodes, -1);
  t.depth.assign(dg.num_nodes, -1);
  for (int root = 0; root < dg.num_nodes; ++root) {
    if (t.depth[root] != -1) continue;
    t.depth[root] = 0;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      t.bfs_order.push_back(x);
      for (auto [y, e] : adj[x])
        if (t.depth[y] == -1) {
          t.depth[y] = t.depth[x] + 1;
          t.parent_node[y] = x;
          t.parent_edge[y] = e;
          q.push(y);
        }
    }
  }
  return t;
}

// Signed edge coefficients of the unique cycle in tree + {e}: +1 on e, then
// the tree path from heads[e] back to tails[e].
IntVector fundamental_cycle_in(const DigraphView& dg, const TreeIndex& t,
                               int num_edges, int e) {
  IntVector c = IntVector::Constant(num_edges, Int(0));
  c(e) = 1;
  int a = dg.heads[e], b = dg.tails[e];
  auto step_up = [&](int x, Int dir) {
    const int pe = t.parent_edge[x];
    if (pe < 0)
      throw BadIndex("fundamental cycle: endpoints not joined by the tree");
    // moving from x toward its parent; +1 when that traversal follows the
    // edge orientation
    const Int sign = (dg.tails[pe] == x) ? Int(1) : Int(-1);
    c(pe) += dir * sign;
    return t.parent_node[x];
  };
  while (t.depth[a] > t.depth[b]) a = step_up(a, Int(1));
  while (t.depth[b] > t.depth[a]) b = step_up(b, Int(-1));
  while (a != b) {
    a = step_up(a, Int(1));
    b = step_up(b, Int(-1));
  }
  return c;
}

}  // namespace

Int boundary_at_vertex(const RibbonGraph& g, const Chain1& c, int v) {
  if (c.side != Side::primal)
    throw SideMismatch("vertex boundary of a dual chain");
  Int acc(0);
  for (int e = 0; e < g.num_edges(); ++e) {
    if (c.coeffs(e) == 0) continue;
    if (g.head(e) == v) acc += c.coeffs(e);
    if (g.tail(e) == v) acc -= c.coeffs(e);
  }
  return acc;
}

namespace {

Int boundary_at_face(const FaceSet& fs, const Chain1& c, int f) {
  Int acc(0);
  for (int d : fs.faces[f]) {
    const int e = RibbonGraph::edge_of(d);
    if (c.coeffs(e) == 0) continue;
    acc += (d % 2 == 0) ? c.coeffs(e) : Int(-c.coeffs(e));
  }
  return acc;
}

}  // namespace

bool is_cycle(const RibbonGraph& g, const FaceSet& fs, const Chain1& c) {
  if (c.coeffs.size() != g.num_edges())
    throw BadIndex("chain length mismatch");
  if (c.side == Side::primal) {
    for (int v = 0; v < g.num_vertices(); ++v)
      if (boundary_at_vertex(g, c, v) != 0) return false;
    return true;
  }
  for (int f = 0; f < fs.num_faces(); ++f)
    if (boundary_at_face(fs, c, f) != 0) return false;
  return true;
}

Chain1 face_boundary(const RibbonGraph& g, const FaceSet& fs, int f) {
  Chain1 c = Chain1::zero(Side::primal, g.num_edges());
  for (int d : fs.faces[f]) {
    const int e = RibbonGraph::edge_of(d);
    c.coeffs(e) += (d % 2 == 0) ? 1 : -1;
  }
  return c;
}

Chain1 dual_face_boundary(const RibbonGraph& g, int v) {
  // The dual 2-cell over vertex v is bounded by the dual edges of the edges
  // at v; the signed count matches the primal incidence column.
  Chain1 c = Chain1::zero(Side::dual, g.num_edges());
  for (int e = 0; e < g.num_edges(); ++e) {
    if (g.head(e) == v) c.coeffs(e) += 1;
    if (g.tail(e) == v) c.coeffs(e) -= 1;
  }
  return c;
}

Int intersection(const Chain1& dual_chain, const Chain1& primal_chain) {
  if (dual_chain.side != Side::dual || primal_chain.side != Side::primal)
    throw SideMismatch("intersection expects (dual, primal) chains");
  if (dual_chain.coeffs.size() != primal_chain.coeffs.size())
    throw BadIndex("chain length mismatch");
  Int acc(0);
  for (Eigen::Index e = 0; e < dual_chain.coeffs.size(); ++e)
    acc += dual_chain.coeffs(e) * primal_chain.coeffs(e);
  return acc;
}

TreeCotree tree_cotree(const RibbonGraph& g,
                       const std::optional<std::vector<int>>& seed_tree) {
  if (!g.is_connected())
    throw InvariantViolation("tree_cotree requires a connected graph");
  std::vector<char> in_t0(g.num_edges(), 0);
  UnionFind uf(g.num_vertices());
  if (seed_tree) {
    for (int e : *seed_tree) {
      if (e < 0 || e >= g.num_edges())
        throw SeedNotExtendable("seed edge id out of range");
      if (in_t0[e]) throw SeedNotATree("seed lists an edge twice");
      if (!uf.unite(g.tail(e), g.head(e)))
        throw SeedNotATree("seed contains a cycle");
      in_t0[e] = 1;
    }
  }
  for (int e = 0; e < g.num_edges(); ++e)
    if (!in_t0[e] && uf.unite(g.tail(e), g.head(e))) in_t0[e] = 1;

  const FaceSet fs = trace_faces(g);
  const DigraphView dv = dual_view(g, fs);
  UnionFind dual_uf(fs.num_faces());
  std::vector<char> in_c0(g.num_edges(), 0);
  for (int e = 0; e < g.num_edges(); ++e)
    if (!in_t0[e] && dual_uf.unite(dv.tails[e], dv.heads[e])) in_c0[e] = 1;

  TreeCotree tc;
  for (int e = 0; e < g.num_edges(); ++e) {
    if (in_t0[e])
      tc.T0.push_back(e);
    else if (in_c0[e])
      tc.C0.push_back(e);
    else
      tc.R.push_back(e);
  }
  return tc;
}

Chain1 fundamental_cycle(const RibbonGraph& g, const std::vector<int>& T0,
                         int e) {
  if (std::find(T0.begin(), T0.end(), e) != T0.end())
    throw EdgeInTree("fundamental_cycle: edge lies in the tree");
  const DigraphView dv = primal_view(g);
  const TreeIndex ti = index_tree(dv, T0);
  if (ti.depth[dv.tails[e]] == -1 || ti.depth[dv.heads[e]] == -1 ||
      ti.parent_edge.empty())
    throw BadIndex("fundamental_cycle: endpoints not spanned by tree");
  Chain1 c{Side::primal, fundamental_cycle_in(dv, ti, g.num_edges(), e)};
  return c;
}

Chain1 fundamental_cocycle(const RibbonGraph& g, const std::vector<int>& C0,
                           int e) {
  if (std::find(C0.begin(), C0.end(), e) != C0.end())
    throw EdgeInTree("fundamental_cocycle: edge lies in the cotree");
  const FaceSet fs = trace_faces(g);
  const DigraphView dv = dual_view(g, fs);
  const TreeIndex ti = index_tree(dv, C0);
  Chain1 c{Side::dual, fundamental_cycle_in(dv, ti, g.num_edges(), e)};
  return c;
}

namespace {

// Chord rule on a one-vertex ribbon graph: two loops intersect once iff
// their dart pairs interleave in the rotation; the sign is +1 when,
// scanning counterclockwise from dart 2e to dart 2e+1, the tail dart 2f is
// inside the scanned arc.
Int corner_intersection(const RibbonGraph& q, int e, int f) {
  if (e == f) return Int(0);
  const auto& rot = q.rotation(0);
  const int n = static_cast<int>(rot.size());
  std::vector<int> pos(2 * q.num_edges(), -1);
  for (int i = 0; i < n; ++i) pos[rot[i]] = i;
  const int a0 = pos[2 * e], a1 = pos[2 * e + 1];
  const int b0 = pos[2 * f], b1 = pos[2 * f + 1];
  const int alpha = ((a1 - a0) % n + n) % n;
  const int beta0 = ((b0 - a0) % n + n) % n;
  const int beta1 = ((b1 - a0) % n + n) % n;
  const bool in0 = beta0 > 0 && beta0 < alpha;
  const bool in1 = beta1 > 0 && beta1 < alpha;
  if (in0 == in1) return Int(0);
  return in0 ? Int(1) : Int(-1);
}

// Eliminates the C0 coefficients of a primal cycle by subtracting face
// boundaries along the dual cotree, top-down from the root face. The result
// is homologous and supported on T0 + R.
IntVector reduce_mod_cotree(const RibbonGraph& g, const FaceSet& fs,
                            const TreeCotree& tc, IntVector z) {
  const DigraphView dv = dual_view(g, fs);
  const TreeIndex ti = index_tree(dv, tc.C0);
  std::vector<IntVector> boundaries(fs.num_faces());
  for (int f : ti.bfs_order) {
    const int pe = ti.parent_edge[f];
    if (pe == -1) continue;
    if (z(pe) == 0) continue;
    IntVector bd = IntVector::Constant(g.num_edges(), Int(0));
    for (int d : fs.faces[f])
      bd(RibbonGraph::edge_of(d)) += (d % 2 == 0) ? 1 : -1;
    const Int s = bd(pe);  // +-1: a cotree edge borders two distinct faces
    // Materialize before the vector update: an expression template here
    // would re-read z(pe) after it has already been zeroed.
    const Int alpha = z(pe) * s;
    z -= alpha * bd;
  }
  for (int e : tc.C0)
    if (z(e) != 0) throw Error("reduce_mod_cotree: elimination failed");
  return z;
}

}  // namespace

HomologyFrame symplectic_frame(const RibbonGraph& g, const TreeCotree& tc) {
  HomologyFrame frame;
  frame.tc = tc;
  frame.faces = trace_faces(g);
  const int two_g =
      2 * g.num_components() - g.num_vertices() + g.num_edges() -
      frame.faces.num_faces();
  if (two_g < 0 || two_g % 2 != 0 ||
      static_cast<int>(tc.R.size()) != two_g)
    throw InvariantViolation("tree-cotree decomposition size mismatch");
  frame.genus = two_g / 2;
  frame.omega = standard_omega(frame.genus);

  std::vector<Chain1> fcycles, fcocycles;
  for (int e : tc.R) {
    fcycles.push_back(fundamental_cycle(g, tc.T0, e));
    fcocycles.push_back(fundamental_cocycle(g, tc.C0, e));
  }

  // Intersection Gram of the fundamental cycles, read off the one-vertex
  // one-face quotient.
  const ContractDeleteResult q = contract_delete(g, tc.T0, tc.C0);
  if (q.graph.num_vertices() != 1 ||
      q.graph.num_edges() != two_g ||
      trace_faces(q.graph).num_faces() != 1)
    throw InvariantViolation("quotient is not a one-vertex one-face graph");
  IntMatrix gram = IntMatrix::Constant(two_g, two_g, Int(0));
  for (int r = 0; r < two_g; ++r)
    for (int s = 0; s < two_g; ++s)
      gram(r, s) =
          corner_intersection(q.graph, q.edge_map[tc.R[r]], q.edge_map[tc.R[s]]);
  frame.fund_gram = gram;

  const SymplecticReduction red = symplectic_reduce(gram);
  if (!exact_equal(IntMatrix(red.N.transpose() * gram * red.N), frame.omega))
    throw Error("symplectic reduction did not reach the standard form");

  for (int j = 0; j < two_g; ++j) {
    Chain1 c = Chain1::zero(Side::primal, g.num_edges());
    for (int r = 0; r < two_g; ++r)
      c.coeffs += red.N(r, j) * fcycles[r].coeffs;
    frame.basis.push_back(std::move(c));
  }
  for (int i = 0; i < two_g; ++i) {
    Chain1 c = Chain1::zero(Side::dual, g.num_edges());
    for (int r = 0; r < two_g; ++r)
      c.coeffs += red.Ninv(i, r) * fcocycles[r].coeffs;
    frame.dual_basis.push_back(std::move(c));
  }

  frame.M = IntMatrix::Constant(g.num_edges(), two_g, Int(0));
  for (int i = 0; i < two_g; ++i) frame.M.col(i) = frame.dual_basis[i].coeffs;

  // Kronecker self-check; a failure here means an internal sign bug.
  for (int i = 0; i < two_g; ++i)
    for (int j = 0; j < two_g; ++j) {
      const Int want = (i == j) ? 1 : 0;
      if (intersection(frame.dual_basis[i], frame.basis[j]) != want)
        throw Error("dual basis pairing is not Kronecker");
    }
  return frame;
}

HomologyFrame symplectic_frame(const RibbonGraph& g) {
  return symplectic_frame(g, tree_cotree(g));
}

IntVector class_coordinates(const RibbonGraph& g, const HomologyFrame& frame,
                            const Chain1& z) {
  if (z.side != Side::primal)
    throw SideMismatch("class_coordinates expects a primal chain");
  if (!is_cycle(g, frame.faces, z))
    throw NotACycle("class_coordinates: chain has nonzero boundary");
  return frame.M.transpose() * z.coeffs;
}

IntVector dual_pairing_coordinates(const RibbonGraph& g,
                                   const HomologyFrame& frame,
                                   const Chain1& dual_cycle) {
  if (dual_cycle.side != Side::dual)
    throw SideMismatch("dual_pairing_coordinates expects a dual chain");
  if (!is_cycle(g, frame.faces, dual_cycle))
    throw NotACycle("dual_pairing_coordinates: chain is not a dual cycle");
  IntVector out = IntVector::Constant(2 * frame.genus, Int(0));
  for (int j = 0; j < 2 * frame.genus; ++j)
    out(j) = intersection(dual_cycle, frame.basis[j]);
  return out;
}

Int intersection_primal(const RibbonGraph& g, const HomologyFrame& frame,
                        const Chain1& x, const Chain1& y) {
  if (x.side != Side::primal || y.side != Side::primal)
    throw SideMismatch("intersection_primal expects primal chains");
  if (!is_cycle(g, frame.faces, x) || !is_cycle(g, frame.faces, y))
    throw NotACycle("intersection_primal: inputs must be cycles");
  const IntVector xr = reduce_mod_cotree(g, frame.faces, frame.tc, x.coeffs);
  const IntVector yr = reduce_mod_cotree(g, frame.faces, frame.tc, y.coeffs);
  const int two_g = 2 * frame.genus;
  Int acc(0);
  for (int r = 0; r < two_g; ++r)
    for (int s = 0; s < two_g; ++s)
      acc += xr(frame.tc.R[r]) * frame.fund_gram(r, s) * yr(frame.tc.R[s]);
  return acc;
}

}  // namespace dpm
