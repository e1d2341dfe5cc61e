#include "dpm/ribbon.hpp"

#include <algorithm>
#include <numeric>

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

}  // namespace

RibbonGraph::RibbonGraph(std::vector<std::vector<int>> rotation,
                         std::vector<Rat> weights, std::string name)
    : rotation_(std::move(rotation)),
      weights_(std::move(weights)),
      name_(std::move(name)) {
  const int darts = 2 * static_cast<int>(weights_.size());
  vertex_of_.assign(darts, -1);
  pos_.assign(darts, -1);
  for (int v = 0; v < static_cast<int>(rotation_.size()); ++v) {
    for (int i = 0; i < static_cast<int>(rotation_[v].size()); ++i) {
      const int d = rotation_[v][i];
      if (d < 0 || d >= darts)
        throw InvariantViolation("rotation references unknown dart " +
                                 std::to_string(d));
      if (vertex_of_[d] != -1)
        throw InvariantViolation("dart " + std::to_string(d) +
                                 " appears in more than one rotation slot");
      vertex_of_[d] = v;
      pos_[d] = i;
    }
  }
  for (int d = 0; d < darts; ++d)
    if (vertex_of_[d] == -1)
      throw InvariantViolation("dart " + std::to_string(d) +
                               " missing from every rotation");
  for (size_t e = 0; e < weights_.size(); ++e)
    if (!(weights_[e] > 0))
      throw InvariantViolation("edge " + std::to_string(e) +
                               " has nonpositive weight");
}

int RibbonGraph::at_edge(int e) const {
  if (e < 0 || e >= num_edges()) throw BadIndex("edge id out of range");
  return e;
}

int RibbonGraph::at_dart(int d) const {
  if (d < 0 || d >= num_darts()) throw BadIndex("dart id out of range");
  return d;
}

int RibbonGraph::next_ccw(int dart) const {
  const int v = vertex_of(dart);
  const auto& rot = rotation_[v];
  const int i = pos_[dart];
  return rot[(i + 1) % rot.size()];
}

bool RibbonGraph::is_connected() const { return num_components() == 1; }

int RibbonGraph::num_components() const {
  if (num_vertices() == 0) return 0;
  UnionFind uf(num_vertices());
  int comps = num_vertices();
  for (int e = 0; e < num_edges(); ++e)
    if (uf.unite(tail(e), head(e))) --comps;
  return comps;
}

RibbonGraph RibbonGraph::with_weights(std::vector<Rat> weights) const {
  if (weights.size() != weights_.size())
    throw BadParams("weight vector size mismatch");
  return RibbonGraph(rotation_, std::move(weights), name_);
}

FaceSet trace_faces(const RibbonGraph& g) {
  FaceSet fs;
  fs.face_of.assign(g.num_darts(), -1);
  for (int d0 = 0; d0 < g.num_darts(); ++d0) {
    if (fs.face_of[d0] != -1) continue;
    std::vector<int> walk;
    int d = d0;
    do {
      fs.face_of[d] = static_cast<int>(fs.faces.size());
      walk.push_back(d);
      d = g.next_ccw(RibbonGraph::paired(d));
    } while (d != d0);
    fs.faces.push_back(std::move(walk));
  }
  for (int v = 0; v < g.num_vertices(); ++v)
    if (g.rotation(v).empty()) fs.faces.emplace_back();
  return fs;
}

int genus(const RibbonGraph& g) {
  const FaceSet fs = trace_faces(g);
  const int euler = g.num_vertices() - g.num_edges() + fs.num_faces();
  const int doubled = 2 * g.num_components() - euler;
  if (doubled < 0 || doubled % 2 != 0)
    throw InvariantViolation("Euler count 2C - (V - E + F) = " +
                             std::to_string(doubled) +
                             " is not an even nonnegative integer");
  return doubled / 2;
}

DualResult dual(const RibbonGraph& g) {
  if (!g.is_connected())
    throw InvariantViolation("dual requires a connected graph");
  FaceSet fs = trace_faces(g);
  // Dual dart of primal dart d is paired(d): the head dart 2e+1 of the dual
  // edge sits at the left face (the face of dart 2e) and the tail dart 2e at
  // the right face, so the dual edge runs right face -> left face.
  std::vector<std::vector<int>> rot(fs.num_faces());
  for (int f = 0; f < fs.num_faces(); ++f) {
    rot[f].reserve(fs.faces[f].size());
    for (int d : fs.faces[f]) rot[f].push_back(RibbonGraph::paired(d));
  }
  std::vector<Rat> w(g.num_edges());
  for (int e = 0; e < g.num_edges(); ++e) w[e] = Rat(1) / g.weight(e);
  DualResult out{RibbonGraph(std::move(rot), std::move(w),
                             g.name().empty() ? "" : g.name() + "*"),
                 std::move(fs)};
  return out;
}

SubgraphOps subgraph_ops(const RibbonGraph& g, const std::vector<int>& edges_in) {
  std::vector<int> edges = edges_in;
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::vector<char> keep(g.num_edges(), 0);
  for (int e : edges) {
    if (e < 0 || e >= g.num_edges()) throw BadIndex("subgraph edge id out of range");
    keep[e] = 1;
  }
  UnionFind uf(g.num_vertices());
  int comps = g.num_vertices();
  for (int e : edges)
    if (uf.unite(g.tail(e), g.head(e))) --comps;

  std::vector<int> edge_map(g.num_edges(), -1);
  std::vector<Rat> w;
  for (int e = 0; e < g.num_edges(); ++e)
    if (keep[e]) {
      edge_map[e] = static_cast<int>(w.size());
      w.push_back(g.weight(e));
    }
  std::vector<std::vector<int>> rot(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v)
    for (int d : g.rotation(v))
      if (keep[RibbonGraph::edge_of(d)])
        rot[v].push_back(2 * edge_map[RibbonGraph::edge_of(d)] + (d & 1));

  RibbonGraph induced(std::move(rot), std::move(w));
  const int rg = genus(induced);
  return SubgraphOps{comps == 1, rg, std::move(induced), std::move(edge_map)};
}

ContractDeleteResult contract_delete(const RibbonGraph& g,
                                     const std::vector<int>& contract,
                                     const std::vector<int>& del) {
  std::vector<char> in_contract(g.num_edges(), 0), in_delete(g.num_edges(), 0);
  for (int e : contract) {
    if (e < 0 || e >= g.num_edges()) throw BadIndex("contract edge out of range");
    in_contract[e] = 1;
  }
  for (int e : del) {
    if (e < 0 || e >= g.num_edges()) throw BadIndex("delete edge out of range");
    if (in_contract[e])
      throw BadParams("contract and delete sets must be disjoint");
    in_delete[e] = 1;
  }
  {
    UnionFind uf(g.num_vertices());
    for (int e = 0; e < g.num_edges(); ++e)
      if (in_contract[e]) {
        if (g.is_loop(e))
          throw LoopContraction("refusing to contract loop edge " +
                                std::to_string(e));
        if (!uf.unite(g.tail(e), g.head(e)))
          throw BadParams("contract set contains a cycle");
      }
  }

  // Mutable rotations keyed by original vertex ids; merged vertices are
  // redirected through `alias`.
  std::vector<std::vector<int>> rot(g.num_vertices());
  std::vector<int> alias(g.num_vertices());
  std::iota(alias.begin(), alias.end(), 0);
  for (int v = 0; v < g.num_vertices(); ++v) rot[v] = g.rotation(v);
  auto resolve = [&](int v) {
    while (alias[v] != v) v = alias[v] = alias[alias[v]];
    return v;
  };

  std::vector<int> dart_vertex(g.num_darts());
  for (int d = 0; d < g.num_darts(); ++d) dart_vertex[d] = g.vertex_of(d);

  for (int e = 0; e < g.num_edges(); ++e) {
    if (!in_contract[e]) continue;
    const int dt = 2 * e, dh = 2 * e + 1;
    const int u = resolve(dart_vertex[dt]);
    const int v = resolve(dart_vertex[dh]);
    if (u == v)
      throw LoopContraction("edge became a loop during contraction");
    auto& ru = rot[u];
    auto& rv = rot[v];
    // Splice v's rotation, started just after dart dh, into u's rotation in
    // place of dart dt.
    const auto it_t = std::find(ru.begin(), ru.end(), dt);
    const auto it_h = std::find(rv.begin(), rv.end(), dh);
    std::vector<int> splice;
    splice.reserve(rv.size() - 1);
    for (size_t s = 1; s < rv.size(); ++s)
      splice.push_back(rv[(static_cast<size_t>(it_h - rv.begin()) + s) %
                          rv.size()]);
    std::vector<int> merged;
    merged.reserve(ru.size() - 1 + splice.size());
    for (auto it = ru.begin(); it != ru.end(); ++it) {
      if (it == it_t)
        merged.insert(merged.end(), splice.begin(), splice.end());
      else
        merged.push_back(*it);
    }
    for (int d : splice) dart_vertex[d] = u;
    rot[u] = std::move(merged);
    rv.clear();
    alias[v] = u;
  }

  for (auto& r : rot) {
    std::vector<int> filtered;
    filtered.reserve(r.size());
    for (int d : r) {
      const int e = RibbonGraph::edge_of(d);
      if (!in_contract[e] && !in_delete[e]) filtered.push_back(d);
    }
    r = std::move(filtered);
  }

  // Compact vertices (survivors keep their relative order) and edges.
  std::vector<int> vertex_map(g.num_vertices(), -1);
  std::vector<std::vector<int>> new_rot;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (resolve(v) != v) continue;
    vertex_map[v] = static_cast<int>(new_rot.size());
    new_rot.push_back(std::move(rot[v]));
  }
  for (int v = 0; v < g.num_vertices(); ++v)
    if (vertex_map[v] == -1) vertex_map[v] = vertex_map[resolve(v)];

  std::vector<int> edge_map(g.num_edges(), -1);
  std::vector<Rat> w;
  for (int e = 0; e < g.num_edges(); ++e)
    if (!in_contract[e] && !in_delete[e]) {
      edge_map[e] = static_cast<int>(w.size());
      w.push_back(g.weight(e));
    }
  for (auto& r : new_rot)
    for (int& d : r) d = 2 * edge_map[RibbonGraph::edge_of(d)] + (d & 1);

  return ContractDeleteResult{
      RibbonGraph(std::move(new_rot), std::move(w), g.name()),
      std::move(edge_map), std::move(vertex_map)};
}

}  // namespace dpm
