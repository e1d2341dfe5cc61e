#include "dpm/quasitree.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <unordered_set>

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

// Ascending 1-based label subsets of {1..n} of size k.
std::vector<std::vector<int>> combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i <= n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

std::string labels_to_string(const std::vector<int>& I) {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < I.size(); ++i) {
    if (i) os << ",";
    os << I[i];
  }
  os << "}";
  return os.str();
}

Rat weight_product(const RibbonGraph& g, const std::vector<int>& edges) {
  Rat p(1);
  for (int e : edges) p *= g.weight(e);
  return p;
}

// Greedy lowest-id spanning tree within an edge subset; empty when the
// subset does not span.
bool greedy_tree(const RibbonGraph& g, const std::vector<int>& edges,
                 std::vector<int>& tree, std::vector<int>& extra) {
  UnionFind uf(g.num_vertices());
  tree.clear();
  extra.clear();
  for (int e : edges) {
    if (uf.unite(g.tail(e), g.head(e)))
      tree.push_back(e);
    else
      extra.push_back(e);
  }
  return static_cast<int>(tree.size()) == g.num_vertices() - 1;
}

QuasiTree build_quasitree(const RibbonGraph& g, const HomologyFrame& frame,
                          std::vector<int> edges, std::vector<int> tree,
                          std::vector<int> extra) {
  QuasiTree qt;
  qt.edges = std::move(edges);
  qt.inner_tree = std::move(tree);
  qt.extra = std::move(extra);
  qt.k = static_cast<int>(qt.extra.size());
  qt.class_matrix = IntMatrix::Constant(2 * frame.genus, qt.k, Int(0));
  for (int s = 0; s < qt.k; ++s) {
    const Chain1 mu = fundamental_cycle(g, qt.inner_tree, qt.extra[s]);
    qt.class_matrix.col(s) = class_coordinates(g, frame, mu);
  }
  return qt;
}

}  // namespace

std::vector<QuasiTree> enumerate_quasitrees(const RibbonGraph& g,
                                            const HomologyFrame& frame, int k,
                                            int max_edges) {
  const int E = g.num_edges();
  if (E > max_edges)
    throw BadParams("enumeration guard: " + std::to_string(E) + " edges > " +
                    std::to_string(max_edges) + " (raise --max-edges)");
  if (E > 30)
    throw BadParams("subset enumeration supports at most 30 edges");
  if (k < 0 || k > 2 * frame.genus)
    throw BadIndex("quasi-tree rank outside 0..2g");
  const int target = g.num_vertices() - 1 + k;
  std::vector<QuasiTree> out;
  if (target < 0 || target > E) return out;
  for (unsigned mask = 0; mask < (1u << E); ++mask) {
    if (__builtin_popcount(mask) != target) continue;
    std::vector<int> edges;
    edges.reserve(target);
    for (int e = 0; e < E; ++e)
      if (mask & (1u << e)) edges.push_back(e);
    std::vector<int> tree, extra;
    if (!greedy_tree(g, edges, tree, extra)) continue;
    QuasiTree qt = build_quasitree(g, frame, std::move(edges),
                                   std::move(tree), std::move(extra));
    if (rank_over_Q(qt.class_matrix) != k) continue;
    out.push_back(std::move(qt));
  }
  return out;
}

Int t_det(const QuasiTree& qt, const std::vector<int>& I) {
  if (static_cast<int>(I.size()) != qt.k)
    throw BadIndex("t_det: |I| must equal the quasi-tree rank");
  IntMatrix sub(qt.k, qt.k);
  for (int r = 0; r < qt.k; ++r) {
    const int row = I[r] - 1;
    if (row < 0 || row >= qt.class_matrix.rows())
      throw BadIndex("t_det: label outside 1..2g");
    sub.row(r) = qt.class_matrix.row(row);
  }
  return det_bareiss(sub);
}

namespace {

Rat quasitree_sum(const RibbonGraph& g, const std::vector<QuasiTree>& qts,
                  const std::vector<int>& I, const std::vector<int>& J) {
  Rat acc(0);
  for (const auto& qt : qts) {
    const Int di = t_det(qt, I);
    if (di == 0) continue;
    const Int dj = t_det(qt, J);
    if (dj == 0) continue;
    acc += Rat(di * dj) * weight_product(g, qt.edges);
  }
  return acc;
}

}  // namespace

Rat theorem1_rhs(const RibbonGraph& g, const HomologyFrame& frame, int k,
                 const std::vector<int>& I, const std::vector<int>& J,
                 int max_edges) {
  if (k < 1 || static_cast<int>(I.size()) != k ||
      static_cast<int>(J.size()) != k)
    throw BadIndex("theorem1_rhs: need |I| = |J| = k >= 1");
  const auto qts = enumerate_quasitrees(g, frame, k, max_edges);
  const Rat tree_sum = laplacian(g).tree_sum;
  return quasitree_sum(g, qts, I, J) / tree_sum;
}

QuasiTree dual_quasitree(const RibbonGraph& g, const HomologyFrame& frame,
                         const QuasiTree& qt) {
  const DualResult dr = dual(g);
  const int E = g.num_edges();
  std::vector<char> in_qt(E, 0);
  for (int e : qt.edges) in_qt[e] = 1;
  std::vector<int> dual_edges;
  for (int e = 0; e < E; ++e)
    if (!in_qt[e]) dual_edges.push_back(e);

  std::vector<int> tree, extra;
  if (!greedy_tree(dr.graph, dual_edges, tree, extra))
    throw Error("dual complement of a quasi-tree is disconnected");

  QuasiTree out;
  out.edges = dual_edges;
  out.inner_tree = std::move(tree);
  out.extra = std::move(extra);
  out.k = static_cast<int>(out.extra.size());
  out.class_matrix = IntMatrix::Constant(2 * frame.genus, out.k, Int(0));
  for (int s = 0; s < out.k; ++s) {
    Chain1 mu = fundamental_cycle(dr.graph, out.inner_tree, out.extra[s]);
    mu.side = Side::dual;  // cycles of the dual graph are dual chains of g
    out.class_matrix.col(s) = dual_pairing_coordinates(g, frame, mu);
  }
  if (out.k != 2 * frame.genus - qt.k ||
      rank_over_Q(out.class_matrix) != out.k)
    throw Error("dual complement is not a (2g-k)-quasi-tree");
  return out;
}

CoveringCount covering_components(const RibbonGraph& g,
                                  const HomologyFrame& frame,
                                  const QuasiTree& qt) {
  const int gen = frame.genus;
  if (qt.k != gen)
    throw NotRankG("covering_components requires a rank-g quasi-tree");
  const SubgraphOps ops = subgraph_ops(g, qt.edges);
  if (!ops.is_connected || ops.ribbon_genus != 0)
    throw NotSphereEmbedded(
        "quasi-tree ribbon structure is not a sphere embedding");

  // Base graph of the cover: the faces of g joined by the complement's dual
  // edges; fundamental-cycle voltages generate the deck-translation lattice.
  const int F = frame.faces.num_faces();
  std::vector<int> comp_edges;
  {
    std::vector<char> in_qt(g.num_edges(), 0);
    for (int e : qt.edges) in_qt[e] = 1;
    for (int e = 0; e < g.num_edges(); ++e)
      if (!in_qt[e]) comp_edges.push_back(e);
  }
  auto base_tail = [&](int e) { return frame.faces.face_of[2 * e + 1]; };
  auto base_head = [&](int e) { return frame.faces.face_of[2 * e]; };

  // Voltage of crossing dual edge e*: pairing with the primal cycles that
  // represent the cut classes, v_j(e) = gamma_j[e] for j = 1..g.
  auto voltage = [&](int e) {
    IntVector v = IntVector::Constant(gen, Int(0));
    for (int j = 0; j < gen; ++j) v(j) = frame.basis[j].coeffs(e);
    return v;
  };

  UnionFind uf(F);
  std::vector<int> tree_edges, cycle_edges;
  for (int e : comp_edges) {
    if (uf.unite(base_tail(e), base_head(e)))
      tree_edges.push_back(e);
    else
      cycle_edges.push_back(e);
  }
  if (static_cast<int>(tree_edges.size()) != F - 1)
    throw Error("cover base graph is disconnected");

  // Net voltage of each vertex of the base relative to the root: BFS over
  // the spanning tree accumulating crossing voltages.
  std::vector<std::vector<std::pair<int, int>>> adj(F);  // (other, edge)
  for (int e : tree_edges) {
    adj[base_tail(e)].push_back({base_head(e), e});
    adj[base_head(e)].push_back({base_tail(e), e});
  }
  std::vector<IntVector> potential(F, IntVector::Constant(gen, Int(0)));
  std::vector<char> seen(F, 0);
  std::queue<int> bfs;
  bfs.push(0);
  seen[0] = 1;
  while (!bfs.empty()) {
    const int f = bfs.front();
    bfs.pop();
    for (auto [other, e] : adj[f]) {
      if (seen[other]) continue;
      seen[other] = 1;
      const Int dir = (base_tail(e) == f) ? 1 : -1;
      potential[other] = potential[f] + dir * voltage(e);
      bfs.push(other);
    }
  }

  IntMatrix lattice = IntMatrix::Constant(gen, cycle_edges.size(), Int(0));
  for (size_t c = 0; c < cycle_edges.size(); ++c) {
    const int e = cycle_edges[c];
    lattice.col(c) =
        potential[base_tail(e)] + voltage(e) - potential[base_head(e)];
  }

  const SmithResult snf = smith_normal_form(lattice);
  Int index(1);
  for (int j = 0; j < gen; ++j) {
    const Int d = (j < snf.D.rows() && j < snf.D.cols()) ? snf.D(j, j) : Int(0);
    if (d == 0) return CoveringCount{true, 0};
    index *= d;
  }
  return CoveringCount{false, index};
}

bool is_ribbon_quasitree(const RibbonGraph& g, const std::vector<int>& edges) {
  const SubgraphOps ops = subgraph_ops(g, edges);
  return trace_faces(ops.induced).num_faces() == 1;
}

long count_spanning_trees(const RibbonGraph& g) {
  const int E = g.num_edges();
  if (E > 30)
    throw BadParams("subset enumeration supports at most 30 edges");
  const int target = g.num_vertices() - 1;
  if (target < 0 || target > E) return 0;
  long count = 0;
  for (unsigned mask = 0; mask < (1u << E); ++mask) {
    if (__builtin_popcount(mask) != target) continue;
    UnionFind uf(g.num_vertices());
    int joined = 0;
    for (int e = 0; e < E; ++e)
      if (mask & (1u << e))
        if (uf.unite(g.tail(e), g.head(e))) ++joined;
    if (joined == target) ++count;
  }
  return count;
}

Report verify_theorem1(const RibbonGraph& g, const HomologyFrame& frame,
                       int max_edges) {
  Report rep;
  rep.suite = "theorem1";
  const PeriodData pd = omega_l(g, frame);
  const int two_g = 2 * frame.genus;
  for (int k = 1; k <= two_g; ++k) {
    const auto qts = enumerate_quasitrees(g, frame, k, max_edges);
    const auto sets = combinations(two_g, k);
    for (const auto& I : sets)
      for (const auto& J : sets) {
        const Rat lhs = minor(pd, I, J);
        const Rat rhs = quasitree_sum(g, qts, I, J) / pd.tree_sum;
        std::ostringstream params;
        params << "k=" << k << " I=" << labels_to_string(I)
               << " J=" << labels_to_string(J);
        rep.add("theorem1.minor", params.str(), rat_to_string(lhs),
                rat_to_string(rhs), lhs == rhs);
      }
  }
  return rep;
}

namespace {

struct DualityCache {
  std::vector<QuasiTree> qts;
  std::vector<QuasiTree> duals;
};

DualityCache duality_cache(const RibbonGraph& g, const HomologyFrame& frame,
                           int k, int max_edges) {
  DualityCache cache;
  cache.qts = enumerate_quasitrees(g, frame, k, max_edges);
  cache.duals.reserve(cache.qts.size());
  for (const auto& qt : cache.qts)
    cache.duals.push_back(dual_quasitree(g, frame, qt));
  return cache;
}

std::vector<int> complement_labels(int two_g, const std::vector<int>& I) {
  std::vector<char> in(two_g + 1, 0);
  for (int i : I) in[i] = 1;
  std::vector<int> out;
  for (int i = 1; i <= two_g; ++i)
    if (!in[i]) out.push_back(i);
  return out;
}

void duality_records(const HomologyFrame& frame, const DualityCache& cache,
                     int k, const std::vector<int>& I,
                     const std::vector<int>& J, Report& rep,
                     bool record_absdet = true) {
  const int two_g = 2 * frame.genus;
  const std::vector<int> Ic = complement_labels(two_g, I);
  const std::vector<int> Jc = complement_labels(two_g, J);

  for (size_t t = 0; record_absdet && t < cache.qts.size(); ++t) {
    const Int di = t_det(cache.qts[t], I);
    const Int dic = t_det(cache.duals[t], Ic);
    std::ostringstream params;
    params << "k=" << k << " I=" << labels_to_string(I) << " T#" << t;
    const Int a = di < 0 ? Int(-di) : di;
    const Int b = dic < 0 ? Int(-dic) : dic;
    std::ostringstream lhs, rhs;
    lhs << a;
    rhs << b;
    rep.add("duality.absdet", params.str(), lhs.str(), rhs.str(), a == b);
  }

  // det T_I det T_J / (det T*_{Ic} det T*_{Jc}) must be one constant: the
  // record compares the set of observed ratios with its first element.
  std::set<std::string> ratios;
  std::string first;
  for (size_t t = 0; t < cache.qts.size(); ++t) {
    const Int p = t_det(cache.qts[t], I) * t_det(cache.qts[t], J);
    const Int q = t_det(cache.duals[t], Ic) * t_det(cache.duals[t], Jc);
    std::string r;
    if (p == 0 && q == 0) continue;
    if (p == q)
      r = "+1";
    else if (p == -q)
      r = "-1";
    else
      r = "mismatch";
    if (first.empty()) first = r;
    ratios.insert(r);
  }
  std::ostringstream params;
  params << "k=" << k << " I=" << labels_to_string(I)
         << " J=" << labels_to_string(J);
  std::ostringstream lhs;
  lhs << "{";
  for (auto it = ratios.begin(); it != ratios.end(); ++it) {
    if (it != ratios.begin()) lhs << ",";
    lhs << *it;
  }
  lhs << "}";
  const std::string rhs =
      first.empty() || first == "mismatch" ? "{}" : "{" + first + "}";
  rep.add_equal("duality.sign", params.str(), lhs.str(), rhs);
}

}  // namespace

Report verify_duality(const RibbonGraph& g, const HomologyFrame& frame, int k,
                      const std::vector<int>& I, const std::vector<int>& J,
                      int max_edges) {
  Report rep;
  rep.suite = "duality";
  const DualityCache cache = duality_cache(g, frame, k, max_edges);
  duality_records(frame, cache, k, I, J, rep);
  return rep;
}

Report verify_duality_all(const RibbonGraph& g, const HomologyFrame& frame,
                          int max_edges) {
  Report rep;
  rep.suite = "duality";
  const int two_g = 2 * frame.genus;
  for (int k = 0; k <= two_g; ++k) {
    const DualityCache cache = duality_cache(g, frame, k, max_edges);
    const auto sets = combinations(two_g, k);
    for (size_t a = 0; a < sets.size(); ++a)
      for (size_t b = a; b < sets.size(); ++b)
        duality_records(frame, cache, k, sets[a], sets[b], rep, b == a);
    if (k == two_g) {
      const long dual_trees = count_spanning_trees(dual(g).graph);
      rep.add("duality.count", "2g-quasi-trees vs dual spanning trees",
              std::to_string(cache.qts.size()), std::to_string(dual_trees),
              static_cast<long>(cache.qts.size()) == dual_trees);
    }
  }
  return rep;
}

Report verify_det_corollary(const RibbonGraph& g, const HomologyFrame& frame,
                            int max_edges) {
  Report rep;
  rep.suite = "det_corollary";
  const PeriodData pd = omega_l(g, frame);
  const Rat lhs = det_bareiss(pd.OmegaL);

  // Both spanning-tree sums by brute-force enumeration.
  const DualResult dr = dual(g);
  const auto primal_frame_trees = enumerate_quasitrees(g, frame, 0, max_edges);
  Rat primal_sum(0);
  for (const auto& t : primal_frame_trees)
    primal_sum += weight_product(g, t.edges);

  Rat dual_sum(0);
  {
    const int E = g.num_edges();
    const int target = dr.graph.num_vertices() - 1;
    for (unsigned mask = 0; mask < (1u << E); ++mask) {
      if (__builtin_popcount(mask) != target) continue;
      UnionFind uf(dr.graph.num_vertices());
      int joined = 0;
      Rat prod(1);
      for (int e = 0; e < E; ++e)
        if (mask & (1u << e)) {
          if (uf.unite(dr.graph.tail(e), dr.graph.head(e))) ++joined;
          prod *= Rat(1) / g.weight(e);
        }
      if (joined == target) dual_sum += prod;
    }
  }
  Rat all_prod(1);
  for (int e = 0; e < g.num_edges(); ++e) all_prod *= g.weight(e);
  const Rat rhs = dual_sum * all_prod / primal_sum;
  rep.add("det_corollary.value", "", rat_to_string(lhs), rat_to_string(rhs), lhs == rhs);
  return rep;
}

Report verify_wp_identity(const RibbonGraph& g, const HomologyFrame& frame,
                          int max_edges) {
  Report rep;
  rep.suite = "wp_identity";
  const int gen = frame.genus;
  if (gen < 1) throw BadParams("wp identity requires genus >= 1");
  std::vector<int> I;
  for (int i = gen + 1; i <= 2 * gen; ++i) I.push_back(i);
  const WpPotential wp = wp_potential(g, frame);
  Rat rhs(0);
  for (const auto& qt : enumerate_quasitrees(g, frame, gen, max_edges)) {
    const Int d = t_det(qt, I);
    rhs += Rat(d * d) * weight_product(g, qt.edges);
  }
  rep.add("wp.identity", "I=" + labels_to_string(I), rat_to_string(wp.product),
          rat_to_string(rhs), wp.product == rhs);
  return rep;
}

Report delta_matroid_check(const RibbonGraph& g, const HomologyFrame& frame,
                           int max_edges) {
  Report rep;
  rep.suite = "delta_matroid";
  const int E = g.num_edges();
  std::vector<unsigned> family;
  std::unordered_set<unsigned> members;
  for (int k = 0; k <= 2 * frame.genus; ++k)
    for (const auto& qt : enumerate_quasitrees(g, frame, k, max_edges)) {
      unsigned mask = 0;
      for (int e : qt.edges) mask |= 1u << e;
      family.push_back(mask);
      members.insert(mask);
    }

  long triples_checked = 0;
  long violations = 0;
  std::string witness;
  for (unsigned t : family)
    for (unsigned t2 : family) {
      if (t == t2) continue;
      const unsigned sym = t ^ t2;
      for (int e = 0; e < E; ++e) {
        if (!(sym & (1u << e))) continue;
        ++triples_checked;
        bool found = false;
        for (int f = 0; f < E && !found; ++f) {
          if (!(sym & (1u << f))) continue;
          const unsigned candidate =
              (f == e) ? (t ^ (1u << e)) : (t ^ (1u << e) ^ (1u << f));
          if (members.count(candidate)) found = true;
        }
        if (!found) {
          ++violations;
          if (witness.empty()) {
            std::ostringstream os;
            os << " first: T=" << t << " T'=" << t2 << " e=" << e;
            witness = os.str();
          }
        }
      }
    }
  rep.add_equal("delta_matroid.exchange",
                "family=" + std::to_string(family.size()) +
                    " triples=" + std::to_string(triples_checked),
                "violations: " + std::to_string(violations) + witness,
                "violations: 0");
  return rep;
}

Report verify_covering_components(const RibbonGraph& g,
                                  const HomologyFrame& frame, int max_edges) {
  Report rep;
  rep.suite = "covering";
  const int gen = frame.genus;
  std::vector<int> I;
  for (int i = gen + 1; i <= 2 * gen; ++i) I.push_back(i);
  int idx = 0;
  for (const auto& qt : enumerate_quasitrees(g, frame, gen, max_edges)) {
    ++idx;
    const SubgraphOps ops = subgraph_ops(g, qt.edges);
    if (ops.ribbon_genus != 0) continue;  // theorem needs a sphere embedding
    const CoveringCount cc = covering_components(g, frame, qt);
    const Int d = t_det(qt, I);
    const Int dabs = d < 0 ? Int(-d) : d;
    std::ostringstream params, lhs, rhs;
    params << "quasi-tree #" << idx << " edges=" << labels_to_string(qt.edges);
    if (cc.infinite)
      lhs << "infinite";
    else
      lhs << cc.components;
    if (dabs == 0)
      rhs << "infinite";
    else
      rhs << dabs;
    const bool ok = cc.infinite ? (dabs == 0) : (cc.components == dabs);
    rep.add("covering.components", params.str(), lhs.str(), rhs.str(), ok);
  }
  return rep;
}

}  // namespace dpm
