// Randomized cross-module battery: random connected rotation systems of
// mixed genus, random rational weights, every identity suite. Seeds are
// fixed, so failures reproduce.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <optional>
#include <random>

#include "dpm/bundle.hpp"
#include "dpm/exactla.hpp"
#include "dpm/graphio.hpp"
#include "dpm/period.hpp"
#include "dpm/quasitree.hpp"

using namespace dpm;

namespace {

std::optional<RibbonGraph> random_ribbon(std::mt19937_64& rng, int v_count,
                                         int e_count) {
  std::vector<std::vector<int>> rot(v_count);
  for (int d = 0; d < 2 * e_count; ++d)
    rot[rng() % v_count].push_back(d);
  for (auto& r : rot)
    for (size_t i = r.size(); i > 1; --i)
      std::swap(r[i - 1], r[rng() % i]);
  std::vector<Rat> w;
  for (int e = 0; e < e_count; ++e)
    w.emplace_back(Int(1 + rng() % 6), Int(1 + rng() % 4));
  RibbonGraph g(std::move(rot), std::move(w));
  if (!g.is_connected()) return std::nullopt;
  return g;
}

Rat brute_force_tree_sum(const RibbonGraph& g) {
  const int E = g.num_edges();
  const int target = g.num_vertices() - 1;
  Rat acc(0);
  for (unsigned mask = 0; mask < (1u << E); ++mask) {
    if (__builtin_popcount(mask) != target) continue;
    std::vector<int> parent(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) parent[v] = v;
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    int joined = 0;
    Rat prod(1);
    for (int e = 0; e < E; ++e)
      if (mask & (1u << e)) {
        const int a = find(g.tail(e)), b = find(g.head(e));
        if (a != b) {
          parent[a] = b;
          ++joined;
        }
        prod *= g.weight(e);
      }
    if (joined == target) acc += prod;
  }
  return acc;
}

void full_battery(const RibbonGraph& g) {
  INFO("graph: " << serialize_graph(g));
  const HomologyFrame f = symplectic_frame(g);
  const int two_g = 2 * f.genus;
  const PeriodData pd = omega_l(g, f);

  // Frame pairings and the intersection Gram.
  for (int i = 0; i < two_g; ++i)
    for (int j = 0; j < two_g; ++j) {
      CHECK(intersection(f.dual_basis[i], f.basis[j]) == (i == j ? 1 : 0));
      CHECK(intersection_primal(g, f, f.basis[i], f.basis[j]) ==
            f.omega(i, j));
    }

  // Period matrix structure.
  CHECK(exact_equal(pd.OmegaL, RatMatrix(pd.OmegaL.transpose())));
  for (int k = 1; k <= two_g; ++k)
    CHECK(det_bareiss(RatMatrix(pd.OmegaL.topLeftCorner(k, k))) > 0);
  for (int root = 1; root < g.num_vertices(); ++root)
    CHECK(exact_equal(omega_l(g, f, root).OmegaL, pd.OmegaL));
  CHECK(pd.tree_sum == brute_force_tree_sum(g));

  // Identity suites.
  CHECK(verify_theorem1(g, f).all_pass());
  CHECK(verify_duality_all(g, f).all_pass());
  CHECK(verify_det_corollary(g, f).all_pass());
  CHECK(verify_theorem3(g, f).all_pass());
  CHECK(delta_matroid_check(g, f).all_pass());
  if (f.genus >= 1) {
    CHECK(verify_wp_identity(g, f).all_pass());
    CHECK(verify_covering_components(g, f).all_pass());
  }
}

}  // namespace

TEST_CASE("full identity battery on random rotation systems") {
  std::mt19937_64 rng(20240601);
  int accepted = 0;
  int max_genus_seen = 0;
  while (accepted < 24) {
    const int v_count = 1 + static_cast<int>(rng() % 4);
    const int e_count =
        v_count + static_cast<int>(rng() % (8 - v_count));
    const auto g = random_ribbon(rng, v_count, e_count);
    if (!g) continue;
    ++accepted;
    max_genus_seen = std::max(max_genus_seen, genus(*g));
    full_battery(*g);
  }
  CHECK(max_genus_seen >= 2);  // the sample must reach higher genus
}

TEST_CASE("full identity battery on duals and contractions") {
  std::mt19937_64 rng(777);
  int accepted = 0;
  while (accepted < 6) {
    const int v_count = 1 + static_cast<int>(rng() % 3);
    const int e_count = v_count + 2 + static_cast<int>(rng() % 3);
    const auto g = random_ribbon(rng, v_count, e_count);
    if (!g) continue;
    ++accepted;
    full_battery(dual(*g).graph);
    // Contract one non-loop edge, when there is one, and re-run.
    for (int e = 0; e < g->num_edges(); ++e)
      if (!g->is_loop(e)) {
        full_battery(contract_delete(*g, {e}, {}).graph);
        break;
      }
  }
}
