#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dpm/exactla.hpp"
#include "dpm/graphio.hpp"
#include "dpm/period.hpp"

using namespace dpm;

namespace {

std::vector<RibbonGraph> corpus() {
  return {bouquet(1, {Rat(2), Rat(3)}),
          bouquet(2, random_weights(4, 11)),
          torus_grid(2, 2, random_weights(8, 12)),
          torus_grid(2, 3, random_weights(12, 13))};
}

// Brute-force spanning-tree weight sum (the Matrix-Tree oracle).
Rat tree_weight_sum(const RibbonGraph& g) {
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

RatVector random_periods(std::mt19937_64& rng, int n) {
  RatVector a(n);
  for (int i = 0; i < n; ++i)
    a(i) = Rat(Int(static_cast<long>(rng() % 7) - 3), Int(1 + rng() % 3));
  return a;
}

}  // namespace

TEST_CASE("laplacian: pinned examples") {
  const LaplacianData lap = laplacian(bouquet(1, {Rat(2), Rat(3)}));
  CHECK(lap.delta.rows() == 1);
  CHECK(lap.delta(0, 0) == Rat(0));
  CHECK(lap.delta_oo.rows() == 0);
  CHECK(lap.tree_sum == Rat(1));

  const RibbonGraph path({{0}, {1}}, {Rat(5)});
  const LaplacianData lp = laplacian(path);
  CHECK(lp.delta(0, 0) == Rat(5));
  CHECK(lp.delta(0, 1) == Rat(-5));
  CHECK(lp.delta(1, 0) == Rat(-5));
  CHECK(lp.delta(1, 1) == Rat(5));
  CHECK(lp.tree_sum == Rat(5));
}

TEST_CASE("matrix-tree: reduced determinant equals the enumeration oracle") {
  const RibbonGraph g22 = torus_grid(2, 2);
  CHECK(laplacian(g22).tree_sum == Rat(32));
  CHECK(laplacian(g22).tree_sum == tree_weight_sum(g22));
  for (const RibbonGraph& g : corpus())
    if (g.num_edges() <= 10)
      CHECK(laplacian(g).tree_sum == tree_weight_sum(g));
}

TEST_CASE("omega_l: pinned examples") {
  const RibbonGraph b1 = bouquet(1, {Rat(2), Rat(3)});
  const PeriodData pd = omega_l(b1, symplectic_frame(b1));
  RatMatrix want(2, 2);
  want << Rat(2), Rat(0), Rat(0), Rat(3);
  CHECK(exact_equal(pd.OmegaL, want));
  CHECK(pd.tree_sum == Rat(1));

  const RibbonGraph b2 = bouquet(2);
  const PeriodData pd2 = omega_l(b2, symplectic_frame(b2));
  CHECK(exact_equal(pd2.OmegaL, rat_identity(4)));
}

TEST_CASE("omega_l is symmetric with positive leading principal minors") {
  for (const RibbonGraph& g : corpus()) {
    const HomologyFrame f = symplectic_frame(g);
    const PeriodData pd = omega_l(g, f);
    CHECK(exact_equal(pd.OmegaL, RatMatrix(pd.OmegaL.transpose())));
    for (int k = 1; k <= 2 * f.genus; ++k)
      CHECK(det_bareiss(RatMatrix(pd.OmegaL.topLeftCorner(k, k))) > 0);
  }
}

TEST_CASE("omega_l does not depend on the root vertex") {
  for (const RibbonGraph& g : corpus()) {
    const HomologyFrame f = symplectic_frame(g);
    const PeriodData pd0 = omega_l(g, f, 0);
    for (int root = 1; root < g.num_vertices(); ++root)
      CHECK(exact_equal(omega_l(g, f, root).OmegaL, pd0.OmegaL));
  }
}

TEST_CASE("omega_l is invariant under homologous dual-basis changes") {
  for (const RibbonGraph& g : corpus()) {
    HomologyFrame f = symplectic_frame(g);
    const RatMatrix reference = omega_l(g, f).OmegaL;
    for (int i = 0; i < 2 * f.genus && i < 2; ++i)
      for (int v = 0; v < g.num_vertices(); ++v) {
        HomologyFrame moved = f;
        moved.dual_basis[i].coeffs += dual_face_boundary(g, v).coeffs;
        moved.M.col(i) = moved.dual_basis[i].coeffs;
        CHECK(exact_equal(omega_l(g, moved).OmegaL, reference));
      }
  }
}

TEST_CASE("omega_l scales linearly with the weights") {
  const RibbonGraph g = torus_grid(2, 2, random_weights(8, 21));
  const HomologyFrame f = symplectic_frame(g);
  const RatMatrix base = omega_l(g, f).OmegaL;
  const Rat lambda(7, 3);
  std::vector<Rat> scaled = g.weights();
  for (Rat& w : scaled) w *= lambda;
  const RatMatrix after = omega_l(g.with_weights(scaled), f).OmegaL;
  CHECK(exact_equal(after, RatMatrix(lambda * base)));
}

TEST_CASE("harmonic form: pinned examples") {
  const RibbonGraph b1 = bouquet(1, {Rat(2), Rat(3)});
  const HomologyFrame f = symplectic_frame(b1);

  RatVector zero = RatVector::Constant(2, Rat(0));
  const HarmonicForm hf0 = harmonic_form(b1, f, zero);
  CHECK(all_zero(hf0.omega.values));
  CHECK(all_zero(hf0.potentials));

  RatVector a(2);
  a << Rat(1), Rat(0);
  const HarmonicForm hf = harmonic_form(b1, f, a);
  CHECK(hf.omega.values(0) == Rat(1));
  CHECK(hf.omega.values(1) == Rat(0));
}

TEST_CASE("harmonic forms are closed, co-closed, and hit their periods") {
  std::mt19937_64 rng(314);
  for (const RibbonGraph& g : corpus()) {
    const HomologyFrame f = symplectic_frame(g);
    for (int trial = 0; trial < 4; ++trial) {
      const RatVector a = random_periods(rng, 2 * f.genus);
      const HarmonicForm hf = harmonic_form(g, f, a);
      CHECK(is_closed(g, f.faces, hf.omega));
      CHECK(is_coclosed(g, hf.omega));
      CHECK(exact_equal(periods(g, f, hf.omega), a));
    }
  }
}

TEST_CASE("dual periods: pinned example and operator identity") {
  const RibbonGraph b1 = bouquet(1, {Rat(2), Rat(3)});
  const HomologyFrame f = symplectic_frame(b1);
  RatVector a(2);
  a << Rat(1), Rat(0);
  const RatVector astar = dual_periods(b1, f, harmonic_form(b1, f, a).omega);
  CHECK(astar(0) == Rat(0));
  CHECK(astar(1) == Rat(2));

  RatVector zero = RatVector::Constant(2, Rat(0));
  CHECK(all_zero(dual_periods(b1, f, harmonic_form(b1, f, zero).omega)));
}

TEST_CASE("dual periods reject non-harmonic forms") {
  const RibbonGraph g = torus_grid(2, 2);
  const HomologyFrame f = symplectic_frame(g);
  OneForm bad{RatVector::Constant(g.num_edges(), Rat(0))};
  bad.values(0) = 1;
  CHECK_THROWS_AS(dual_periods(g, f, bad), NotHarmonic);
}

TEST_CASE("omega_l agrees with the harmonic-conjugation definition") {
  for (const RibbonGraph& g : corpus()) {
    const HomologyFrame f = symplectic_frame(g);
    const PeriodData pd = omega_l(g, f);
    const int two_g = 2 * f.genus;
    RatMatrix l_by_columns(two_g, two_g);
    for (int j = 0; j < two_g; ++j) {
      RatVector ej = RatVector::Constant(two_g, Rat(0));
      ej(j) = 1;
      l_by_columns.col(j) = dual_periods(g, f, harmonic_form(g, f, ej).omega);
    }
    CHECK(exact_equal(RatMatrix(to_rat(f.omega) * l_by_columns), pd.OmegaL));
    CHECK(exact_equal(l_by_columns, pd.L));
  }
}

TEST_CASE("riemann bilinear pairing matches A^t OmegaL B") {
  std::mt19937_64 rng(2718);
  for (const RibbonGraph& g : corpus()) {
    const HomologyFrame f = symplectic_frame(g);
    const PeriodData pd = omega_l(g, f);
    for (int trial = 0; trial < 10; ++trial) {
      const RatVector a = random_periods(rng, 2 * f.genus);
      const RatVector b = random_periods(rng, 2 * f.genus);
      const OneForm wa = harmonic_form(g, f, a).omega;
      const OneForm wb = harmonic_form(g, f, b).omega;
      Rat pairing(0);
      for (int e = 0; e < g.num_edges(); ++e)
        pairing += g.weight(e) * wa.values(e) * wb.values(e);
      const Rat want = (a.transpose() * pd.OmegaL * b)(0, 0);
      CHECK(pairing == want);
    }
  }
}

TEST_CASE("minor: pinned examples and Schur cross-check") {
  const RibbonGraph b1 = bouquet(1, {Rat(2), Rat(3)});
  const PeriodData pd = omega_l(b1, symplectic_frame(b1));
  CHECK(minor(pd, {1}, {1}) == Rat(2));
  CHECK(minor(pd, {1}, {2}) == Rat(0));
  CHECK(minor(pd, {1, 2}, {1, 2}) == Rat(6));
  CHECK_THROWS_AS(minor(pd, {0}, {1}), BadIndex);
  CHECK_THROWS_AS(minor(pd, {3}, {1}), BadIndex);

  for (const RibbonGraph& g : corpus()) {
    const PeriodData p = omega_l(g, symplectic_frame(g));
    const int two_g = static_cast<int>(p.OmegaL.rows());
    for (int i = 1; i <= two_g; ++i)
      for (int j = 1; j <= two_g; ++j)
        CHECK(minor(p, {i}, {j}) == p.OmegaL(i - 1, j - 1));
  }
}

TEST_CASE("wp potential: pinned examples") {
  const RibbonGraph b1 = bouquet(1, {Rat(2), Rat(3)});
  CHECK(wp_potential(b1, symplectic_frame(b1)).product == Rat(3));
  const RibbonGraph b2 = bouquet(2);
  CHECK(wp_potential(b2, symplectic_frame(b2)).product == Rat(1));
}

TEST_CASE("normalized period blocks: pinned examples and positivity") {
  const RibbonGraph b1 = bouquet(1, {Rat(2), Rat(3)});
  const NormalizedPeriodBlocks nb =
      normalized_period_blocks(omega_l(b1, symplectic_frame(b1)));
  CHECK(nb.ImPi(0, 0) == Rat(1, 3));
  CHECK(nb.RePi(0, 0) == Rat(0));

  const RibbonGraph b2 = bouquet(2);
  const NormalizedPeriodBlocks nb2 =
      normalized_period_blocks(omega_l(b2, symplectic_frame(b2)));
  CHECK(exact_equal(nb2.ImPi, rat_identity(2)));
  CHECK(all_zero(nb2.RePi));

  for (const RibbonGraph& g : corpus()) {
    const HomologyFrame f = symplectic_frame(g);
    const NormalizedPeriodBlocks nb3 = normalized_period_blocks(omega_l(g, f));
    CHECK(exact_equal(nb3.ImPi, RatMatrix(nb3.ImPi.transpose())));
    for (int k = 1; k <= f.genus; ++k)
      CHECK(det_bareiss(RatMatrix(nb3.ImPi.topLeftCorner(k, k))) > 0);
  }
}
