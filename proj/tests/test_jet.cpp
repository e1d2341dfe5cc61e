#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "dpm/exactla.hpp"
#include "dpm/jet.hpp"

using namespace dpm;

TEST_CASE("reciprocal power expands to 1 - t + t^2") {
  const Jet2 j = Jet2::one_plus_var_pow(1, 0, -1);
  CHECK(j.value() == Rat(1));
  CHECK(j.grad()(0) == Rat(-1));
  CHECK(j.quad()(0, 0) == Rat(1));
}

TEST_CASE("(1+t)(1-t) = 1 - t^2") {
  const Jet2 a = Jet2::one_plus_var_pow(1, 0, 1);
  const Jet2 one = Jet2::constant(1, Rat(1));
  const Jet2 t = Jet2::variable(1, 0);
  const Jet2 prod = a * (one - t);
  CHECK(prod.value() == Rat(1));
  CHECK(prod.grad()(0) == Rat(0));
  CHECK(prod.quad()(0, 0) == Rat(-1));
}

TEST_CASE("entry 2 - z - 1/z at z = 1 + t is exactly -t^2") {
  const Jet2 two = Jet2::constant(1, Rat(2));
  const Jet2 z = Jet2::one_plus_var_pow(1, 0, 1);
  const Jet2 zinv = Jet2::one_plus_var_pow(1, 0, -1);
  const Jet2 entry = two - z - zinv;
  CHECK(entry.value() == Rat(0));
  CHECK(entry.grad()(0) == Rat(0));
  CHECK(entry.quad()(0, 0) == Rat(-1));

  // Scaled by a weight, the 1x1 determinant is -c t^2.
  const Jet2 c = Jet2::constant(1, Rat(5, 2));
  const std::vector<Jet2> m{c * entry};
  const Jet2 det = berkowitz_det(m, 1, Jet2::constant(1, Rat(0)),
                                 Jet2::constant(1, Rat(1)));
  CHECK(det.value() == Rat(0));
  CHECK(det.quad()(0, 0) == Rat(-5, 2));
  CHECK(det.hessian()(0, 0) == Rat(-5));
}

TEST_CASE("mixed products fill the symmetric cross terms") {
  const Jet2 t0 = Jet2::variable(2, 0);
  const Jet2 t1 = Jet2::variable(2, 1);
  const Jet2 p = t0 * t1;
  CHECK(p.value() == Rat(0));
  CHECK(p.quad()(0, 1) == Rat(1, 2));
  CHECK(p.quad()(1, 0) == Rat(1, 2));
  CHECK(p.hessian()(0, 1) == Rat(1));
}

TEST_CASE("berkowitz on constant jets embeds the rational determinant") {
  std::mt19937_64 rng(2024);
  for (int n = 1; n <= 5; ++n) {
    RatMatrix m(n, n);
    std::vector<Jet2> jm;
    jm.reserve(n * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        m(i, j) = Rat(Int(rng() % 9) - 4, Int(1 + rng() % 3));
        jm.push_back(Jet2::constant(3, m(i, j)));
      }
    const Jet2 det = berkowitz_det(jm, n, Jet2::constant(3, Rat(0)),
                                   Jet2::constant(3, Rat(1)));
    CHECK(det.value() == det_bareiss(m));
    CHECK(all_zero(det.grad()));
    CHECK(all_zero(det.quad()));
  }
}

TEST_CASE("degree-2 truncation keeps products associative and commutative") {
  std::mt19937_64 rng(77);
  auto random_jet = [&](int vars) {
    Jet2 j = Jet2::constant(vars, Rat(Int(rng() % 7) - 3));
    for (int v = 0; v < vars; ++v) {
      j = j + Jet2::constant(vars, Rat(Int(rng() % 5) - 2)) *
                  Jet2::variable(vars, v);
      j = j + Jet2::constant(vars, Rat(Int(rng() % 3) - 1)) *
                  Jet2::variable(vars, v) * Jet2::variable(vars, (v + 1) % vars);
    }
    return j;
  };
  for (int trial = 0; trial < 10; ++trial) {
    const Jet2 a = random_jet(3), b = random_jet(3), c = random_jet(3);
    CHECK((a * b) == (b * a));
    CHECK(((a * b) * c) == (a * (b * c)));
    CHECK((a * (b + c)) == (a * b + a * c));
  }
}
