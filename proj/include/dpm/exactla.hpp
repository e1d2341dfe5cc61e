#ifndef DPM_EXACTLA_HPP
#define DPM_EXACTLA_HPP

#include <vector>

#include "dpm/errors.hpp"
#include "dpm/numeric.hpp"

namespace dpm {

// Fraction-free (Bareiss) determinant. The empty 0x0 determinant is 1, which
// is what the reduced Laplacian of a one-vertex graph needs.
Rat det_bareiss(const RatMatrix& m);
Int det_bareiss(const IntMatrix& m);

// Exact Gaussian elimination. m must be square; throws SingularMatrix.
RatMatrix solve_linear(const RatMatrix& m, const RatMatrix& rhs);
RatMatrix inverse(const RatMatrix& m);

Eigen::Index rank_over_Q(const RatMatrix& m);
Eigen::Index rank_over_Q(const IntMatrix& m);

// Smith normal form: U * m * V = D with U, V unimodular, D diagonal,
// d_i >= 0 and d_i | d_{i+1}.
struct SmithResult {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
};
SmithResult smith_normal_form(const IntMatrix& m);

// Division-free determinant (Samuelson-Berkowitz). Works over any
// commutative ring scalar that supports +, -, * and has additive identity
// `zero` and multiplicative identity `one`. Used for determinants of
// truncated-jet matrices, which have zero divisors.
template <class Ring>
Ring berkowitz_det(const std::vector<Ring>& a, int n, const Ring& zero,
                   const Ring& one) {
  if (n == 0) return one;
  auto at = [&](int i, int j) -> const Ring& { return a[i * n + j]; };
  // Coefficients of the characteristic polynomial of the leading principal
  // submatrices, lowest index = highest power of lambda.
  std::vector<Ring> v{one};
  for (int i = 0; i < n; ++i) {
    // Toeplitz column: t0 = 1, t1 = -A[i][i], t_{j>=2} = -(R M^{j-2} c)
    std::vector<Ring> t(static_cast<size_t>(i) + 2, zero);
    t[0] = one;
    t[1] = zero - at(i, i);
    if (i > 0) {
      std::vector<Ring> w(static_cast<size_t>(i), zero);
      for (int r = 0; r < i; ++r) w[r] = at(r, i);
      for (int j = 2; j <= i + 1; ++j) {
        if (j > 2) {
          std::vector<Ring> w2(static_cast<size_t>(i), zero);
          for (int r = 0; r < i; ++r) {
            Ring acc = zero;
            for (int s = 0; s < i; ++s) acc = acc + at(r, s) * w[s];
            w2[r] = acc;
          }
          w = std::move(w2);
        }
        Ring acc = zero;
        for (int s = 0; s < i; ++s) acc = acc + at(i, s) * w[s];
        t[j] = zero - acc;
      }
    }
    std::vector<Ring> nv(static_cast<size_t>(i) + 2, zero);
    for (size_t k = 0; k < nv.size(); ++k) {
      Ring acc = zero;
      for (size_t j = 0; j < v.size() && j <= k; ++j)
        acc = acc + t[k - j] * v[j];
      nv[k] = acc;
    }
    v = std::move(nv);
  }
  // char(lambda) = sum v[k] lambda^{n-k}; det = (-1)^n char(0).
  Ring det = v[static_cast<size_t>(n)];
  if (n % 2 != 0) det = zero - det;
  return det;
}

Rat berkowitz_det(const RatMatrix& m);

// Schur-complement determinant oracle: assembles [[P,Q],[R,S]] and checks
// det = det(P) * det(S - R P^{-1} Q) along both routes, returning the common
// value. Throws SingularMatrix when P is singular and Error if the two
// routes ever disagree (they cannot, so a disagreement means a bug).
Rat schur_minor_oracle(const RatMatrix& P, const RatMatrix& Q,
                       const RatMatrix& R, const RatMatrix& S);

// Congruence reduction of a skew-symmetric unimodular integer matrix to the
// standard symplectic form [[0, I],[-I, 0]]: returns N unimodular with
// N^t * A * N = Omega, together with N^{-1}. Throws NotUnimodular.
struct SymplecticReduction {
  IntMatrix N;
  IntMatrix Ninv;
};
SymplecticReduction symplectic_reduce(const IntMatrix& skew);

// The standard 2g x 2g intersection matrix [[0, I_g],[-I_g, 0]].
IntMatrix standard_omega(int genus);

}  // namespace dpm

#endif
