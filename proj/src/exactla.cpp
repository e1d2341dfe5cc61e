#include "dpm/exactla.hpp"

#include <algorithm>
#include <cstdlib>

namespace dpm {

namespace {

template <class Mat, class Scalar>
Scalar det_bareiss_impl(Mat b) {
  const Eigen::Index n = b.rows();
  if (n != b.cols()) throw BadIndex("det: matrix not square");
  if (n == 0) return Scalar(1);
  Scalar prev(1);
  int sign = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (b(k, k) == 0) {
      Eigen::Index r = k + 1;
      while (r < n && b(r, k) == 0) ++r;
      if (r == n) return Scalar(0);
      b.row(k).swap(b.row(r));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j)
        b(i, j) = (b(i, j) * b(k, k) - b(i, k) * b(k, j)) / prev;
    prev = b(k, k);
  }
  Scalar d = b(n - 1, n - 1);
  return sign < 0 ? Scalar(-d) : d;
}

}  // namespace

Rat det_bareiss(const RatMatrix& m) { return det_bareiss_impl<RatMatrix, Rat>(m); }
Int det_bareiss(const IntMatrix& m) { return det_bareiss_impl<IntMatrix, Int>(m); }

RatMatrix solve_linear(const RatMatrix& m, const RatMatrix& rhs) {
  const Eigen::Index n = m.rows();
  if (m.cols() != n) throw BadIndex("solve: matrix not square");
  if (rhs.rows() != n) throw BadIndex("solve: rhs dimension mismatch");
  RatMatrix a = m;
  RatMatrix x = rhs;
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index piv = k;
    while (piv < n && a(piv, k) == 0) ++piv;
    if (piv == n) throw SingularMatrix("solve: singular matrix");
    if (piv != k) {
      a.row(k).swap(a.row(piv));
      x.row(k).swap(x.row(piv));
    }
    const Rat p = a(k, k);
    for (Eigen::Index j = 0; j < n; ++j) a(k, j) /= p;
    for (Eigen::Index j = 0; j < x.cols(); ++j) x(k, j) /= p;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      const Rat f = a(i, k);
      for (Eigen::Index j = 0; j < n; ++j) a(i, j) -= f * a(k, j);
      for (Eigen::Index j = 0; j < x.cols(); ++j) x(i, j) -= f * x(k, j);
    }
  }
  return x;
}

RatMatrix inverse(const RatMatrix& m) {
  return solve_linear(m, rat_identity(m.rows()));
}

Eigen::Index rank_over_Q(const RatMatrix& m) {
  RatMatrix a = m;
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < a.cols() && rank < a.rows(); ++col) {
    Eigen::Index piv = rank;
    while (piv < a.rows() && a(piv, col) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != rank) a.row(rank).swap(a.row(piv));
    for (Eigen::Index i = rank + 1; i < a.rows(); ++i) {
      if (a(i, col) == 0) continue;
      const Rat f = a(i, col) / a(rank, col);
      for (Eigen::Index j = col; j < a.cols(); ++j) a(i, j) -= f * a(rank, j);
    }
    ++rank;
  }
  return rank;
}

Eigen::Index rank_over_Q(const IntMatrix& m) { return rank_over_Q(to_rat(m)); }

namespace {

// One elementary step bookkeeping for Smith reduction.
void snf_row_op(IntMatrix& a, IntMatrix& u, Eigen::Index dst, Eigen::Index src,
                const Int& q) {
  a.row(dst) -= q * a.row(src);
  u.row(dst) -= q * u.row(src);
}

void snf_col_op(IntMatrix& a, IntMatrix& v, Eigen::Index dst, Eigen::Index src,
                const Int& q) {
  a.col(dst) -= q * a.col(src);
  v.col(dst) -= q * v.col(src);
}

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Quotient that minimizes |a - q*b|.
Int round_div(const Int& a, const Int& b) {
  Int q = floor_div(a, b);
  Int r = a - q * b;
  Int babs = b < 0 ? Int(-b) : b;
  if (2 * r > babs) ++q;
  return q;
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  IntMatrix a = m;
  IntMatrix u = int_identity(rows);
  IntMatrix v = int_identity(cols);
  const Eigen::Index nmin = std::min(rows, cols);

  for (Eigen::Index s = 0; s < nmin; ++s) {
    // Locate minimal nonzero |entry| in the trailing block.
    Eigen::Index pi = -1, pj = -1;
    Int best(0);
    for (Eigen::Index i = s; i < rows; ++i)
      for (Eigen::Index j = s; j < cols; ++j) {
        if (a(i, j) == 0) continue;
        Int ab = a(i, j) < 0 ? Int(-a(i, j)) : a(i, j);
        if (pi < 0 || ab < best) {
          best = ab;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;  // trailing block is zero
    if (pi != s) { a.row(s).swap(a.row(pi)); u.row(s).swap(u.row(pi)); }
    if (pj != s) { a.col(s).swap(a.col(pj)); v.col(s).swap(v.col(pj)); }

    bool clean = false;
    while (!clean) {
      clean = true;
      for (Eigen::Index i = s + 1; i < rows; ++i) {
        if (a(i, s) == 0) continue;
        Int q = round_div(a(i, s), a(s, s));
        snf_row_op(a, u, i, s, q);
        if (a(i, s) != 0) {  // smaller remainder becomes the pivot
          a.row(s).swap(a.row(i));
          u.row(s).swap(u.row(i));
          clean = false;
        }
      }
      for (Eigen::Index j = s + 1; j < cols; ++j) {
        if (a(s, j) == 0) continue;
        Int q = round_div(a(s, j), a(s, s));
        snf_col_op(a, v, j, s, q);
        if (a(s, j) != 0) {
          a.col(s).swap(a.col(j));
          v.col(s).swap(v.col(j));
          clean = false;
        }
      }
      if (!clean) continue;
      // Pivot must divide all trailing entries; if not, fold the offending
      // row in and restart the cleanup.
      for (Eigen::Index i = s + 1; i < rows && clean; ++i)
        for (Eigen::Index j = s + 1; j < cols && clean; ++j)
          if (a(i, j) % a(s, s) != 0) {
            a.row(s) += a.row(i);
            u.row(s) += u.row(i);
            clean = false;
          }
    }
    if (a(s, s) < 0) {
      a.row(s) = -a.row(s);
      u.row(s) = -u.row(s);
    }
  }
  return SmithResult{u, a, v};
}

Rat berkowitz_det(const RatMatrix& m) {
  const int n = static_cast<int>(m.rows());
  if (m.cols() != m.rows()) throw BadIndex("det: matrix not square");
  std::vector<Rat> a(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[static_cast<size_t>(i) * n + j] = m(i, j);
  return berkowitz_det(a, n, Rat(0), Rat(1));
}

Rat schur_minor_oracle(const RatMatrix& P, const RatMatrix& Q,
                       const RatMatrix& R, const RatMatrix& S) {
  const Eigen::Index p = P.rows(), s = S.rows();
  if (P.cols() != p || S.cols() != s || Q.rows() != p || Q.cols() != s ||
      R.rows() != s || R.cols() != p)
    throw BadIndex("schur: inconsistent block dimensions");
  const Rat dp = det_bareiss(P);
  if (dp == 0) throw SingularMatrix("schur: P is singular");
  RatMatrix assembled(p + s, p + s);
  assembled.topLeftCorner(p, p) = P;
  assembled.topRightCorner(p, s) = Q;
  assembled.bottomLeftCorner(s, p) = R;
  assembled.bottomRightCorner(s, s) = S;
  const Rat whole = det_bareiss(assembled);
  RatMatrix comp = S - R * solve_linear(P, Q);
  const Rat via_schur = dp * det_bareiss(comp);
  if (whole != via_schur)
    throw Error("schur: route disagreement (internal bug)");
  return whole;
}

IntMatrix standard_omega(int genus) {
  IntMatrix w = IntMatrix::Constant(2 * genus, 2 * genus, Int(0));
  for (int i = 0; i < genus; ++i) {
    w(i, genus + i) = 1;
    w(genus + i, i) = -1;
  }
  return w;
}

namespace {

struct CongruenceOps {
  IntMatrix* a;
  IntMatrix* n;
  IntMatrix* ninv;

  void swap(Eigen::Index i, Eigen::Index j) {
    a->col(i).swap(a->col(j));
    a->row(i).swap(a->row(j));
    n->col(i).swap(n->col(j));
    ninv->row(i).swap(ninv->row(j));
  }
  // col_dst -= q * col_src (with matching row op to stay congruent)
  void add(Eigen::Index dst, Eigen::Index src, const Int& q) {
    a->col(dst) -= q * a->col(src);
    a->row(dst) -= q * a->row(src);
    n->col(dst) -= q * n->col(src);
    ninv->row(src) += q * ninv->row(dst);
  }
  void negate(Eigen::Index i) {
    a->col(i) = -a->col(i);
    a->row(i) = -a->row(i);
    n->col(i) = -n->col(i);
    ninv->row(i) = -ninv->row(i);
  }
};

}  // namespace

SymplecticReduction symplectic_reduce(const IntMatrix& skew) {
  const Eigen::Index n = skew.rows();
  if (skew.cols() != n) throw BadIndex("symplectic_reduce: not square");
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (skew(i, j) != -skew(j, i))
        throw BadIndex("symplectic_reduce: not skew-symmetric");
  if (n % 2 != 0) throw NotUnimodular("symplectic_reduce: odd dimension");
  {
    Int d = det_bareiss(skew);
    if (d != 1 && d != -1)
      throw NotUnimodular("symplectic_reduce: form is not unimodular");
  }

  IntMatrix a = skew;
  IntMatrix nmat = int_identity(n);
  IntMatrix ninv = int_identity(n);
  CongruenceOps ops{&a, &nmat, &ninv};

  for (Eigen::Index s = 0; s < n; s += 2) {
    for (;;) {
      // Minimal nonzero |entry| in the trailing block, brought to (s, s+1).
      Eigen::Index pi = -1, pj = -1;
      Int best(0);
      for (Eigen::Index i = s; i < n; ++i)
        for (Eigen::Index j = i + 1; j < n; ++j) {
          if (a(i, j) == 0) continue;
          Int ab = a(i, j) < 0 ? Int(-a(i, j)) : a(i, j);
          if (pi < 0 || ab < best) {
            best = ab;
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) throw NotUnimodular("symplectic_reduce: degenerate form");
      if (pi != s) ops.swap(pi, s);
      if (pj == s) pj = pi;  // moved by the first swap
      if (pj != s + 1) ops.swap(pj, s + 1);

      // Clear rows s and s+1 beyond the pivot pair.
      bool exact = true;
      const Int d = a(s, s + 1);
      for (Eigen::Index k = s + 2; k < n; ++k) {
        if (a(s, k) != 0) {
          Int q = round_div(a(s, k), d);
          ops.add(k, s + 1, q);
          if (a(s, k) != 0) exact = false;
        }
        if (a(s + 1, k) != 0) {
          // a(s+1, s) = -d
          Int q = round_div(a(s + 1, k), Int(-d));
          ops.add(k, s, q);
          if (a(s + 1, k) != 0) exact = false;
        }
      }
      if (!exact) continue;  // smaller entries appeared; re-pivot

      Int dabs = d < 0 ? Int(-d) : d;
      if (dabs == 1) break;
      // Pull a non-divisible trailing entry into row s+1 and retry. For a
      // unimodular form this always happens until the pivot is +-1.
      bool pulled = false;
      for (Eigen::Index i = s + 2; i < n && !pulled; ++i)
        for (Eigen::Index j = s + 2; j < n && !pulled; ++j)
          if (a(i, j) % d != 0) {
            ops.add(s + 1, i, Int(-1));
            pulled = true;
          }
      if (!pulled)
        throw NotUnimodular("symplectic_reduce: pivot gcd exceeds 1");
    }
    if (a(s, s + 1) < 0) ops.negate(s + 1);
  }

  // Pairs (0,1),(2,3),... -> ordering (u_1..u_g, v_1..v_g).
  const Eigen::Index g = n / 2;
  IntMatrix perm = IntMatrix::Constant(n, n, Int(0));
  for (Eigen::Index t = 0; t < g; ++t) {
    perm(2 * t, t) = 1;
    perm(2 * t + 1, g + t) = 1;
  }
  SymplecticReduction out;
  out.N = nmat * perm;
  out.Ninv = perm.transpose() * ninv;
  return out;
}

}  // namespace dpm
