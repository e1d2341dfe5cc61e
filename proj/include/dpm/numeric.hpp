#ifndef DPM_NUMERIC_HPP
#define DPM_NUMERIC_HPP

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <string>

namespace dpm {

// Exact scalars. All theorem checks run over these; no floating point is
// involved anywhere except clearly-labeled log/report fields.
using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

using RatMatrix = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;

inline RatMatrix rat_identity(Eigen::Index n) {
  RatMatrix m = RatMatrix::Constant(n, n, Rat(0));
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

inline IntMatrix int_identity(Eigen::Index n) {
  IntMatrix m = IntMatrix::Constant(n, n, Int(0));
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

inline RatMatrix to_rat(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
  return r;
}

template <class D1, class D2>
bool exact_equal(const Eigen::MatrixBase<D1>& a,
                 const Eigen::MatrixBase<D2>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

template <class Derived>
bool all_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) return false;
  return true;
}

// Serializes as "p" for integers and "p/q" otherwise; the parser accepts both.
std::string rat_to_string(const Rat& r);

// Parses "p" or "p/q" (q > 0 after normalization). Returns false on syntax
// error or zero denominator.
bool rat_from_string(const std::string& s, Rat& out);

// Approximate value for report-only log fields.
double rat_to_double(const Rat& r);

std::string matrix_to_string(const RatMatrix& m);
std::string matrix_to_string(const IntMatrix& m);

}  // namespace dpm

#endif
