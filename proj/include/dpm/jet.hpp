#ifndef DPM_JET_HPP
#define DPM_JET_HPP

#include "dpm/numeric.hpp"

namespace dpm {

// Polynomial in m variables truncated past total degree 2, stored as
//   value + grad^t * t + t^t * quad * t        (quad symmetric).
// This is a commutative ring with zero divisors (t_i * t_j * t_k = 0), so
// determinants over it must be division-free.
class Jet2 {
 public:
  Jet2() : Jet2(0, Rat(0)) {}
  Jet2(int vars, const Rat& value)
      : value_(value),
        grad_(RatVector::Constant(vars, Rat(0))),
        quad_(RatMatrix::Constant(vars, vars, Rat(0))) {}

  static Jet2 constant(int vars, const Rat& value) { return Jet2(vars, value); }
  static Jet2 variable(int vars, int i) {
    Jet2 j(vars, Rat(0));
    j.grad_(i) = 1;
    return j;
  }
  // (1 + t_i)^p truncated to degree 2, valid for any integer p
  // (negative p expands the reciprocal, e.g. p = -1 gives 1 - t + t^2).
  static Jet2 one_plus_var_pow(int vars, int i, long p) {
    Jet2 j(vars, Rat(1));
    j.grad_(i) = p;
    j.quad_(i, i) = Rat(Int(p) * Int(p - 1), 2);
    return j;
  }

  int vars() const { return static_cast<int>(grad_.size()); }
  const Rat& value() const { return value_; }
  const RatVector& grad() const { return grad_; }
  const RatMatrix& quad() const { return quad_; }
  // Hessian of the represented polynomial at the origin.
  RatMatrix hessian() const { return 2 * quad_; }

  friend Jet2 operator+(const Jet2& a, const Jet2& b) {
    Jet2 r(a.vars(), a.value_ + b.value_);
    r.grad_ = a.grad_ + b.grad_;
    r.quad_ = a.quad_ + b.quad_;
    return r;
  }
  friend Jet2 operator-(const Jet2& a, const Jet2& b) {
    Jet2 r(a.vars(), a.value_ - b.value_);
    r.grad_ = a.grad_ - b.grad_;
    r.quad_ = a.quad_ - b.quad_;
    return r;
  }
  friend Jet2 operator*(const Jet2& a, const Jet2& b) {
    Jet2 r(a.vars(), a.value_ * b.value_);
    r.grad_ = b.value_ * a.grad_ + a.value_ * b.grad_;
    r.quad_ = b.value_ * a.quad_ + a.value_ * b.quad_;
    RatMatrix cross = a.grad_ * b.grad_.transpose();
    r.quad_ += (cross + cross.transpose()) / Rat(2);
    return r;
  }
  Jet2 operator-() const { return Jet2(vars(), Rat(0)) - *this; }

  friend bool operator==(const Jet2& a, const Jet2& b) {
    return a.value_ == b.value_ && exact_equal(a.grad_, b.grad_) &&
           exact_equal(a.quad_, b.quad_);
  }

 private:
  Rat value_;
  RatVector grad_;
  RatMatrix quad_;
};

}  // namespace dpm

#endif
