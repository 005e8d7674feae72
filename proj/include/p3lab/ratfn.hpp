#pragma once

#include <map>
#include <string>
#include <vector>

#include "p3lab/mpoly.hpp"

namespace p3lab {

// Rational function over Q(i) in canonical form: numerator and denominator
// coprime, denominator graded-lex monic and nonzero, and den == 1 whenever
// num == 0. Equality of canonical forms is therefore exact equality of
// rational functions.
class RatFn {
 public:
  RatFn() : num_(MPoly::zero()), den_(MPoly::one()) {}
  RatFn(MPoly n) : num_(std::move(n)), den_(MPoly::one()) {}  // NOLINT
  RatFn(MPoly n, MPoly d) : num_(std::move(n)), den_(std::move(d)) {
    normalize();
  }

  static RatFn variable(int v) { return RatFn(MPoly::variable(v)); }
  static RatFn constant(GaussianRational c) {
    return RatFn(MPoly::constant(std::move(c)));
  }

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  GaussianRational constant_value() const {
    return num_.constant_value() / den_.constant_value();
  }

  bool uses(int v) const { return num_.uses(v) || den_.uses(v); }
  // True if the denominator involves none of the given variables.
  bool denominator_free_of(const std::vector<int>& vars) const {
    for (int v : vars)
      if (den_.uses(v)) return false;
    return true;
  }

  RatFn operator-() const;
  RatFn operator+(const RatFn& o) const;
  RatFn operator-(const RatFn& o) const;
  RatFn operator*(const RatFn& o) const;
  RatFn operator/(const RatFn& o) const;
  bool operator==(const RatFn& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RatFn& o) const { return !(*this == o); }

  RatFn pow(int k) const;  // negative exponents allowed

  RatFn derivative(int v) const;

  // Simultaneous substitution: every bound variable is replaced by its image
  // in the *original* expression. Throws DomainError if the denominator
  // collapses to zero.
  RatFn substitute(const std::map<int, RatFn>& bind) const;

  std::string str() const;

 private:
  void normalize();
  MPoly num_, den_;
};

// Convenience mixed-mode operators for readable formula transcription.
inline RatFn operator+(const RatFn& a, long b) {
  return a + RatFn::constant(GaussianRational(b));
}
inline RatFn operator+(long a, const RatFn& b) {
  return RatFn::constant(GaussianRational(a)) + b;
}
inline RatFn operator-(const RatFn& a, long b) {
  return a - RatFn::constant(GaussianRational(b));
}
inline RatFn operator-(long a, const RatFn& b) {
  return RatFn::constant(GaussianRational(a)) - b;
}
inline RatFn operator*(const RatFn& a, long b) {
  return a * RatFn::constant(GaussianRational(b));
}
inline RatFn operator*(long a, const RatFn& b) {
  return RatFn::constant(GaussianRational(a)) * b;
}
inline RatFn operator/(const RatFn& a, long b) {
  return a / RatFn::constant(GaussianRational(b));
}
inline RatFn operator/(long a, const RatFn& b) {
  return RatFn::constant(GaussianRational(a)) / b;
}

// Affine-linear relation m·v = 1 on a parameter block, with one designated
// variable eliminated. Reduction substitutes the solved expression for the
// eliminated variable, giving a normal form for equality modulo the relation.
class ConstraintIdeal {
 public:
  ConstraintIdeal(MPoly relation, int elim_var);

  const MPoly& relation() const { return relation_; }
  int eliminated_var() const { return elim_; }
  const RatFn& solved() const { return solved_; }

  RatFn reduce(const RatFn& f) const;
  bool zero_mod(const RatFn& f) const { return reduce(f).is_zero(); }
  bool equal_mod(const RatFn& a, const RatFn& b) const {
    return reduce(a) == reduce(b);
  }

 private:
  MPoly relation_;
  int elim_;
  RatFn solved_;
};

namespace expr {
inline RatFn V(int v) { return RatFn::variable(v); }
inline RatFn Qr(long n, long d = 1) {
  return RatFn::constant(GaussianRational::ratio(n, d));
}
inline RatFn Ir(long n = 1, long d = 1) {
  return RatFn::constant(GaussianRational::imag_ratio(n, d));
}
inline RatFn pow(const RatFn& f, int k) { return f.pow(k); }
}  // namespace expr

}  // namespace p3lab
