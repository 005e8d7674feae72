#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace p3lab {

// Raised when a computation leaves the mathematical domain (division by zero,
// substitution that lands on a pole, constraint with a zero pivot, ...).
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised on internal inconsistencies (failed exact division, broken
// invariants). These indicate bugs, not bad input.
struct AlgebraError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a caller asks for something that does not exist (unknown
// system, chart, solution, or transformation name).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a verification that must hold for the computation to make
// sense fails mid-stream (e.g. a series limit that should exist does not),
// so no meaningful report can be produced.
struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Element of Q(i): re + im*i with exact rational components.
class GaussianRational {
 public:
  GaussianRational() : re_(0), im_(0) {}
  GaussianRational(long n) : re_(n), im_(0) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(mpq_class re) : re_(std::move(re)), im_(0) {}  // NOLINT
  GaussianRational(mpq_class re, mpq_class im)
      : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational ratio(long num, long den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    mpq_class r(num, den);
    r.canonicalize();
    return GaussianRational(std::move(r));
  }
  static GaussianRational imag_unit() { return GaussianRational(0, 1); }
  static GaussianRational imag_ratio(long num, long den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    mpq_class r(num, den);
    r.canonicalize();
    return GaussianRational(mpq_class(0), std::move(r));
  }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational operator-() const { return {-re_, -im_}; }

  GaussianRational operator+(const GaussianRational& o) const {
    return {re_ + o.re_, im_ + o.im_};
  }
  GaussianRational operator-(const GaussianRational& o) const {
    return {re_ - o.re_, im_ - o.im_};
  }
  GaussianRational operator*(const GaussianRational& o) const {
    return {re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_};
  }
  GaussianRational operator/(const GaussianRational& o) const {
    return *this * o.inv();
  }
  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    *this = *this * o;
    return *this;
  }

  bool operator==(const GaussianRational& o) const {
    return re_ == o.re_ && im_ == o.im_;
  }
  bool operator!=(const GaussianRational& o) const { return !(*this == o); }

  GaussianRational conj() const { return {re_, -im_}; }
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational inv() const {
    mpq_class n = norm();
    if (sgn(n) == 0) throw DomainError("division by zero in Q(i)");
    return {re_ / n, -im_ / n};
  }

  // Scale by an integer (cheap path used by differentiation).
  GaussianRational scaled(long k) const { return {re_ * k, im_ * k}; }

  std::string str() const {
    auto q_str = [](const mpq_class& q) { return q.get_str(); };
    if (is_zero()) return "0";
    if (sgn(im_) == 0) return q_str(re_);
    std::string imag = (im_ == 1) ? "i" : (im_ == -1 ? "-i" : q_str(im_) + "*i");
    if (sgn(re_) == 0) return imag;
    std::string s = "(" + q_str(re_);
    if (sgn(im_) > 0) s += "+";
    s += imag + ")";
    return s;
  }

 private:
  mpq_class re_, im_;
};

}  // namespace p3lab
