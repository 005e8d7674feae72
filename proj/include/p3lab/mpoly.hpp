#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "p3lab/gaussian.hpp"
#include "p3lab/varspace.hpp"

namespace p3lab {

// Monomial in the global variable space, with cached total degree so that
// graded-lex comparisons are cheap.
struct Mono {
  std::uint32_t deg = 0;
  std::array<std::uint16_t, NVARS> e{};

  static Mono unit() { return Mono{}; }
  static Mono of_var(int v, int k = 1);

  bool is_unit() const { return deg == 0; }
  Mono times(const Mono& o) const;
  bool divides(const Mono& o) const;  // true if *this | o
  Mono quotient_of(const Mono& o) const;  // o / *this (requires divides(o))
  bool operator==(const Mono& o) const { return deg == o.deg && e == o.e; }
};

// Graded-lex comparison: returns +1 if a > b, 0 if equal, -1 if a < b.
// Total degree decides first; ties break lexicographically with lower
// variable index more significant and higher exponent first.
int mono_cmp(const Mono& a, const Mono& b);

// Sparse multivariate polynomial over Q(i). Terms are kept graded-lex
// descending, with unique monomials and nonzero coefficients.
class MPoly {
 public:
  struct Term {
    Mono m;
    GaussianRational c;
  };

  MPoly() = default;

  static MPoly zero() { return MPoly(); }
  static MPoly one() { return constant(GaussianRational(1)); }
  static MPoly constant(GaussianRational c);
  static MPoly variable(int v, int power = 1);
  static MPoly monomial(Mono m, GaussianRational c);
  // Sorts, combines duplicates, and drops zeros.
  static MPoly from_terms(std::vector<Term> ts);

  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  std::size_t num_terms() const { return t_.size(); }
  const std::vector<Term>& terms() const { return t_; }

  const Mono& leading_mono() const;
  const GaussianRational& leading_coeff() const;
  GaussianRational constant_value() const;  // requires is_constant()
  GaussianRational coeff_at(const Mono& m) const;

  int degree(int v) const;
  std::uint32_t total_degree() const;
  bool uses(int v) const;
  std::vector<int> support() const;

  MPoly operator-() const;
  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  bool operator==(const MPoly& o) const;
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  MPoly mul_coeff(const GaussianRational& c) const;
  MPoly mul_mono(const Mono& m, const GaussianRational& c) const;
  MPoly pow(unsigned k) const;

  MPoly derivative(int v) const;
  MPoly monic() const;  // divide by the leading coefficient

  // Exact division: returns *this / g if g divides exactly, nullopt otherwise.
  std::optional<MPoly> try_divide(const MPoly& g) const;
  MPoly divexact(const MPoly& g) const;  // throws AlgebraError if not exact

  // Componentwise minimum of all exponent vectors (unit for the zero poly).
  Mono monomial_content() const;
  MPoly divide_mono(const Mono& m) const;  // divide by a monomial factor

  // Coefficients of *this viewed as a univariate polynomial in v; entry k is
  // the coefficient of v^k (an MPoly not involving v). Empty for zero.
  std::vector<MPoly> coeffs_in(int v) const;
  static MPoly from_coeffs(int v, const std::vector<MPoly>& cs);

  std::string str() const;

 private:
  std::vector<Term> t_;
};

// Polynomial GCD over Q(i), normalized monic in graded-lex order.
// Uses modular degree probes to dispose of trivial cases quickly and a
// subresultant polynomial remainder sequence for the nontrivial ones; the
// result is certified by exact trial division.
MPoly poly_gcd(const MPoly& f, const MPoly& g);

}  // namespace p3lab
