#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "p3lab/ratfn.hpp"
#include "p3lab/systems.hpp"

namespace p3lab {

using Complex = std::complex<double>;
using State6 = std::array<Complex, 6>;

// A denominator magnitude dropped below the configured pole guard.
struct PoleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The step controller pushed the step size below the configured minimum.
struct StepUnderflow : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NumericConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  double max_step = 0.5;
  double min_step = 1e-13;
  double pole_guard = 1e-9;
};

// Exact rational components compiled once into a flat evaluation form: every
// variable that is not dynamic is folded into the term coefficients, so the
// per-step cost is a sparse polynomial evaluation over the dynamic variables
// with precomputed power tables.
class CompiledField {
 public:
  // `comps` may use dynamic variables and keys of `constants` only.
  CompiledField(const std::vector<RatFn>& comps, std::vector<int> dynamic_vars,
                const std::map<int, Complex>& constants, double pole_guard);

  std::size_t dim() const { return comps_.size(); }
  std::size_t arity() const { return dynamic_.size(); }

  // point.size() == arity(); throws PoleError when |denominator| < guard.
  std::vector<Complex> eval(const std::vector<Complex>& point) const;

 private:
  struct Term {
    Complex c;
    std::vector<std::uint16_t> e;  // exponents over the dynamic variables
  };
  struct Rat {
    std::vector<Term> num, den;
  };

  Complex eval_terms(const std::vector<Term>& ts) const;

  std::vector<Rat> comps_;
  std::vector<int> dynamic_;
  std::vector<std::uint16_t> max_deg_;  // per dynamic variable
  mutable std::vector<std::vector<Complex>> powers_;
  double pole_guard_;
};

struct Trajectory {
  std::vector<double> times;          // strictly monotone, starting at t0
  std::vector<State6> states;
  long accepted = 0;
  long rejected = 0;
};

// Adaptive embedded Runge-Kutta (Dormand-Prince 4/5) on the complex
// six-dimensional flow.  t0 and t1 must be nonzero and of the same sign:
// t = 0 is a fixed singularity of every Hamiltonian here.
Trajectory integrate(SystemId sys, const std::vector<Complex>& params,
                     const State6& initial, double t0, double t1,
                     const NumericConfig& cfg = {});

// One row per trajectory point (the initial state, then each accepted step).
std::string trajectory_csv(const Trajectory& tr);

struct CommuteReport {
  std::string map_name;
  double discrepancy = std::numeric_limits<double>::infinity();
  double threshold = 1e-6;
  bool passed() const { return discrepancy < threshold; }
};

// Two-path comparison: integrating and then applying the named roster map
// must agree with applying the map first and integrating the transformed
// data (with the map's parameter action, and the reflected time path when
// the map sends t to -t).  map_name "id" checks integrator reproducibility.
CommuteReport symmetry_commute_check(SystemId sys, const std::string& map_name,
                                     const std::vector<Complex>& params,
                                     const State6& initial, double t0,
                                     double t1, const NumericConfig& cfg = {});

struct DriftReport {
  int which = 0;  // first-integral index, 1..5
  double drift = std::numeric_limits<double>::infinity();
  double threshold = 1e-8;
  long samples = 0;
  bool passed() const { return drift < threshold; }
};

// Integrates the one-block flow that conserves first_integral(which) and
// reports the maximum relative drift of the integral along the trajectory.
// params holds the block parameters (one entry, or two for the block with a
// second parameter); initial is the (q, p) start point.
DriftReport integral_drift_check(int which, const std::vector<Complex>& params,
                                 const std::array<Complex, 2>& initial,
                                 double t0, double t1,
                                 const NumericConfig& cfg = {});

}  // namespace p3lab
