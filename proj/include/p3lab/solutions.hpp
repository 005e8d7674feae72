#pragma once

#include <array>
#include <string>
#include <vector>

#include "p3lab/ratfn.hpp"
#include "p3lab/systems.hpp"

namespace p3lab {

// A closed-form seed solution of one of the coupled systems.  To keep the
// algebra polynomial, the time variable is written as t = s^k for the root
// variable s (k = 1 for the rational solution, k = 2 for the sqrt-t
// solutions, k = 4 for the fourth-root solution); every phase component is a
// rational function of s and the surviving free parameters, with Gaussian
// rational coefficients.
struct ClosedFormSolution {
  SystemId sys;
  std::string id;
  int root_exponent = 1;       // k in t = s^k
  std::array<RatFn, 6> phase;  // (x, y, z, w, q, p) in s and free parameters
  std::vector<RatFn> params;   // parameter values, one per system parameter
};

// Known ids: d6_fixed, d6_alg1, d6_alg2, d52_alg.  Unknown id -> UsageError.
ClosedFormSolution seed_solution(const std::string& id);
std::vector<std::string> solution_ids();

struct SolutionReport {
  std::string id;
  // The parameter vector satisfies the system's affine constraint
  // identically in the free parameters.
  bool constraint_satisfied = false;
  // Component-by-component: (1/(k s^{k-1})) d/ds of the phase expression
  // minus the vector field evaluated on the solution is the zero rational
  // function.
  std::array<bool, 6> residual_zero{};
  std::array<std::string, 6> residuals;  // printed residuals ("0" on success)
  bool passed() const;
};

// Exact verification by substitution; the free parameters stay symbolic.
SolutionReport verify_solution(const ClosedFormSolution& sol);

// Build and verify every seed solution, in id order.
std::vector<SolutionReport> verify_all_solutions();

struct IntegralReport {
  int which = 0;         // 1..5
  bool conserved = false;  // dI/dt along the block flow vanishes identically
  bool has_scaling = false;  // a stated relation I = (scale) * H exists
  bool scaling_holds = false;
  bool passed() const { return conserved && (!has_scaling || scaling_holds); }
};

// Verifies that the first integral of the named one-block Hamiltonian has
// identically zero total time derivative along that flow, {I, H} + dI/dt = 0,
// and checks the stated scaling relation between the integral and the block
// Hamiltonian where one exists.  which outside 1..5 -> UsageError.
IntegralReport verify_first_integral(int which);

// The rational solution of the d6 system is the fixed point of the diagram
// involution that swaps the two outer node pairs: applying that roster map
// to the solution returns the identical solution (phase and parameters).
bool fixed_solution_is_pi1_fixed_point();

}  // namespace p3lab
