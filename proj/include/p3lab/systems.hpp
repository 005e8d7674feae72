#pragma once

#include <array>
#include <string>
#include <vector>

#include "p3lab/ratfn.hpp"

namespace p3lab {

// The four coupled 6-dimensional Hamiltonian systems, named by the affine
// root system of their symmetry group.
enum class SystemId { D6, B5, D52, D51 };

std::string system_name(SystemId id);

struct CoupledSystem {
  SystemId id;
  std::string name;
  RatFn H;
  ConstraintIdeal constraint;
  std::vector<int> params;  // parameter variables, in index order
};

const CoupledSystem& coupled_system(SystemId id);

// d/dt of (x, y, z, w, q, p) in canonical order.
using PhaseField = std::array<RatFn, 6>;

// Hamilton equations with du/dt = +dH/dv, dv/dt = -dH/du for each of the
// symplectic pairs (x,y), (z,w), (q,p).
PhaseField vector_field(const CoupledSystem& sys);
PhaseField vector_field(SystemId id);

// The Hamiltonian reassembled from its one-block pieces plus coupling terms.
// Agrees with coupled_system(id).H exactly for D6, B5 and D52.
RatFn decomposed_hamiltonian(SystemId id);

// ---------------------------------------------------------------------------
// One-block (single symplectic pair) Hamiltonians.
// ---------------------------------------------------------------------------

enum class BlockId {
  IIIGamma,       // [u^2 v(v-1) + u((g0+g2)v - g0) + tv] / t        params {g0, g2}
  IIIGammaTilde,  // [u^2 v(v-t) - u((g2-g0)v + g0 t) + v] / t       params {g0, g2}
  D7,             // [u^2v^2 + b1 uv + u + tv] / t                   params {b1}
  H1,             // [u^2v^2 + al uv + tv] / t                       params {al}
  H2,             // [u^2v^2 - tu^2v + al uv + bt tu] / t            params {al, bt}
  H3,             // [u^2v^2 + al uv + u] / (2t)                     params {al}
  H4,             // [u^2v^2 + al uv] / (2t)                         params {al}
  H5,             // [u^2v^2 + al uv - tu] / (2t)                    params {al}
  K1,             // [u^2v^2 + (al-1) uv + v] / t                    params {al}
  K2,             // [u^2v^2 + uv^2 - (al+1) uv + bt v] / t          params {al, bt}
  K5,             // [u^2v^2 + al uv - u] / (2t)                     params {al}
};

// Hamiltonian of a block written in the symplectic pair (uvar, vvar) with
// the given parameter expressions.
RatFn block_hamiltonian(BlockId id, int uvar, int vvar,
                        const std::vector<RatFn>& par);

// (du/dt, dv/dt) = (+dH/dv, -dH/du) for an arbitrary Hamiltonian.
std::array<RatFn, 2> hamilton_pair_field(const RatFn& H, int uvar, int vvar);
std::array<RatFn, 2> block_field(BlockId id, int uvar, int vvar,
                                 const std::vector<RatFn>& par);

// First integrals of the five integrable blocks (K1, K2, H3, H4, K5), in the
// canonical pair (q, p) with parameters (al, bt). which = 1..5.
RatFn first_integral(int which);
// The block whose flow conserves first_integral(which).
BlockId first_integral_block(int which);

// Solve an affine-linear equation expr == 0 for `var` (expr = A*var + B with
// A, B free of var); throws DomainError if expr is not of that shape.
RatFn solve_linear(const RatFn& expr, int var);

// ---------------------------------------------------------------------------
// Scalar reduction of the D7-type block: q = tau*y, t = tau^2 turns the
// Hamiltonian pair into one second-order scalar equation
//   y'' = y'^2/y - y'/tau + (a y^2 + b)/tau + c y^3 + d/y
// for y(tau). The reduction eliminates v, solves for y'' and extracts the
// four coefficients.
// ---------------------------------------------------------------------------

struct ScalarReduction {
  bool matches_template = false;  // solved y'' has exactly the template shape
  RatFn a, b, c, d;               // extracted coefficients (b involves b1)
};
ScalarReduction scalar_reduction_of_d7_block();

}  // namespace p3lab
