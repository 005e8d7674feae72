#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace p3lab {

// Global variable table. Every polynomial in the project lives in this single
// exponent space; each module just uses the slots it needs. Keeping one fixed
// order gives an unambiguous graded-lex term order across the whole code base.
enum Var : int {
  VX = 0,  // phase coordinates of the 6-dimensional systems
  VY,
  VZ,
  VW,
  VQ,
  VP,
  VT,    // time
  VS,    // root parameter for closed-form seeds, t = s^k
  VEPS,  // degeneration parameter
  VTAU,  // auxiliary time for the scalar reduction, t = tau^2
  VU1,   // y'  placeholder in the scalar reduction
  VU2,   // y'' placeholder in the scalar reduction
  VA0,   // root-type parameters alpha_0 .. alpha_6
  VA1,
  VA2,
  VA3,
  VA4,
  VA5,
  VA6,
  VB0,  // target-system parameters A_0 .. A_5 used by the degenerations
  VB1,
  VB2,
  VB3,
  VB4,
  VB5,
  VBE0,  // beta_0, beta_1 for the two-node action on the single-block system
  VBE1,
  VG0,  // gamma_0, gamma_2 for the one-block Hamiltonian templates
  VG2,
  VAL,  // generic subsystem parameters (alpha, beta)
  VBT,
  NVARS
};

constexpr std::array<std::string_view, NVARS> kVarNames = {
    "x",  "y",  "z",  "w",  "q",  "p",  "t",  "s",  "eps", "tau", "y1",
    "y2", "a0", "a1", "a2", "a3", "a4", "a5", "a6", "A0",  "A1",  "A2",
    "A3", "A4", "A5", "b0", "b1", "g0", "g2", "al", "bt",
};

inline std::string_view var_name(int v) {
  return kVarNames[static_cast<std::size_t>(v)];
}

// Phase variables of the coupled systems, in canonical order.
constexpr std::array<int, 6> kPhaseVars = {VX, VY, VZ, VW, VQ, VP};

}  // namespace p3lab
