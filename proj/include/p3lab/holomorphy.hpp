#pragma once

#include <string>
#include <vector>

#include "p3lab/systems.hpp"

namespace p3lab {

// Expression that a boundary chart must render polynomial: the Hamiltonian
// itself, the Hamiltonian with a correction term (+q or +1/p), or the
// already-transformed Hamiltonian of a parent chart (second-stage charts).
enum class ChartTarget { H, HPlusQ, HPlusInvP, Composite };

// One boundary coordinate chart of a coupled system. Forward images express
// the new coordinates in terms of the old ones; inverse images express the
// old coordinates in terms of the new ones (same six variable slots, time is
// fixed by every chart).
struct Chart {
  SystemId sys;
  std::string id;  // "r0" .. "r6"
  std::vector<RatFn> forward;  // size 6, indexed by VX..VP
  std::vector<RatFn> inverse;  // size 6, indexed by VX..VP
  ChartTarget target = ChartTarget::H;
  std::string composite_parent;  // set iff target == Composite
};

// Charts of a system in the order their conditions are stated (second-stage
// chart last). D6: r0,r1,r2,r3,r5,r6,r4 — B5: r0,r1,r2,r4,r5,r3 —
// D52: r0,r1,r2,r4,r3.
const std::vector<Chart>& charts(SystemId sys);

// Single chart; throws UsageError for an unknown system/chart id.
const Chart& chart(SystemId sys, const std::string& chart_id);

// expr rewritten in the chart's coordinates (i.e. expr composed with the
// inverse chart map). For second-stage charts the caller is expected to pass
// an expression already living in the parent chart.
RatFn express_in_chart(const Chart& ch, const RatFn& expr);

struct ChartReport {
  std::string chart_id;
  std::string expression;     // e.g. "r6(H + q)", "r4(r3(H))"
  bool round_trip_identity;   // fwd∘inv == id and inv∘fwd == id
  bool polynomial;            // target expression polynomial in the chart
};

// Verifies the stated polynomiality condition for one chart (and that the
// chart substitution is exactly invertible).
ChartReport check_polynomiality(SystemId sys, const std::string& chart_id);

// All charts of a system, in charts(sys) order.
std::vector<ChartReport> check_all_charts(SystemId sys);

// Polynomiality of the *uncorrected* Hamiltonian in a chart whose stated
// condition carries a correction term. Expected false for D6's r6 (the
// stated condition needs H + q); used as a sensitivity control.
bool uncorrected_hamiltonian_is_polynomial(SystemId sys,
                                           const std::string& chart_id);

}  // namespace p3lab
