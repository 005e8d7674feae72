#include "p3lab/holomorphy.hpp"

#include <map>
#include <stdexcept>

#include "p3lab/varspace.hpp"

namespace p3lab {

namespace {

using expr::Qr;
using expr::V;

const std::vector<int>& phase_vars() {
  static const std::vector<int> vars = {VX, VY, VZ, VW, VQ, VP};
  return vars;
}

std::vector<RatFn> identity_images() {
  return {V(VX), V(VY), V(VZ), V(VW), V(VQ), V(VP)};
}

// Chart flipping one canonical pair: (u, v) -> (1/u, -(v u + a) u).
// This substitution is an involution, so it serves as its own inverse.
void flip_pair(Chart& ch, int u, int v, int a) {
  ch.forward[u] = Qr(1) / V(u);
  ch.forward[v] = -(V(v) * V(u) + V(a)) * V(u);
  ch.inverse[u] = ch.forward[u];
  ch.inverse[v] = ch.forward[v];
}

// D6's first chart: x -> 1/x, y -> -((y-1)x + a)x. The shift by 1 breaks the
// involution property; the inverse is x = 1/X, y = 1 - a X - Y X^2.
void flip_pair_shifted(Chart& ch, int u, int v, int a) {
  ch.forward[u] = Qr(1) / V(u);
  ch.forward[v] = -((V(v) - 1) * V(u) + V(a)) * V(u);
  ch.inverse[u] = Qr(1) / V(u);
  ch.inverse[v] = Qr(1) - V(a) * V(u) - V(v) * V(u) * V(u);
}

// Time-shifted flip: (u, v) -> (1/u, -((v - t)u + a)u); inverse
// v = t - a U - V U^2.
void flip_pair_time_shifted(Chart& ch, int u, int v, int a) {
  ch.forward[u] = Qr(1) / V(u);
  ch.forward[v] = -((V(v) - V(VT)) * V(u) + V(a)) * V(u);
  ch.inverse[u] = Qr(1) / V(u);
  ch.inverse[v] = V(VT) - V(a) * V(u) - V(v) * V(u) * V(u);
}

// Chart crossing two pairs: with pair (u, v) and neighbours (r, s) it sends
//   u -> -((u - r) v - a) v,  v -> 1/v,  s -> s + v,  r fixed.
// Inverse: v = 1/V, u = r + a V - U V^2, s = S - 1/V.
void crossing(Chart& ch, int u, int v, int r, int s, int a) {
  ch.forward[u] = -((V(u) - V(r)) * V(v) - V(a)) * V(v);
  ch.forward[v] = Qr(1) / V(v);
  ch.forward[s] = V(s) + V(v);
  ch.inverse[v] = Qr(1) / V(v);
  ch.inverse[u] = V(r) + V(a) * V(v) - V(u) * V(v) * V(v);
  ch.inverse[s] = V(s) - Qr(1) / V(v);
}

// Shear: u -> u + 2a/v + e/v^2 with v fixed (e = 1 or -t).
void shear(Chart& ch, int u, int v, int a, const RatFn& e) {
  ch.forward[u] = V(u) + Qr(2) * V(a) / V(v) + e / (V(v) * V(v));
  ch.inverse[u] = V(u) - Qr(2) * V(a) / V(v) - e / (V(v) * V(v));
}

Chart base_chart(SystemId sys, const std::string& id) {
  Chart ch;
  ch.sys = sys;
  ch.id = id;
  ch.forward = identity_images();
  ch.inverse = identity_images();
  return ch;
}

std::vector<Chart> build_charts(SystemId sys) {
  std::vector<Chart> out;
  auto add = [&](const std::string& id) -> Chart& {
    out.push_back(base_chart(sys, id));
    return out.back();
  };
  switch (sys) {
    case SystemId::D6: {
      flip_pair_shifted(add("r0"), VX, VY, VA0);
      flip_pair(add("r1"), VX, VY, VA1);
      crossing(add("r2"), VX, VY, VZ, VW, VA2);
      flip_pair(add("r3"), VZ, VW, VA3);
      flip_pair(add("r5"), VQ, VP, VA5);
      {
        Chart& r6 = add("r6");
        flip_pair_time_shifted(r6, VQ, VP, VA6);
        r6.target = ChartTarget::HPlusQ;
      }
      {
        Chart& r4 = add("r4");
        crossing(r4, VZ, VW, VQ, VP, VA4);
        r4.target = ChartTarget::Composite;
        r4.composite_parent = "r3";
      }
      break;
    }
    case SystemId::B5: {
      shear(add("r0"), VX, VY, VA0, Qr(1));
      crossing(add("r1"), VX, VY, VZ, VW, VA1);
      flip_pair(add("r2"), VZ, VW, VA2);
      flip_pair(add("r4"), VQ, VP, VA4);
      {
        Chart& r5 = add("r5");
        flip_pair_time_shifted(r5, VQ, VP, VA5);
        r5.target = ChartTarget::HPlusQ;
      }
      {
        Chart& r3 = add("r3");
        crossing(r3, VZ, VW, VQ, VP, VA3);
        r3.target = ChartTarget::Composite;
        r3.composite_parent = "r4";
      }
      break;
    }
    case SystemId::D52: {
      shear(add("r0"), VX, VY, VA0, Qr(1));
      crossing(add("r1"), VX, VY, VZ, VW, VA1);
      flip_pair(add("r2"), VZ, VW, VA2);
      {
        Chart& r4 = add("r4");
        shear(r4, VQ, VP, VA4, -V(VT));
        r4.target = ChartTarget::HPlusInvP;
      }
      {
        Chart& r3 = add("r3");
        crossing(r3, VZ, VW, VQ, VP, VA3);
        r3.target = ChartTarget::Composite;
        r3.composite_parent = "r2";
      }
      break;
    }
    case SystemId::D51:
      break;  // no chart list is stated for this system
  }
  return out;
}

std::map<int, RatFn> bind_of(const std::vector<RatFn>& images) {
  std::map<int, RatFn> bind;
  for (std::size_t i = 0; i < images.size(); ++i) {
    bind.emplace(phase_vars()[i], images[i]);
  }
  return bind;
}

bool composes_to_identity(const std::vector<RatFn>& first,
                          const std::vector<RatFn>& second) {
  const auto bind = bind_of(first);
  for (std::size_t i = 0; i < second.size(); ++i) {
    if (second[i].substitute(bind) != V(phase_vars()[i])) return false;
  }
  return true;
}

bool polynomial_in_phase(const RatFn& f) {
  return f.denominator_free_of(phase_vars());
}

}  // namespace

const std::vector<Chart>& charts(SystemId sys) {
  static std::map<SystemId, std::vector<Chart>> cache;
  auto it = cache.find(sys);
  if (it == cache.end()) it = cache.emplace(sys, build_charts(sys)).first;
  return it->second;
}

const Chart& chart(SystemId sys, const std::string& chart_id) {
  for (const Chart& ch : charts(sys)) {
    if (ch.id == chart_id) return ch;
  }
  throw UsageError("unknown chart '" + chart_id + "' for system " +
                   system_name(sys));
}

RatFn express_in_chart(const Chart& ch, const RatFn& expr) {
  return expr.substitute(bind_of(ch.inverse));
}

ChartReport check_polynomiality(SystemId sys, const std::string& chart_id) {
  const Chart& ch = chart(sys, chart_id);
  const CoupledSystem& cs = coupled_system(sys);

  ChartReport rep;
  rep.chart_id = ch.id;
  rep.round_trip_identity = composes_to_identity(ch.inverse, ch.forward) &&
                            composes_to_identity(ch.forward, ch.inverse);

  RatFn target;
  switch (ch.target) {
    case ChartTarget::H:
      rep.expression = ch.id + "(H)";
      target = express_in_chart(ch, cs.H);
      break;
    case ChartTarget::HPlusQ:
      rep.expression = ch.id + "(H + q)";
      target = express_in_chart(ch, cs.H + V(VQ));
      break;
    case ChartTarget::HPlusInvP:
      rep.expression = ch.id + "(H + 1/p)";
      target = express_in_chart(ch, cs.H + Qr(1) / V(VP));
      break;
    case ChartTarget::Composite: {
      rep.expression = ch.id + "(" + ch.composite_parent + "(H))";
      const Chart& parent = chart(sys, ch.composite_parent);
      target = express_in_chart(ch, express_in_chart(parent, cs.H));
      break;
    }
  }
  // Polynomiality holds on the constrained parameter space: phase variables
  // in the denominator may be carried by a numerator factor that is a
  // multiple of the parameter relation, so reduce first.
  rep.polynomial = polynomial_in_phase(cs.constraint.reduce(target));
  return rep;
}

std::vector<ChartReport> check_all_charts(SystemId sys) {
  std::vector<ChartReport> out;
  for (const Chart& ch : charts(sys)) {
    out.push_back(check_polynomiality(sys, ch.id));
  }
  return out;
}

bool uncorrected_hamiltonian_is_polynomial(SystemId sys,
                                           const std::string& chart_id) {
  const Chart& ch = chart(sys, chart_id);
  const CoupledSystem& cs = coupled_system(sys);
  return polynomial_in_phase(
      cs.constraint.reduce(express_in_chart(ch, cs.H)));
}

}  // namespace p3lab
