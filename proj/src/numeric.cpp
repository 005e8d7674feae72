#include "p3lab/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>

#include "p3lab/weyl.hpp"

namespace p3lab {

using namespace expr;

namespace {

Complex to_complex(const GaussianRational& g) {
  return Complex(g.re().get_d(), g.im().get_d());
}

Complex ipow(Complex b, unsigned k) {
  Complex r(1.0, 0.0);
  while (k) {
    if (k & 1) r *= b;
    b *= b;
    k >>= 1;
  }
  return r;
}

const std::array<int, 6>& phase6() {
  static const std::array<int, 6> v = {VX, VY, VZ, VW, VQ, VP};
  return v;
}

RosterId roster_of(SystemId sys) {
  switch (sys) {
    case SystemId::D6:
      return RosterId::D6;
    case SystemId::B5:
      return RosterId::B5;
    case SystemId::D52:
      return RosterId::D52;
    case SystemId::D51:
      return RosterId::D51;
  }
  throw UsageError("unknown system id");
}

}  // namespace

// ---------------------------------------------------------------------------
// CompiledField
// ---------------------------------------------------------------------------

CompiledField::CompiledField(const std::vector<RatFn>& comps,
                             std::vector<int> dynamic_vars,
                             const std::map<int, Complex>& constants,
                             double pole_guard)
    : dynamic_(std::move(dynamic_vars)), pole_guard_(pole_guard) {
  std::array<int, NVARS> slot;
  slot.fill(-1);
  for (std::size_t j = 0; j < dynamic_.size(); ++j) slot[dynamic_[j]] = int(j);
  max_deg_.assign(dynamic_.size(), 0);

  auto compile_poly = [&](const MPoly& P) {
    std::vector<Term> out;
    out.reserve(P.terms().size());
    for (const auto& t : P.terms()) {
      Term ct;
      ct.c = to_complex(t.c);
      ct.e.assign(dynamic_.size(), 0);
      for (int v = 0; v < NVARS; ++v) {
        const unsigned k = t.m.e[v];
        if (k == 0) continue;
        if (slot[v] >= 0) {
          ct.e[slot[v]] = std::uint16_t(k);
          max_deg_[slot[v]] = std::max<std::uint16_t>(max_deg_[slot[v]],
                                                      std::uint16_t(k));
        } else {
          auto it = constants.find(v);
          if (it == constants.end())
            throw UsageError(std::string("compiled expression uses unbound "
                                         "variable ") +
                             std::string(var_name(v)));
          ct.c *= ipow(it->second, k);
        }
      }
      out.push_back(std::move(ct));
    }
    return out;
  };

  comps_.reserve(comps.size());
  for (const RatFn& f : comps)
    comps_.push_back(Rat{compile_poly(f.num()), compile_poly(f.den())});

  powers_.resize(dynamic_.size());
  for (std::size_t j = 0; j < dynamic_.size(); ++j)
    powers_[j].resize(std::size_t(max_deg_[j]) + 1, Complex(1.0, 0.0));
}

Complex CompiledField::eval_terms(const std::vector<Term>& ts) const {
  Complex acc(0.0, 0.0);
  for (const Term& t : ts) {
    Complex v = t.c;
    for (std::size_t j = 0; j < t.e.size(); ++j)
      if (t.e[j]) v *= powers_[j][t.e[j]];
    acc += v;
  }
  return acc;
}

std::vector<Complex> CompiledField::eval(
    const std::vector<Complex>& point) const {
  if (point.size() != dynamic_.size())
    throw UsageError("evaluation point has the wrong arity");
  for (std::size_t j = 0; j < point.size(); ++j) {
    powers_[j][0] = Complex(1.0, 0.0);
    for (std::size_t k = 1; k < powers_[j].size(); ++k)
      powers_[j][k] = powers_[j][k - 1] * point[j];
  }
  std::vector<Complex> out(comps_.size());
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    const Complex den = eval_terms(comps_[i].den);
    if (std::abs(den) < pole_guard_)
      throw PoleError("denominator magnitude " + std::to_string(std::abs(den)) +
                      " under the pole guard");
    out[i] = eval_terms(comps_[i].num) / den;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Dormand-Prince 4(5) core on a dynamic-size complex state.
// ---------------------------------------------------------------------------

namespace {

struct StepRecord {
  std::vector<double> times;
  std::vector<std::vector<Complex>> states;
  long accepted = 0, rejected = 0;
};

// field arity = state dim + 1; the time is appended as the last coordinate.
StepRecord rk45(const CompiledField& F, std::vector<Complex> y, double t0,
                double t1, const NumericConfig& cfg) {
  if (!(cfg.min_step > 0) || !(cfg.min_step <= cfg.max_step) ||
      !(cfg.rel_tol > 0) || !(cfg.abs_tol > 0))
    throw UsageError("invalid numeric configuration");

  static const double c[7] = {0, 1. / 5, 3. / 10, 4. / 5, 8. / 9, 1., 1.};
  static const double a[7][6] = {
      {},
      {1. / 5},
      {3. / 40, 9. / 40},
      {44. / 45, -56. / 15, 32. / 9},
      {19372. / 6561, -25360. / 2187, 64448. / 6561, -212. / 729},
      {9017. / 3168, -355. / 33, 46732. / 5247, 49. / 176, -5103. / 18656},
      {35. / 384, 0., 500. / 1113, 125. / 192, -2187. / 6784, 11. / 84}};
  // Fifth-order weights are row a[6] (FSAL); e[] is the embedded difference.
  static const double e[7] = {71. / 57600,       0., -71. / 16695, 71. / 1920,
                              -17253. / 339200, 22. / 525, -1. / 40};

  const std::size_t n = y.size();
  StepRecord rec;
  rec.times.push_back(t0);
  rec.states.push_back(y);
  if (t0 == t1) return rec;

  const double dir = (t1 > t0) ? 1.0 : -1.0;
  double t = t0;
  double h = dir * std::min(cfg.max_step, std::abs(t1 - t0) / 10.0);
  if (std::abs(h) < cfg.min_step) h = dir * cfg.min_step;

  auto deriv = [&](double tt, const std::vector<Complex>& yy) {
    std::vector<Complex> point = yy;
    point.push_back(Complex(tt, 0.0));
    return F.eval(point);
  };

  // k[0] always holds the field at the current (t, y): seeded here, then
  // refreshed by the first-same-as-last property on acceptance and untouched
  // by rejections.
  std::vector<Complex> k[7];
  k[0] = deriv(t, y);

  while (dir * (t1 - t) > 0) {
    if (dir * (t + h - t1) > 0) h = t1 - t;
    if (std::abs(h) < cfg.min_step)
      throw StepUnderflow("step size underflow at t = " + std::to_string(t));

    for (int s = 1; s < 7; ++s) {
      std::vector<Complex> ys = y;
      for (std::size_t i = 0; i < n; ++i) {
        Complex acc(0.0, 0.0);
        for (int j = 0; j < s; ++j)
          if (a[s][j] != 0.0) acc += a[s][j] * k[j][i];
        ys[i] += h * acc;
      }
      k[s] = deriv(t + c[s] * h, ys);
    }
    // k[6] is the field at the fifth-order solution point (FSAL): the
    // stage-7 state is exactly y5.
    std::vector<Complex> y5 = y;
    for (std::size_t i = 0; i < n; ++i) {
      Complex acc(0.0, 0.0);
      for (int j = 0; j < 6; ++j)
        if (a[6][j] != 0.0) acc += a[6][j] * k[j][i];
      y5[i] += h * acc;
    }

    double err = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      Complex de(0.0, 0.0);
      for (int j = 0; j < 7; ++j)
        if (e[j] != 0.0) de += e[j] * k[j][i];
      de *= h;
      const double sc =
          cfg.abs_tol +
          cfg.rel_tol * std::max(std::abs(y[i]), std::abs(y5[i]));
      err = std::max(err, std::abs(de) / sc);
    }

    if (err <= 1.0) {
      t += h;
      y = std::move(y5);
      k[0] = k[6];  // first-same-as-last
      rec.times.push_back(t);
      rec.states.push_back(y);
      ++rec.accepted;
    } else {
      ++rec.rejected;
    }

    const double fac =
        std::clamp(0.9 * std::pow(std::max(err, 1e-16), -0.2), 0.2, 5.0);
    h *= fac;
    if (std::abs(h) > cfg.max_step) h = dir * cfg.max_step;
  }
  return rec;
}

CompiledField compiled_system(SystemId sys, const std::vector<Complex>& params,
                              double pole_guard) {
  const CoupledSystem& cs = coupled_system(sys);
  if (params.size() != cs.params.size())
    throw UsageError(cs.name + " takes " + std::to_string(cs.params.size()) +
                     " parameters, got " + std::to_string(params.size()));
  std::map<int, Complex> constants;
  for (std::size_t j = 0; j < params.size(); ++j)
    constants.emplace(cs.params[j], params[j]);
  const PhaseField field = vector_field(sys);
  std::vector<RatFn> comps(field.begin(), field.end());
  std::vector<int> dyn(phase6().begin(), phase6().end());
  dyn.push_back(VT);
  return CompiledField(comps, dyn, constants, pole_guard);
}

void require_fixed_sign(double t0, double t1) {
  if (t0 == 0.0 || t1 == 0.0 || (t0 > 0) != (t1 > 0))
    throw UsageError("the time path must stay on one side of t = 0");
}

}  // namespace

Trajectory integrate(SystemId sys, const std::vector<Complex>& params,
                     const State6& initial, double t0, double t1,
                     const NumericConfig& cfg) {
  require_fixed_sign(t0, t1);
  const CompiledField F = compiled_system(sys, params, cfg.pole_guard);
  std::vector<Complex> y(initial.begin(), initial.end());
  StepRecord rec = rk45(F, std::move(y), t0, t1, cfg);
  Trajectory tr;
  tr.times = std::move(rec.times);
  tr.accepted = rec.accepted;
  tr.rejected = rec.rejected;
  tr.states.reserve(rec.states.size());
  for (const auto& st : rec.states) {
    State6 s6;
    std::copy(st.begin(), st.end(), s6.begin());
    tr.states.push_back(s6);
  }
  return tr;
}

std::string trajectory_csv(const Trajectory& tr) {
  std::string out =
      "t, x_re, x_im, y_re, y_im, z_re, z_im, w_re, w_im, q_re, q_im, p_re, "
      "p_im\n";
  char buf[64];
  for (std::size_t r = 0; r < tr.times.size(); ++r) {
    std::snprintf(buf, sizeof buf, "%.17g", tr.times[r]);
    out += buf;
    for (const Complex& c : tr.states[r]) {
      std::snprintf(buf, sizeof buf, ", %.17g, %.17g", c.real(), c.imag());
      out += buf;
    }
    out += '\n';
  }
  return out;
}

CommuteReport symmetry_commute_check(SystemId sys, const std::string& map_name,
                                     const std::vector<Complex>& params,
                                     const State6& initial, double t0,
                                     double t1, const NumericConfig& cfg) {
  require_fixed_sign(t0, t1);
  const Roster& r = roster(roster_of(sys));
  BirationalMap g = (map_name == "id")
                        ? BirationalMap::identity("id", r.phase_vars,
                                                  r.param_vars)
                        : r.by_name(map_name);

  std::map<int, Complex> constants;
  if (params.size() != r.param_vars.size())
    throw UsageError("parameter count mismatch");
  for (std::size_t j = 0; j < params.size(); ++j)
    constants.emplace(r.param_vars[j], params[j]);

  std::vector<int> dyn(r.phase_vars);
  dyn.push_back(VT);
  const CompiledField gmap(g.images, dyn, constants, cfg.pole_guard);
  auto apply_map = [&](const State6& st, double tt) {
    std::vector<Complex> point(st.begin(), st.end());
    point.push_back(Complex(tt, 0.0));
    return gmap.eval(point);
  };

  // Parameter action, evaluated numerically.
  std::vector<Complex> mapped_params(params.size());
  {
    std::vector<RatFn> pexprs;
    for (std::size_t j = 0; j < params.size(); ++j)
      pexprs.push_back(g.params.image_expr(j, g.param_vars));
    const CompiledField pf(pexprs, {}, constants, cfg.pole_guard);
    mapped_params = pf.eval({});
  }

  // Path A: flow in the original data, then transform at the far end.
  const Trajectory fwd = integrate(sys, params, initial, t0, t1, cfg);
  const std::vector<Complex> a = apply_map(fwd.states.back(), t1);

  // Path B: transform first, then flow in the transformed data (time runs
  // over the reflected path when the map flips the sign of t).
  const std::vector<Complex> b0 = apply_map(initial, t0);
  State6 init_b;
  std::copy(b0.begin(), b0.end(), init_b.begin());
  const double s = (g.t_sign == -1) ? -1.0 : 1.0;
  const Trajectory back =
      integrate(sys, mapped_params, init_b, s * t0, s * t1, cfg);
  const State6& b = back.states.back();

  CommuteReport rep;
  rep.map_name = g.name;
  rep.discrepancy = 0.0;
  for (int i = 0; i < 6; ++i)
    rep.discrepancy = std::max(rep.discrepancy, std::abs(a[i] - b[i]));
  return rep;
}

DriftReport integral_drift_check(int which, const std::vector<Complex>& params,
                                 const std::array<Complex, 2>& initial,
                                 double t0, double t1,
                                 const NumericConfig& cfg) {
  require_fixed_sign(t0, t1);
  const BlockId block = first_integral_block(which);
  std::vector<RatFn> par = {V(VAL)};
  std::size_t npar = 1;
  if (block == BlockId::K2) {
    par.push_back(V(VBT));
    npar = 2;
  }
  if (params.size() != npar)
    throw UsageError("this block takes " + std::to_string(npar) +
                     " parameter(s)");
  std::map<int, Complex> constants;
  constants.emplace(VAL, params[0]);
  if (npar == 2) constants.emplace(VBT, params[1]);

  const RatFn H = block_hamiltonian(block, VQ, VP, par);
  const auto f = hamilton_pair_field(H, VQ, VP);
  const std::vector<int> dyn = {VQ, VP, VT};
  const CompiledField F({f[0], f[1]}, dyn, constants, cfg.pole_guard);
  const CompiledField I({first_integral(which)}, dyn, constants,
                        cfg.pole_guard);

  StepRecord rec =
      rk45(F, {initial[0], initial[1]}, t0, t1, cfg);

  DriftReport rep;
  rep.which = which;
  rep.samples = long(rec.times.size());
  Complex i0;
  rep.drift = 0.0;
  for (std::size_t r = 0; r < rec.times.size(); ++r) {
    std::vector<Complex> point = rec.states[r];
    point.push_back(Complex(rec.times[r], 0.0));
    const Complex iv = I.eval(point)[0];
    if (r == 0) {
      i0 = iv;
    } else {
      rep.drift = std::max(
          rep.drift, std::abs(iv - i0) / std::max(1.0, std::abs(i0)));
    }
  }
  return rep;
}

}  // namespace p3lab
