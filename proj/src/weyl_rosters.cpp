#include <stdexcept>

#include "p3lab/weyl.hpp"

namespace p3lab {

namespace {

using expr::Qr;
using expr::V;

RatFn operator"" _c(unsigned long long n) { return Qr(static_cast<long>(n), 1); }

void set_img(BirationalMap& g, int var, RatFn e) {
  for (std::size_t i = 0; i < g.phase_vars.size(); ++i) {
    if (g.phase_vars[i] == var) {
      g.images[i] = std::move(e);
      return;
    }
  }
  throw std::invalid_argument("set_img: variable not in phase space");
}

// Reflection-type parameter action: alpha_i -> -alpha_i and
// alpha_j -> alpha_j + k * alpha_i for each (j, k) listed.
void refl(BirationalMap& g, int i, std::initializer_list<std::pair<int, int>> adds) {
  g.params.M[i][i] = -1;
  for (const auto& jk : adds) g.params.M[jk.first][i] += jk.second;
}

// Permutation parameter action: new alpha_i = alpha_{imgs[i]}.
void perm(BirationalMap& g, std::initializer_list<int> imgs) {
  const std::size_t n = g.param_vars.size();
  g.params.M.assign(n, std::vector<mpq_class>(n, 0));
  std::size_t i = 0;
  for (int j : imgs) g.params.M[i++][j] = 1;
}

void negate_phase(BirationalMap& g) {
  for (RatFn& e : g.images) e = -e;
}

Roster make_d6() {
  const CoupledSystem& sys = coupled_system(SystemId::D6);
  Roster r{RosterId::D6, "D6", {VX, VY, VZ, VW, VQ, VP}, {VA0, VA1, VA2, VA3, VA4, VA5, VA6},
           sys.constraint, {}, {}, {}};
  for (const RatFn& f : vector_field(sys)) r.field.push_back(f);
  auto G = [&](std::string n) {
    return BirationalMap::identity(std::move(n), r.phase_vars, r.param_vars);
  };
  const RatFn x = V(VX), y = V(VY), z = V(VZ), w = V(VW), q = V(VQ), p = V(VP),
              t = V(VT);
  const RatFn a0 = V(VA0), a1 = V(VA1), a2 = V(VA2), a3 = V(VA3), a4 = V(VA4),
              a5 = V(VA5), a6 = V(VA6);

  BirationalMap s0 = G("s0");
  set_img(s0, VX, x + a0 / (y - 1));
  refl(s0, 0, {{2, 1}});

  BirationalMap s1 = G("s1");
  set_img(s1, VX, x + a1 / y);
  refl(s1, 1, {{2, 1}});

  BirationalMap s2 = G("s2");
  set_img(s2, VY, y - a2 / (x - z));
  set_img(s2, VW, w + a2 / (x - z));
  refl(s2, 2, {{0, 1}, {1, 1}, {3, 1}});

  BirationalMap s3 = G("s3");
  set_img(s3, VZ, z + a3 / w);
  refl(s3, 3, {{2, 1}, {4, 1}});

  BirationalMap s4 = G("s4");
  set_img(s4, VW, w - a4 * q / (z * q - 1));
  set_img(s4, VP, p - a4 * z / (z * q - 1));
  refl(s4, 4, {{3, 1}, {5, 1}, {6, 1}});

  BirationalMap s5 = G("s5");
  set_img(s5, VQ, q + a5 / p);
  refl(s5, 5, {{4, 1}});

  BirationalMap s6 = G("s6");
  set_img(s6, VQ, q + a6 / (p - t));
  refl(s6, 6, {{4, 1}});

  BirationalMap pi1 = G("pi1");
  set_img(pi1, VX, -x);
  set_img(pi1, VY, 1_c - y);
  set_img(pi1, VZ, -z);
  set_img(pi1, VW, -w);
  set_img(pi1, VQ, -q);
  set_img(pi1, VP, t - p);
  perm(pi1, {1, 0, 2, 3, 4, 6, 5});

  BirationalMap pi2 = G("pi2");
  set_img(pi2, VX, t * q);
  set_img(pi2, VY, p / t);
  set_img(pi2, VZ, t / z);
  set_img(pi2, VW, -(z * w + a3) * z / t);
  set_img(pi2, VQ, x / t);
  set_img(pi2, VP, t * y);
  perm(pi2, {6, 5, 4, 3, 2, 1, 0});

  BirationalMap pi3 = G("pi3");
  set_img(pi3, VP, p - t);
  pi3.t_sign = -1;
  perm(pi3, {0, 1, 2, 3, 4, 6, 5});

  BirationalMap pi4 = G("pi4");
  set_img(pi4, VX, -x);
  set_img(pi4, VY, 1_c - y);
  set_img(pi4, VZ, -z);
  set_img(pi4, VW, -w);
  set_img(pi4, VQ, -q);
  set_img(pi4, VP, -p);
  pi4.t_sign = -1;
  perm(pi4, {1, 0, 2, 3, 4, 5, 6});

  r.reflections = {s0, s1, s2, s3, s4, s5, s6};
  r.autos = {pi1, pi2, pi3, pi4};
  return r;
}

Roster make_b5() {
  const CoupledSystem& sys = coupled_system(SystemId::B5);
  Roster r{RosterId::B5, "B5", {VX, VY, VZ, VW, VQ, VP}, {VA0, VA1, VA2, VA3, VA4, VA5},
           sys.constraint, {}, {}, {}};
  for (const RatFn& f : vector_field(sys)) r.field.push_back(f);
  auto G = [&](std::string n) {
    return BirationalMap::identity(std::move(n), r.phase_vars, r.param_vars);
  };
  const RatFn x = V(VX), y = V(VY), z = V(VZ), w = V(VW), q = V(VQ), p = V(VP),
              t = V(VT);
  const RatFn a0 = V(VA0), a1 = V(VA1), a2 = V(VA2), a3 = V(VA3), a4 = V(VA4),
              a5 = V(VA5);

  BirationalMap s0 = G("s0");
  negate_phase(s0);
  set_img(s0, VX, -x - 2_c * a0 / y - 1_c / (y * y));
  s0.t_sign = -1;
  refl(s0, 0, {{1, 2}});

  BirationalMap s1 = G("s1");
  set_img(s1, VY, y - a1 / (x - z));
  set_img(s1, VW, w + a1 / (x - z));
  refl(s1, 1, {{0, 1}, {2, 1}});

  BirationalMap s2 = G("s2");
  set_img(s2, VZ, z + a2 / w);
  refl(s2, 2, {{1, 1}, {3, 1}});

  BirationalMap s3 = G("s3");
  set_img(s3, VW, w - a3 * q / (z * q - 1));
  set_img(s3, VP, p - a3 * z / (z * q - 1));
  refl(s3, 3, {{2, 1}, {4, 1}, {5, 1}});

  BirationalMap s4 = G("s4");
  set_img(s4, VQ, q + a4 / p);
  refl(s4, 4, {{3, 1}});

  BirationalMap s5 = G("s5");
  set_img(s5, VQ, q + a5 / (p - t));
  refl(s5, 5, {{3, 1}});

  BirationalMap pi = G("pi");
  set_img(pi, VP, p - t);
  pi.t_sign = -1;
  perm(pi, {0, 1, 2, 3, 5, 4});

  r.reflections = {s0, s1, s2, s3, s4, s5};
  r.autos = {pi};
  return r;
}

Roster make_d52() {
  const CoupledSystem& sys = coupled_system(SystemId::D52);
  Roster r{RosterId::D52, "D52", {VX, VY, VZ, VW, VQ, VP}, {VA0, VA1, VA2, VA3, VA4},
           sys.constraint, {}, {}, {}};
  for (const RatFn& f : vector_field(sys)) r.field.push_back(f);
  auto G = [&](std::string n) {
    return BirationalMap::identity(std::move(n), r.phase_vars, r.param_vars);
  };
  const RatFn x = V(VX), y = V(VY), z = V(VZ), w = V(VW), q = V(VQ), p = V(VP),
              t = V(VT);
  const RatFn a0 = V(VA0), a1 = V(VA1), a2 = V(VA2), a3 = V(VA3), a4 = V(VA4);

  BirationalMap s0 = G("s0");
  negate_phase(s0);
  set_img(s0, VX, -x - 2_c * a0 / y - 1_c / (y * y));
  s0.t_sign = -1;
  refl(s0, 0, {{1, 2}});

  BirationalMap s1 = G("s1");
  set_img(s1, VY, y - a1 / (x - z));
  set_img(s1, VW, w + a1 / (x - z));
  refl(s1, 1, {{0, 1}, {2, 1}});

  BirationalMap s2 = G("s2");
  set_img(s2, VZ, z + a2 / w);
  refl(s2, 2, {{1, 1}, {3, 1}});

  BirationalMap s3 = G("s3");
  set_img(s3, VW, w - a3 * q / (z * q - 1));
  set_img(s3, VP, p - a3 * z / (z * q - 1));
  refl(s3, 3, {{2, 1}, {4, 1}});

  BirationalMap s4 = G("s4");
  set_img(s4, VQ, q + 2_c * a4 / p - t / (p * p));
  s4.t_sign = -1;
  refl(s4, 4, {{3, 2}});

  BirationalMap pi = G("pi");
  set_img(pi, VX, -t * q);
  set_img(pi, VY, -p / t);
  set_img(pi, VZ, -t / z);
  set_img(pi, VW, (z * w + a2) * z / t);
  set_img(pi, VQ, -x / t);
  set_img(pi, VP, -t * y);
  perm(pi, {4, 3, 2, 1, 0});

  r.reflections = {s0, s1, s2, s3, s4};
  r.autos = {pi};
  return r;
}

Roster make_d51() {
  const CoupledSystem& sys = coupled_system(SystemId::D51);
  Roster r{RosterId::D51, "D51", {VX, VY, VZ, VW, VQ, VP}, {VA0, VA1, VA2, VA3, VA4, VA5},
           sys.constraint, {}, {}, {}};
  for (const RatFn& f : vector_field(sys)) r.field.push_back(f);
  auto G = [&](std::string n) {
    return BirationalMap::identity(std::move(n), r.phase_vars, r.param_vars);
  };
  const RatFn x = V(VX), y = V(VY), z = V(VZ), w = V(VW), q = V(VQ), p = V(VP),
              t = V(VT);
  const RatFn a0 = V(VA0), a1 = V(VA1), a2 = V(VA2), a3 = V(VA3), a4 = V(VA4),
              a5 = V(VA5);

  BirationalMap s0 = G("s0");
  set_img(s0, VY, y - a0 / x);
  refl(s0, 0, {{2, 1}});

  BirationalMap s1 = G("s1");
  set_img(s1, VY, y - a1 / (x + 1));
  refl(s1, 1, {{2, 1}});

  BirationalMap s2 = G("s2");
  set_img(s2, VX, x + a2 * w / (y * w + 1));
  set_img(s2, VZ, z + a2 * y / (y * w + 1));
  refl(s2, 2, {{0, 1}, {1, 1}, {3, 1}});

  BirationalMap s3 = G("s3");
  set_img(s3, VW, w - a3 * q / (z * q - 1));
  set_img(s3, VP, p - a3 * z / (z * q - 1));
  refl(s3, 3, {{2, 1}, {4, 1}, {5, 1}});

  BirationalMap s4 = G("s4");
  set_img(s4, VQ, q + a4 / p);
  refl(s4, 4, {{3, 1}});

  BirationalMap s5 = G("s5");
  set_img(s5, VQ, q + a5 / (p - t));
  refl(s5, 5, {{3, 1}});

  BirationalMap pi1 = G("pi1");
  set_img(pi1, VX, -x - 1_c);
  set_img(pi1, VY, -y);
  set_img(pi1, VZ, -z);
  set_img(pi1, VW, -w);
  set_img(pi1, VQ, -q);
  set_img(pi1, VP, -p);
  pi1.t_sign = -1;
  perm(pi1, {1, 0, 2, 3, 4, 5});

  BirationalMap pi2 = G("pi2");
  set_img(pi2, VP, p - t);
  pi2.t_sign = -1;
  perm(pi2, {0, 1, 2, 3, 5, 4});

  BirationalMap pi3 = G("pi3");
  set_img(pi3, VX, (p - t) / t);
  set_img(pi3, VY, -t * q);
  set_img(pi3, VZ, -t * w);
  set_img(pi3, VW, z / t);
  set_img(pi3, VQ, y / t);
  set_img(pi3, VP, -t * (x + 1));
  pi3.t_sign = -1;
  perm(pi3, {5, 4, 3, 2, 1, 0});

  r.reflections = {s0, s1, s2, s3, s4, s5};
  r.autos = {pi1, pi2, pi3};
  return r;
}

Roster make_a1d7() {
  Roster r{RosterId::A1D7, "A1D7", {VQ, VP}, {VBE0, VBE1},
           ConstraintIdeal(MPoly::variable(VBE0) + MPoly::variable(VBE1) -
                               MPoly::one(),
                           VBE0),
           {}, {}, {}};
  for (const RatFn& f : block_field(BlockId::D7, VQ, VP, {V(VBE1)}))
    r.field.push_back(f);
  auto G = [&](std::string n) {
    return BirationalMap::identity(std::move(n), r.phase_vars, r.param_vars);
  };
  const RatFn q = V(VQ), p = V(VP), t = V(VT);
  const RatFn b0 = V(VBE0), b1 = V(VBE1);

  // The source material prints the correction terms of s0 and s1 with the
  // opposite sign (p + b0/q - t/q^2 and -q + b1/p + 1/p^2); those forms do
  // not map the flow onto itself. The signs used here do, they keep both
  // maps involutive and sigma-conjugate, and they agree with the s0
  // generators of the coupled rosters, which act on the same block shape by
  // u -> -u - 2a/v - 1/v^2.
  BirationalMap s0 = G("s0");
  set_img(s0, VP, p - b0 / q + t / (q * q));
  s0.t_sign = -1;
  refl(s0, 0, {{1, 2}});

  BirationalMap s1 = G("s1");
  set_img(s1, VQ, -q - b1 / p - 1_c / (p * p));
  set_img(s1, VP, -p);
  s1.t_sign = -1;
  refl(s1, 1, {{0, 2}});

  BirationalMap sg = G("sigma");
  set_img(sg, VQ, t * p);
  set_img(sg, VP, -q / t);
  sg.t_sign = -1;
  perm(sg, {1, 0});

  r.reflections = {s0, s1};
  r.autos = {sg};
  return r;
}

}  // namespace

std::string roster_name(RosterId id) {
  switch (id) {
    case RosterId::D6: return "D6";
    case RosterId::B5: return "B5";
    case RosterId::D52: return "D52";
    case RosterId::D51: return "D51";
    case RosterId::A1D7: return "A1D7";
  }
  throw std::invalid_argument("roster_name");
}

const BirationalMap& Roster::by_name(const std::string& n) const {
  for (const BirationalMap& g : reflections)
    if (g.name == n) return g;
  for (const BirationalMap& g : autos)
    if (g.name == n) return g;
  throw std::invalid_argument("unknown generator: " + n);
}

std::vector<const BirationalMap*> Roster::all_maps() const {
  std::vector<const BirationalMap*> out;
  for (const BirationalMap& g : reflections) out.push_back(&g);
  for (const BirationalMap& g : autos) out.push_back(&g);
  return out;
}

const Roster& roster(RosterId id) {
  static const Roster d6 = make_d6();
  static const Roster b5 = make_b5();
  static const Roster d52 = make_d52();
  static const Roster d51 = make_d51();
  static const Roster a1 = make_a1d7();
  switch (id) {
    case RosterId::D6: return d6;
    case RosterId::B5: return b5;
    case RosterId::D52: return d52;
    case RosterId::D51: return d51;
    case RosterId::A1D7: return a1;
  }
  throw std::invalid_argument("roster");
}

// ---------------------------------------------------------------------------
// Translation words. Words act left to right (first letter acts first).
// ---------------------------------------------------------------------------

const std::vector<TranslationDef>& translations(RosterId id) {
  // The first word in the D6 family is stated in the source material with an
  // extra second s1 (pi1 s5 s4 s3 s2 s1 s0 s1 s2 s3 s4 s5); that word is not a
  // translation on the parameter lattice. The word used here drops the
  // duplicated letter, which does produce the stated shift.
  static const std::vector<TranslationDef> d6 = {
      {"T1", {"pi1", "s5", "s4", "s3", "s2", "s1", "s0", "s2", "s3", "s4", "s5"},
       {0, 0, 0, 0, 0, -1, 1}},
      {"T2", {"s4", "s6", "T1", "s6", "s4"}, {0, 0, 0, 1, -1, 0, 0}},
      {"T3", {"s6", "T1", "s6"}, {0, 0, 0, 0, 1, -1, -1}},
      {"T4", {"pi2", "T1", "pi2"}, {1, -1, 0, 0, 0, 0, 0}},
      {"T5", {"pi2", "T2", "pi2"}, {0, 0, -1, 1, 0, 0, 0}},
      {"T6", {"pi2", "T3", "pi2"}, {-1, -1, 1, 0, 0, 0, 0}},
  };
  static const std::vector<TranslationDef> b5 = {
      {"T1", {"pi", "s4", "s3", "s2", "s1", "s0", "s1", "s2", "s3", "s4"},
       {0, 0, 0, 0, -1, 1}},
      {"T2", {"pi", "s5", "s4", "s3", "s2", "s1", "s0", "s1", "s2", "s3"},
       {0, 0, 0, -1, 1, 1}},
      {"T3", {"s3", "s5", "T1", "s5", "s3"}, {0, 0, 1, -1, 0, 0}},
      {"T4", {"s2", "T3", "s2"}, {0, 1, -1, 0, 0, 0}},
      {"T5", {"s1", "T4", "s1"}, {1, -1, 0, 0, 0, 0}},
  };
  static const std::vector<TranslationDef> d52 = {
      {"T1", {"s4", "s3", "s2", "s1", "s0", "s1", "s2", "s3"}, {0, 0, 0, -2, 2}},
      {"T2", {"s3", "T1", "s3"}, {0, 0, -2, 2, 0}},
      {"T3", {"s2", "T2", "s2"}, {0, -2, 2, 0, 0}},
      {"T4", {"s1", "T3", "s1"}, {-2, 2, 0, 0, 0}},
  };
  static const std::vector<TranslationDef> none;
  switch (id) {
    case RosterId::D6: return d6;
    case RosterId::B5: return b5;
    case RosterId::D52: return d52;
    default: return none;
  }
}

}  // namespace p3lab
