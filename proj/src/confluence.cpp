#include "p3lab/confluence.hpp"

#include <stdexcept>

#include "p3lab/varspace.hpp"
#include "p3lab/weyl.hpp"

namespace p3lab {

namespace {

using expr::Qr;
using expr::V;

const std::array<int, 6>& phase6() {
  static const std::array<int, 6> v = {VX, VY, VZ, VW, VQ, VP};
  return v;
}

Degeneration make_degeneration(DegenerationId id) {
  const RatFn e = V(VEPS);
  if (id == DegenerationId::D6_to_B5) {
    std::map<int, RatFn> sub;
    sub.emplace(VX, e * V(VX));
    sub.emplace(VY, V(VY) / e);
    sub.emplace(VZ, e * V(VZ));
    sub.emplace(VW, V(VW) / e);
    sub.emplace(VQ, V(VQ) / e);
    sub.emplace(VP, e * V(VP));
    sub.emplace(VT, e * V(VT));
    sub.emplace(VA0, Qr(1) / e + Qr(2) * V(VB0));
    sub.emplace(VA1, Qr(-1) / e);
    sub.emplace(VA2, V(VB1));
    sub.emplace(VA3, V(VB2));
    sub.emplace(VA4, V(VB3));
    sub.emplace(VA5, V(VB4));
    sub.emplace(VA6, V(VB5));
    // d(new)/dT = (d(new)/d(old)) * F_old * dt/dT with dt/dT = eps.
    std::array<RatFn, 6> scale = {Qr(1), e * e, Qr(1), e * e, e * e, Qr(1)};
    RatFn rel = Qr(2) * (V(VB0) + V(VB1) + V(VB2) + V(VB3)) + V(VB4) +
                V(VB5) - Qr(1);
    return Degeneration{id,
                        SystemId::D6,
                        SystemId::B5,
                        std::move(sub),
                        std::move(scale),
                        ConstraintIdeal(rel.num(), VB0),
                        6};
  }
  std::map<int, RatFn> sub;
  sub.emplace(VX, e / 4 * V(VX));
  sub.emplace(VY, Qr(2) * V(VY) / e);
  sub.emplace(VZ, e / 4 * V(VZ));
  sub.emplace(VW, Qr(2) * V(VW) / e);
  sub.emplace(VQ, Qr(4) * V(VQ) / e);
  sub.emplace(VP, e / 8 * V(VP));
  sub.emplace(VT, e * e / 16 * V(VT));
  // The divergent halves of the first two parameters must split the same way
  // they do in the other degeneration: node 0 carries +1/eps and node 1
  // carries -1/eps.  With the opposite split every component still converges,
  // but the y-equation picks up a stray constant at order eps^0 and the limit
  // no longer satisfies the target system.
  sub.emplace(VA0, Qr(1) / e + V(VB0));
  sub.emplace(VA1, Qr(-1) / e);
  sub.emplace(VA2, V(VB1) / 2);
  sub.emplace(VA3, V(VB2) / 2);
  sub.emplace(VA4, V(VB3) / 2);
  sub.emplace(VA5, Qr(1) / e);
  sub.emplace(VA6, Qr(-1) / e + V(VB4));
  std::array<RatFn, 6> scale = {e / 4,          e * e * e / 32, e / 4,
                                e * e * e / 32, e * e * e / 64, e / 2};
  RatFn rel = V(VB0) + V(VB1) + V(VB2) + V(VB3) + V(VB4) - Qr(1);
  return Degeneration{id,
                      SystemId::D6,
                      SystemId::D52,
                      std::move(sub),
                      std::move(scale),
                      ConstraintIdeal(rel.num(), VB0),
                      5};
}

// Lowest exponent of VEPS present in a nonzero polynomial.
int eps_valuation(const MPoly& p) {
  auto parts = p.coeffs_in(VEPS);
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (!parts[k].is_zero()) return static_cast<int>(k);
  }
  throw AlgebraError("valuation of the zero polynomial");
}

struct LaurentPart {
  int valuation;   // order of the lowest nonzero term
  RatFn leading;   // coefficient at that order
  RatFn at_zero;   // coefficient of the constant term
};

LaurentPart laurent_in_eps(const RatFn& f) {
  if (f.is_zero()) return {0, RatFn(), RatFn()};
  const int vn = eps_valuation(f.num());
  const int vd = eps_valuation(f.den());
  const RatFn lead = RatFn(f.num().coeffs_in(VEPS)[static_cast<std::size_t>(
                         vn)]) /
                     RatFn(f.den().coeffs_in(VEPS)[static_cast<std::size_t>(
                         vd)]);
  LaurentPart part;
  part.valuation = vn - vd;
  part.leading = lead;
  part.at_zero = (part.valuation > 0) ? RatFn() : lead;
  if (part.valuation < 0) part.at_zero = RatFn();
  return part;
}

// The target vector field, rewritten with its parameters moved from the
// VA0.. slots to the VB0.. slots.
PhaseField target_field_in_b_slots(SystemId target, int param_count) {
  std::map<int, RatFn> rename;
  for (int j = 0; j < param_count; ++j) rename.emplace(VA0 + j, V(VB0 + j));
  PhaseField out = vector_field(target);
  for (auto& f : out) f = f.substitute(rename);
  return out;
}

bool proportional(const RatFn& a, const RatFn& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  RatFn ratio = a / b;
  return ratio.den().is_constant() && ratio.num().is_constant();
}

}  // namespace

DegenerationReport run_degeneration(const Degeneration& d) {
  DegenerationReport rep;
  rep.name = degeneration_name(d.id);

  const RatFn source_rel = RatFn(coupled_system(d.source).constraint.relation());
  RatFn image = source_rel.substitute(d.substitution);
  rep.constraint_image_exact =
      proportional(image, RatFn(d.target_constraint.relation()));

  const PhaseField F = vector_field(d.source);
  const PhaseField T = target_field_in_b_slots(d.target, d.target_param_count);
  for (std::size_t i = 0; i < 6; ++i) {
    RatFn g = d.scale[i] * F[i].substitute(d.substitution);
    g = d.target_constraint.reduce(g);
    LaurentPart part = laurent_in_eps(g);
    rep.no_negative_powers[i] = part.valuation >= 0;
    if (part.valuation < 0) {
      throw VerificationFailure(
          rep.name + " component " + std::string(var_name(phase6()[i])) +
          ": pole of order " + std::to_string(-part.valuation) +
          " in the small parameter, leading coefficient " +
          part.leading.num().str() + " / " + part.leading.den().str());
    }
    rep.limit_matches_target[i] =
        d.target_constraint.equal_mod(part.at_zero, T[i]);
  }
  return rep;
}

std::string degeneration_name(DegenerationId id) {
  return id == DegenerationId::D6_to_B5 ? "d6 -> b5" : "d6 -> d52";
}

const Degeneration& degeneration(DegenerationId id) {
  static const Degeneration to_b5 = make_degeneration(DegenerationId::D6_to_B5);
  static const Degeneration to_d52 =
      make_degeneration(DegenerationId::D6_to_D52);
  return id == DegenerationId::D6_to_B5 ? to_b5 : to_d52;
}

bool DegenerationReport::passed() const {
  if (!constraint_image_exact) return false;
  for (std::size_t i = 0; i < 6; ++i) {
    if (!no_negative_powers[i] || !limit_matches_target[i]) return false;
  }
  return true;
}

DegenerationReport degenerate(DegenerationId id) {
  return run_degeneration(degeneration(id));
}

// ---------------------------------------------------------------------------

bool preserves_canonical_form(const std::vector<RatFn>& images) {
  const auto& vars = phase6();
  for (std::size_t a = 0; a < 6; ++a) {
    for (std::size_t b = a + 1; b < 6; ++b) {
      RatFn sum;
      for (std::size_t pair = 0; pair < 3; ++pair) {
        const RatFn& gu = images[2 * pair];
        const RatFn& gv = images[2 * pair + 1];
        sum = sum + gu.derivative(vars[a]) * gv.derivative(vars[b]) -
              gu.derivative(vars[b]) * gv.derivative(vars[a]);
      }
      const bool canonical_pair = (b == a + 1) && (a % 2 == 0);
      if (sum != (canonical_pair ? Qr(1) : RatFn())) return false;
    }
  }
  return true;
}

bool EquivalenceReport::passed() const {
  if (!symplectic || !constraint_image_exact) return false;
  for (bool ok : component_matches) {
    if (!ok) return false;
  }
  return true;
}

EquivalenceReport equivalence_b5_to_d51() {
  // New coordinates in terms of the old ones.
  std::vector<RatFn> fwd = {
      ((V(VX) - V(VZ)) * V(VY) - V(VA1)) * V(VY),
      -1 / V(VY),
      V(VZ),
      V(VW) + V(VY),
      V(VQ),
      V(VP)};
  // Old coordinates in terms of the new ones, plus the parameter change.
  // The first two parameters trade places across the bridge: the old node-1
  // parameter equals the new node-0 parameter, and the old node-0 parameter
  // absorbs half of the difference.  (Everything on the right-hand side below
  // is written in the new parameters, so the x-image constant -- the old
  // node-1 parameter -- appears as the new node-0 symbol.)
  std::map<int, RatFn> inv;
  inv.emplace(VX, V(VZ) + V(VX) * V(VY) * V(VY) - V(VA0) * V(VY));
  inv.emplace(VY, -1 / V(VY));
  inv.emplace(VW, V(VW) + 1 / V(VY));
  inv.emplace(VA0, (V(VA1) - V(VA0)) / 2);
  inv.emplace(VA1, V(VA0));

  EquivalenceReport rep;
  rep.symplectic = preserves_canonical_form(fwd);

  const RatFn b5_rel = RatFn(coupled_system(SystemId::B5).constraint.relation());
  const auto& d51 = coupled_system(SystemId::D51);
  rep.constraint_image_exact =
      proportional(b5_rel.substitute(inv), RatFn(d51.constraint.relation()));

  const PhaseField F = vector_field(SystemId::B5);
  const PhaseField G = vector_field(SystemId::D51);
  for (std::size_t i = 0; i < 6; ++i) {
    RatFn lhs;  // d(new_i)/dt in the old coordinates (images are t-free)
    for (std::size_t j = 0; j < 6; ++j) {
      lhs = lhs + fwd[i].derivative(phase6()[j]) * F[j];
    }
    rep.component_matches[i] =
        d51.constraint.equal_mod(lhs.substitute(inv), G[i]);
  }
  return rep;
}

// ---------------------------------------------------------------------------

std::array<RatFn, 2> pair_flow_transport_residual(
    const RatFn& src_hamiltonian, const RatFn& dst_hamiltonian,
    const std::array<RatFn, 2>& images) {
  const auto Fs = hamilton_pair_field(src_hamiltonian, VQ, VP);
  const auto Fd = hamilton_pair_field(dst_hamiltonian, VQ, VP);
  std::map<int, RatFn> bind;
  bind.emplace(VQ, images[0]);
  bind.emplace(VP, images[1]);
  std::array<RatFn, 2> res;
  for (std::size_t i = 0; i < 2; ++i) {
    RatFn lhs = images[i].derivative(VT) + images[i].derivative(VQ) * Fs[0] +
                images[i].derivative(VP) * Fs[1];
    res[i] = lhs - Fd[i].substitute(bind);
  }
  return res;
}

TrReport symplectic_tr(TrId id) {
  const RatFn q = V(VQ), p = V(VP), t = V(VT);
  const RatFn al = V(VAL), bt = V(VBT);

  TrReport rep;
  std::array<RatFn, 2> images, inverse;
  RatFn src, dst;
  switch (id) {
    case TrId::tr1:
      rep.name = "tr1";
      images = {q / t, t * p};
      inverse = {t * q, p / t};
      src = block_hamiltonian(BlockId::H1, VQ, VP, {al});
      dst = block_hamiltonian(BlockId::K1, VQ, VP, {al});
      break;
    case TrId::tr2:
      rep.name = "tr2";
      images = {-p / t, t * q};
      inverse = {p / t, -t * q};
      src = block_hamiltonian(BlockId::H2, VQ, VP, {al, bt});
      dst = block_hamiltonian(BlockId::K2, VQ, VP, {al, bt});
      break;
    case TrId::tr5:
      rep.name = "tr5";
      images = {t * q, p / t};
      inverse = {q / t, t * p};
      src = block_hamiltonian(BlockId::H5, VQ, VP, {al});
      dst = block_hamiltonian(BlockId::K5, VQ, VP, {al});
      break;
  }

  RatFn det = images[0].derivative(VQ) * images[1].derivative(VP) -
              images[0].derivative(VP) * images[1].derivative(VQ);
  rep.symplectic = (det == Qr(1));

  std::map<int, RatFn> inv_bind;
  inv_bind.emplace(VQ, inverse[0]);
  inv_bind.emplace(VP, inverse[1]);
  RatFn substituted = src.substitute(inv_bind);
  rep.substitution_matches_printed = (substituted == dst);
  rep.correction = dst - substituted;

  auto res = pair_flow_transport_residual(src, dst, images);
  rep.flow_transport_matches_printed = res[0].is_zero() && res[1].is_zero();
  return rep;
}

bool integral_scalings_hold() {
  const RatFn t = V(VT), al = V(VAL), bt = V(VBT);
  const bool k1 =
      t * block_hamiltonian(BlockId::K1, VQ, VP, {al}) == first_integral(1);
  const bool k2 = t * block_hamiltonian(BlockId::K2, VQ, VP, {al, bt}) ==
                  first_integral(2);
  return k1 && k2;
}

// ---------------------------------------------------------------------------

UvReport verify_uv_correspondence() {
  const RatFn u = V(VQ), v = V(VP), g0 = V(VG0), g2 = V(VG2);
  const std::array<RatFn, 2> images = {1 / u, -u * (v * u + g0)};

  UvReport rep;
  const RatFn src = block_hamiltonian(BlockId::IIIGamma, VQ, VP, {g0, g2});
  const RatFn dst =
      block_hamiltonian(BlockId::IIIGammaTilde, VQ, VP, {g0, g2});
  auto res = pair_flow_transport_residual(src, dst, images);
  rep.field_correspondence = res[0].is_zero() && res[1].is_zero();

  RatFn det = images[0].derivative(VQ) * images[1].derivative(VP) -
              images[0].derivative(VP) * images[1].derivative(VQ);
  rep.symplectic = (det == Qr(1));

  std::array<RatFn, 2> acc = images;
  for (int order = 1; order <= 8; ++order) {
    if (acc[0] == V(VQ) && acc[1] == V(VP)) {
      rep.map_order = order;
      break;
    }
    std::map<int, RatFn> bind;
    bind.emplace(VQ, acc[0]);
    bind.emplace(VP, acc[1]);
    acc = {images[0].substitute(bind), images[1].substitute(bind)};
  }
  return rep;
}

// ---------------------------------------------------------------------------

bool A1Report::passed() const {
  for (bool ok : generator_symmetry) {
    if (!ok) return false;
  }
  return s0_involution && s1_involution && sigma_order > 0 &&
         integral_scalings;
}

A1Report verify_a1_symmetry() {
  const Roster& r = roster(RosterId::A1D7);
  A1Report rep;
  for (std::size_t k = 0; k < 3; ++k) {
    rep.generator_symmetry[k] = verify_symmetry(r, *r.all_maps()[k]);
  }
  const BirationalMap& s0 = r.reflections[0];
  const BirationalMap& s1 = r.reflections[1];
  rep.s0_involution = s0.then(s0).is_identity_mod(r.constraint);
  rep.s1_involution = s1.then(s1).is_identity_mod(r.constraint);

  const BirationalMap& sigma = r.autos[0];
  BirationalMap acc = sigma;
  for (int order = 1; order <= 8; ++order) {
    if (acc.is_identity_mod(r.constraint)) {
      rep.sigma_order = order;
      break;
    }
    acc = acc.then(sigma);
  }
  rep.integral_scalings = integral_scalings_hold();
  return rep;
}

}  // namespace p3lab
