#include "p3lab/systems.hpp"

#include <map>
#include <memory>
#include <stdexcept>

namespace p3lab {

namespace {
using expr::Qr;
using expr::V;

RatFn d6_hamiltonian() {
  RatFn x = V(VX), y = V(VY), z = V(VZ), w = V(VW), q = V(VQ), p = V(VP),
        t = V(VT);
  RatFn a0 = V(VA0), a1 = V(VA1), a2 = V(VA2), a3 = V(VA3), a5 = V(VA5),
        a6 = V(VA6);
  return (x * x * (y - 1) * y + x * ((a0 + a1) * y - a1) + t * y) / t +
         (z * z * (w - 1) * w +
          z * ((a0 + a1 + 2 * a2 + 2 * a3) * w - a3) + t * w) /
             t +
         (q * q * (p - t) * p + q * ((a5 + a6 - 1) * p - t * a5) + p) / t +
         2 * y * z * (z * w + a3) / t - 2 * (y + w) * p / t;
}

RatFn b5_hamiltonian() {
  RatFn x = V(VX), y = V(VY), z = V(VZ), w = V(VW), q = V(VQ), p = V(VP),
        t = V(VT);
  RatFn a0 = V(VA0), a1 = V(VA1), a2 = V(VA2), a4 = V(VA4), a5 = V(VA5);
  return (x * x * y * y + 2 * a0 * x * y + x + t * y) / t +
         (z * z * w * w + 2 * (a0 + a1 + a2) * z * w + t * w) / t +
         (q * q * p * p - t * q * q * p + (a4 + a5 - 1) * q * p -
          a4 * t * q) /
             t +
         2 * y * z * (z * w + a2) / t - 2 * (y + w) * p / t;
}

RatFn d52_hamiltonian() {
  RatFn x = V(VX), y = V(VY), z = V(VZ), w = V(VW), q = V(VQ), p = V(VP),
        t = V(VT);
  RatFn a0 = V(VA0), a1 = V(VA1), a2 = V(VA2), a4 = V(VA4);
  return (x * x * y * y + 2 * a0 * x * y + x) / (2 * t) +
         (z * z * w * w + 2 * (a0 + a1 + a2) * z * w) / (2 * t) +
         (q * q * p * p + 2 * (a4 - 1) * q * p - t * q) / (2 * t) +
         y * z * (z * w + a2) / t - (y + w) * p / t;
}

RatFn d51_hamiltonian() {
  RatFn x = V(VX), y = V(VY), z = V(VZ), w = V(VW), q = V(VQ), p = V(VP),
        t = V(VT);
  RatFn a0 = V(VA0), a1 = V(VA1), a2 = V(VA2), a4 = V(VA4), a5 = V(VA5);
  return (x * x * y * y + x * y * y - (a0 + a1) * x * y - a0 * y) / t +
         (z * z * w * w + (a0 + a1 + 2 * a2) * z * w + z + t * w) / t +
         (q * q * p * p - t * q * q * p - (1 - a4 - a5) * q * p -
          a4 * t * q) /
             t +
         2 * (x * z - w * p) / t;
}

CoupledSystem make_system(SystemId id) {
  RatFn a0 = V(VA0), a1 = V(VA1), a2 = V(VA2), a3 = V(VA3), a4 = V(VA4),
        a5 = V(VA5), a6 = V(VA6);
  switch (id) {
    case SystemId::D6:
      return CoupledSystem{
          id, "d6", d6_hamiltonian(),
          ConstraintIdeal(
              (a0 + a1 + 2 * a2 + 2 * a3 + 2 * a4 + a5 + a6 - 1).num(), VA6),
          {VA0, VA1, VA2, VA3, VA4, VA5, VA6}};
    case SystemId::B5:
      return CoupledSystem{
          id, "b5", b5_hamiltonian(),
          ConstraintIdeal(
              (2 * a0 + 2 * a1 + 2 * a2 + 2 * a3 + a4 + a5 - 1).num(), VA5),
          {VA0, VA1, VA2, VA3, VA4, VA5}};
    case SystemId::D52:
      return CoupledSystem{
          id, "d52", d52_hamiltonian(),
          ConstraintIdeal((a0 + a1 + a2 + a3 + a4 - 1).num(), VA4),
          {VA0, VA1, VA2, VA3, VA4}};
    case SystemId::D51:
      return CoupledSystem{
          id, "d51", d51_hamiltonian(),
          ConstraintIdeal(
              (a0 + a1 + 2 * a2 + 2 * a3 + a4 + a5 - 1).num(), VA5),
          {VA0, VA1, VA2, VA3, VA4, VA5}};
  }
  throw std::logic_error("unknown system id");
}

}  // namespace

std::string system_name(SystemId id) { return coupled_system(id).name; }

const CoupledSystem& coupled_system(SystemId id) {
  static const CoupledSystem d6 = make_system(SystemId::D6);
  static const CoupledSystem b5 = make_system(SystemId::B5);
  static const CoupledSystem d52 = make_system(SystemId::D52);
  static const CoupledSystem d51 = make_system(SystemId::D51);
  switch (id) {
    case SystemId::D6:
      return d6;
    case SystemId::B5:
      return b5;
    case SystemId::D52:
      return d52;
    case SystemId::D51:
      return d51;
  }
  throw std::logic_error("unknown system id");
}

PhaseField vector_field(const CoupledSystem& sys) {
  const RatFn& H = sys.H;
  return PhaseField{H.derivative(VY),  -H.derivative(VX),
                    H.derivative(VW),  -H.derivative(VZ),
                    H.derivative(VP),  -H.derivative(VQ)};
}

PhaseField vector_field(SystemId id) {
  return vector_field(coupled_system(id));
}

RatFn block_hamiltonian(BlockId id, int uvar, int vvar,
                        const std::vector<RatFn>& par) {
  RatFn u = V(uvar), v = V(vvar), t = V(VT);
  auto need = [&](std::size_t n) {
    if (par.size() != n)
      throw std::invalid_argument("wrong parameter count for block");
  };
  switch (id) {
    case BlockId::IIIGamma:
      need(2);
      return (u * u * v * (v - 1) + u * ((par[0] + par[1]) * v - par[0]) +
              t * v) /
             t;
    case BlockId::IIIGammaTilde:
      need(2);
      return (u * u * v * (v - t) - u * ((par[1] - par[0]) * v + par[0] * t) +
              v) /
             t;
    case BlockId::D7:
      need(1);
      return (u * u * v * v + par[0] * u * v + u + t * v) / t;
    case BlockId::H1:
      need(1);
      return (u * u * v * v + par[0] * u * v + t * v) / t;
    case BlockId::H2:
      need(2);
      return (u * u * v * v - t * u * u * v + par[0] * u * v +
              par[1] * t * u) /
             t;
    case BlockId::H3:
      need(1);
      return (u * u * v * v + par[0] * u * v + u) / (2 * t);
    case BlockId::H4:
      need(1);
      return (u * u * v * v + par[0] * u * v) / (2 * t);
    case BlockId::H5:
      // The printed signature of this block carries a second parameter that
      // never occurs in the formula; only the used one is stored here.
      need(1);
      return (u * u * v * v + par[0] * u * v - t * u) / (2 * t);
    case BlockId::K1:
      need(1);
      return (u * u * v * v + (par[0] - 1) * u * v + v) / t;
    case BlockId::K2:
      need(2);
      return (u * u * v * v + u * v * v - (par[0] + 1) * u * v +
              par[1] * v) /
             t;
    case BlockId::K5:
      need(1);
      return (u * u * v * v + par[0] * u * v - u) / (2 * t);
  }
  throw std::logic_error("unknown block id");
}

std::array<RatFn, 2> hamilton_pair_field(const RatFn& H, int uvar, int vvar) {
  return {H.derivative(vvar), -H.derivative(uvar)};
}

std::array<RatFn, 2> block_field(BlockId id, int uvar, int vvar,
                                 const std::vector<RatFn>& par) {
  return hamilton_pair_field(block_hamiltonian(id, uvar, vvar, par), uvar,
                             vvar);
}

RatFn decomposed_hamiltonian(SystemId id) {
  RatFn y = V(VY), z = V(VZ), w = V(VW), p = V(VP), t = V(VT);
  RatFn a0 = V(VA0), a1 = V(VA1), a2 = V(VA2), a3 = V(VA3), a4 = V(VA4),
        a5 = V(VA5), a6 = V(VA6);
  switch (id) {
    case SystemId::D6:
      return block_hamiltonian(BlockId::IIIGamma, VX, VY, {a1, a0}) +
             block_hamiltonian(BlockId::IIIGamma, VZ, VW,
                               {a3, a0 + a1 + 2 * a2 + a3}) +
             block_hamiltonian(BlockId::IIIGammaTilde, VQ, VP,
                               {a5, 1 - a6}) +
             2 * y * z * (z * w + a3) / t - 2 * (y + w) * p / t;
    case SystemId::B5:
      return block_hamiltonian(BlockId::D7, VX, VY, {2 * a0}) +
             block_hamiltonian(BlockId::H1, VZ, VW,
                               {2 * (a0 + a1 + a2)}) +
             block_hamiltonian(BlockId::H2, VQ, VP,
                               {a4 + a5 - 1, -a4}) +
             2 * y * z * (z * w + a2) / t - 2 * (y + w) * p / t;
    case SystemId::D52:
      return block_hamiltonian(BlockId::H3, VX, VY, {2 * a0}) +
             block_hamiltonian(BlockId::H4, VZ, VW,
                               {2 * (a0 + a1 + a2)}) +
             block_hamiltonian(BlockId::H5, VQ, VP, {2 * (a4 - 1)}) +
             y * z * (z * w + a2) / t - (y + w) * p / t;
    case SystemId::D51:
      throw std::invalid_argument("no block decomposition is declared here");
  }
  throw std::logic_error("unknown system id");
}

RatFn first_integral(int which) {
  RatFn q = V(VQ), p = V(VP), al = V(VAL), bt = V(VBT);
  switch (which) {
    case 1:
      return q * q * p * p + (al - 1) * q * p + p;
    case 2:
      return q * q * p * p + q * p * p - (al + 1) * q * p + bt * p;
    case 3:
      return q * q * p * p + al * q * p + q;
    case 4:
      return q * p;
    case 5:
      return q * q * p * p + al * q * p - q;
  }
  throw std::invalid_argument("first integral index out of range");
}

BlockId first_integral_block(int which) {
  switch (which) {
    case 1:
      return BlockId::K1;
    case 2:
      return BlockId::K2;
    case 3:
      return BlockId::H3;
    case 4:
      return BlockId::H4;
    case 5:
      return BlockId::K5;
  }
  throw std::invalid_argument("first integral index out of range");
}

RatFn solve_linear(const RatFn& expr, int var) {
  if (expr.den().uses(var))
    throw DomainError("equation is not affine-linear in the unknown");
  auto cs = expr.num().coeffs_in(var);
  if (cs.size() > 2 || cs.size() < 2 || cs[1].is_zero())
    throw DomainError("equation is not affine-linear in the unknown");
  return -RatFn(cs[0]) / RatFn(cs[1]);
}

ScalarReduction scalar_reduction_of_d7_block() {
  RatFn y = V(VY), tau = V(VTAU), u1 = V(VU1), u2 = V(VU2), b1 = V(VBE1);
  auto F = block_field(BlockId::D7, VQ, VP, {b1});

  // q = tau*y and t = tau^2; dq/dtau = y + tau*y' must equal 2 tau * dq/dt.
  std::map<int, RatFn> to_scalar{{VQ, tau * y}, {VT, tau * tau}};
  RatFn eq_q = y + tau * u1 - 2 * tau * F[0].substitute(to_scalar);
  RatFn p_expr = solve_linear(eq_q, VP);

  // Total tau-derivative of p(tau, y(tau), y'(tau)) matches 2 tau * dp/dt.
  RatFn dp_total = p_expr.derivative(VTAU) + p_expr.derivative(VY) * u1 +
                   p_expr.derivative(VU1) * u2;
  RatFn rhs = F[1].substitute(to_scalar).substitute({{VP, p_expr}});
  RatFn solved = solve_linear(dp_total - 2 * tau * rhs, VU2);

  ScalarReduction out;
  // Template: y'' = y'^2/y - y'/tau + (a y^2 + b)/tau + c y^3 + d/y.
  RatFn rest = solved - u1 * u1 / y + u1 / tau;
  RatFn M = rest * tau * y;
  if (!M.is_polynomial()) return out;
  auto poly = M.num();  // denominator is 1 after normalization
  auto by_y = poly.coeffs_in(VY);
  auto pick = [&](std::size_t ydeg, std::size_t taudeg) -> MPoly {
    if (ydeg >= by_y.size()) return MPoly::zero();
    auto by_tau = by_y[ydeg].coeffs_in(VTAU);
    if (taudeg >= by_tau.size()) return MPoly::zero();
    return by_tau[taudeg];
  };
  out.a = RatFn(pick(3, 0));
  out.b = RatFn(pick(1, 0));
  out.c = RatFn(pick(4, 1));
  out.d = RatFn(pick(0, 1));
  RatFn rebuilt = out.a * y * y * y + out.b * y + out.c * tau * y.pow(4) +
                  out.d * tau;
  out.matches_template = (RatFn(poly) == rebuilt);
  return out;
}

}  // namespace p3lab
