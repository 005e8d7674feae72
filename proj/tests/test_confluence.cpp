#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "p3lab/confluence.hpp"

using namespace p3lab;
using namespace p3lab::expr;

TEST_CASE("both degeneration limits exist and hit their targets") {
  for (auto id : {DegenerationId::D6_to_B5, DegenerationId::D6_to_D52}) {
    auto rep = degenerate(id);
    INFO(rep.name);
    CHECK(rep.constraint_image_exact);
    for (std::size_t i = 0; i < 6; ++i) {
      INFO("component " << i);
      CHECK(rep.no_negative_powers[i]);
      CHECK(rep.limit_matches_target[i]);
    }
    CHECK(rep.passed());
  }
}

TEST_CASE("a wrong variable scaling shows up as a pole") {
  Degeneration d = degeneration(DegenerationId::D6_to_B5);
  d.scale[1] = Qr(1);  // drops the eps^2 needed by the second component
  CHECK_THROWS_AS(run_degeneration(d), VerificationFailure);
}

TEST_CASE("the exact change of variables onto the sixth system") {
  auto rep = equivalence_b5_to_d51();
  CHECK(rep.symplectic);
  CHECK(rep.constraint_image_exact);
  for (std::size_t i = 0; i < 6; ++i) {
    INFO("component " << i);
    CHECK(rep.component_matches[i]);
  }
  CHECK(rep.passed());
}

TEST_CASE("planar canonical changes reproduce the printed block identities") {
  const RatFn q = V(VQ), p = V(VP), t = V(VT), al = V(VAL);

  auto tr1 = symplectic_tr(TrId::tr1);
  CHECK(tr1.symplectic);
  // The printed identity is a statement about flows: plain substitution
  // misses the time-derivative term of the generating function.
  CHECK_FALSE(tr1.substitution_matches_printed);
  CHECK(tr1.flow_transport_matches_printed);
  CHECK(tr1.correction == -q * p / t);
  CHECK(tr1.printed_identity_holds());

  auto tr2 = symplectic_tr(TrId::tr2);
  CHECK(tr2.symplectic);
  CHECK_FALSE(tr2.substitution_matches_printed);
  CHECK(tr2.flow_transport_matches_printed);
  CHECK(tr2.correction == -q * p / t);
  CHECK(tr2.printed_identity_holds());

  auto tr5 = symplectic_tr(TrId::tr5);
  CHECK(tr5.symplectic);
  // Here the printed identity is the plain substitution; the flow picks up
  // the generating-function term qp/t on top of it.
  CHECK(tr5.substitution_matches_printed);
  CHECK_FALSE(tr5.flow_transport_matches_printed);
  CHECK(tr5.correction.is_zero());
  CHECK(tr5.printed_identity_holds());

  const RatFn h5 = block_hamiltonian(BlockId::H5, VQ, VP, {al});
  const RatFn k5 = block_hamiltonian(BlockId::K5, VQ, VP, {al});
  auto res = pair_flow_transport_residual(h5, k5 + q * p / t, {t * q, p / t});
  CHECK(res[0].is_zero());
  CHECK(res[1].is_zero());
}

TEST_CASE("first integrals are the scaled block Hamiltonians") {
  CHECK(integral_scalings_hold());
  const RatFn t = V(VT), al = V(VAL);
  CHECK(2 * t * block_hamiltonian(BlockId::H3, VQ, VP, {al}) ==
        first_integral(3));
  // The fourth block Hamiltonian depends on q and p only through their
  // product, so the product itself is the conserved quantity.
  const RatFn q = V(VQ), p = V(VP);
  CHECK(first_integral(4) == q * p);
  CHECK(2 * t * block_hamiltonian(BlockId::K5, VQ, VP, {al}) ==
        first_integral(5));
}

TEST_CASE("the two one-block templates are conjugate") {
  auto rep = verify_uv_correspondence();
  CHECK(rep.field_correspondence);
  CHECK(rep.symplectic);
  CHECK(rep.map_order == 2);
  CHECK(rep.passed());
}

TEST_CASE("two-node action on the single-block system") {
  auto rep = verify_a1_symmetry();
  CHECK(rep.generator_symmetry[0]);
  CHECK(rep.generator_symmetry[1]);
  CHECK(rep.generator_symmetry[2]);
  CHECK(rep.s0_involution);
  CHECK(rep.s1_involution);
  CHECK(rep.sigma_order == 2);
  CHECK(rep.integral_scalings);
  CHECK(rep.passed());
}
