#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "p3lab/numeric.hpp"

using namespace p3lab;

namespace {

const std::vector<Complex> kAlg1Params = {Complex(0.25), Complex(0),
                                          Complex(0),    Complex(0.25),
                                          Complex(0),    Complex(0),
                                          Complex(0.25)};
const State6 kAlg1Start = {Complex(1), Complex(0),  Complex(1),
                           Complex(-0.125), Complex(1), Complex(0)};

const std::vector<Complex> kGenericParams(7, Complex(0.1));
const State6 kGenericPoint = {Complex(1.5),       Complex(0.25),
                              Complex(0.5),       Complex(1.2),
                              Complex(2.0 / 3.0), Complex(0.8)};

double endpoint_error(const NumericConfig& cfg) {
  const Trajectory tr =
      integrate(SystemId::D6, kAlg1Params, kAlg1Start, 1.0, 4.0, cfg);
  return std::abs(tr.states.back()[0] - Complex(2.0));
}

}  // namespace

TEST_CASE("closed-form endpoint: the sqrt-t family reaches x(4) = 2") {
  const Trajectory tr =
      integrate(SystemId::D6, kAlg1Params, kAlg1Start, 1.0, 4.0);
  const State6& fin = tr.states.back();
  CHECK(std::abs(fin[0] - Complex(2.0)) < 1e-8);        // x = sqrt(t)
  CHECK(std::abs(fin[2] - Complex(2.0)) < 1e-8);        // z = sqrt(t)
  CHECK(std::abs(fin[3] - Complex(-1.0 / 16)) < 1e-8);  // w = -a3/(2 sqrt t)
  CHECK(std::abs(fin[4] - Complex(0.5)) < 1e-8);        // q = 1/sqrt(t)
  CHECK(std::abs(fin[1]) < 1e-10);                      // y stays 0
  CHECK(std::abs(fin[5]) < 1e-10);                      // p stays 0
  CHECK(tr.accepted > 0);
  CHECK(tr.times.front() == 1.0);
  CHECK(tr.times.back() == 4.0);
  for (std::size_t r = 1; r < tr.times.size(); ++r)
    CHECK(tr.times[r] > tr.times[r - 1]);
}

TEST_CASE("rational solution: constant components stay put over [1,10]") {
  const State6 start = {Complex(0), Complex(0.5), Complex(0),
                        Complex(0), Complex(0),   Complex(0.5)};
  const Trajectory tr =
      integrate(SystemId::D6, kGenericParams, start, 1.0, 10.0);
  const State6& fin = tr.states.back();
  CHECK(std::abs(fin[0]) < 1e-10);
  CHECK(std::abs(fin[1] - Complex(0.5)) < 1e-10);
  CHECK(std::abs(fin[2]) < 1e-10);
  CHECK(std::abs(fin[3]) < 1e-10);
  CHECK(std::abs(fin[4]) < 1e-10);
  CHECK(std::abs(fin[5] - Complex(5.0)) < 1e-8);  // p = t/2
}

TEST_CASE("zero-length integration returns the initial point") {
  const Trajectory tr =
      integrate(SystemId::D6, kGenericParams, kGenericPoint, 1.0, 1.0);
  REQUIRE(tr.times.size() == 1);
  CHECK(tr.times[0] == 1.0);
  CHECK(tr.states[0] == kGenericPoint);
  CHECK(tr.accepted == 0);
}

TEST_CASE("time paths crossing the fixed singularity are rejected") {
  CHECK_THROWS_AS(
      integrate(SystemId::D6, kGenericParams, kGenericPoint, -1.0, 1.0),
      UsageError);
  CHECK_THROWS_AS(
      integrate(SystemId::D6, kGenericParams, kGenericPoint, 0.0, 1.0),
      UsageError);
  CHECK_THROWS_AS(integrate(SystemId::D6, {Complex(1.0)}, kGenericPoint, 1.0,
                            2.0),
                  UsageError);  // wrong parameter count
  NumericConfig bad;
  bad.min_step = 1.0;
  bad.max_step = 0.5;
  CHECK_THROWS_AS(integrate(SystemId::D6, kGenericParams, kGenericPoint, 1.0,
                            2.0, bad),
                  UsageError);
}

TEST_CASE("pole guard and step underflow abort loudly") {
  NumericConfig guard;
  guard.pole_guard = 10.0;  // every denominator is now "too small"
  CHECK_THROWS_AS(integrate(SystemId::D6, kGenericParams, kGenericPoint, 1.0,
                            2.0, guard),
                  PoleError);

  NumericConfig cramped;
  cramped.rel_tol = 1e-14;
  cramped.abs_tol = 1e-16;
  cramped.min_step = 0.5;
  cramped.max_step = 0.5;
  CHECK_THROWS_AS(integrate(SystemId::D6, kGenericParams, kGenericPoint, 1.0,
                            9.0, cramped),
                  StepUnderflow);
}

TEST_CASE("compiled fields refuse unbound variables") {
  using namespace p3lab::expr;
  CHECK_THROWS_AS(CompiledField({V(VAL) * V(VQ)}, {VQ, VP}, {}, 1e-9),
                  UsageError);
}

TEST_CASE("flows commute with the roster maps along trajectories") {
  for (const char* m : {"s0", "s1", "s2", "s3", "s4", "s5", "s6"}) {
    const CommuteReport rep = symmetry_commute_check(
        SystemId::D6, m, kGenericParams, kGenericPoint, 1.0, 2.0);
    CAPTURE(m);
    CAPTURE(rep.discrepancy);
    CHECK(rep.passed());
  }
}

TEST_CASE("identity map reproduces the flow to machine accuracy") {
  const CommuteReport rep = symmetry_commute_check(
      SystemId::D6, "id", kGenericParams, kGenericPoint, 1.0, 2.0);
  CHECK(rep.discrepancy < 1e-10);
}

TEST_CASE("a time-reflecting map commutes across the mirrored path") {
  const std::vector<Complex> dpar(5, Complex(0.2));
  const State6 pt = {Complex(0.5), Complex(1.0 / 3.0), Complex(2.5),
                     Complex(0.4), Complex(3.0 / 7.0), Complex(5.0 / 3.0)};
  const CommuteReport rep =
      symmetry_commute_check(SystemId::D52, "s4", dpar, pt, 1.0, 2.0);
  CAPTURE(rep.discrepancy);
  CHECK(rep.passed());
}

TEST_CASE("first integrals drift below threshold along their flows") {
  const std::array<Complex, 2> qp = {Complex(1.25, 0.5), Complex(0.75, -0.25)};
  for (int which = 1; which <= 5; ++which) {
    std::vector<Complex> par = {Complex(1.0 / 3.0)};
    if (which == 2) par.push_back(Complex(0.25, 0.5));
    const DriftReport rep = integral_drift_check(which, par, qp, 1.0, 10.0);
    CAPTURE(which);
    CAPTURE(rep.drift);
    CHECK(rep.passed());
    CHECK(rep.samples > 50);
  }
}

TEST_CASE("halving the tolerances tightens the endpoint error") {
  NumericConfig full;
  full.rel_tol = 1e-6;
  full.abs_tol = 1e-8;
  NumericConfig half = full;
  half.rel_tol /= 2;
  half.abs_tol /= 2;
  const double err_full = endpoint_error(full);
  const double err_half = endpoint_error(half);
  // The controller keeps the local error proportional to the tolerance, so
  // one halving buys at least the nominal ~2^{4/5} global factor.
  CHECK(err_half * 1.7 <= err_full);

  NumericConfig tight;
  tight.rel_tol = 1e-8;
  tight.abs_tol = 1e-10;
  CHECK(endpoint_error(tight) * 10 <= err_full);
}

TEST_CASE("round trip returns within ten times the tolerance") {
  const NumericConfig cfg;  // defaults
  const Trajectory fwd =
      integrate(SystemId::D6, kGenericParams, kGenericPoint, 1.0, 2.0, cfg);
  const Trajectory back = integrate(SystemId::D6, kGenericParams,
                                    fwd.states.back(), 2.0, 1.0, cfg);
  for (int i = 0; i < 6; ++i) {
    const double err = std::abs(back.states.back()[i] - kGenericPoint[i]);
    const double bound =
        10 * (cfg.abs_tol +
              cfg.rel_tol * std::max(1.0, std::abs(kGenericPoint[i])));
    CAPTURE(i);
    CHECK(err <= bound);
  }
}

TEST_CASE("trajectory export uses the documented CSV layout") {
  const Trajectory tr =
      integrate(SystemId::D6, kAlg1Params, kAlg1Start, 1.0, 4.0);
  const std::string csv = trajectory_csv(tr);
  const std::string header =
      "t, x_re, x_im, y_re, y_im, z_re, z_im, w_re, w_im, q_re, q_im, p_re, "
      "p_im\n";
  CHECK(csv.substr(0, header.size()) == header);
  const std::size_t rows = std::count(csv.begin(), csv.end(), '\n');
  CHECK(rows == tr.times.size() + 1);  // header + one row per point
  CHECK(csv.find("\n1, 1, 0, 0, 0, 1, 0, -0.125, 0, 1, 0, 0, 0\n") !=
        std::string::npos);
}
