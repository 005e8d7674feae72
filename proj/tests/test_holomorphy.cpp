#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "p3lab/holomorphy.hpp"

using namespace p3lab;
using namespace p3lab::expr;

namespace {
void check_system_charts(SystemId sys, std::size_t expected_count) {
  auto reports = check_all_charts(sys);
  REQUIRE(reports.size() == expected_count);
  for (const auto& rep : reports) {
    INFO(system_name(sys) << " " << rep.expression);
    CHECK(rep.round_trip_identity);
    CHECK(rep.polynomial);
  }
}
}  // namespace

TEST_CASE("charts are exact transcriptions") {
  const Chart& d6r3 = chart(SystemId::D6, "r3");
  CHECK(d6r3.forward[VZ] == Qr(1) / V(VZ));
  CHECK(d6r3.forward[VW] == -(V(VW) * V(VZ) + V(VA3)) * V(VZ));
  CHECK(d6r3.forward[VX] == V(VX));
  CHECK(d6r3.forward[VP] == V(VP));

  const Chart& b5r0 = chart(SystemId::B5, "r0");
  CHECK(b5r0.forward[VX] ==
        V(VX) + Qr(2) * V(VA0) / V(VY) + Qr(1) / (V(VY) * V(VY)));
  CHECK(b5r0.forward[VY] == V(VY));

  const Chart& d52r4 = chart(SystemId::D52, "r4");
  CHECK(d52r4.forward[VQ] ==
        V(VQ) + Qr(2) * V(VA4) / V(VP) - V(VT) / (V(VP) * V(VP)));
  CHECK(d52r4.forward[VP] == V(VP));
}

TEST_CASE("every stated polynomiality condition holds") {
  check_system_charts(SystemId::D6, 7);
  check_system_charts(SystemId::B5, 6);
  check_system_charts(SystemId::D52, 5);
}

TEST_CASE("checked expressions follow the stated lists") {
  auto exprs = [](SystemId sys) {
    std::vector<std::string> out;
    for (const auto& rep : check_all_charts(sys)) out.push_back(rep.expression);
    return out;
  };
  CHECK(exprs(SystemId::D6) ==
        std::vector<std::string>{"r0(H)", "r1(H)", "r2(H)", "r3(H)", "r5(H)",
                                 "r6(H + q)", "r4(r3(H))"});
  CHECK(exprs(SystemId::B5) ==
        std::vector<std::string>{"r0(H)", "r1(H)", "r2(H)", "r4(H)",
                                 "r5(H + q)", "r3(r4(H))"});
  CHECK(exprs(SystemId::D52) ==
        std::vector<std::string>{"r0(H)", "r1(H)", "r2(H)", "r4(H + 1/p)",
                                 "r3(r2(H))"});
}

TEST_CASE("dropping the correction term is detected") {
  // The stated conditions protect H with +q (time-shifted flip charts) or
  // +1/p (time-dependent shear); the bare Hamiltonian must fail there.
  CHECK_FALSE(uncorrected_hamiltonian_is_polynomial(SystemId::D6, "r6"));
  CHECK_FALSE(uncorrected_hamiltonian_is_polynomial(SystemId::B5, "r5"));
  CHECK_FALSE(uncorrected_hamiltonian_is_polynomial(SystemId::D52, "r4"));
}

TEST_CASE("second-stage charts need their parent first") {
  // Applying the second-stage chart to the raw Hamiltonian (skipping the
  // parent transformation) must not be polynomial; otherwise the composite
  // check would be vacuous.
  CHECK_FALSE(uncorrected_hamiltonian_is_polynomial(SystemId::D6, "r4"));
  CHECK_FALSE(uncorrected_hamiltonian_is_polynomial(SystemId::B5, "r3"));
  CHECK_FALSE(uncorrected_hamiltonian_is_polynomial(SystemId::D52, "r3"));
}

TEST_CASE("unknown chart ids are rejected") {
  CHECK_THROWS_AS(chart(SystemId::D6, "r9"), UsageError);
  CHECK_THROWS_AS(chart(SystemId::D51, "r0"), UsageError);
  CHECK(charts(SystemId::D51).empty());
}
