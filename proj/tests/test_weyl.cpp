#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "p3lab/weyl.hpp"

using namespace p3lab;
using expr::Qr;
using expr::V;

namespace {

// Expected braid order matrix from an adjacency list: m=2 for non-adjacent
// pairs, the given order for listed pairs.
std::vector<std::vector<int>> orders_from_edges(
    std::size_t n, std::initializer_list<std::array<int, 3>> edges) {
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 2));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  for (const auto& e : edges) m[e[0]][e[1]] = m[e[1]][e[0]] = e[2];
  return m;
}

// verify_relations is expensive; several cases inspect the same report.
const RelationReport& relation_report(RosterId id) {
  static std::map<RosterId, RelationReport> cache;
  auto it = cache.find(id);
  if (it == cache.end()) it = cache.emplace(id, verify_relations(roster(id))).first;
  return it->second;
}

}  // namespace

TEST_CASE("derived Cartan data matches the affine diagrams") {
  CHECK(cartan_data(roster(RosterId::D6)).order ==
        orders_from_edges(7, {{{0, 2, 3}},
                              {{1, 2, 3}},
                              {{2, 3, 3}},
                              {{3, 4, 3}},
                              {{4, 5, 3}},
                              {{4, 6, 3}}}));
  CHECK(cartan_data(roster(RosterId::B5)).order ==
        orders_from_edges(6, {{{0, 1, 4}},
                              {{1, 2, 3}},
                              {{2, 3, 3}},
                              {{3, 4, 3}},
                              {{3, 5, 3}}}));
  CHECK(cartan_data(roster(RosterId::D52)).order ==
        orders_from_edges(5, {{{0, 1, 4}},
                              {{1, 2, 3}},
                              {{2, 3, 3}},
                              {{3, 4, 4}}}));
  CHECK(cartan_data(roster(RosterId::D51)).order ==
        orders_from_edges(6, {{{0, 2, 3}},
                              {{1, 2, 3}},
                              {{2, 3, 3}},
                              {{3, 4, 3}},
                              {{3, 5, 3}}}));

  // The two-generator group has an infinite braid order (encoded as 0).
  const CartanData a1 = cartan_data(roster(RosterId::A1D7));
  CHECK(a1.bond[0][1] == 4);
  CHECK(a1.order[0][1] == 0);
  CHECK(a1.order[1][0] == 0);
}

TEST_CASE("group relations hold modulo the parameter constraint") {
  struct Expect {
    RosterId id;
    int relations;  // involutions + finite braid relations
    std::size_t autos;
  };
  // 7+21, 6+15, 5+10, 6+15, 2+0 relations respectively.
  const Expect table[] = {{RosterId::D6, 28, 4},
                          {RosterId::B5, 21, 1},
                          {RosterId::D52, 15, 1},
                          {RosterId::D51, 21, 3},
                          {RosterId::A1D7, 2, 1}};
  for (const Expect& e : table) {
    const Roster& r = roster(e.id);
    CAPTURE(r.name);
    const RelationReport& rep = relation_report(e.id);
    for (const std::string& f : rep.failures) CAPTURE(f);
    CHECK(rep.failures.empty());
    CHECK(rep.identities_checked == e.relations + static_cast<int>(e.autos));
    REQUIRE(rep.auto_orders.size() == e.autos);
    for (const auto& [name, order] : rep.auto_orders) {
      CAPTURE(name);
      CHECK(order == 2);
    }
  }
}

TEST_CASE("automorphism conjugation permutes the reflections as expected") {
  const RelationReport& d6 = relation_report(RosterId::D6);
  REQUIRE(d6.conjugation_notes.size() == 4);
  CHECK(d6.conjugation_notes[0] ==
        "pi1: s0->s1 s1->s0 s2->s2 s3->s3 s4->s4 s5->s6 s6->s5");
  CHECK(d6.conjugation_notes[1] ==
        "pi2: s0->s6 s1->s5 s2->s4 s3->s3 s4->s2 s5->s1 s6->s0");
  CHECK(d6.conjugation_notes[2] ==
        "pi3: s0->s0 s1->s1 s2->s2 s3->s3 s4->s4 s5->s6 s6->s5");
  CHECK(d6.conjugation_notes[3] ==
        "pi4: s0->s1 s1->s0 s2->s2 s3->s3 s4->s4 s5->s5 s6->s6");

  const RelationReport& d52 = relation_report(RosterId::D52);
  REQUIRE(d52.conjugation_notes.size() == 1);
  CHECK(d52.conjugation_notes[0] == "pi: s0->s4 s1->s3 s2->s2 s3->s1 s4->s0");

  const RelationReport& a1 = relation_report(RosterId::A1D7);
  REQUIRE(a1.conjugation_notes.size() == 1);
  CHECK(a1.conjugation_notes[0] == "sigma: s0->s1 s1->s0");
}

TEST_CASE("every roster generator transforms the flow onto itself") {
  for (RosterId id : {RosterId::D6, RosterId::B5, RosterId::D52, RosterId::D51,
                      RosterId::A1D7}) {
    const Roster& r = roster(id);
    CAPTURE(r.name);
    for (const BirationalMap* g : r.all_maps()) {
      std::string witness;
      const bool ok = verify_symmetry(r, *g, &witness);
      CAPTURE(g->name);
      CAPTURE(witness);
      CHECK(ok);
    }
  }
}

TEST_CASE("a tampered generator fails the symmetry check") {
  const Roster& r = roster(RosterId::D6);
  BirationalMap bad = r.by_name("s1");
  bad.images[0] = V(VX) + Qr(2) * V(VA1) / V(VY);  // doubled numerator
  CHECK(!verify_symmetry(r, bad));
}

TEST_CASE("composition is associative and preserves symmetry") {
  const Roster& r = roster(RosterId::D6);
  const BirationalMap& s2 = r.by_name("s2");
  const BirationalMap& s3 = r.by_name("s3");
  const BirationalMap& s4 = r.by_name("s4");
  CHECK(s2.then(s3).then(s4).equals_mod(s2.then(s3.then(s4)), r.constraint));
  const BirationalMap c = s2.then(s3);
  CHECK(verify_symmetry(r, c));
}

TEST_CASE("translation words shift the parameters by the stated vectors") {
  struct Expect {
    RosterId id;
    std::size_t count;
  };
  for (const Expect& e : {Expect{RosterId::D6, 6}, Expect{RosterId::B5, 5},
                          Expect{RosterId::D52, 4}}) {
    const std::vector<TranslationReport> reps = verify_translations(e.id);
    REQUIRE(reps.size() == e.count);
    for (const TranslationReport& rep : reps) {
      CAPTURE(roster_name(e.id));
      CAPTURE(rep.name);
      CHECK(rep.is_pure_translation);
      CHECK(rep.matches_printed);
    }
    CHECK(translations_commute(e.id));
  }
}

TEST_CASE("keeping the duplicated letter in the first word breaks it") {
  // With the extra second s1 the parameter action is a reflection conjugate,
  // not a lattice translation.
  const Roster& r = roster(RosterId::D6);
  const std::vector<std::string> printed = {"pi1", "s5", "s4", "s3", "s2", "s1",
                                            "s0", "s1", "s2", "s3", "s4", "s5"};
  const ParamMap pm = word_param_action(r, printed);
  CHECK(!is_lattice_translation(r, pm));
}

TEST_CASE("word composition matches step-by-step composition") {
  const Roster& r = roster(RosterId::D52);
  const BirationalMap a = word_map(r, {"s4", "s3", "s2"});
  const BirationalMap b =
      r.by_name("s4").then(r.by_name("s3")).then(r.by_name("s2"));
  CHECK(a.equals_mod(b, r.constraint));
  CHECK(a.t_sign == -1);  // s4 flips t once
  CHECK(a.params == word_param_action(r, {"s4", "s3", "s2"}));
}

TEST_CASE("the sign-flipped forms of the two-generator maps fail") {
  // Keeping the printed correction-term signs (p + b0/q - t/q^2 and
  // -q + b1/p + 1/p^2) does not map the flow onto itself.
  const Roster& r = roster(RosterId::A1D7);
  BirationalMap s0p = r.by_name("s0");
  s0p.images[1] = V(VP) + V(VBE0) / V(VQ) - V(VT) / (V(VQ) * V(VQ));
  CHECK(!verify_symmetry(r, s0p));
  BirationalMap s1p = r.by_name("s1");
  s1p.images[0] = -V(VQ) + V(VBE1) / V(VP) + Qr(1) / (V(VP) * V(VP));
  CHECK(!verify_symmetry(r, s1p));
}
