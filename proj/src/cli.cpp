#include "p3lab/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "p3lab/confluence.hpp"
#include "p3lab/gaussian.hpp"
#include "p3lab/holomorphy.hpp"
#include "p3lab/numeric.hpp"
#include "p3lab/solutions.hpp"
#include "p3lab/systems.hpp"
#include "p3lab/weyl.hpp"

namespace p3lab::cli {
namespace {

using expr::Qr;
using expr::V;
using nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Small utilities.
// ---------------------------------------------------------------------------

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

// Stamps every record appended since `from` with the elapsed time of the
// library call that produced the batch.
void stamp(std::vector<CheckRecord>& recs, std::size_t from, double ms) {
  for (std::size_t i = from; i < recs.size(); ++i) recs[i].wall_ms = ms;
}

std::string prefixed(const std::string& prefix, const std::string& name) {
  return prefix.empty() ? name : prefix + ":" + name;
}

const char* kPhaseNames[6] = {"x", "y", "z", "w", "q", "p"};

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

SystemId system_from_string(const std::string& s) {
  if (s == "d6") return SystemId::D6;
  if (s == "b5") return SystemId::B5;
  if (s == "d52") return SystemId::D52;
  if (s == "d51") return SystemId::D51;
  throw UsageError("unknown system '" + s + "' (expected d6, b5, d52 or d51)");
}

RosterId roster_from_string(const std::string& s) {
  if (s == "d6") return RosterId::D6;
  if (s == "b5") return RosterId::B5;
  if (s == "d52") return RosterId::D52;
  if (s == "d51") return RosterId::D51;
  if (s == "a1d7") return RosterId::A1D7;
  throw UsageError("unknown system '" + s +
                   "' (expected d6, b5, d52, d51 or a1d7)");
}

// ---------------------------------------------------------------------------
// Numeric payload parsing: JSON arrays whose entries are numbers or
// [re, im] pairs; with `rational` set, entries may also be exact fraction
// strings like "3/4" (parsed exactly, then rounded once to double).
// ---------------------------------------------------------------------------

double number_from(const nlohmann::json& j, bool rational, const char* what) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    if (!rational)
      throw UsageError(std::string(what) +
                       ": fraction strings need the --rational flag");
    try {
      mpq_class q(j.get<std::string>());
      q.canonicalize();
      return q.get_d();
    } catch (const std::invalid_argument&) {
      throw UsageError(std::string(what) + ": bad fraction '" +
                       j.get<std::string>() + "'");
    }
  }
  throw UsageError(std::string(what) + ": entries must be numbers" +
                   (rational ? " or fraction strings" : ""));
}

std::vector<Complex> parse_complex_array(const std::string& text,
                                         bool rational, const char* what) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(std::string(what) + ": invalid JSON (" + e.what() + ")");
  }
  if (!j.is_array())
    throw UsageError(std::string(what) + ": expected a JSON array");
  std::vector<Complex> out;
  for (const auto& entry : j) {
    if (entry.is_array()) {
      if (entry.size() != 2)
        throw UsageError(std::string(what) +
                         ": complex entries must be [re, im] pairs");
      out.emplace_back(number_from(entry[0], rational, what),
                       number_from(entry[1], rational, what));
    } else {
      out.emplace_back(number_from(entry, rational, what), 0.0);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Check runners.  Each appends records in a deterministic order (roster
// order for per-map checks) and returns nothing; failures are recorded, not
// thrown, so a run always yields a full report.
// ---------------------------------------------------------------------------

void checks_relations(std::vector<CheckRecord>& recs, RosterId id,
                      const std::string& prefix) {
  const Roster& r = roster(id);
  const std::size_t from = recs.size();
  Stopwatch sw;
  const RelationReport rr = verify_relations(r);
  std::string witness =
      std::to_string(rr.identities_checked) + " identities checked";
  if (!rr.failures.empty()) {
    witness += "; failing: ";
    for (std::size_t i = 0; i < rr.failures.size(); ++i) {
      if (i) witness += "; ";
      witness += rr.failures[i];
    }
  }
  recs.push_back({prefixed(prefix, "involutions+braids"),
                  rr.failures.empty() ? "pass" : "fail", witness, 0.0});
  for (const auto& [name, order] : rr.auto_orders) {
    recs.push_back({prefixed(prefix, "order(" + name + ")"),
                    order > 0 ? "recorded" : "fail",
                    "composition order " + std::to_string(order), 0.0});
  }
  if (!rr.conjugation_notes.empty()) {
    std::string notes;
    for (std::size_t i = 0; i < rr.conjugation_notes.size(); ++i) {
      if (i) notes += "; ";
      notes += rr.conjugation_notes[i];
    }
    recs.push_back(
        {prefixed(prefix, "conjugation-action"), "recorded", notes, 0.0});
  }
  stamp(recs, from, sw.ms());
}

void checks_symmetry(std::vector<CheckRecord>& recs, RosterId id,
                     const std::string& map_name, const std::string& prefix) {
  const Roster& r = roster(id);
  std::vector<const BirationalMap*> maps;
  if (map_name.empty()) {
    maps = r.all_maps();
  } else {
    try {
      maps.push_back(&r.by_name(map_name));
    } catch (const std::invalid_argument&) {
      throw UsageError("unknown map '" + map_name + "' for this system");
    }
  }
  for (const BirationalMap* g : maps) {
    Stopwatch sw;
    std::string witness;
    const bool ok = verify_symmetry(r, *g, &witness);
    if (ok && witness.empty())
      witness = "pullback of the flow matches on all six components";
    recs.push_back({prefixed(prefix, "symmetry(" + g->name + ")"),
                    ok ? "pass" : "fail", witness, sw.ms()});
  }
}

void checks_translations(std::vector<CheckRecord>& recs, RosterId id,
                         const std::string& prefix) {
  const std::size_t from = recs.size();
  Stopwatch sw;
  const std::vector<TranslationReport> reps = verify_translations(id);
  if (reps.empty()) {
    recs.push_back({prefixed(prefix, "translations"), "recorded",
                    "no translation words are stated for this roster", 0.0});
    stamp(recs, from, sw.ms());
    return;
  }
  for (const TranslationReport& rep : reps) {
    std::string shift = "shift (";
    for (std::size_t i = 0; i < rep.shift.size(); ++i) {
      if (i) shift += ", ";
      shift += rep.shift[i].get_str();
    }
    shift += ") on the constraint level set";
    recs.push_back({prefixed(prefix, rep.name),
                    rep.is_pure_translation && rep.matches_printed ? "pass"
                                                                   : "fail",
                    shift, 0.0});
  }
  const bool comm = translations_commute(id);
  recs.push_back({prefixed(prefix, "pairwise-commutation"),
                  comm ? "recorded" : "fail",
                  comm ? "all translation pairs commute"
                       : "a pair of translations fails to commute",
                  0.0});
  stamp(recs, from, sw.ms());
}

void checks_charts(std::vector<CheckRecord>& recs, SystemId sys,
                   const std::string& prefix) {
  const std::size_t from = recs.size();
  Stopwatch sw;
  const std::vector<ChartReport> reps = check_all_charts(sys);
  if (reps.empty()) {
    recs.push_back({prefixed(prefix, "charts"), "recorded",
                    "no chart list is stated for this system", 0.0});
    stamp(recs, from, sw.ms());
    return;
  }
  for (const ChartReport& rep : reps) {
    recs.push_back({prefixed(prefix, rep.chart_id),
                    rep.round_trip_identity && rep.polynomial ? "pass"
                                                              : "fail",
                    rep.expression + " polynomial; chart map exactly invertible",
                    0.0});
  }
  if (sys == SystemId::D6) {
    // Sensitivity control: without the stated correction term the last
    // chart's Hamiltonian must NOT be polynomial.
    const bool poly = uncorrected_hamiltonian_is_polynomial(sys, "r6");
    recs.push_back({prefixed(prefix, "r6-uncorrected-control"),
                    poly ? "fail" : "pass",
                    "plain Hamiltonian is rejected in the r6 chart "
                    "(the correction term is necessary)",
                    0.0});
  }
  stamp(recs, from, sw.ms());
}

void checks_degeneration(std::vector<CheckRecord>& recs, DegenerationId id,
                         const std::string& prefix) {
  const std::size_t from = recs.size();
  Stopwatch sw;
  try {
    const DegenerationReport rep = degenerate(id);
    recs.push_back({prefixed(prefix, "constraint-image"),
                    rep.constraint_image_exact ? "pass" : "fail",
                    "source parameter relation maps exactly onto the target "
                    "relation",
                    0.0});
    for (int i = 0; i < 6; ++i) {
      const bool ok = rep.no_negative_powers[i] && rep.limit_matches_target[i];
      std::string w = rep.no_negative_powers[i]
                          ? "no negative powers of the small parameter"
                          : "negative powers of the small parameter survive";
      w += rep.limit_matches_target[i]
               ? "; constant term equals the target component"
               : "; constant term differs from the target component";
      recs.push_back({prefixed(prefix, std::string("limit(") +
                                           kPhaseNames[i] + ")"),
                      ok ? "pass" : "fail", w, 0.0});
    }
  } catch (const VerificationFailure& e) {
    recs.push_back({prefixed(prefix, "degeneration"), "fail", e.what(), 0.0});
  }
  stamp(recs, from, sw.ms());
}

void checks_equivalence(std::vector<CheckRecord>& recs,
                        const std::string& prefix) {
  const std::size_t from = recs.size();
  Stopwatch sw;
  const EquivalenceReport rep = equivalence_b5_to_d51();
  for (int i = 0; i < 6; ++i) {
    recs.push_back({prefixed(prefix, std::string("component(") +
                                         kPhaseNames[i] + ")"),
                    rep.component_matches[i] ? "pass" : "fail",
                    "flow carried exactly onto the target flow", 0.0});
  }
  recs.push_back({prefixed(prefix, "symplectic"),
                  rep.symplectic ? "pass" : "fail",
                  "the change of variables preserves the full two-form", 0.0});
  recs.push_back({prefixed(prefix, "constraint-image"),
                  rep.constraint_image_exact ? "pass" : "fail",
                  "parameter relation maps exactly onto the target relation",
                  0.0});
  stamp(recs, from, sw.ms());
}

void checks_tr(std::vector<CheckRecord>& recs, const std::string& prefix) {
  for (const TrId id : {TrId::tr1, TrId::tr2, TrId::tr5}) {
    const std::size_t from = recs.size();
    Stopwatch sw;
    const TrReport rep = symplectic_tr(id);
    recs.push_back({prefixed(prefix, rep.name + "-symplectic"),
                    rep.symplectic ? "pass" : "fail",
                    "pair Jacobian has determinant one", 0.0});
    std::string w;
    if (rep.substitution_matches_printed) {
      w = "holds as a plain coordinate substitution";
    } else if (rep.flow_transport_matches_printed) {
      w = "holds at the flow level; substitution differs by " +
          rep.correction.str();
    } else {
      w = "fails both as substitution and at the flow level";
    }
    recs.push_back({prefixed(prefix, rep.name + "-identity"),
                    rep.printed_identity_holds() ? "pass" : "fail", w, 0.0});
    stamp(recs, from, sw.ms());
  }
  Stopwatch sw;
  const bool ok = integral_scalings_hold();
  recs.push_back({prefixed(prefix, "integral-scalings"),
                  ok ? "pass" : "fail",
                  "t-scaled block Hamiltonians equal the first and second "
                  "conserved quantities exactly",
                  sw.ms()});
}

void checks_uv(std::vector<CheckRecord>& recs, const std::string& prefix) {
  {
    const std::size_t from = recs.size();
    Stopwatch sw;
    const UvReport rep = verify_uv_correspondence();
    recs.push_back({prefixed(prefix, "uv-field-correspondence"),
                    rep.field_correspondence ? "pass" : "fail",
                    "the pair map carries one template flow onto the other",
                    0.0});
    recs.push_back({prefixed(prefix, "uv-symplectic"),
                    rep.symplectic ? "pass" : "fail",
                    "pair Jacobian has determinant one", 0.0});
    recs.push_back({prefixed(prefix, "uv-order"),
                    rep.map_order > 0 ? "recorded" : "fail",
                    "composition order " + std::to_string(rep.map_order),
                    0.0});
    stamp(recs, from, sw.ms());
  }
  {
    const std::size_t from = recs.size();
    Stopwatch sw;
    const A1Report rep = verify_a1_symmetry();
    const char* gens[3] = {"s0", "s1", "sigma"};
    for (int i = 0; i < 3; ++i) {
      recs.push_back({prefixed(prefix, std::string("a1-symmetry(") + gens[i] +
                                           ")"),
                      rep.generator_symmetry[i] ? "pass" : "fail",
                      "generator is a symmetry of the one-block flow", 0.0});
    }
    recs.push_back({prefixed(prefix, "a1-involution(s0)"),
                    rep.s0_involution ? "pass" : "fail",
                    "squares to the identity modulo the constraint", 0.0});
    recs.push_back({prefixed(prefix, "a1-involution(s1)"),
                    rep.s1_involution ? "pass" : "fail",
                    "squares to the identity modulo the constraint", 0.0});
    recs.push_back({prefixed(prefix, "a1-order(sigma)"),
                    rep.sigma_order > 0 ? "recorded" : "fail",
                    "composition order " + std::to_string(rep.sigma_order),
                    0.0});
    recs.push_back({prefixed(prefix, "a1-integral-scalings"),
                    rep.integral_scalings ? "pass" : "fail",
                    "t-scaled block Hamiltonians equal the first and second "
                    "conserved quantities exactly",
                    0.0});
    stamp(recs, from, sw.ms());
  }
  {
    Stopwatch sw;
    const ScalarReduction sr = scalar_reduction_of_d7_block();
    const bool coeffs_ok = sr.a == Qr(-8) && sr.b == 4 * (1 - V(VBE1)) &&
                           sr.c == Qr(0) && sr.d == Qr(-4);
    recs.push_back({prefixed(prefix, "scalar-reduction"),
                    sr.matches_template && coeffs_ok ? "pass" : "fail",
                    "second-order scalar form with a=-8, b=4(1-b1), c=0, d=-4",
                    sw.ms()});
  }
}

void checks_confluence(std::vector<CheckRecord>& recs,
                       const std::string& which, const std::string& prefix) {
  if (which == "d6-b5") {
    checks_degeneration(recs, DegenerationId::D6_to_B5, prefix);
  } else if (which == "d6-d52") {
    checks_degeneration(recs, DegenerationId::D6_to_D52, prefix);
  } else if (which == "b5-d51") {
    checks_equivalence(recs, prefix);
  } else if (which == "tr") {
    checks_tr(recs, prefix);
  } else if (which == "uv") {
    checks_uv(recs, prefix);
  } else {
    throw UsageError("unknown confluence check '" + which +
                     "' (expected d6-b5, d6-d52, b5-d51, tr or uv)");
  }
}

void checks_solutions(std::vector<CheckRecord>& recs, const std::string& id,
                      const std::string& prefix) {
  std::vector<std::string> ids;
  if (id.empty()) {
    ids = solution_ids();
  } else {
    ids.push_back(id);
  }
  for (const std::string& sid : ids) {
    Stopwatch sw;
    const SolutionReport rep = verify_solution(seed_solution(sid));
    std::string w;
    if (rep.passed()) {
      w = "parameter constraint holds; all six residuals vanish identically";
    } else {
      w = rep.constraint_satisfied ? "constraint holds"
                                   : "constraint violated";
      for (int i = 0; i < 6; ++i) {
        if (!rep.residual_zero[i])
          w += std::string("; residual(") + kPhaseNames[i] +
               ") = " + rep.residuals[i];
      }
    }
    recs.push_back({prefixed(prefix, sid), rep.passed() ? "pass" : "fail", w,
                    sw.ms()});
    if (sid == "d6_fixed") {
      Stopwatch sw2;
      const bool fixed = fixed_solution_is_pi1_fixed_point();
      recs.push_back({prefixed(prefix, "pi1-fixed-point"),
                      fixed ? "pass" : "fail",
                      "the rational solution is a fixed point of the diagram "
                      "involution",
                      sw2.ms()});
    }
  }
}

void checks_integrals(std::vector<CheckRecord>& recs,
                      const std::string& prefix) {
  for (int which = 1; which <= 5; ++which) {
    Stopwatch sw;
    const IntegralReport rep = verify_first_integral(which);
    std::string w = rep.conserved
                        ? "total t-derivative along the block flow vanishes "
                          "identically"
                        : "total t-derivative along the block flow is nonzero";
    if (rep.has_scaling)
      w += rep.scaling_holds
               ? "; stated t-scaling to the block Hamiltonian holds"
               : "; stated t-scaling to the block Hamiltonian fails";
    recs.push_back({prefixed(prefix, "I" + std::to_string(which)),
                    rep.passed() ? "pass" : "fail", w, sw.ms()});
  }
}

void checks_all(std::vector<CheckRecord>& recs) {
  const std::vector<std::pair<RosterId, std::string>> rosters = {
      {RosterId::D6, "d6"},
      {RosterId::B5, "b5"},
      {RosterId::D52, "d52"},
      {RosterId::D51, "d51"},
      {RosterId::A1D7, "a1d7"}};
  for (const auto& [rid, tag] : rosters) checks_relations(recs, rid, tag);
  for (const auto& [rid, tag] : rosters) checks_symmetry(recs, rid, "", tag);
  for (const auto& [rid, tag] : rosters) {
    if (rid == RosterId::D51 || rid == RosterId::A1D7) continue;
    checks_translations(recs, rid, tag);
  }
  const std::vector<std::pair<SystemId, std::string>> chart_systems = {
      {SystemId::D6, "d6"}, {SystemId::B5, "b5"}, {SystemId::D52, "d52"}};
  for (const auto& [sys, tag] : chart_systems) checks_charts(recs, sys, tag);
  for (const char* which : {"d6-b5", "d6-d52", "b5-d51", "tr", "uv"}) {
    checks_confluence(recs, which, which);
  }
  checks_solutions(recs, "", "solutions");
  checks_integrals(recs, "integrals");
}

// ---------------------------------------------------------------------------
// Report rendering.
// ---------------------------------------------------------------------------

ordered_json report_json(const std::string& command, const std::string& scope,
                         const std::vector<CheckRecord>& recs) {
  ordered_json j;
  j["schema"] = 1;
  j["command"] = command;
  j["system"] = scope;
  ordered_json checks = ordered_json::array();
  int npass = 0, nfail = 0, nrec = 0;
  for (const CheckRecord& r : recs) {
    ordered_json c;
    c["name"] = r.name;
    c["status"] = r.status;
    c["witness"] = r.witness;
    c["wall_ms"] = r.wall_ms;
    checks.push_back(std::move(c));
    if (r.status == "pass") ++npass;
    else if (r.status == "fail") ++nfail;
    else ++nrec;
  }
  j["checks"] = std::move(checks);
  j["summary"] = {{"pass", npass}, {"fail", nfail}, {"recorded", nrec}};
  return j;
}

void human_table(std::ostream& err, const std::vector<CheckRecord>& recs) {
  std::size_t width = 5;
  for (const CheckRecord& r : recs) width = std::max(width, r.name.size());
  width = std::min<std::size_t>(width, 44);
  int npass = 0, nfail = 0, nrec = 0;
  double total = 0.0;
  for (const CheckRecord& r : recs) {
    std::string name = r.name;
    if (name.size() > width) name = name.substr(0, width - 3) + "...";
    std::string witness = r.witness;
    if (witness.size() > 100) witness = witness.substr(0, 97) + "...";
    err << "  " << name << std::string(width - name.size() + 2, ' ')
        << r.status << std::string(r.status.size() < 8 ? 8 - r.status.size() : 1, ' ')
        << witness << "\n";
    if (r.status == "pass") ++npass;
    else if (r.status == "fail") ++nfail;
    else ++nrec;
    total += r.wall_ms;
  }
  err << "  -- " << npass << " pass, " << nfail << " fail, " << nrec
      << " recorded (" << fmt_double(total) << " ms)\n";
}

int emit_report(const std::string& command, const std::string& scope,
                const std::vector<CheckRecord>& recs,
                const std::string& out_path, std::ostream& out,
                std::ostream& err) {
  const ordered_json j = report_json(command, scope, recs);
  if (out_path.empty()) {
    out << j.dump(2) << "\n";
  } else {
    std::ofstream f(out_path);
    if (!f) throw UsageError("cannot open '" + out_path + "' for writing");
    f << j.dump(2) << "\n";
  }
  human_table(err, recs);
  for (const CheckRecord& r : recs)
    if (r.status == "fail") return 1;
  return 0;
}

std::string join_args(const std::vector<std::string>& args) {
  std::string s;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) s += ' ';
    s += args[i];
  }
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// Entry point.
// ---------------------------------------------------------------------------

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{
      "p3lab: exact and numeric verification for the coupled "
      "third-Painleve Hamiltonian systems"};
  app.require_subcommand(1);

  std::string system_str, map_str, which_str, id_str;
  std::string params_json, initial_json, out_path;
  double t0 = 0.0, t1 = 0.0, tol = -1.0;
  bool rational = false;

  CLI::App* verify = app.add_subcommand(
      "verify", "exact symbolic checks (free parameters stay symbolic)");
  verify->require_subcommand(1);

  CLI::App* v_rel = verify->add_subcommand(
      "relations", "generator involutions, braid relations, diagram rotations");
  v_rel->add_option("--system", system_str, "d6|b5|d52|d51|a1d7")->required();

  CLI::App* v_sym = verify->add_subcommand(
      "symmetry", "each roster map is a symmetry of its flow");
  v_sym->add_option("--system", system_str, "d6|b5|d52|d51|a1d7")->required();
  v_sym->add_option("--map", map_str, "single map name (default: all maps)");

  CLI::App* v_tr = verify->add_subcommand(
      "translations", "translation words shift parameters by stated vectors");
  v_tr->add_option("--system", system_str, "d6|b5|d52|d51|a1d7")->required();

  CLI::App* v_ch = verify->add_subcommand(
      "charts", "polynomiality of the corrected Hamiltonian in each chart");
  v_ch->add_option("--system", system_str, "d6|b5|d52")->required();

  CLI::App* v_conf = verify->add_subcommand(
      "confluence", "degeneration limits, equivalences and pair maps");
  v_conf
      ->add_option("--which", which_str, "d6-b5|d6-d52|b5-d51|tr|uv")
      ->required();

  CLI::App* v_sol = verify->add_subcommand(
      "solutions", "closed-form seed solutions solve their systems exactly");
  v_sol->add_option("--id", id_str,
                    "single solution id (default: all known ids)");

  CLI::App* v_int = verify->add_subcommand(
      "integrals", "first integrals of the one-block flows are conserved");

  CLI::App* v_all =
      verify->add_subcommand("all", "the entire symbolic suite");

  auto add_report_out = [&](CLI::App* c) {
    c->add_option("--out", out_path, "write the JSON report here instead of "
                                     "stdout");
  };
  for (CLI::App* c : {v_rel, v_sym, v_tr, v_ch, v_conf, v_sol, v_int, v_all})
    add_report_out(c);

  CLI::App* integ = app.add_subcommand(
      "integrate", "adaptive numeric integration of one coupled system");
  integ->add_option("--system", system_str, "d6|b5|d52|d51")->required();
  integ
      ->add_option("--params", params_json,
                   "JSON array of parameter values ([re, im] pairs or numbers)")
      ->required();
  integ
      ->add_option("--initial", initial_json,
                   "JSON array of six initial phase values")
      ->required();
  integ->add_option("--t0", t0, "start time (nonzero)")->required();
  integ->add_option("--t1", t1, "end time (same sign as --t0)")->required();
  integ->add_option("--tol", tol, "relative tolerance (absolute = tol/100)");
  integ->add_option("--out", out_path,
                    "write the trajectory CSV here (default: stdout)");
  integ->add_flag("--rational", rational,
                  "accept exact fraction strings like \"3/4\" in payloads");

  CLI::App* comm = app.add_subcommand(
      "commute", "two-path check: integrate-then-map equals map-then-integrate");
  comm->add_option("--system", system_str, "d6|b5|d52|d51")->required();
  comm->add_option("--map", map_str, "roster map name (or 'id')")->required();
  comm
      ->add_option("--params", params_json,
                   "JSON array of parameter values ([re, im] pairs or numbers)")
      ->required();
  comm
      ->add_option("--initial", initial_json,
                   "JSON array of six initial phase values")
      ->required();
  comm->add_option("--t0", t0, "start time (nonzero)")->required();
  comm->add_option("--t1", t1, "end time (same sign as --t0)")->required();
  comm->add_option("--out", out_path, "write the JSON report here instead of "
                                      "stdout");
  comm->add_flag("--rational", rational,
                 "accept exact fraction strings like \"3/4\" in payloads");

  try {
    // CLI11's vector overload consumes the arguments back to front.
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err) ? 2 : 0;
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err) ? 2 : 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  const std::string command = join_args(args);
  try {
    std::vector<CheckRecord> recs;

    if (verify->parsed()) {
      std::string scope;
      if (v_rel->parsed()) {
        scope = system_str;
        checks_relations(recs, roster_from_string(system_str), "");
      } else if (v_sym->parsed()) {
        scope = system_str;
        checks_symmetry(recs, roster_from_string(system_str), map_str, "");
      } else if (v_tr->parsed()) {
        scope = system_str;
        checks_translations(recs, roster_from_string(system_str), "");
      } else if (v_ch->parsed()) {
        scope = system_str;
        checks_charts(recs, system_from_string(system_str), "");
      } else if (v_conf->parsed()) {
        scope = which_str;
        checks_confluence(recs, which_str, "");
      } else if (v_sol->parsed()) {
        scope = id_str.empty() ? "all" : id_str;
        checks_solutions(recs, id_str, "");
      } else if (v_int->parsed()) {
        scope = "blocks";
        checks_integrals(recs, "");
      } else if (v_all->parsed()) {
        scope = "all";
        checks_all(recs);
      }
      return emit_report(command, scope, recs, out_path, out, err);
    }

    if (integ->parsed()) {
      const SystemId sys = system_from_string(system_str);
      const std::vector<Complex> params =
          parse_complex_array(params_json, rational, "--params");
      const std::vector<Complex> init =
          parse_complex_array(initial_json, rational, "--initial");
      if (init.size() != 6)
        throw UsageError("--initial: expected exactly 6 entries");
      State6 y0;
      std::copy(init.begin(), init.end(), y0.begin());
      NumericConfig cfg;
      if (integ->count("--tol") > 0) {
        if (tol <= 0) throw UsageError("--tol must be positive");
        cfg.rel_tol = tol;
        cfg.abs_tol = tol * 1e-2;
      }
      Stopwatch sw;
      try {
        const Trajectory tr = integrate(sys, params, y0, t0, t1, cfg);
        const std::string csv = trajectory_csv(tr);
        if (out_path.empty()) {
          out << csv;
        } else {
          std::ofstream f(out_path);
          if (!f)
            throw UsageError("cannot open '" + out_path + "' for writing");
          f << csv;
        }
        std::string w = "accepted " + std::to_string(tr.accepted) +
                        " steps, rejected " + std::to_string(tr.rejected) +
                        "; " + std::to_string(tr.times.size()) + " rows";
        if (!out_path.empty()) w += " -> " + out_path;
        recs.push_back({"integrate(" + system_str + ")", "recorded", w,
                        sw.ms()});
        // CSV owns stdout when no --out was given; the JSON report then goes
        // only where it cannot corrupt the data hand-off.
        if (!out_path.empty()) {
          const ordered_json j = report_json(command, system_str, recs);
          out << j.dump(2) << "\n";
        }
        human_table(err, recs);
        return 0;
      } catch (const PoleError& e) {
        recs.push_back(
            {"integrate(" + system_str + ")", "fail", e.what(), sw.ms()});
      } catch (const StepUnderflow& e) {
        recs.push_back(
            {"integrate(" + system_str + ")", "fail", e.what(), sw.ms()});
      }
      const ordered_json j = report_json(command, system_str, recs);
      out << j.dump(2) << "\n";
      human_table(err, recs);
      return 1;
    }

    if (comm->parsed()) {
      const SystemId sys = system_from_string(system_str);
      const std::vector<Complex> params =
          parse_complex_array(params_json, rational, "--params");
      const std::vector<Complex> init =
          parse_complex_array(initial_json, rational, "--initial");
      if (init.size() != 6)
        throw UsageError("--initial: expected exactly 6 entries");
      State6 y0;
      std::copy(init.begin(), init.end(), y0.begin());
      Stopwatch sw;
      try {
        const CommuteReport rep =
            symmetry_commute_check(sys, map_str, params, y0, t0, t1);
        recs.push_back({"commute(" + map_str + ")",
                        rep.passed() ? "pass" : "fail",
                        "max endpoint discrepancy " +
                            fmt_double(rep.discrepancy) + " (threshold " +
                            fmt_double(rep.threshold) + ")",
                        sw.ms()});
      } catch (const std::invalid_argument&) {
        throw UsageError("unknown map '" + map_str + "' for this system");
      } catch (const PoleError& e) {
        recs.push_back({"commute(" + map_str + ")", "fail", e.what(),
                        sw.ms()});
      } catch (const StepUnderflow& e) {
        recs.push_back({"commute(" + map_str + ")", "fail", e.what(),
                        sw.ms()});
      }
      return emit_report(command, system_str, recs, out_path, out, err);
    }

    throw UsageError("no subcommand given");
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const VerificationFailure& e) {
    err << "verification failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
}

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace p3lab::cli
