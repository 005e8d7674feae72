#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "p3lab/ratfn.hpp"
#include "p3lab/systems.hpp"

namespace p3lab {

// Affine-linear action on the parameter vector: alpha -> M*alpha + c, with
// exact rational entries.
struct ParamMap {
  std::vector<std::vector<mpq_class>> M;
  std::vector<mpq_class> c;

  static ParamMap identity(std::size_t n);
  std::size_t size() const { return c.size(); }
  bool is_identity() const;
  bool operator==(const ParamMap& o) const { return M == o.M && c == o.c; }

  // Composite performing `first`, then *this.
  ParamMap after(const ParamMap& first) const;

  // Image of the i-th parameter as an expression in the given variables.
  RatFn image_expr(std::size_t i, const std::vector<int>& param_vars) const;
};

// Birational substitution map on a phase space with an affine action on the
// parameters and t -> (+-)t. A word w1 w2 ... wn acts left to right: w1's
// substitution is performed first, so the composite map is G_wn ∘ ... ∘ G_w1.
struct BirationalMap {
  std::string name;
  std::vector<int> phase_vars;
  std::vector<RatFn> images;  // images of the phase variables, same order
  int t_sign = 1;             // image of t is t_sign * t
  std::vector<int> param_vars;
  ParamMap params;

  static BirationalMap identity(std::string name,
                                const std::vector<int>& phase_vars,
                                const std::vector<int>& param_vars);

  RatFn t_image() const;

  // Apply *this first, then `next`.
  BirationalMap then(const BirationalMap& next) const;

  bool equals_mod(const BirationalMap& o, const ConstraintIdeal& con) const;
  bool is_identity_mod(const ConstraintIdeal& con) const;
};

// ---------------------------------------------------------------------------
// Rosters: generator lists of the symmetry groups of the four coupled
// systems and of the single-block D7-type system.
// ---------------------------------------------------------------------------

enum class RosterId { D6, B5, D52, D51, A1D7 };

std::string roster_name(RosterId id);

struct Roster {
  RosterId id;
  std::string name;
  std::vector<int> phase_vars;
  std::vector<int> param_vars;
  ConstraintIdeal constraint;
  std::vector<RatFn> field;              // vector field being transformed
  std::vector<BirationalMap> reflections;  // s0, s1, ...
  std::vector<BirationalMap> autos;        // diagram automorphisms
  const BirationalMap& by_name(const std::string& n) const;
  std::vector<const BirationalMap*> all_maps() const;
};

const Roster& roster(RosterId id);

// ---------------------------------------------------------------------------
// Structure constants derived from the parameter actions.
// ---------------------------------------------------------------------------

struct CartanData {
  // bond[i][j] = c_ij * c_ji where c_ij is the coefficient of alpha_i in
  // s_i(alpha_j) - alpha_j; order[i][j] is the braid order m_ij derived from
  // it (2, 3, 4 or 6; 0 encodes an infinite order).
  std::vector<std::vector<int>> bond;
  std::vector<std::vector<int>> order;
};

CartanData cartan_data(const Roster& r);

// ---------------------------------------------------------------------------
// Verification routines.
// ---------------------------------------------------------------------------

struct RelationReport {
  int identities_checked = 0;
  std::vector<std::string> failures;
  // Computed orders of the diagram automorphisms (name, order).
  std::vector<std::pair<std::string, int>> auto_orders;
  // Which reflection each conjugation auto . s_i . auto^{-1} lands on.
  std::vector<std::string> conjugation_notes;
};

// Checks s_i^2 = id for every reflection and (s_i s_j)^{m_ij} = id for every
// finite braid order, all modulo the parameter constraint.
RelationReport verify_relations(const Roster& r);

// Pullback check: a map g with phase images X' = g(X, t), t' = (+-)t and
// parameter image g(alpha) is a symmetry of dX/dt = F(X, t; alpha) iff
//   J_g(X) F(X, t; alpha) + dg/dt(X, t) = F(X', t'; g(alpha)) * dt'/dt
// modulo the constraint. The explicit-time term dg/dt is required: several
// roster maps have images that depend on t.
bool verify_symmetry(const Roster& r, const BirationalMap& g,
                     std::string* witness = nullptr);

// ---------------------------------------------------------------------------
// Translations.
// ---------------------------------------------------------------------------

struct TranslationDef {
  std::string name;
  std::vector<std::string> word;  // tokens: generator or translation names
  std::vector<mpq_class> printed_shift;
};

const std::vector<TranslationDef>& translations(RosterId id);

struct TranslationReport {
  std::string name;
  bool is_pure_translation = false;  // param matrix == I + shift * m^T, c == 0
  bool matches_printed = false;
  std::vector<mpq_class> shift;
};

// Tests whether a parameter action is a lattice translation: M = I + v m^T
// with no affine part, where m is the coefficient row of the constraint
// normalization. On the level set it shifts the parameters by v.
bool is_lattice_translation(const Roster& r, const ParamMap& pm,
                            std::vector<mpq_class>* shift = nullptr);

// Compose each translation word (parameter action) and verify it is a pure
// translation by the printed vector on the constraint level set.
std::vector<TranslationReport> verify_translations(RosterId id);

// Pairwise commutation of the translation parameter actions.
bool translations_commute(RosterId id);

// Parameter action of a word, composed left to right.
ParamMap word_param_action(const Roster& r, const std::vector<std::string>& word);
// Full birational composite of a word, composed left to right.
BirationalMap word_map(const Roster& r, const std::vector<std::string>& word);

}  // namespace p3lab
