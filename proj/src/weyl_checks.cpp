#include <sstream>
#include <stdexcept>

#include "p3lab/weyl.hpp"

namespace p3lab {

namespace {

long small_int(const mpq_class& q) {
  if (q.get_den() != 1) throw AlgebraError("expected integer entry");
  if (!q.get_num().fits_slong_p()) throw AlgebraError("entry too large");
  return q.get_num().get_si();
}

// Coefficient row of the constraint linear form delta, normalized so the
// relation reads sum(m_i alpha_i) - 1 = 0.
std::vector<mpq_class> delta_row(const Roster& r) {
  const MPoly& rel = r.constraint.relation();
  std::vector<mpq_class> m(r.param_vars.size(), 0);
  GaussianRational cst = rel.coeff_at(Mono{});
  if (cst.im() != 0 || cst.re() == 0)
    throw AlgebraError("constraint has no usable constant term");
  mpq_class scale = mpq_class(-1) / cst.re();
  MPoly rest = rel - MPoly::constant(cst);
  for (std::size_t i = 0; i < r.param_vars.size(); ++i) {
    GaussianRational c = rest.coeff_at(Mono::of_var(r.param_vars[i]));
    if (c.im() != 0) throw AlgebraError("constraint not rational-linear");
    m[i] = c.re() * scale;
    rest = rest - MPoly::monomial(Mono::of_var(r.param_vars[i]), c);
  }
  if (!rest.is_zero()) throw AlgebraError("constraint not linear in parameters");
  return m;
}

}  // namespace

CartanData cartan_data(const Roster& r) {
  const std::size_t n = r.reflections.size();
  CartanData cd;
  cd.bond.assign(n, std::vector<int>(n, 0));
  cd.order.assign(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    cd.bond[i][i] = 4;  // c_ii = -2
    cd.order[i][i] = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      // c_ij = coefficient of alpha_i in s_i(alpha_j).
      long cij = small_int(r.reflections[i].params.M[j][i]);
      long cji = small_int(r.reflections[j].params.M[i][j]);
      long b = cij * cji;
      cd.bond[i][j] = static_cast<int>(b);
      int m = 0;
      if (b == 0) m = 2;
      else if (b == 1) m = 3;
      else if (b == 2) m = 4;
      else if (b == 3) m = 6;
      cd.order[i][j] = m;  // 0 encodes infinite order
    }
  }
  return cd;
}

RelationReport verify_relations(const Roster& r) {
  RelationReport rep;
  auto check_id = [&](const BirationalMap& g, const std::string& label) {
    ++rep.identities_checked;
    if (!g.is_identity_mod(r.constraint)) rep.failures.push_back(label);
  };

  for (const BirationalMap& s : r.reflections) check_id(s.then(s), s.name + "^2");

  const CartanData cd = cartan_data(r);
  const std::size_t n = r.reflections.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const int m = cd.order[i][j];
      if (m == 0) continue;  // infinite braid order: no relation to check
      const BirationalMap pair = r.reflections[i].then(r.reflections[j]);
      BirationalMap pw = pair;
      for (int k = 1; k < m; ++k) pw = pw.then(pair);
      std::ostringstream label;
      label << "(" << r.reflections[i].name << " " << r.reflections[j].name
            << ")^" << m;
      check_id(pw, label.str());
    }
  }

  for (const BirationalMap& a : r.autos) {
    BirationalMap pw = a;
    int order = 0;
    for (int k = 1; k <= 8; ++k) {
      if (pw.is_identity_mod(r.constraint)) {
        order = k;
        break;
      }
      pw = pw.then(a);
    }
    rep.auto_orders.emplace_back(a.name, order);
    ++rep.identities_checked;
    if (order == 0) rep.failures.push_back(a.name + " has order > 8");
  }

  // Conjugation of the reflections by each involutive automorphism permutes
  // the reflection list; record the permutation.
  for (const BirationalMap& a : r.autos) {
    if (!a.then(a).is_identity_mod(r.constraint)) continue;
    std::ostringstream note;
    note << a.name << ":";
    for (const BirationalMap& s : r.reflections) {
      const BirationalMap conj = a.then(s).then(a);
      const BirationalMap* hit = nullptr;
      for (const BirationalMap& cand : r.reflections) {
        if (conj.equals_mod(cand, r.constraint)) {
          hit = &cand;
          break;
        }
      }
      note << " " << s.name << "->" << (hit ? hit->name : std::string("?"));
    }
    rep.conjugation_notes.push_back(note.str());
  }
  return rep;
}

bool verify_symmetry(const Roster& r, const BirationalMap& g,
                     std::string* witness) {
  std::map<int, RatFn> bind;
  for (std::size_t i = 0; i < g.phase_vars.size(); ++i)
    bind[g.phase_vars[i]] = g.images[i];
  bind[VT] = g.t_image();
  for (std::size_t k = 0; k < g.param_vars.size(); ++k)
    bind[g.param_vars[k]] = g.params.image_expr(k, g.param_vars);

  const RatFn sign = expr::Qr(g.t_sign, 1);
  for (std::size_t i = 0; i < g.phase_vars.size(); ++i) {
    // d/dt of the i-th image along the flow: Jacobian term plus explicit t.
    RatFn lhs = g.images[i].derivative(VT);
    for (std::size_t j = 0; j < g.phase_vars.size(); ++j)
      lhs = lhs + g.images[i].derivative(g.phase_vars[j]) * r.field[j];
    const RatFn rhs = r.field[i].substitute(bind) * sign;
    if (!r.constraint.zero_mod(lhs - rhs)) {
      if (witness) {
        *witness = g.name + ": component " +
                   std::string(var_name(g.phase_vars[i])) +
                   " fails the pullback identity";
      }
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Words and translations.
// ---------------------------------------------------------------------------

namespace {

const TranslationDef* find_translation(RosterId id, const std::string& n) {
  for (const TranslationDef& td : translations(id))
    if (td.name == n) return &td;
  return nullptr;
}

}  // namespace

ParamMap word_param_action(const Roster& r, const std::vector<std::string>& word) {
  ParamMap acc = ParamMap::identity(r.param_vars.size());
  for (const std::string& tok : word) {
    if (const TranslationDef* td = find_translation(r.id, tok)) {
      acc = word_param_action(r, td->word).after(acc);
    } else {
      acc = r.by_name(tok).params.after(acc);
    }
  }
  return acc;
}

BirationalMap word_map(const Roster& r, const std::vector<std::string>& word) {
  BirationalMap acc =
      BirationalMap::identity("id", r.phase_vars, r.param_vars);
  for (const std::string& tok : word) {
    if (const TranslationDef* td = find_translation(r.id, tok)) {
      acc = acc.then(word_map(r, td->word));
    } else {
      acc = acc.then(r.by_name(tok));
    }
  }
  return acc;
}

bool is_lattice_translation(const Roster& r, const ParamMap& pm,
                            std::vector<mpq_class>* shift) {
  const std::vector<mpq_class> m = delta_row(r);
  const std::size_t n = r.param_vars.size();
  std::size_t j0 = 0;
  while (j0 < n && m[j0] == 0) ++j0;
  if (j0 == n) throw AlgebraError("degenerate constraint row");
  std::vector<mpq_class> v(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = (pm.M[i][j0] - (i == j0 ? 1 : 0)) / m[j0];
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (pm.c[i] != 0) return false;
    for (std::size_t j = 0; j < n; ++j) {
      mpq_class expect = v[i] * m[j] + (i == j ? 1 : 0);
      if (pm.M[i][j] != expect) return false;
    }
  }
  if (shift) *shift = std::move(v);
  return true;
}

std::vector<TranslationReport> verify_translations(RosterId id) {
  const Roster& r = roster(id);
  std::vector<TranslationReport> out;
  for (const TranslationDef& td : translations(id)) {
    TranslationReport rep;
    rep.name = td.name;
    const ParamMap pm = word_param_action(r, td.word);
    rep.is_pure_translation = is_lattice_translation(r, pm, &rep.shift);
    rep.matches_printed = rep.is_pure_translation && rep.shift == td.printed_shift;
    out.push_back(std::move(rep));
  }
  return out;
}

bool translations_commute(RosterId id) {
  const Roster& r = roster(id);
  const std::vector<TranslationDef>& tds = translations(id);
  std::vector<ParamMap> pms;
  for (const TranslationDef& td : tds) pms.push_back(word_param_action(r, td.word));
  for (std::size_t i = 0; i < pms.size(); ++i) {
    for (std::size_t j = i + 1; j < pms.size(); ++j) {
      if (!(pms[i].after(pms[j]) == pms[j].after(pms[i]))) return false;
    }
  }
  return true;
}

}  // namespace p3lab
