#include <stdexcept>

#include "p3lab/weyl.hpp"

namespace p3lab {

ParamMap ParamMap::identity(std::size_t n) {
  ParamMap pm;
  pm.M.assign(n, std::vector<mpq_class>(n, 0));
  pm.c.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) pm.M[i][i] = 1;
  return pm;
}

bool ParamMap::is_identity() const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (c[i] != 0) return false;
    for (std::size_t j = 0; j < size(); ++j) {
      if (M[i][j] != (i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

ParamMap ParamMap::after(const ParamMap& first) const {
  const std::size_t n = size();
  if (first.size() != n) throw std::invalid_argument("ParamMap size mismatch");
  ParamMap out;
  out.M.assign(n, std::vector<mpq_class>(n, 0));
  out.c.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    mpq_class acc = c[i];
    for (std::size_t k = 0; k < n; ++k) {
      if (M[i][k] == 0) continue;
      acc += M[i][k] * first.c[k];
      for (std::size_t j = 0; j < n; ++j) {
        if (first.M[k][j] != 0) out.M[i][j] += M[i][k] * first.M[k][j];
      }
    }
    out.c[i] = acc;
  }
  return out;
}

RatFn ParamMap::image_expr(std::size_t i, const std::vector<int>& pv) const {
  RatFn acc = RatFn::constant(GaussianRational(c[i]));
  for (std::size_t j = 0; j < size(); ++j) {
    if (M[i][j] == 0) continue;
    acc = acc + RatFn::constant(GaussianRational(M[i][j])) * RatFn::variable(pv[j]);
  }
  return acc;
}

BirationalMap BirationalMap::identity(std::string name,
                                      const std::vector<int>& phase_vars,
                                      const std::vector<int>& param_vars) {
  BirationalMap g;
  g.name = std::move(name);
  g.phase_vars = phase_vars;
  g.param_vars = param_vars;
  for (int v : phase_vars) g.images.push_back(RatFn::variable(v));
  g.t_sign = 1;
  g.params = ParamMap::identity(param_vars.size());
  return g;
}

RatFn BirationalMap::t_image() const {
  RatFn t = RatFn::variable(VT);
  return t_sign > 0 ? t : -t;
}

BirationalMap BirationalMap::then(const BirationalMap& next) const {
  if (phase_vars != next.phase_vars || param_vars != next.param_vars)
    throw std::invalid_argument("BirationalMap composition: variable mismatch");
  // Substitute this map's images (phase, t and parameters) into next's
  // formulas: the composite performs *this first.
  std::map<int, RatFn> bind;
  for (std::size_t i = 0; i < phase_vars.size(); ++i) bind[phase_vars[i]] = images[i];
  bind[VT] = t_image();
  for (std::size_t k = 0; k < param_vars.size(); ++k)
    bind[param_vars[k]] = params.image_expr(k, param_vars);

  BirationalMap out;
  out.name = name + "." + next.name;
  out.phase_vars = phase_vars;
  out.param_vars = param_vars;
  for (const RatFn& img : next.images) out.images.push_back(img.substitute(bind));
  out.t_sign = t_sign * next.t_sign;
  out.params = next.params.after(params);
  return out;
}

bool BirationalMap::equals_mod(const BirationalMap& o, const ConstraintIdeal& con) const {
  if (t_sign != o.t_sign) return false;
  if (!(params == o.params)) return false;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (!con.equal_mod(images[i], o.images[i])) return false;
  }
  return true;
}

bool BirationalMap::is_identity_mod(const ConstraintIdeal& con) const {
  if (t_sign != 1) return false;
  if (!params.is_identity()) return false;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (!con.equal_mod(images[i], RatFn::variable(phase_vars[i]))) return false;
  }
  return true;
}

}  // namespace p3lab
