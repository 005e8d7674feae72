#include "p3lab/ratfn.hpp"

#include <algorithm>

namespace p3lab {

void RatFn::normalize() {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = MPoly::one();
    return;
  }
  if (!den_.is_one()) {
    MPoly g = poly_gcd(num_, den_);
    if (!g.is_one()) {
      num_ = num_.divexact(g);
      den_ = den_.divexact(g);
    }
  }
  const GaussianRational& lc = den_.leading_coeff();
  if (!lc.is_one()) {
    GaussianRational inv = lc.inv();
    num_ = num_.mul_coeff(inv);
    den_ = den_.mul_coeff(inv);
  }
}

RatFn RatFn::operator-() const {
  RatFn r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFn RatFn::operator+(const RatFn& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_ == o.den_) return RatFn(num_ + o.num_, den_);
  MPoly g = poly_gcd(den_, o.den_);
  if (g.is_one()) {
    // Coprime denominators: the sum is already in lowest terms.
    RatFn r;
    r.num_ = num_ * o.den_ + o.num_ * den_;
    r.den_ = den_ * o.den_;
    if (r.num_.is_zero()) {
      r.den_ = MPoly::one();
      return r;
    }
    const GaussianRational& lc = r.den_.leading_coeff();
    if (!lc.is_one()) {
      GaussianRational inv = lc.inv();
      r.num_ = r.num_.mul_coeff(inv);
      r.den_ = r.den_.mul_coeff(inv);
    }
    return r;
  }
  // a/b + c/d with g = gcd(b, d): only gcd(t, g) can cancel further.
  MPoly bp = den_.divexact(g);
  MPoly dp = o.den_.divexact(g);
  MPoly t = num_ * dp + o.num_ * bp;
  if (t.is_zero()) return RatFn();
  MPoly g2 = poly_gcd(t, g);
  RatFn r;
  if (g2.is_one()) {
    r.num_ = std::move(t);
    r.den_ = bp * o.den_;
  } else {
    r.num_ = t.divexact(g2);
    r.den_ = bp * o.den_.divexact(g2);
  }
  const GaussianRational& lc = r.den_.leading_coeff();
  if (!lc.is_one()) {
    GaussianRational inv = lc.inv();
    r.num_ = r.num_.mul_coeff(inv);
    r.den_ = r.den_.mul_coeff(inv);
  }
  return r;
}

RatFn RatFn::operator-(const RatFn& o) const { return *this + (-o); }

RatFn RatFn::operator*(const RatFn& o) const {
  if (is_zero() || o.is_zero()) return RatFn();
  MPoly g1 = poly_gcd(num_, o.den_);
  MPoly g2 = poly_gcd(o.num_, den_);
  RatFn r;
  r.num_ = (g1.is_one() ? num_ : num_.divexact(g1)) *
           (g2.is_one() ? o.num_ : o.num_.divexact(g2));
  r.den_ = (g2.is_one() ? den_ : den_.divexact(g2)) *
           (g1.is_one() ? o.den_ : o.den_.divexact(g1));
  const GaussianRational& lc = r.den_.leading_coeff();
  if (!lc.is_one()) {
    GaussianRational inv = lc.inv();
    r.num_ = r.num_.mul_coeff(inv);
    r.den_ = r.den_.mul_coeff(inv);
  }
  return r;
}

RatFn RatFn::operator/(const RatFn& o) const {
  if (o.is_zero()) throw DomainError("division by the zero rational function");
  RatFn inv;
  inv.num_ = o.den_;
  inv.den_ = o.num_;
  const GaussianRational& lc = inv.den_.leading_coeff();
  if (!lc.is_one()) {
    GaussianRational ic = lc.inv();
    inv.num_ = inv.num_.mul_coeff(ic);
    inv.den_ = inv.den_.mul_coeff(ic);
  }
  return *this * inv;
}

RatFn RatFn::pow(int k) const {
  if (k == 0) return RatFn(MPoly::one());
  bool neg = k < 0;
  unsigned n = static_cast<unsigned>(neg ? -k : k);
  if (neg && is_zero()) throw DomainError("negative power of zero");
  RatFn r;
  r.num_ = num_.pow(n);
  r.den_ = den_.pow(n);
  if (neg) std::swap(r.num_, r.den_);
  const GaussianRational& lc = r.den_.leading_coeff();
  if (!lc.is_one()) {
    GaussianRational inv = lc.inv();
    r.num_ = r.num_.mul_coeff(inv);
    r.den_ = r.den_.mul_coeff(inv);
  }
  return r;
}

RatFn RatFn::derivative(int v) const {
  MPoly dn = num_.derivative(v);
  MPoly dd = den_.derivative(v);
  if (dd.is_zero()) return RatFn(std::move(dn), den_);
  // d(n/d) = (n'*dbar - n*(d'/g)) / (d*dbar) with g = gcd(d, d'), d = g*dbar;
  // this avoids forming the full square of the denominator.
  MPoly g = poly_gcd(den_, dd);
  MPoly dbar = g.is_one() ? den_ : den_.divexact(g);
  MPoly ddg = g.is_one() ? dd : dd.divexact(g);
  return RatFn(dn * dbar - num_ * ddg, den_ * dbar);
}

RatFn RatFn::substitute(const std::map<int, RatFn>& bind) const {
  // Active bindings: variables that actually occur here.
  std::vector<int> act;
  for (const auto& [v, img] : bind) {
    (void)img;
    if (uses(v)) act.push_back(v);
  }
  if (act.empty()) return *this;

  // Shared denominator power tables. Using one exponent table M_v for both
  // numerator and denominator makes the overall denominator product cancel:
  //   num_/den_ -> (Pn / D) / (Pd / D) = Pn / Pd.
  struct Tab {
    int var;
    int maxdeg;
    std::vector<MPoly> num_pows, den_pows;
  };
  std::vector<Tab> tabs;
  for (int v : act) {
    const RatFn& img = bind.at(v);
    Tab tb;
    tb.var = v;
    tb.maxdeg = std::max(num_.degree(v), den_.degree(v));
    tb.num_pows = {MPoly::one()};
    tb.den_pows = {MPoly::one()};
    for (int k = 1; k <= tb.maxdeg; ++k) {
      tb.num_pows.push_back(tb.num_pows.back() * img.num());
      tb.den_pows.push_back(tb.den_pows.back() * img.den());
    }
    tabs.push_back(std::move(tb));
  }

  auto subst_poly = [&](const MPoly& f) -> MPoly {
    MPoly acc = MPoly::zero();
    for (const auto& t : f.terms()) {
      // Monomial part over the unbound variables.
      Mono rest = t.m;
      for (const auto& tb : tabs) {
        rest.deg -= rest.e[static_cast<std::size_t>(tb.var)];
        rest.e[static_cast<std::size_t>(tb.var)] = 0;
      }
      MPoly piece = MPoly::monomial(rest, t.c);
      for (const auto& tb : tabs) {
        const int e = t.m.e[static_cast<std::size_t>(tb.var)];
        if (e > 0) piece = piece * tb.num_pows[static_cast<std::size_t>(e)];
        const int ce = tb.maxdeg - e;
        if (ce > 0) piece = piece * tb.den_pows[static_cast<std::size_t>(ce)];
      }
      acc = acc + piece;
    }
    return acc;
  };

  MPoly pn = subst_poly(num_);
  MPoly pd = subst_poly(den_);
  if (pd.is_zero())
    throw DomainError("substitution sends the denominator to zero");
  return RatFn(std::move(pn), std::move(pd));
}

std::string RatFn::str() const {
  if (den_.is_one()) return num_.str();
  std::string n = num_.num_terms() > 1 ? "(" + num_.str() + ")" : num_.str();
  std::string d = den_.num_terms() > 1 ? "(" + den_.str() + ")" : den_.str();
  return n + "/" + d;
}

ConstraintIdeal::ConstraintIdeal(MPoly relation, int elim_var)
    : relation_(std::move(relation)), elim_(elim_var) {
  // relation = c*elim + rest with c a nonzero constant.
  GaussianRational c(0);
  MPoly rest = MPoly::zero();
  for (const auto& t : relation_.terms()) {
    const int e = t.m.e[static_cast<std::size_t>(elim_)];
    if (e == 0) {
      rest = rest + MPoly::monomial(t.m, t.c);
    } else if (e == 1 && t.m.deg == 1) {
      c = t.c;
    } else {
      throw DomainError("constraint relation is not linear in the eliminated variable");
    }
  }
  if (c.is_zero())
    throw DomainError("constraint relation does not involve the eliminated variable");
  solved_ = RatFn((-rest).mul_coeff(c.inv()));
}

RatFn ConstraintIdeal::reduce(const RatFn& f) const {
  if (!f.uses(elim_)) return f;
  return f.substitute({{elim_, solved_}});
}

}  // namespace p3lab
