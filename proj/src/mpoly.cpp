#include "p3lab/mpoly.hpp"

#include <algorithm>
#include <sstream>

namespace p3lab {

Mono Mono::of_var(int v, int k) {
  Mono m;
  if (k < 0) throw AlgebraError("negative exponent in monomial");
  m.e[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(k);
  m.deg = static_cast<std::uint32_t>(k);
  return m;
}

Mono Mono::times(const Mono& o) const {
  Mono r;
  r.deg = deg + o.deg;
  for (std::size_t i = 0; i < NVARS; ++i)
    r.e[i] = static_cast<std::uint16_t>(e[i] + o.e[i]);
  return r;
}

bool Mono::divides(const Mono& o) const {
  if (deg > o.deg) return false;
  for (std::size_t i = 0; i < NVARS; ++i)
    if (e[i] > o.e[i]) return false;
  return true;
}

Mono Mono::quotient_of(const Mono& o) const {
  Mono r;
  r.deg = o.deg - deg;
  for (std::size_t i = 0; i < NVARS; ++i)
    r.e[i] = static_cast<std::uint16_t>(o.e[i] - e[i]);
  return r;
}

int mono_cmp(const Mono& a, const Mono& b) {
  if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
  for (std::size_t i = 0; i < NVARS; ++i) {
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
  }
  return 0;
}

MPoly MPoly::constant(GaussianRational c) {
  MPoly p;
  if (!c.is_zero()) p.t_.push_back(Term{Mono::unit(), std::move(c)});
  return p;
}

MPoly MPoly::variable(int v, int power) {
  if (power == 0) return one();
  MPoly p;
  p.t_.push_back(Term{Mono::of_var(v, power), GaussianRational(1)});
  return p;
}

MPoly MPoly::monomial(Mono m, GaussianRational c) {
  MPoly p;
  if (!c.is_zero()) p.t_.push_back(Term{m, std::move(c)});
  return p;
}

MPoly MPoly::from_terms(std::vector<Term> ts) {
  std::sort(ts.begin(), ts.end(), [](const Term& a, const Term& b) {
    return mono_cmp(a.m, b.m) > 0;
  });
  MPoly p;
  p.t_.reserve(ts.size());
  for (auto& t : ts) {
    if (!p.t_.empty() && mono_cmp(p.t_.back().m, t.m) == 0) {
      p.t_.back().c += t.c;
      if (p.t_.back().c.is_zero()) p.t_.pop_back();
    } else if (!t.c.is_zero()) {
      p.t_.push_back(std::move(t));
    }
  }
  return p;
}

bool MPoly::is_constant() const {
  return t_.empty() || (t_.size() == 1 && t_[0].m.is_unit());
}

bool MPoly::is_one() const {
  return t_.size() == 1 && t_[0].m.is_unit() && t_[0].c.is_one();
}

const Mono& MPoly::leading_mono() const {
  if (t_.empty()) throw AlgebraError("leading monomial of zero polynomial");
  return t_[0].m;
}

const GaussianRational& MPoly::leading_coeff() const {
  if (t_.empty()) throw AlgebraError("leading coefficient of zero polynomial");
  return t_[0].c;
}

GaussianRational MPoly::constant_value() const {
  if (t_.empty()) return GaussianRational(0);
  if (!is_constant()) throw AlgebraError("constant_value of nonconstant poly");
  return t_[0].c;
}

GaussianRational MPoly::coeff_at(const Mono& m) const {
  for (const auto& t : t_)
    if (mono_cmp(t.m, m) == 0) return t.c;
  return GaussianRational(0);
}

int MPoly::degree(int v) const {
  int d = 0;
  for (const auto& t : t_) d = std::max<int>(d, t.m.e[static_cast<std::size_t>(v)]);
  return d;
}

std::uint32_t MPoly::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& t : t_) d = std::max(d, t.m.deg);
  return d;
}

bool MPoly::uses(int v) const {
  for (const auto& t : t_)
    if (t.m.e[static_cast<std::size_t>(v)] != 0) return true;
  return false;
}

std::vector<int> MPoly::support() const {
  std::array<bool, NVARS> seen{};
  for (const auto& t : t_)
    for (std::size_t i = 0; i < NVARS; ++i)
      if (t.m.e[i] != 0) seen[i] = true;
  std::vector<int> out;
  for (int i = 0; i < NVARS; ++i)
    if (seen[static_cast<std::size_t>(i)]) out.push_back(i);
  return out;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& t : r.t_) t.c = -t.c;
  return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
  MPoly r;
  r.t_.reserve(t_.size() + o.t_.size());
  std::size_t i = 0, j = 0;
  while (i < t_.size() && j < o.t_.size()) {
    int c = mono_cmp(t_[i].m, o.t_[j].m);
    if (c > 0) {
      r.t_.push_back(t_[i++]);
    } else if (c < 0) {
      r.t_.push_back(o.t_[j++]);
    } else {
      GaussianRational s = t_[i].c + o.t_[j].c;
      if (!s.is_zero()) r.t_.push_back(Term{t_[i].m, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < t_.size(); ++i) r.t_.push_back(t_[i]);
  for (; j < o.t_.size(); ++j) r.t_.push_back(o.t_[j]);
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + (-o); }

MPoly MPoly::operator*(const MPoly& o) const {
  if (is_zero() || o.is_zero()) return zero();
  if (is_one()) return o;
  if (o.is_one()) return *this;
  // Multiply the smaller polynomial into the larger one term by term,
  // accumulating with merge-adds; collect all cross terms then combine.
  std::vector<Term> acc;
  acc.reserve(t_.size() * o.t_.size());
  for (const auto& a : t_)
    for (const auto& b : o.t_)
      acc.push_back(Term{a.m.times(b.m), a.c * b.c});
  return from_terms(std::move(acc));
}

bool MPoly::operator==(const MPoly& o) const {
  if (t_.size() != o.t_.size()) return false;
  for (std::size_t i = 0; i < t_.size(); ++i) {
    if (mono_cmp(t_[i].m, o.t_[i].m) != 0 || t_[i].c != o.t_[i].c) return false;
  }
  return true;
}

MPoly MPoly::mul_coeff(const GaussianRational& c) const {
  if (c.is_zero()) return zero();
  MPoly r = *this;
  for (auto& t : r.t_) t.c *= c;
  return r;
}

MPoly MPoly::mul_mono(const Mono& m, const GaussianRational& c) const {
  if (c.is_zero()) return zero();
  MPoly r = *this;
  for (auto& t : r.t_) {
    t.m = t.m.times(m);
    t.c *= c;
  }
  return r;
}

MPoly MPoly::pow(unsigned k) const {
  MPoly base = *this;
  MPoly r = one();
  while (k > 0) {
    if (k & 1u) r = r * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return r;
}

MPoly MPoly::derivative(int v) const {
  std::vector<Term> out;
  out.reserve(t_.size());
  const auto vi = static_cast<std::size_t>(v);
  for (const auto& t : t_) {
    const int k = t.m.e[vi];
    if (k == 0) continue;
    Term d;
    d.m = t.m;
    d.m.e[vi] = static_cast<std::uint16_t>(k - 1);
    d.m.deg -= 1;
    d.c = t.c.scaled(k);
    out.push_back(std::move(d));
  }
  // Terms remain sorted and distinct after lowering the same variable by one
  // only within terms that contained it; sorting again keeps this simple.
  return from_terms(std::move(out));
}

MPoly MPoly::monic() const {
  if (is_zero()) return *this;
  return mul_coeff(leading_coeff().inv());
}

std::optional<MPoly> MPoly::try_divide(const MPoly& g) const {
  if (g.is_zero()) throw DomainError("polynomial division by zero");
  if (is_zero()) return zero();
  if (g.is_one()) return *this;
  if (g.is_constant()) return mul_coeff(g.constant_value().inv());
  MPoly r = *this;
  std::vector<Term> qt;
  const Mono& gl = g.leading_mono();
  const GaussianRational glc_inv = g.leading_coeff().inv();
  while (!r.is_zero()) {
    const Mono& rl = r.leading_mono();
    if (!gl.divides(rl)) return std::nullopt;
    Mono qm = gl.quotient_of(rl);
    GaussianRational qc = r.leading_coeff() * glc_inv;
    qt.push_back(Term{qm, qc});
    r = r - g.mul_mono(qm, qc);
  }
  return from_terms(std::move(qt));
}

MPoly MPoly::divexact(const MPoly& g) const {
  auto q = try_divide(g);
  if (!q) throw AlgebraError("inexact polynomial division");
  return std::move(*q);
}

Mono MPoly::monomial_content() const {
  if (t_.empty()) return Mono::unit();
  Mono m = t_[0].m;
  for (const auto& t : t_) {
    for (std::size_t i = 0; i < NVARS; ++i)
      m.e[i] = std::min(m.e[i], t.m.e[i]);
  }
  m.deg = 0;
  for (std::size_t i = 0; i < NVARS; ++i) m.deg += m.e[i];
  return m;
}

MPoly MPoly::divide_mono(const Mono& m) const {
  MPoly r = *this;
  for (auto& t : r.t_) {
    if (!m.divides(t.m)) throw AlgebraError("inexact monomial division");
    t.m = m.quotient_of(t.m);
  }
  return r;
}

std::vector<MPoly> MPoly::coeffs_in(int v) const {
  if (is_zero()) return {};
  const auto vi = static_cast<std::size_t>(v);
  std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(degree(v)) + 1);
  for (const auto& t : t_) {
    Term s = t;
    const int k = s.m.e[vi];
    s.m.deg -= static_cast<std::uint32_t>(k);
    s.m.e[vi] = 0;
    buckets[static_cast<std::size_t>(k)].push_back(std::move(s));
  }
  std::vector<MPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
  return out;
}

MPoly MPoly::from_coeffs(int v, const std::vector<MPoly>& cs) {
  std::vector<Term> acc;
  for (std::size_t k = 0; k < cs.size(); ++k) {
    Mono vm = Mono::of_var(v, static_cast<int>(k));
    for (const auto& t : cs[k].terms())
      acc.push_back(Term{t.m.times(vm), t.c});
  }
  return from_terms(std::move(acc));
}

std::string MPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : t_) {
    std::string cs = t.c.str();
    bool neg = !cs.empty() && cs[0] == '-';
    if (first) {
      first = false;
    } else {
      os << (neg ? " - " : " + ");
      if (neg) cs = cs.substr(1);
    }
    std::string mono;
    for (std::size_t i = 0; i < NVARS; ++i) {
      if (t.m.e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += std::string(var_name(static_cast<int>(i)));
      if (t.m.e[i] > 1) mono += "^" + std::to_string(t.m.e[i]);
    }
    if (mono.empty()) {
      os << cs;
    } else if (cs == "1") {
      os << mono;
    } else if (cs == "-1") {
      os << "-" << mono;
    } else {
      os << cs << "*" << mono;
    }
  }
  return os.str();
}

}  // namespace p3lab
