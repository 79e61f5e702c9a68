#include "symsurg/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace symsurg {

Poly::Poly(const Rat& constant) {
  add_term({0, 0, 0, 0, 0}, constant);
}

Poly Poly::d() { return monomial(Rat(1), 1, 0, 0, 0); }
Poly Poly::e() { return monomial(Rat(1), 0, 1, 0, 0); }
Poly Poly::c() { return monomial(Rat(1), 0, 0, 1, 0); }
Poly Poly::s() { return monomial(Rat(1), 0, 0, 0, 1); }
Poly Poly::t() { return monomial(Rat(1), 0, 0, 0, 0, 1); }

Poly Poly::monomial(const Rat& coef, int dd, int de, int dc, int ds, int dt) {
  Poly p;
  p.add_term({dd, de, dc, ds, dt}, coef);
  p.reduce_angle();
  return p;
}

void Poly::add_term(const Key& k, const Rat& coef) {
  if (coef == 0)
    return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, coef);
    return;
  }
  it->second += coef;
  if (it->second == 0)
    terms_.erase(it);
}

void Poly::reduce_angle() {
  for (;;) {
    auto it = terms_.begin();
    for (; it != terms_.end(); ++it)
      if (it->first[3] >= 2)
        break;
    if (it == terms_.end())
      return;
    Key k = it->first;
    Rat coef = it->second;
    terms_.erase(it);
    Key lower = k, raised = k;
    lower[3] -= 2;
    raised[3] -= 2;
    raised[2] += 2;
    add_term(lower, coef);
    add_term(raised, -coef);
  }
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  for (const auto& [k, coef] : o.terms_)
    r.add_term(k, coef);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  for (const auto& [k, coef] : o.terms_)
    r.add_term(k, -coef);
  return r;
}

Poly Poly::operator-() const {
  Poly r;
  for (const auto& [k, coef] : terms_)
    r.terms_.emplace(k, -coef);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  for (const auto& [ka, ca] : terms_) {
    for (const auto& [kb, cb] : o.terms_) {
      Key k;
      for (int i = 0; i < 5; ++i)
        k[i] = ka[i] + kb[i];
      r.add_term(k, ca * cb);
    }
  }
  r.reduce_angle();
  return r;
}

bool Poly::depends_on_angle() const {
  for (const auto& [k, coef] : terms_)
    if (k[2] != 0 || k[3] != 0)
      return true;
  return false;
}

bool Poly::depends_on_param() const {
  for (const auto& [k, coef] : terms_)
    if (k[4] != 0)
      return true;
  return false;
}

Poly Poly::at_angle(const Rat& cos_value, const Rat& sin_value) const {
  Poly r;
  for (const auto& [k, coef] : terms_) {
    Rat v = coef;
    for (int i = 0; i < k[2]; ++i)
      v *= cos_value;
    for (int i = 0; i < k[3]; ++i)
      v *= sin_value;
    r.add_term({k[0], k[1], 0, 0, k[4]}, v);
  }
  return r;
}

Poly Poly::at_param(const Rat& t_value) const {
  Poly r;
  for (const auto& [k, coef] : terms_) {
    Rat v = coef;
    for (int i = 0; i < k[4]; ++i)
      v *= t_value;
    r.add_term({k[0], k[1], k[2], k[3], 0}, v);
  }
  return r;
}

Poly Poly::compose_param(const Poly& replacement) const {
  Poly r;
  for (const auto& [k, coef] : terms_) {
    Poly term = Poly::monomial(coef, k[0], k[1], k[2], k[3]);
    for (int i = 0; i < k[4]; ++i)
      term *= replacement;
    r += term;
  }
  return r;
}

Poly Poly::param_coefficient(int kt) const {
  Poly r;
  for (const auto& [k, coef] : terms_)
    if (k[4] == kt)
      r.add_term({k[0], k[1], k[2], k[3], 0}, coef);
  return r;
}

int Poly::param_degree() const {
  int deg = 0;
  for (const auto& [k, coef] : terms_)
    deg = std::max(deg, k[4]);
  return deg;
}

int Poly::sign_under_scale_order() const {
  if (depends_on_angle() || depends_on_param())
    throw std::logic_error("sign query on a polynomial that still depends on the angle or the parameter");
  if (terms_.empty())
    return 0;
  const std::pair<const Key, Rat>* best = nullptr;
  for (const auto& term : terms_) {
    if (!best) {
      best = &term;
      continue;
    }
    const Key& k = term.first;
    const Key& bk = best->first;
    if (k[1] < bk[1] || (k[1] == bk[1] && k[0] < bk[0]))
      best = &term;
  }
  return sgn(best->second);
}

std::string Poly::to_string() const {
  if (terms_.empty())
    return "0";
  std::ostringstream out;
  bool first = true;
  static const char* names[5] = {"d", "e", "c", "s", "t"};
  for (const auto& [k, coef] : terms_) {
    Rat a = coef;
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0)
        a = -a;
    }
    first = false;
    bool has_var = k[0] || k[1] || k[2] || k[3] || k[4];
    bool printed = false;
    if (a != 1 || !has_var) {
      out << a.get_str();
      printed = true;
    }
    for (int i = 0; i < 5; ++i) {
      if (k[i] == 0)
        continue;
      if (printed)
        out << "*";
      out << names[i];
      if (k[i] > 1)
        out << "^" << k[i];
      printed = true;
    }
  }
  return out.str();
}

} // namespace symsurg
