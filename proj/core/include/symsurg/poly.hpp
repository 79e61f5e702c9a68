#pragma once

#include "symsurg/integers.hpp"

#include <array>
#include <map>

namespace symsurg {

// Polynomials over Q in five fixed symbols:
//   d = a small positive length scale,
//   e = a second scale with 0 < e << d << 1,
//   c, s = cosine and sine of a free angle, reduced by c^2 + s^2 = 1
//          (canonical form keeps the s-degree at most 1),
//   t = a curve parameter running over [0, 1].
// Exponents are (d, e, c, s, t).
class Poly {
public:
  using Key = std::array<int, 5>;

  Poly() = default;
  explicit Poly(const Rat& constant);
  explicit Poly(long constant) : Poly(Rat(constant)) {}

  static Poly d();
  static Poly e();
  static Poly c();
  static Poly s();
  static Poly t();
  static Poly monomial(const Rat& coef, int dd, int de, int dc, int ds, int dt = 0);

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  bool operator==(const Poly& o) const { return terms_ == o.terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool depends_on_angle() const;
  bool depends_on_param() const;

  // substitutes an exact (cos, sin) value, e.g. (0, -1)
  Poly at_angle(const Rat& cos_value, const Rat& sin_value) const;
  // substitutes an exact parameter value, e.g. the endpoints 0 and 1
  Poly at_param(const Rat& t_value) const;
  // replaces t by another polynomial, e.g. 1 - t to measure from the far end
  Poly compose_param(const Poly& replacement) const;
  // coefficient of t^k, as a polynomial without t
  Poly param_coefficient(int k) const;
  int param_degree() const;

  // Sign of the value for all small admissible parameters, under the order
  // 0 < e << d << 1: the dominant monomial minimizes the e-degree, then the
  // d-degree. Only for polynomials free of the angle and of t.
  int sign_under_scale_order() const;

  std::string to_string() const;

  const std::map<Key, Rat>& terms() const { return terms_; }

private:
  void add_term(const Key& k, const Rat& coef);
  void reduce_angle();

  std::map<Key, Rat> terms_;
};

inline Poly rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return Poly(q);
}

} // namespace symsurg
