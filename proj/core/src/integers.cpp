#include "symsurg/integers.hpp"

namespace symsurg {

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Int gcd_of(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) g = gcd(g, x);
  return g;
}

Int mod_inverse(const Int& j, const Int& m) {
  if (m < 1) throw input_error("modulus must be positive");
  if (m == 1) return 0;
  Int r = j % m;
  if (r < 0) r += m;
  if (gcd(r, m) != 1) throw input_error("orbit invariant not coprime");
  Int inv;
  if (mpz_invert(inv.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t()) == 0)
    throw input_error("orbit invariant not coprime");
  return inv;
}

Int parse_int(const std::string& s) {
  if (s.empty()) throw input_error("empty integer literal");
  size_t start = (s[0] == '-') ? 1 : 0;
  if (start == s.size()) throw input_error("malformed integer literal: " + s);
  for (size_t i = start; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9')
      throw input_error("malformed integer literal: " + s);
  return Int(s, 10);
}

Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(parse_int(s));
  Int num = parse_int(s.substr(0, slash));
  Int den = parse_int(s.substr(slash + 1));
  if (den == 0) throw input_error("zero denominator: " + s);
  Rat q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Int& v) { return v.get_str(); }

std::string to_string(const Rat& v) { return v.get_str(); }

} // namespace symsurg
