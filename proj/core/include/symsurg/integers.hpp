#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <vector>

namespace symsurg {

// Exact scalars. No floating point is used anywhere in the library.
using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

// Bad input or unmet hypothesis; the CLI maps this to exit code 2.
class input_error : public std::runtime_error {
public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

// gcd of all entries (nonnegative); 0 for an empty or all-zero vector.
Int gcd_of(const IntVec& v);

// Inverse of j modulo m, normalized into [0, m). j is reduced into (0, m)
// first; a non-coprime pair is rejected. m = 1 yields 0.
Int mod_inverse(const Int& j, const Int& m);

// Parses a decimal string (optional leading '-'); rejects anything else.
Int parse_int(const std::string& s);

// Parses "n" or "n/d" with d > 0 after canonicalization.
Rat parse_rat(const std::string& s);

std::string to_string(const Int& v);
std::string to_string(const Rat& v);

inline int sign(const Int& v) { return sgn(v); }
inline int sign(const Rat& v) { return sgn(v); }

} // namespace symsurg
