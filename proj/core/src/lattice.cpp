#include "symsurg/lattice.hpp"

#include "symsurg/smith.hpp"

namespace symsurg {
namespace {

class RatMat {
public:
  RatMat(const IntMat& m) : n_(m.rows()), a_(size_t(n_) * n_) {
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) at(i, j) = Rat(m.at(i, j));
  }
  Rat& at(int i, int j) { return a_[size_t(i) * n_ + j]; }
  int n() const { return n_; }

  void symmetric_swap(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < n_; ++k) std::swap(at(i, k), at(j, k));
    for (int k = 0; k < n_; ++k) std::swap(at(k, i), at(k, j));
  }
  // row i += row j and col i += col j (a congruence by an elementary matrix)
  void symmetric_add(int i, int j) {
    for (int k = 0; k < n_; ++k) at(i, k) += at(j, k);
    for (int k = 0; k < n_; ++k) at(k, i) += at(k, j);
  }

private:
  int n_;
  std::vector<Rat> a_;
};

} // namespace

SignatureTriple signature(const IntMat& gram) {
  if (!gram.is_symmetric()) throw input_error("signature needs a symmetric matrix");
  RatMat m(gram);
  int n = m.n();
  SignatureTriple sig;
  for (int k = 0; k < n; ++k) {
    if (m.at(k, k) == 0) {
      int dpivot = -1;
      for (int i = k + 1; i < n; ++i)
        if (m.at(i, i) != 0) {
          dpivot = i;
          break;
        }
      if (dpivot >= 0) {
        m.symmetric_swap(k, dpivot);
      } else {
        // all-zero diagonal: fold a row with a nonzero off-diagonal entry
        // into k, which makes m(k,k) = 2*m(k,j) != 0
        int oi = -1, oj = -1;
        for (int i = k; i < n && oi < 0; ++i)
          for (int j = i + 1; j < n; ++j)
            if (m.at(i, j) != 0) {
              oi = i;
              oj = j;
              break;
            }
        if (oi < 0) {
          sig.zero += n - k;
          return sig;
        }
        m.symmetric_swap(k, oi);
        m.symmetric_add(k, oj == k ? oi : oj);
      }
    }
    const Rat piv = m.at(k, k);
    if (piv > 0)
      sig.positive += 1;
    else
      sig.negative += 1;
    for (int i = k + 1; i < n; ++i) {
      if (m.at(i, k) == 0) continue;
      Rat f = m.at(i, k) / piv;
      for (int j = k; j < n; ++j) m.at(i, j) -= f * m.at(k, j);
      for (int j = k; j < n; ++j) m.at(j, i) = m.at(i, j);
    }
  }
  sig.zero = n - sig.positive - sig.negative;
  return sig;
}

bool is_primitive(const IntVec& v) {
  Int g = gcd_of(v);
  if (g == 0) throw input_error("indeterminate primitivity");
  return g == 1;
}

bool surjects_onto_cyclic_sum(const IntMat& a, const IntVec& m) {
  if (a.cols() != int(m.size()))
    throw input_error("one modulus per column is required");
  for (const Int& mi : m)
    if (mi < 1) throw input_error("moduli must be positive");
  IntMat block = a.transpose().hcat(diagonal(m));
  SmithDecomposition s = smith_normal_form(block);
  if (s.rank != int(m.size())) return false;
  for (const Int& d : s.invariant_factors)
    if (d != 1) return false;
  return true;
}

} // namespace symsurg
