#include "symsurg/smith.hpp"

#include <cstdlib>
#include <stdexcept>

namespace symsurg {
namespace {

// Smallest nonzero |entry| in the trailing block at (s, s); false if none.
bool find_pivot(const IntMat& d, int s, int& pi, int& pj) {
  bool found = false;
  Int best;
  for (int i = s; i < d.rows(); ++i)
    for (int j = s; j < d.cols(); ++j) {
      const Int& x = d.at(i, j);
      if (x == 0) continue;
      Int a = abs(x);
      if (!found || a < best) {
        found = true;
        best = a;
        pi = i;
        pj = j;
      }
    }
  return found;
}

bool row_col_clear(const IntMat& d, int s) {
  for (int i = s + 1; i < d.rows(); ++i)
    if (d.at(i, s) != 0) return false;
  for (int j = s + 1; j < d.cols(); ++j)
    if (d.at(s, j) != 0) return false;
  return true;
}

void verify(const IntMat& a, const SmithDecomposition& s) {
  if (s.u * a * s.v != s.d) throw std::logic_error("smith decomposition does not reproduce its input");
  if (abs(s.u.det()) != 1 || abs(s.v.det()) != 1)
    throw std::logic_error("smith transform is not unimodular");
  for (int i = 0; i < s.d.rows(); ++i)
    for (int j = 0; j < s.d.cols(); ++j)
      if (i != j && s.d.at(i, j) != 0) throw std::logic_error("smith form is not diagonal");
  int n = std::min(s.d.rows(), s.d.cols());
  for (int i = 0; i + 1 < n; ++i) {
    const Int& x = s.d.at(i, i);
    const Int& y = s.d.at(i + 1, i + 1);
    if (x < 0 || y < 0) throw std::logic_error("smith form has a negative entry");
    if (y != 0 && x == 0) throw std::logic_error("smith form has a zero before a nonzero");
    if (x != 0 && y % x != 0) throw std::logic_error("smith divisibility chain broken");
  }
}

} // namespace

SmithDecomposition smith_normal_form(const IntMat& a) {
  SmithDecomposition s;
  s.u = IntMat::identity(a.rows());
  s.v = IntMat::identity(a.cols());
  s.d = a;

  int n = std::min(a.rows(), a.cols());
  for (int step = 0; step < n; ++step) {
    int pi = 0, pj = 0;
    if (!find_pivot(s.d, step, pi, pj)) break;
    for (;;) {
      find_pivot(s.d, step, pi, pj);
      s.d.swap_rows(step, pi);
      s.u.swap_rows(step, pi);
      s.d.swap_cols(step, pj);
      s.v.swap_cols(step, pj);

      const Int& p = s.d.at(step, step);
      for (int i = step + 1; i < s.d.rows(); ++i) {
        if (s.d.at(i, step) == 0) continue;
        Int q = s.d.at(i, step) / p;
        s.d.add_row(i, step, -q);
        s.u.add_row(i, step, -q);
      }
      for (int j = step + 1; j < s.d.cols(); ++j) {
        if (s.d.at(step, j) == 0) continue;
        Int q = s.d.at(step, j) / p;
        s.d.add_col(j, step, -q);
        s.v.add_col(j, step, -q);
      }
      if (!row_col_clear(s.d, step)) continue;

      // pivot must divide the whole trailing block; if not, fold the
      // offending row in and keep reducing
      int bi = -1, bj = -1;
      for (int i = step + 1; i < s.d.rows() && bi < 0; ++i)
        for (int j = step + 1; j < s.d.cols(); ++j)
          if (s.d.at(i, j) % p != 0) {
            bi = i;
            bj = j;
            break;
          }
      if (bi < 0) break;
      s.d.add_row(step, bi, 1);
      s.u.add_row(step, bi, 1);
    }
    if (s.d.at(step, step) < 0) {
      s.d.negate_row(step);
      s.u.negate_row(step);
    }
  }

  for (int i = 0; i < n; ++i) {
    if (s.d.at(i, i) == 0) break;
    s.rank += 1;
    s.invariant_factors.push_back(s.d.at(i, i));
  }
  verify(a, s);
  return s;
}

Cokernel cokernel(const IntMat& a) {
  SmithDecomposition s = smith_normal_form(a);
  Cokernel c;
  c.free_rank = a.rows() - s.rank;
  for (const Int& d : s.invariant_factors)
    if (d > 1) c.torsion.push_back(d);
  return c;
}

} // namespace symsurg
