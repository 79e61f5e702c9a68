// Independent reference implementations used to cross-check the library.
// Everything here deliberately takes a different route than the code under
// test: determinantal divisors instead of elimination, exhaustive
// enumeration instead of normal forms, characteristic-polynomial sign
// counting instead of LDL^T.
#pragma once

#include "symsurg/integers.hpp"
#include "symsurg/matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace oracles {

using symsurg::Int;
using symsurg::IntMat;
using symsurg::IntVec;
using symsurg::Rat;

// gcd of all k x k minors, by direct enumeration
inline Int determinantal_divisor(const IntMat& a, int k) {
  std::vector<int> ri(k), ci(k);
  Int g = 0;
  std::vector<int> rows(a.rows()), cols(a.cols());
  for (int i = 0; i < a.rows(); ++i) rows[i] = i;
  for (int j = 0; j < a.cols(); ++j) cols[j] = j;

  std::vector<std::vector<int>> row_sets, col_sets;
  std::vector<int> pick(k);
  auto gen = [&](int n, std::vector<std::vector<int>>& out) {
    out.clear();
    std::vector<int> idx(k);
    // lexicographic k-subsets of {0..n-1}
    for (int i = 0; i < k; ++i) idx[i] = i;
    if (k > n) return;
    for (;;) {
      out.push_back(idx);
      int p = k - 1;
      while (p >= 0 && idx[p] == n - k + p) --p;
      if (p < 0) break;
      idx[p] += 1;
      for (int q = p + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
    }
  };
  gen(a.rows(), row_sets);
  gen(a.cols(), col_sets);
  for (const auto& rs : row_sets)
    for (const auto& cs : col_sets) {
      IntMat sub(k, k);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) sub.at(i, j) = a.at(rs[i], cs[j]);
      g = symsurg::gcd(g, sub.det());
    }
  return g;
}

// Invariant factors via d_k = D_k / D_{k-1}; zeros once the rank is passed.
inline IntVec smith_diagonal_by_minors(const IntMat& a) {
  int n = std::min(a.rows(), a.cols());
  IntVec out;
  Int prev = 1;
  for (int k = 1; k <= n; ++k) {
    Int dk = determinantal_divisor(a, k);
    if (dk == 0) {
      for (int i = k; i <= n; ++i) out.push_back(0);
      break;
    }
    out.push_back(dk / prev);
    prev = dk;
  }
  return out;
}

// Multiset of q-torsion counts of Z^r / (columns of a), for a square
// nonsingular a with |det| = N: enumerated inside (Z/N)^r. Returns, for each
// divisor q of N, the number of cosets x with q*x in the column span.
// Requires N^r to be small.
struct TorsionCount {
  long q;
  long annihilated;
};

inline std::vector<TorsionCount> cokernel_torsion_by_enumeration(const IntMat& a, long N) {
  int r = a.rows();
  long total = 1;
  for (int i = 0; i < r; ++i) total *= N;

  auto encode = [&](const std::vector<long>& v) {
    long code = 0;
    for (int i = 0; i < r; ++i) code = code * N + v[i];
    return code;
  };

  // span of the columns inside (Z/N)^r, by closure
  std::set<long> span;
  std::vector<std::vector<long>> gens;
  for (int j = 0; j < a.cols(); ++j) {
    std::vector<long> g(r);
    for (int i = 0; i < r; ++i) {
      Int e = a.at(i, j) % N;
      if (e < 0) e += N;
      g[i] = e.get_si();
    }
    gens.push_back(g);
  }
  std::vector<std::vector<long>> frontier{std::vector<long>(r, 0)};
  span.insert(0);
  while (!frontier.empty()) {
    std::vector<std::vector<long>> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        std::vector<long> y(r);
        for (int i = 0; i < r; ++i) y[i] = (x[i] + g[i]) % N;
        if (span.insert(encode(y)).second) next.push_back(y);
      }
    frontier = std::move(next);
  }

  std::vector<TorsionCount> counts;
  for (long q = 1; q <= N; ++q) {
    if (N % q != 0) continue;
    long hits = 0;
    std::vector<long> x(r, 0);
    for (long code = 0; code < total; ++code) {
      long c = code;
      for (int i = r - 1; i >= 0; --i) {
        x[i] = c % N;
        c /= N;
      }
      std::vector<long> qx(r);
      for (int i = 0; i < r; ++i) qx[i] = (x[i] * q) % N;
      if (span.count(encode(qx))) ++hits;
    }
    counts.push_back({q, hits / long(span.size())});
  }
  return counts;
}

// #elements of order dividing q in sum_i Z/d_i
inline long torsion_count_from_factors(const IntVec& factors, long q) {
  Int prod = 1;
  for (const Int& d : factors) prod *= symsurg::gcd(d, Int(q));
  return prod.get_si();
}

// Characteristic polynomial of a symmetric integer matrix (Faddeev-LeVerrier,
// exact rationals), then eigenvalue sign counts by Descartes' rule, which is
// exact for real-rooted polynomials.
inline symsurg::RatVec char_poly(const IntMat& g) {
  int n = g.rows();
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
  std::vector<std::vector<Rat>> gm(n, std::vector<Rat>(n));
  symsurg::RatVec c(n + 1);
  c[n] = 1;
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  for (int k = 1; k <= n; ++k) {
    // gm = g * m
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Rat s = 0;
        for (int l = 0; l < n; ++l) s += Rat(g.at(i, l)) * m[l][j];
        gm[i][j] = s;
      }
    Rat tr = 0;
    for (int i = 0; i < n; ++i) tr += gm[i][i];
    Rat ck = -tr / k;
    c[n - k] = ck;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m[i][j] = gm[i][j] + (i == j ? ck : Rat(0));
  }
  return c; // c[0] + c[1] x + ... + c[n] x^n
}

struct EigenSignCount {
  int positive = 0;
  int zero = 0;
  int negative = 0;
};

inline EigenSignCount eigen_signs_by_charpoly(const IntMat& g) {
  symsurg::RatVec c = char_poly(g);
  int n = g.rows();
  EigenSignCount out;
  int low = 0;
  while (low <= n && c[low] == 0) ++low;
  out.zero = low;
  auto variations = [&](bool flip) {
    int v = 0;
    int prev = 0;
    for (int i = low; i <= n; ++i) {
      Rat coef = c[i];
      if (flip && ((i - low) % 2 == 1)) coef = -coef;
      int s = symsurg::sign(coef);
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++v;
      prev = s;
    }
    return v;
  };
  out.positive = variations(false);
  out.negative = variations(true);
  return out;
}

// Image closure of the row vectors of a inside sum_i Z/m_i; surjective iff
// the closure has prod(m_i) elements. Only for small products.
inline bool surjects_by_enumeration(const IntMat& a, const IntVec& m) {
  int s = int(m.size());
  std::vector<long> mod(s);
  long total = 1;
  for (int i = 0; i < s; ++i) {
    mod[i] = m[i].get_si();
    total *= mod[i];
  }
  auto encode = [&](const std::vector<long>& v) {
    long code = 0;
    for (int i = 0; i < s; ++i) code = code * mod[i] + v[i];
    return code;
  };
  std::vector<std::vector<long>> gens;
  for (int r = 0; r < a.rows(); ++r) {
    std::vector<long> g(s);
    for (int i = 0; i < s; ++i) {
      Int e = a.at(r, i) % m[i];
      if (e < 0) e += m[i];
      g[i] = e.get_si();
    }
    gens.push_back(g);
  }
  std::set<long> span{0};
  std::vector<std::vector<long>> frontier{std::vector<long>(s, 0)};
  while (!frontier.empty()) {
    std::vector<std::vector<long>> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        std::vector<long> y(s);
        for (int i = 0; i < s; ++i) y[i] = (x[i] + g[i]) % mod[i];
        if (span.insert(encode(y)).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return long(span.size()) == total;
}

// deterministic test rng
inline std::mt19937_64 rng(uint64_t seed) { return std::mt19937_64(seed); }

inline IntMat random_matrix(std::mt19937_64& r, int rows, int cols, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = d(r);
  return m;
}

inline IntMat random_symmetric(std::mt19937_64& r, int n, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      m.at(i, j) = d(r);
      m.at(j, i) = m.at(i, j);
    }
  return m;
}

// random product of elementary integer row operations (always det +-1)
inline IntMat random_unimodular(std::mt19937_64& r, int n, int ops) {
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  std::uniform_int_distribution<int> kind(0, 2);
  IntMat m = IntMat::identity(n);
  for (int t = 0; t < ops; ++t) {
    int i = pick(r), j = pick(r);
    switch (kind(r)) {
      case 0:
        if (i != j) m.add_row(i, j, Int(coef(r)));
        break;
      case 1:
        m.swap_rows(i, j);
        break;
      default:
        m.negate_row(i);
    }
  }
  return m;
}

} // namespace oracles
