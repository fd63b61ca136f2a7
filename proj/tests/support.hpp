#pragma once

#include <random>
#include <vector>

#include "pi1lat/abelian_group.hpp"
#include "pi1lat/normal_form.hpp"

// Shared test machinery: seeded random data, random unimodular transforms,
// and small independent oracles (minor gcds, cofactor determinants, box
// enumeration) that never touch the code paths they check.

namespace pi1lat::testsupport {

using Rng = std::mt19937_64;

inline IntMatrix random_matrix(Rng& rng, Index rows, Index cols, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  IntMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = Int(dist(rng));
  return m;
}

// Product of elementary row operations; unimodular by construction.
inline IntMatrix random_unimodular(Rng& rng, Index n, int ops = 14) {
  IntMatrix u = IntMatrix::Identity(n, n);
  if (n < 2) {
    if (n == 1 && rng() % 2 == 0) u(0, 0) = -1;
    return u;
  }
  std::uniform_int_distribution<long> coef(-3, 3);
  std::uniform_int_distribution<Index> pick(0, n - 1);
  std::uniform_int_distribution<int> kind(0, 3);
  for (int k = 0; k < ops; ++k) {
    const Index i = pick(rng);
    const Index j = pick(rng);
    switch (kind(rng)) {
      case 0:
        if (i != j) u.row(i) += Int(coef(rng)) * u.row(j);
        break;
      case 1:
        if (i != j) u.row(i).swap(u.row(j));
        break;
      case 2:
        u.row(i) *= Int(-1);
        break;
      default:
        if (i != j) u.col(i) += Int(coef(rng)) * u.col(j);
        break;
    }
  }
  return u;
}

// Cofactor-expansion determinant; independent of the Bareiss routine.
inline Int cofactor_det(const IntMatrix& m) {
  const Index n = m.rows();
  if (n == 0) return Int(1);
  if (n == 1) return m(0, 0);
  Int acc(0);
  Int sign(1);
  for (Index j = 0; j < n; ++j) {
    IntMatrix minor(n - 1, n - 1);
    for (Index i = 1; i < n; ++i) {
      Index cc = 0;
      for (Index c = 0; c < n; ++c) {
        if (c == j) continue;
        minor(i - 1, cc++) = m(i, c);
      }
    }
    acc += sign * m(0, j) * cofactor_det(minor);
    sign = -sign;
  }
  return acc;
}

namespace detail {
inline void combinations(Index n, Index k, Index start, std::vector<Index>& cur,
                         std::vector<std::vector<Index>>& out) {
  if (static_cast<Index>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (Index i = start; i < n; ++i) {
    cur.push_back(i);
    combinations(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}
}  // namespace detail

// gcd of all k x k minors (0 when every minor vanishes).
inline Int minor_gcd(const IntMatrix& m, Index k) {
  std::vector<std::vector<Index>> row_sets, col_sets;
  std::vector<Index> cur;
  detail::combinations(m.rows(), k, 0, cur, row_sets);
  detail::combinations(m.cols(), k, 0, cur, col_sets);
  Int g(0);
  for (const auto& rs : row_sets)
    for (const auto& cs : col_sets) {
      IntMatrix sub(k, k);
      for (Index i = 0; i < k; ++i)
        for (Index j = 0; j < k; ++j) sub(i, j) = m(rs[static_cast<std::size_t>(i)], cs[static_cast<std::size_t>(j)]);
      g = gcd_int(g, cofactor_det(sub));
    }
  return g;
}

// Expected Smith diagonal from quotients of minor gcds. Only sensible for
// small matrices; this is the independent oracle for the normal form.
inline std::vector<Int> smith_diagonal_by_minors(const IntMatrix& m) {
  const Index r = std::min(m.rows(), m.cols());
  std::vector<Int> out;
  Int prev(1);
  for (Index k = 1; k <= r; ++k) {
    const Int g = minor_gcd(m, k);
    if (g == 0) {
      while (static_cast<Index>(out.size()) < r) out.push_back(Int(0));
      return out;
    }
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

// Every nonzero x in [-bound, bound]^cols with m x = 0, by brute force.
inline std::vector<IntVector> kernel_box(const IntMatrix& m, long bound) {
  std::vector<IntVector> out;
  const Index n = m.cols();
  std::vector<long> x(static_cast<std::size_t>(n), -bound);
  if (n == 0) return out;
  for (;;) {
    IntVector v(n);
    bool zero = true;
    for (Index i = 0; i < n; ++i) {
      v(i) = Int(x[static_cast<std::size_t>(i)]);
      if (x[static_cast<std::size_t>(i)] != 0) zero = false;
    }
    if (!zero) {
      const IntVector image = m * v;
      bool in_kernel = true;
      for (Index i = 0; i < image.size(); ++i)
        if (image(i) != 0) in_kernel = false;
      if (in_kernel) out.push_back(v);
    }
    Index pos = 0;
    while (pos < n && x[static_cast<std::size_t>(pos)] == bound) {
      x[static_cast<std::size_t>(pos)] = -bound;
      ++pos;
    }
    if (pos == n) break;
    ++x[static_cast<std::size_t>(pos)];
  }
  return out;
}

inline InvariantFactors inv(Index rank, std::initializer_list<long> factors) {
  InvariantFactors out;
  out.rank = rank;
  for (long f : factors) out.factors.push_back(Int(f));
  return out;
}

// Random invariant data with torsion orders bounded by max_order.
inline FgAbGroup random_canonical_group(Rng& rng, Index max_rank, long max_order) {
  std::uniform_int_distribution<Index> rank_dist(0, max_rank);
  std::uniform_int_distribution<int> torsion_count(0, 2);
  std::uniform_int_distribution<long> base(2, max_order);
  const Index rank = rank_dist(rng);
  std::vector<Int> factors;
  const int k = torsion_count(rng);
  if (k >= 1) {
    long d1 = base(rng);
    factors.push_back(Int(d1));
    if (k == 2) {
      const long room = max_order / d1;
      if (room >= 1) {
        std::uniform_int_distribution<long> mult(1, room);
        factors.push_back(Int(d1 * mult(rng)));
      }
    }
  }
  return FgAbGroup::from_invariants(rank, factors);
}

// Same group presented through random unimodular changes plus a redundant
// relation column.
inline FgAbGroup represent_randomly(Rng& rng, const FgAbGroup& g) {
  const IntMatrix p = random_unimodular(rng, g.gens());
  const IntMatrix q = random_unimodular(rng, g.rels().cols());
  IntMatrix rels = p * g.rels() * q;
  if (rels.cols() > 0 && rng() % 2 == 0) {
    IntMatrix padded(rels.rows(), rels.cols() + 1);
    padded.leftCols(rels.cols()) = rels;
    padded.col(rels.cols()) = rels.col(0) + Int(2) * rels.col(rels.cols() - 1);
    rels = padded;
  }
  return FgAbGroup(g.gens(), rels);
}

}  // namespace pi1lat::testsupport
