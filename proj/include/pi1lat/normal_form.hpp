#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "pi1lat/matrix.hpp"

// Exact integer normal forms and the solvers everything else reduces to.
// All functions are pure and total over any signed integer-like scalar.

namespace pi1lat {

namespace detail {

template <class Scalar>
Scalar abs_val(const Scalar& a) {
  return a < Scalar(0) ? Scalar(-a) : a;
}

// Floor quotient built from the truncating operators.
template <class Scalar>
Scalar floor_quot(const Scalar& a, const Scalar& b) {
  Scalar q = a / b;
  if (a % b != Scalar(0) && (a < Scalar(0)) != (b < Scalar(0))) q -= Scalar(1);
  return q;
}

// g = x*a + y*b with g = gcd(a, b) >= 0.
template <class Scalar>
void extended_gcd(const Scalar& a, const Scalar& b, Scalar& g, Scalar& x, Scalar& y) {
  Scalar r0 = a, r1 = b;
  Scalar x0(1), x1(0), y0(0), y1(1);
  while (r1 != Scalar(0)) {
    const Scalar q = r0 / r1;
    Scalar t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
    t = y0 - q * y1;
    y0 = y1;
    y1 = t;
  }
  if (r0 < Scalar(0)) {
    r0 = -r0;
    x0 = -x0;
    y0 = -y0;
  }
  g = r0;
  x = x0;
  y = y0;
}

}  // namespace detail

// left * input * right = diagonal, with left and right unimodular and the
// diagonal entries non-negative and forming a divisibility chain.
template <class Scalar>
struct SmithForm {
  DenseMatrix<Scalar> left;
  DenseMatrix<Scalar> diagonal;
  DenseMatrix<Scalar> right;

  Index rank() const {
    const Index k = std::min(diagonal.rows(), diagonal.cols());
    Index r = 0;
    for (Index i = 0; i < k; ++i)
      if (diagonal(i, i) != Scalar(0)) ++r;
    return r;
  }
};

template <class Scalar>
SmithForm<Scalar> smith_normal_form(const DenseMatrix<Scalar>& input) {
  using Mat = DenseMatrix<Scalar>;
  const Index m = input.rows();
  const Index n = input.cols();
  SmithForm<Scalar> out{Mat::Identity(m, m), input, Mat::Identity(n, n)};
  Mat& u = out.left;
  Mat& d = out.diagonal;
  Mat& v = out.right;

  const Index steps = std::min(m, n);
  for (Index t = 0; t < steps; ++t) {
    // Pivot: nonzero entry of minimal absolute value in d[t.., t..],
    // ties broken by smallest row index, then column index.
    Index pr = -1, pc = -1;
    for (Index i = t; i < m; ++i)
      for (Index j = t; j < n; ++j)
        if (d(i, j) != Scalar(0) &&
            (pr < 0 || detail::abs_val(d(i, j)) < detail::abs_val(d(pr, pc)))) {
          pr = i;
          pc = j;
        }
    if (pr < 0) break;  // remaining submatrix is zero

    for (;;) {
      d.row(t).swap(d.row(pr));
      u.row(t).swap(u.row(pr));
      d.col(t).swap(d.col(pc));
      v.col(t).swap(v.col(pc));

      bool clean = true;
      for (Index i = t + 1; i < m; ++i) {
        if (d(i, t) == Scalar(0)) continue;
        const Scalar q = d(i, t) / d(t, t);
        if (q != Scalar(0)) {
          d.row(i) -= q * d.row(t);
          u.row(i) -= q * u.row(t);
        }
        if (d(i, t) != Scalar(0)) clean = false;
      }
      for (Index j = t + 1; j < n; ++j) {
        if (d(t, j) == Scalar(0)) continue;
        const Scalar q = d(t, j) / d(t, t);
        if (q != Scalar(0)) {
          d.col(j) -= q * d.col(t);
          v.col(j) -= q * v.col(t);
        }
        if (d(t, j) != Scalar(0)) clean = false;
      }

      if (clean) {
        // Row and column t are cleared; the pivot must also divide the rest.
        Index br = -1;
        for (Index i = t + 1; i < m && br < 0; ++i)
          for (Index j = t + 1; j < n; ++j)
            if (d(i, j) % d(t, t) != Scalar(0)) {
              br = i;
              break;
            }
        if (br < 0) break;
        d.row(t) += d.row(br);
        u.row(t) += u.row(br);
      }

      // Re-select the pivot; its absolute value strictly shrinks over time.
      pr = t;
      pc = t;
      for (Index i = t; i < m; ++i)
        for (Index j = t; j < n; ++j)
          if (d(i, j) != Scalar(0) &&
              detail::abs_val(d(i, j)) < detail::abs_val(d(pr, pc))) {
            pr = i;
            pc = j;
          }
    }

    if (d(t, t) < Scalar(0)) {
      d.row(t) *= Scalar(-1);
      u.row(t) *= Scalar(-1);
    }
  }
  return out;
}

// input * right = hermite, right unimodular. Column echelon with pivots
// moving down as columns advance, positive pivots, the other entries of each
// pivot row reduced into [0, pivot), zero columns trailing.
template <class Scalar>
struct ColumnHermiteForm {
  DenseMatrix<Scalar> hermite;
  DenseMatrix<Scalar> right;
};

template <class Scalar>
ColumnHermiteForm<Scalar> column_hermite_form(const DenseMatrix<Scalar>& input) {
  using Mat = DenseMatrix<Scalar>;
  using Col = DenseVector<Scalar>;
  const Index m = input.rows();
  const Index n = input.cols();
  ColumnHermiteForm<Scalar> out{input, Mat::Identity(n, n)};
  Mat& h = out.hermite;
  Mat& v = out.right;

  Index pivot = 0;
  for (Index row = 0; row < m && pivot < n; ++row) {
    Index l = -1;
    for (Index j = pivot; j < n; ++j)
      if (h(row, j) != Scalar(0)) {
        l = j;
        break;
      }
    if (l < 0) continue;
    if (l != pivot) {
      h.col(pivot).swap(h.col(l));
      v.col(pivot).swap(v.col(l));
    }
    for (Index k = pivot + 1; k < n; ++k) {
      if (h(row, k) == Scalar(0)) continue;
      Scalar g, x, y;
      detail::extended_gcd(h(row, pivot), h(row, k), g, x, y);
      const Scalar a = h(row, pivot) / g;
      const Scalar b = h(row, k) / g;
      // [col_p col_k] *= [[x, -b], [y, a]], a unimodular transform.
      const Col hp = h.col(pivot), hk = h.col(k);
      h.col(pivot) = x * hp + y * hk;
      h.col(k) = a * hk - b * hp;
      const Col vp = v.col(pivot), vk = v.col(k);
      v.col(pivot) = x * vp + y * vk;
      v.col(k) = a * vk - b * vp;
    }
    if (h(row, pivot) < Scalar(0)) {
      h.col(pivot) *= Scalar(-1);
      v.col(pivot) *= Scalar(-1);
    }
    for (Index k = 0; k < pivot; ++k) {
      const Scalar q = detail::floor_quot(h(row, k), h(row, pivot));
      if (q != Scalar(0)) {
        h.col(k) -= q * h.col(pivot);
        v.col(k) -= q * v.col(pivot);
      }
    }
    ++pivot;
  }
  return out;
}

// Canonical basis of {x : input·x = 0}, one column per basis vector.
template <class Scalar>
DenseMatrix<Scalar> kernel_basis(const DenseMatrix<Scalar>& input) {
  const auto s = smith_normal_form(input);
  const Index n = input.cols();
  const Index r = s.rank();
  if (n == r) return DenseMatrix<Scalar>(n, 0);
  const DenseMatrix<Scalar> raw = s.right.rightCols(n - r);
  return column_hermite_form(raw).hermite;
}

// Some integer solution of input·x = rhs, column by column, or nothing.
template <class Scalar>
std::optional<DenseMatrix<Scalar>> solve_columns(const DenseMatrix<Scalar>& input,
                                                 const DenseMatrix<Scalar>& rhs) {
  if (rhs.rows() != input.rows())
    throw std::invalid_argument("solve_columns: dimension mismatch");
  const auto s = smith_normal_form(input);
  const Index k = std::min(input.rows(), input.cols());
  const DenseMatrix<Scalar> c = s.left * rhs;
  DenseMatrix<Scalar> y = DenseMatrix<Scalar>::Zero(input.cols(), rhs.cols());
  for (Index col = 0; col < rhs.cols(); ++col) {
    for (Index i = 0; i < k; ++i) {
      const Scalar& diag = s.diagonal(i, i);
      if (diag != Scalar(0)) {
        if (c(i, col) % diag != Scalar(0)) return std::nullopt;
        y(i, col) = c(i, col) / diag;
      } else if (c(i, col) != Scalar(0)) {
        return std::nullopt;
      }
    }
    for (Index i = k; i < input.rows(); ++i)
      if (c(i, col) != Scalar(0)) return std::nullopt;
  }
  return DenseMatrix<Scalar>(s.right * y);
}

template <class Scalar>
std::optional<DenseVector<Scalar>> solve_linear(const DenseMatrix<Scalar>& input,
                                                const DenseVector<Scalar>& rhs) {
  const auto x = solve_columns<Scalar>(input, rhs);
  if (!x) return std::nullopt;
  return DenseVector<Scalar>(x->col(0));
}

// Fraction-free (Bareiss) determinant; exact at every step.
template <class Scalar>
Scalar determinant(DenseMatrix<Scalar> a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("determinant: matrix not square");
  const Index n = a.rows();
  if (n == 0) return Scalar(1);
  Scalar sign(1), prev(1);
  for (Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == Scalar(0)) {
      Index r = -1;
      for (Index i = k + 1; i < n; ++i)
        if (a(i, k) != Scalar(0)) {
          r = i;
          break;
        }
      if (r < 0) return Scalar(0);
      a.row(k).swap(a.row(r));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i)
      for (Index j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

template <class Scalar>
bool is_unimodular(const DenseMatrix<Scalar>& m) {
  if (m.rows() != m.cols()) return false;
  const Scalar d = determinant<Scalar>(m);
  return d == Scalar(1) || d == Scalar(-1);
}

}  // namespace pi1lat
