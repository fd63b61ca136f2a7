#pragma once

#include <initializer_list>
#include <stdexcept>

#include <Eigen/Dense>

#include "pi1lat/integer.hpp"

namespace pi1lat {

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = DenseMatrix<Int>;
using IntVector = DenseVector<Int>;

// Exact coefficient-wise tests; no tolerances anywhere in this library.
template <class Scalar>
bool is_zero_matrix(const DenseMatrix<Scalar>& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (m(i, j) != Scalar(0)) return false;
  return true;
}

template <class Scalar>
bool same_matrix(const DenseMatrix<Scalar>& a, const DenseMatrix<Scalar>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

template <class Scalar>
bool same_vector(const DenseVector<Scalar>& a, const DenseVector<Scalar>& b) {
  if (a.size() != b.size()) return false;
  for (Index i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return false;
  return true;
}

// Row-major literal, mainly for tests and builders. Rows must be rectangular;
// make_matrix({}) is the 0x0 matrix and make_matrix({{}, {}}) is 2x0.
inline IntMatrix make_matrix(std::initializer_list<std::initializer_list<long>> rows) {
  const Index r = static_cast<Index>(rows.size());
  Index c = 0;
  if (r > 0) c = static_cast<Index>(rows.begin()->size());
  IntMatrix m(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Index>(row.size()) != c)
      throw std::invalid_argument("make_matrix: ragged rows");
    Index j = 0;
    for (long v : row) m(i, j++) = Int(v);
    ++i;
  }
  return m;
}

inline IntVector make_vector(std::initializer_list<long> entries) {
  IntVector v(static_cast<Index>(entries.size()));
  Index i = 0;
  for (long e : entries) v(i++) = Int(e);
  return v;
}

}  // namespace pi1lat
