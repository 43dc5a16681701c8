#ifndef HOPFCHECK_LINALG_HPP_
#define HOPFCHECK_LINALG_HPP_

#include <optional>
#include <vector>

#include "hopfcheck/matrix.hpp"

namespace hopfcheck {

template <class T>
struct Echelon {
  Matrix<T> reduced;               // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};

namespace detail {

template <class T>
void eliminate_row(Matrix<T>& m, std::size_t target, std::size_t pivot_row, std::size_t pivot_col,
                   const std::vector<std::size_t>& nz) {
  if (m(target, pivot_col).is_zero())
    return;
  T f = m(target, pivot_col);
  T* dst = m.row(target);
  const T* src = m.row(pivot_row);
  for (std::size_t j : nz)
    dst[j] -= f * src[j];
}

} // namespace detail

// Gauss-Jordan elimination. Only the first `pivot_cols` columns are used as
// pivots (pass cols() for a plain matrix, fewer for augmented systems).
// Serial and Parallel produce the same matrix: each row update reads only
// the pivot row and writes only its own row.
template <class T>
Echelon<T> row_reduce(Matrix<T> m, Exec exec = Exec::Parallel, std::size_t pivot_cols = std::size_t(-1)) {
  if (pivot_cols > m.cols())
    pivot_cols = m.cols();
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  std::vector<std::size_t> nz;
  for (std::size_t c = 0; c < pivot_cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c).is_zero())
      ++p;
    if (p == rows)
      continue;
    m.swap_rows(p, r);
    T inv = m(r, c).inverse();
    nz.clear();
    for (std::size_t j = c; j < cols; ++j) {
      if (m(r, j).is_zero())
        continue;
      m(r, j) *= inv;
      nz.push_back(j);
    }
    if (exec == Exec::Parallel) {
      const long n = static_cast<long>(rows);
#pragma omp parallel for schedule(dynamic, 8)
      for (long i = 0; i < n; ++i)
        if (static_cast<std::size_t>(i) != r)
          detail::eliminate_row(m, static_cast<std::size_t>(i), r, c, nz);
    } else {
      for (std::size_t i = 0; i < rows; ++i)
        if (i != r)
          detail::eliminate_row(m, i, r, c, nz);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

template <class T>
std::size_t rank(const Matrix<T>& m, Exec exec = Exec::Parallel) {
  return row_reduce(m, exec).rank();
}

// Basis of {x : m x = 0} as the columns of the returned matrix.
template <class T>
Matrix<T> nullspace(const Matrix<T>& m, Exec exec = Exec::Parallel) {
  Echelon<T> e = row_reduce(m, exec);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : e.pivots)
    is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c])
      free.push_back(c);
  Matrix<T> basis(n, free.size());
  for (std::size_t k = 0; k < free.size(); ++k) {
    basis(free[k], k) = T(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      basis(e.pivots[r], k) = -e.reduced(r, free[k]);
  }
  return basis;
}

template <class T>
struct SolutionSet {
  Matrix<T> particular;  // one solution X of A X = B
  Matrix<T> kernel;      // basis of the homogeneous solutions (columns)
  bool unique() const { return kernel.cols() == 0; }
};

// Solves A X = B for X. Returns nullopt when inconsistent.
template <class T>
std::optional<SolutionSet<T>> solve(const Matrix<T>& a, const Matrix<T>& b, Exec exec = Exec::Parallel) {
  if (a.rows() != b.rows())
    fail(ErrorKind::DimensionMismatch, "solve: row counts differ");
  const std::size_t n = a.cols(), k = b.cols();
  Matrix<T> aug(a.rows(), n + k);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c)
      aug(r, c) = a(r, c);
    for (std::size_t c = 0; c < k; ++c)
      aug(r, n + c) = b(r, c);
  }
  Echelon<T> e = row_reduce(std::move(aug), exec, n);
  for (std::size_t r = e.rank(); r < a.rows(); ++r)
    for (std::size_t c = 0; c < k; ++c)
      if (!e.reduced(r, n + c).is_zero())
        return std::nullopt;
  SolutionSet<T> out;
  out.particular = Matrix<T>(n, k);
  for (std::size_t r = 0; r < e.rank(); ++r)
    for (std::size_t c = 0; c < k; ++c)
      out.particular(e.pivots[r], c) = e.reduced(r, n + c);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : e.pivots)
    is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c])
      free.push_back(c);
  out.kernel = Matrix<T>(n, free.size());
  for (std::size_t f = 0; f < free.size(); ++f) {
    out.kernel(free[f], f) = T(1);
    for (std::size_t r = 0; r < e.rank(); ++r)
      out.kernel(e.pivots[r], f) = -e.reduced(r, free[f]);
  }
  return out;
}

} // namespace hopfcheck

#endif
