#ifndef HOPFCHECK_MATRIX_HPP_
#define HOPFCHECK_MATRIX_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "hopfcheck/cyclotomic.hpp"
#include "hopfcheck/error.hpp"

namespace hopfcheck {

// Execution policy for the data-parallel kernels. Serial is the reference
// path; Parallel uses OpenMP and must produce identical results.
enum class Exec { Serial, Parallel };

// Dense row-major matrix over an exact field.
template <class T>
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k)
      m(k, k) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  T* row(std::size_t r) { return data_.data() + r * cols_; }
  const T* row(std::size_t r) const { return data_.data() + r * cols_; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b)
      return;
    for (std::size_t c = 0; c < cols_; ++c)
      std::swap((*this)(a, c), (*this)(b, c));
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix column(std::size_t c) const {
    Matrix v(rows_, 1);
    for (std::size_t r = 0; r < rows_; ++r)
      v(r, 0) = (*this)(r, c);
    return v;
  }

  bool is_zero() const {
    for (const T& x : data_)
      if (!x.is_zero())
        return false;
    return true;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k)
      data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k)
      data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (T& x : data_)
      if (!x.is_zero())
        x *= s;
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  const std::vector<T>& data() const { return data_; }

private:
  void check_same(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      fail(ErrorKind::ShapeMismatch, "matrix shapes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using CMatrix = Matrix<CycQ8>;

// Conjugate transpose.
CMatrix adjoint(const CMatrix& m);
CMatrix kron(const CMatrix& a, const CMatrix& b);
CycQ8 trace(const CMatrix& m);
bool is_unitary(const CMatrix& m);
// Builds a matrix from nested rows; all rows must have equal length.
CMatrix make_matrix(const std::vector<std::vector<CycQ8>>& rows);

// Dense product skipping zero entries (exact entries are mostly zero here).
CMatrix matmul_serial(const CMatrix& a, const CMatrix& b);
CMatrix matmul_parallel(const CMatrix& a, const CMatrix& b);
CMatrix matmul(const CMatrix& a, const CMatrix& b, Exec exec = Exec::Parallel);
inline CMatrix operator*(const CMatrix& a, const CMatrix& b) { return matmul(a, b); }

} // namespace hopfcheck

#endif
