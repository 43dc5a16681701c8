#include <vector>

#include "hopfcheck/matrix.hpp"

namespace hopfcheck {

CMatrix adjoint(const CMatrix& m) {
  CMatrix t(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero())
        t(c, r) = m(r, c).conj();
  return t;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero())
        continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          if (!b(p, q).is_zero())
            k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
    }
  return k;
}

CycQ8 trace(const CMatrix& m) {
  CycQ8 t;
  for (std::size_t k = 0; k < m.rows() && k < m.cols(); ++k)
    t += m(k, k);
  return t;
}

bool is_unitary(const CMatrix& m) {
  if (m.rows() != m.cols())
    return false;
  CMatrix id = CMatrix::identity(m.rows());
  return matmul_serial(m, adjoint(m)) == id && matmul_serial(adjoint(m), m) == id;
}

CMatrix make_matrix(const std::vector<std::vector<CycQ8>>& rows) {
  if (rows.empty())
    return {};
  CMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols())
      fail(ErrorKind::ShapeMismatch, "ragged matrix rows");
    for (std::size_t c = 0; c < m.cols(); ++c)
      m(r, c) = rows[r][c];
  }
  return m;
}

namespace {

void matmul_row(const CMatrix& a, const CMatrix& b, CMatrix& out, std::size_t i) {
  CycQ8* dst = out.row(i);
  const CycQ8* arow = a.row(i);
  for (std::size_t k = 0; k < a.cols(); ++k) {
    if (arow[k].is_zero())
      continue;
    const CycQ8* brow = b.row(k);
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (!brow[j].is_zero())
        dst[j].add_product(arow[k], brow[j]);
  }
}

void check_inner(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows())
    fail(ErrorKind::DimensionMismatch, "matmul: inner dimensions differ");
}

} // namespace

CMatrix matmul_serial(const CMatrix& a, const CMatrix& b) {
  check_inner(a, b);
  CMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    matmul_row(a, b, out, i);
  return out;
}

CMatrix matmul_parallel(const CMatrix& a, const CMatrix& b) {
  check_inner(a, b);
  CMatrix out(a.rows(), b.cols());
  const long n = static_cast<long>(a.rows());
#pragma omp parallel for schedule(dynamic, 4)
  for (long i = 0; i < n; ++i)
    matmul_row(a, b, out, static_cast<std::size_t>(i));
  return out;
}

CMatrix matmul(const CMatrix& a, const CMatrix& b, Exec exec) {
  // Small products are dominated by thread start-up.
  if (exec == Exec::Serial || a.rows() < 16)
    return matmul_serial(a, b);
  return matmul_parallel(a, b);
}

} // namespace hopfcheck
