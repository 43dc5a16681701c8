#ifndef HOPFCHECK_MULTIMATRIX_HPP_
#define HOPFCHECK_MULTIMATRIX_HPP_

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hopfcheck/matrix.hpp"

namespace hopfcheck {

// Finite direct sum of full matrix algebras M_{n1} + ... + M_{nk} over
// Q(zeta8), with the *-structure given by conjugate transpose per block.
//
// Canonical basis: matrix units ordered block by block, row-major inside a
// block. Every LinearMap matrix in this library refers to this order.
class MultiMatrixAlgebra {
public:
  struct Position {
    int block;
    int row;
    int col;
  };

  // basis_names overrides basis_name(); tensor products use it to name
  // e_p (x) e_q after their factors.
  explicit MultiMatrixAlgebra(std::vector<int> block_sizes, std::vector<std::string> labels = {},
                              std::vector<std::string> basis_names = {});

  const std::vector<int>& block_sizes() const { return sizes_; }
  const std::vector<std::string>& labels() const { return labels_; }
  int num_blocks() const { return static_cast<int>(sizes_.size()); }
  int block_size(int b) const { return sizes_[b]; }
  int offset(int b) const { return offsets_[b]; }
  int dim() const { return dim_; }

  const Position& locate(int index) const { return positions_[index]; }
  int index(int block, int row, int col) const { return offsets_[block] + row * sizes_[block] + col; }
  // Readable name of a basis vector: the block label for 1x1 blocks,
  // "label[r,c]" (1-based) otherwise.
  std::string basis_name(int index) const;

  bool same_shape(const MultiMatrixAlgebra& o) const { return sizes_ == o.sizes_; }

private:
  std::vector<int> sizes_;
  std::vector<std::string> labels_;
  std::vector<std::string> names_;
  std::vector<int> offsets_;
  std::vector<Position> positions_;
  int dim_ = 0;
};

using AlgebraPtr = std::shared_ptr<const MultiMatrixAlgebra>;

AlgebraPtr make_algebra(std::vector<int> block_sizes, std::vector<std::string> labels = {});
// The ground field as the one-block algebra M_1.
AlgebraPtr scalar_algebra();

// A (x) B: blocks n_i m_j in lexicographic (i, j) order, Kronecker indexing
// inside each block. Results are cached by shape and labels.
AlgebraPtr tensor(const AlgebraPtr& a, const AlgebraPtr& b);
// table[p * dim(B) + q] = canonical index of e_p (x) e_q in A (x) B.
const std::vector<int>& tensor_index_table(const AlgebraPtr& a, const AlgebraPtr& b);
// Inverse of tensor_index_table: canonical index -> (p, q).
const std::vector<std::pair<int, int>>& tensor_pair_table(const AlgebraPtr& a, const AlgebraPtr& b);

class AlgElement {
public:
  AlgElement() = default;
  AlgElement(AlgebraPtr alg, std::vector<CycQ8> coords);

  static AlgElement zero(const AlgebraPtr& alg);
  static AlgElement one(const AlgebraPtr& alg);
  static AlgElement basis(const AlgebraPtr& alg, int index);
  static AlgElement matrix_unit(const AlgebraPtr& alg, int block, int row, int col);
  // Element supported on one block.
  static AlgElement from_block(const AlgebraPtr& alg, int block, const CMatrix& m);
  static AlgElement from_blocks(const AlgebraPtr& alg, const std::vector<CMatrix>& blocks);

  const AlgebraPtr& algebra() const { return alg_; }
  const std::vector<CycQ8>& coords() const { return c_; }
  const CycQ8& operator[](int k) const { return c_[k]; }
  CycQ8& operator[](int k) { return c_[k]; }
  int dim() const { return static_cast<int>(c_.size()); }

  CMatrix block(int b) const;
  bool is_zero() const;
  AlgElement star() const;

  AlgElement& operator+=(const AlgElement& o);
  AlgElement& operator-=(const AlgElement& o);
  AlgElement& operator*=(const CycQ8& s);

  friend AlgElement operator+(AlgElement a, const AlgElement& b) { return a += b; }
  friend AlgElement operator-(AlgElement a, const AlgElement& b) { return a -= b; }
  friend AlgElement operator-(AlgElement a) { return a *= CycQ8(-1); }
  friend AlgElement operator*(const CycQ8& s, AlgElement a) { return a *= s; }
  friend AlgElement operator*(AlgElement a, const CycQ8& s) { return a *= s; }
  friend AlgElement operator*(const AlgElement& a, const AlgElement& b);
  // Structural equality: same block shape and coordinates.
  friend bool operator==(const AlgElement& a, const AlgElement& b);

  // "2*eps - z^2*M2[1,2]" style rendering.
  std::string str() const;

private:
  void check_same(const AlgElement& o) const;

  AlgebraPtr alg_;
  std::vector<CycQ8> c_;
};

enum class ArithOp { Mul, Add, Sub, Star };
// Block-wise arithmetic dispatch; Star ignores b.
AlgElement alg_arith(const AlgElement& a, const AlgElement& b, ArithOp op);

AlgElement tensor(const AlgElement& a, const AlgElement& b);

// Exact matrix of a linear map between canonical bases:
// matrix().rows() == target dim, matrix().cols() == source dim.
class LinearMap {
public:
  LinearMap() = default;
  LinearMap(AlgebraPtr source, AlgebraPtr target, CMatrix m);

  static LinearMap identity(const AlgebraPtr& alg);
  static LinearMap from_images(const AlgebraPtr& source, const AlgebraPtr& target,
                               const std::vector<AlgElement>& images);

  const AlgebraPtr& source() const { return src_; }
  const AlgebraPtr& target() const { return dst_; }
  const CMatrix& matrix() const { return m_; }

  AlgElement apply(const AlgElement& x) const;
  AlgElement image(int basis_index) const;
  // this o inner
  LinearMap after(const LinearMap& inner, Exec exec = Exec::Parallel) const;

  friend bool operator==(const LinearMap& a, const LinearMap& b);

private:
  AlgebraPtr src_;
  AlgebraPtr dst_;
  CMatrix m_;
};

LinearMap compose(const LinearMap& outer, const LinearMap& inner);
// f (x) g, aligned with the canonical bases of the tensor algebras.
LinearMap tensor_of_maps(const LinearMap& f, const LinearMap& g);
// (f (x) g)(x) without forming the Kronecker matrix.
AlgElement apply_tensor(const LinearMap& f, const LinearMap& g, const AlgElement& x);
// m: A (x) A -> A.
LinearMap multiplication_map(const AlgebraPtr& a);
// eta: k -> A.
LinearMap unit_map(const AlgebraPtr& a);
// a (x) b -> b (x) a.
LinearMap flip_map(const AlgebraPtr& a, const AlgebraPtr& b);

// Rank of the coordinate vectors over Q(zeta8).
std::size_t span_rank(const std::vector<AlgElement>& vectors, Exec exec = Exec::Parallel);
// Coordinates as matrix columns.
CMatrix coordinate_matrix(const std::vector<AlgElement>& vectors);

} // namespace hopfcheck

#endif
