#include "hopfcheck/multimatrix.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

#include "hopfcheck/linalg.hpp"

namespace hopfcheck {

MultiMatrixAlgebra::MultiMatrixAlgebra(std::vector<int> block_sizes, std::vector<std::string> labels,
                                       std::vector<std::string> basis_names)
    : sizes_(std::move(block_sizes)), labels_(std::move(labels)), names_(std::move(basis_names)) {
  if (!labels_.empty() && labels_.size() != sizes_.size())
    fail(ErrorKind::ShapeMismatch, "one label per block required");
  if (labels_.empty())
    for (std::size_t b = 0; b < sizes_.size(); ++b)
      labels_.push_back("b" + std::to_string(b));
  for (int b = 0; b < num_blocks(); ++b) {
    const int n = sizes_[b];
    if (n <= 0)
      fail(ErrorKind::ShapeMismatch, "block sizes must be positive");
    offsets_.push_back(dim_);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        positions_.push_back({b, r, c});
    dim_ += n * n;
  }
  if (!names_.empty() && static_cast<int>(names_.size()) != dim_)
    fail(ErrorKind::ShapeMismatch, "one basis name per basis vector required");
}

std::string MultiMatrixAlgebra::basis_name(int index) const {
  if (!names_.empty())
    return names_[index];
  const Position& p = positions_[index];
  if (sizes_[p.block] == 1)
    return labels_[p.block];
  return labels_[p.block] + "[" + std::to_string(p.row + 1) + "," + std::to_string(p.col + 1) + "]";
}

AlgebraPtr make_algebra(std::vector<int> block_sizes, std::vector<std::string> labels) {
  return std::make_shared<const MultiMatrixAlgebra>(std::move(block_sizes), std::move(labels));
}

AlgebraPtr scalar_algebra() {
  static const AlgebraPtr k = make_algebra({1}, {"k"});
  return k;
}

namespace {

struct TensorLayout {
  AlgebraPtr product;
  std::vector<int> table;
  std::vector<std::pair<int, int>> pairs;
};

using LayoutKey =
    std::tuple<std::vector<int>, std::vector<std::string>, std::vector<int>, std::vector<std::string>>;

const TensorLayout& layout(const AlgebraPtr& a, const AlgebraPtr& b) {
  static std::mutex mu;
  static std::map<LayoutKey, std::unique_ptr<TensorLayout>> cache;
  LayoutKey key{a->block_sizes(), a->labels(), b->block_sizes(), b->labels()};
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it != cache.end())
    return *it->second;

  std::vector<int> sizes;
  std::vector<std::string> labels;
  for (int i = 0; i < a->num_blocks(); ++i)
    for (int j = 0; j < b->num_blocks(); ++j) {
      sizes.push_back(a->block_size(i) * b->block_size(j));
      labels.push_back(a->labels()[i] + "|" + b->labels()[j]);
    }
  auto out = std::make_unique<TensorLayout>();
  const MultiMatrixAlgebra shape(sizes, labels);
  const int da = a->dim(), db = b->dim(), nbb = b->num_blocks();
  out->table.resize(static_cast<std::size_t>(da) * db);
  out->pairs.resize(static_cast<std::size_t>(da) * db);
  for (int p = 0; p < da; ++p) {
    const auto& pa = a->locate(p);
    for (int q = 0; q < db; ++q) {
      const auto& pb = b->locate(q);
      const int m = b->block_size(pb.block);
      const int blk = pa.block * nbb + pb.block;
      const int idx = shape.index(blk, pa.row * m + pb.row, pa.col * m + pb.col);
      out->table[static_cast<std::size_t>(p) * db + q] = idx;
      out->pairs[idx] = {p, q};
    }
  }
  std::vector<std::string> names(out->pairs.size());
  for (std::size_t k = 0; k < names.size(); ++k)
    names[k] = a->basis_name(out->pairs[k].first) + " (x) " + b->basis_name(out->pairs[k].second);
  out->product = std::make_shared<const MultiMatrixAlgebra>(std::move(sizes), std::move(labels), std::move(names));
  auto& ref = *out;
  cache.emplace(std::move(key), std::move(out));
  return ref;
}

} // namespace

AlgebraPtr tensor(const AlgebraPtr& a, const AlgebraPtr& b) { return layout(a, b).product; }

const std::vector<int>& tensor_index_table(const AlgebraPtr& a, const AlgebraPtr& b) {
  return layout(a, b).table;
}

const std::vector<std::pair<int, int>>& tensor_pair_table(const AlgebraPtr& a, const AlgebraPtr& b) {
  return layout(a, b).pairs;
}

// ---------------------------------------------------------------- AlgElement

AlgElement::AlgElement(AlgebraPtr alg, std::vector<CycQ8> coords) : alg_(std::move(alg)), c_(std::move(coords)) {
  if (static_cast<int>(c_.size()) != alg_->dim())
    fail(ErrorKind::ShapeMismatch, "coordinate vector does not match algebra dimension");
}

AlgElement AlgElement::zero(const AlgebraPtr& alg) {
  return AlgElement(alg, std::vector<CycQ8>(static_cast<std::size_t>(alg->dim())));
}

AlgElement AlgElement::one(const AlgebraPtr& alg) {
  AlgElement e = zero(alg);
  for (int b = 0; b < alg->num_blocks(); ++b)
    for (int k = 0; k < alg->block_size(b); ++k)
      e.c_[alg->index(b, k, k)] = 1;
  return e;
}

AlgElement AlgElement::basis(const AlgebraPtr& alg, int index) {
  AlgElement e = zero(alg);
  e.c_.at(index) = 1;
  return e;
}

AlgElement AlgElement::matrix_unit(const AlgebraPtr& alg, int block, int row, int col) {
  return basis(alg, alg->index(block, row, col));
}

AlgElement AlgElement::from_block(const AlgebraPtr& alg, int block, const CMatrix& m) {
  const int n = alg->block_size(block);
  if (static_cast<int>(m.rows()) != n || static_cast<int>(m.cols()) != n)
    fail(ErrorKind::ShapeMismatch, "block matrix has the wrong size");
  AlgElement e = zero(alg);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      e.c_[alg->index(block, r, c)] = m(r, c);
  return e;
}

AlgElement AlgElement::from_blocks(const AlgebraPtr& alg, const std::vector<CMatrix>& blocks) {
  if (static_cast<int>(blocks.size()) != alg->num_blocks())
    fail(ErrorKind::ShapeMismatch, "block count mismatch");
  AlgElement e = zero(alg);
  for (int b = 0; b < alg->num_blocks(); ++b)
    e += from_block(alg, b, blocks[b]);
  return e;
}

CMatrix AlgElement::block(int b) const {
  const int n = alg_->block_size(b);
  CMatrix m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      m(r, c) = c_[alg_->index(b, r, c)];
  return m;
}

bool AlgElement::is_zero() const {
  for (const auto& x : c_)
    if (!x.is_zero())
      return false;
  return true;
}

AlgElement AlgElement::star() const {
  AlgElement out = zero(alg_);
  for (int k = 0; k < dim(); ++k) {
    if (c_[k].is_zero())
      continue;
    const auto& p = alg_->locate(k);
    out.c_[alg_->index(p.block, p.col, p.row)] = c_[k].conj();
  }
  return out;
}

void AlgElement::check_same(const AlgElement& o) const {
  if (!alg_ || !o.alg_ || !alg_->same_shape(*o.alg_))
    fail(ErrorKind::ShapeMismatch, "elements belong to algebras of different shape");
}

AlgElement& AlgElement::operator+=(const AlgElement& o) {
  check_same(o);
  for (int k = 0; k < dim(); ++k)
    if (!o.c_[k].is_zero())
      c_[k] += o.c_[k];
  return *this;
}

AlgElement& AlgElement::operator-=(const AlgElement& o) {
  check_same(o);
  for (int k = 0; k < dim(); ++k)
    if (!o.c_[k].is_zero())
      c_[k] -= o.c_[k];
  return *this;
}

AlgElement& AlgElement::operator*=(const CycQ8& s) {
  for (auto& x : c_)
    if (!x.is_zero())
      x *= s;
  return *this;
}

AlgElement operator*(const AlgElement& a, const AlgElement& b) {
  a.check_same(b);
  const MultiMatrixAlgebra& alg = *a.alg_;
  AlgElement out = AlgElement::zero(a.alg_);
  for (int blk = 0; blk < alg.num_blocks(); ++blk) {
    const int n = alg.block_size(blk), o = alg.offset(blk);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        const CycQ8& x = a.c_[o + i * n + k];
        if (x.is_zero())
          continue;
        for (int j = 0; j < n; ++j) {
          const CycQ8& y = b.c_[o + k * n + j];
          if (!y.is_zero())
            out.c_[o + i * n + j].add_product(x, y);
        }
      }
  }
  return out;
}

bool operator==(const AlgElement& a, const AlgElement& b) {
  if (!a.alg_ || !b.alg_)
    return !a.alg_ && !b.alg_;
  return a.alg_->same_shape(*b.alg_) && a.c_ == b.c_;
}

std::string AlgElement::str() const {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < dim(); ++k) {
    if (c_[k].is_zero())
      continue;
    if (!first)
      os << " + ";
    first = false;
    if (c_[k].is_one())
      os << alg_->basis_name(k);
    else
      os << "(" << c_[k].str() << ")*" << alg_->basis_name(k);
  }
  return first ? "0" : os.str();
}

AlgElement alg_arith(const AlgElement& a, const AlgElement& b, ArithOp op) {
  switch (op) {
  case ArithOp::Mul: return a * b;
  case ArithOp::Add: return a + b;
  case ArithOp::Sub: return a - b;
  case ArithOp::Star: return a.star();
  }
  return a;
}

AlgElement tensor(const AlgElement& a, const AlgElement& b) {
  const AlgebraPtr ab = tensor(a.algebra(), b.algebra());
  const auto& table = tensor_index_table(a.algebra(), b.algebra());
  AlgElement out = AlgElement::zero(ab);
  const int db = b.dim();
  for (int p = 0; p < a.dim(); ++p) {
    if (a[p].is_zero())
      continue;
    for (int q = 0; q < db; ++q)
      if (!b[q].is_zero())
        out[table[static_cast<std::size_t>(p) * db + q]] = a[p] * b[q];
  }
  return out;
}

// ----------------------------------------------------------------- LinearMap

LinearMap::LinearMap(AlgebraPtr source, AlgebraPtr target, CMatrix m)
    : src_(std::move(source)), dst_(std::move(target)), m_(std::move(m)) {
  if (static_cast<int>(m_.rows()) != dst_->dim() || static_cast<int>(m_.cols()) != src_->dim())
    fail(ErrorKind::DimensionMismatch, "linear map matrix must be dim(target) x dim(source)");
}

LinearMap LinearMap::identity(const AlgebraPtr& alg) {
  return LinearMap(alg, alg, CMatrix::identity(static_cast<std::size_t>(alg->dim())));
}

LinearMap LinearMap::from_images(const AlgebraPtr& source, const AlgebraPtr& target,
                                 const std::vector<AlgElement>& images) {
  if (static_cast<int>(images.size()) != source->dim())
    fail(ErrorKind::DimensionMismatch, "need one image per source basis vector");
  CMatrix m(static_cast<std::size_t>(target->dim()), static_cast<std::size_t>(source->dim()));
  for (int c = 0; c < source->dim(); ++c) {
    if (!images[c].algebra()->same_shape(*target))
      fail(ErrorKind::ShapeMismatch, "image lies in the wrong algebra");
    for (int r = 0; r < target->dim(); ++r)
      m(r, c) = images[c][r];
  }
  return LinearMap(source, target, std::move(m));
}

AlgElement LinearMap::apply(const AlgElement& x) const {
  if (!x.algebra()->same_shape(*src_))
    fail(ErrorKind::DimensionMismatch, "argument is not in the source algebra");
  AlgElement out = AlgElement::zero(dst_);
  for (int c = 0; c < src_->dim(); ++c) {
    if (x[c].is_zero())
      continue;
    for (int r = 0; r < dst_->dim(); ++r)
      if (!m_(r, c).is_zero())
        out[r].add_product(m_(r, c), x[c]);
  }
  return out;
}

AlgElement LinearMap::image(int basis_index) const {
  AlgElement out = AlgElement::zero(dst_);
  for (int r = 0; r < dst_->dim(); ++r)
    out[r] = m_(r, basis_index);
  return out;
}

LinearMap LinearMap::after(const LinearMap& inner, Exec exec) const {
  if (!inner.dst_->same_shape(*src_))
    fail(ErrorKind::DimensionMismatch, "compose: inner target differs from outer source");
  return LinearMap(inner.src_, dst_, matmul(m_, inner.m_, exec));
}

bool operator==(const LinearMap& a, const LinearMap& b) {
  return a.src_->same_shape(*b.src_) && a.dst_->same_shape(*b.dst_) && a.m_ == b.m_;
}

LinearMap compose(const LinearMap& outer, const LinearMap& inner) { return outer.after(inner); }

LinearMap tensor_of_maps(const LinearMap& f, const LinearMap& g) {
  const AlgebraPtr src = tensor(f.source(), g.source());
  const AlgebraPtr dst = tensor(f.target(), g.target());
  const auto& in = tensor_index_table(f.source(), g.source());
  const auto& out = tensor_index_table(f.target(), g.target());
  const int sf = f.source()->dim(), sg = g.source()->dim();
  const int tf = f.target()->dim(), tg = g.target()->dim();
  CMatrix m(static_cast<std::size_t>(dst->dim()), static_cast<std::size_t>(src->dim()));
  for (int p = 0; p < sf; ++p)
    for (int r = 0; r < tf; ++r) {
      const CycQ8& a = f.matrix()(r, p);
      if (a.is_zero())
        continue;
      for (int q = 0; q < sg; ++q)
        for (int s = 0; s < tg; ++s) {
          const CycQ8& b = g.matrix()(s, q);
          if (!b.is_zero())
            m(out[static_cast<std::size_t>(r) * tg + s], in[static_cast<std::size_t>(p) * sg + q]) = a * b;
        }
    }
  return LinearMap(src, dst, std::move(m));
}

AlgElement apply_tensor(const LinearMap& f, const LinearMap& g, const AlgElement& x) {
  const AlgebraPtr src = tensor(f.source(), g.source());
  if (!x.algebra()->same_shape(*src))
    fail(ErrorKind::DimensionMismatch, "apply_tensor: argument not in source tensor algebra");
  const auto& pairs = tensor_pair_table(f.source(), g.source());
  const auto& out = tensor_index_table(f.target(), g.target());
  const int tf = f.target()->dim(), tg = g.target()->dim();
  AlgElement res = AlgElement::zero(tensor(f.target(), g.target()));
  for (int k = 0; k < x.dim(); ++k) {
    if (x[k].is_zero())
      continue;
    const auto [p, q] = pairs[k];
    for (int r = 0; r < tf; ++r) {
      const CycQ8& a = f.matrix()(r, p);
      if (a.is_zero())
        continue;
      CycQ8 xa = x[k] * a;
      for (int s = 0; s < tg; ++s) {
        const CycQ8& b = g.matrix()(s, q);
        if (!b.is_zero())
          res[out[static_cast<std::size_t>(r) * tg + s]].add_product(xa, b);
      }
    }
  }
  return res;
}

LinearMap multiplication_map(const AlgebraPtr& a) {
  const AlgebraPtr aa = tensor(a, a);
  const auto& table = tensor_index_table(a, a);
  const int d = a->dim();
  CMatrix m(static_cast<std::size_t>(d), static_cast<std::size_t>(aa->dim()));
  for (int p = 0; p < d; ++p) {
    const auto& pp = a->locate(p);
    for (int q = 0; q < d; ++q) {
      const auto& pq = a->locate(q);
      if (pp.block == pq.block && pp.col == pq.row)
        m(a->index(pp.block, pp.row, pq.col), table[static_cast<std::size_t>(p) * d + q]) = 1;
    }
  }
  return LinearMap(aa, a, std::move(m));
}

LinearMap unit_map(const AlgebraPtr& a) {
  const AlgElement one = AlgElement::one(a);
  return LinearMap::from_images(scalar_algebra(), a, {one});
}

LinearMap flip_map(const AlgebraPtr& a, const AlgebraPtr& b) {
  const AlgebraPtr ab = tensor(a, b), ba = tensor(b, a);
  const auto& t_ab = tensor_index_table(a, b);
  const auto& t_ba = tensor_index_table(b, a);
  CMatrix m(static_cast<std::size_t>(ba->dim()), static_cast<std::size_t>(ab->dim()));
  for (int p = 0; p < a->dim(); ++p)
    for (int q = 0; q < b->dim(); ++q)
      m(t_ba[static_cast<std::size_t>(q) * a->dim() + p], t_ab[static_cast<std::size_t>(p) * b->dim() + q]) = 1;
  return LinearMap(ab, ba, std::move(m));
}

CMatrix coordinate_matrix(const std::vector<AlgElement>& vectors) {
  if (vectors.empty())
    return {};
  const int d = vectors.front().dim();
  CMatrix m(static_cast<std::size_t>(d), vectors.size());
  for (std::size_t c = 0; c < vectors.size(); ++c) {
    if (vectors[c].dim() != d)
      fail(ErrorKind::DimensionMismatch, "span_rank: vectors from different algebras");
    for (int r = 0; r < d; ++r)
      m(r, c) = vectors[c][r];
  }
  return m;
}

std::size_t span_rank(const std::vector<AlgElement>& vectors, Exec exec) {
  if (vectors.empty())
    return 0;
  // Rows are the vectors: elimination then walks coordinates, which is the
  // sparser direction for matrix-unit expansions.
  return rank(coordinate_matrix(vectors).transpose(), exec);
}

} // namespace hopfcheck
