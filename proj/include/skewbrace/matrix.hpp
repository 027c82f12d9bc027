#pragma once

// Dense matrices over a prime field, reduced row-echelon form, kernels,
// inverses, and canonical subspace bases.
//
// Matrices act on column vectors: apply(m, v) = m * v. Subspaces are stored
// as row vectors in reduced row-echelon form, which makes SubspaceBasis a
// canonical form (equal iff the spans are equal) and usable as a map key.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "skewbrace/errors.hpp"
#include "skewbrace/field.hpp"

namespace skewbrace {

using Vector = std::vector<FieldElement>;

class Matrix {
 public:
  Matrix(PrimeField field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

  Matrix(PrimeField field, std::size_t rows, std::size_t cols,
         std::vector<FieldElement> entries)
      : field_(field), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows * cols)
      throw DimensionMismatch("matrix entry count does not match shape");
    for (auto& e : entries_) e %= field_.modulus();
  }

  // Rows of signed integers, reduced mod q. All rows must have equal length.
  static Matrix from_rows(PrimeField field,
                          const std::vector<std::vector<std::int64_t>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.front().size();
    Matrix m(field, r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c)
        throw DimensionMismatch("ragged rows in matrix literal");
      for (std::size_t j = 0; j < c; ++j) m.set(i, j, field.reduce(rows[i][j]));
    }
    return m;
  }

  static Matrix from_rows(
      PrimeField field,
      std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    std::vector<std::vector<std::int64_t>> v;
    for (auto& r : rows) v.emplace_back(r);
    return from_rows(field, v);
  }

  static Matrix from_row_vectors(PrimeField field, std::size_t cols,
                                 const std::vector<Vector>& rows) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols)
        throw DimensionMismatch("row vector has wrong length");
      std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
    }
    return m;
  }

  static Matrix identity(PrimeField field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
  }

  static Matrix scalar(PrimeField field, std::size_t n, FieldElement s) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, s % field.modulus());
    return m;
  }

  const PrimeField& field() const noexcept { return field_; }
  FieldElement modulus() const noexcept { return field_.modulus(); }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  const std::vector<FieldElement>& entries() const noexcept { return entries_; }

  FieldElement operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  void set(std::size_t r, std::size_t c, FieldElement v) {
    entries_[r * cols_ + c] = v % field_.modulus();
  }

  std::span<const FieldElement> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  std::span<FieldElement> row(std::size_t r) {
    return {entries_.data() + r * cols_, cols_};
  }

  Vector column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
    return v;
  }

  // m * v for a column vector v.
  Vector apply(std::span<const FieldElement> v) const {
    if (v.size() != cols_) throw DimensionMismatch("apply: vector length");
    const std::uint64_t q = field_.modulus();
    Vector out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
      std::uint64_t acc = 0;
      const FieldElement* r = entries_.data() + i * cols_;
      for (std::size_t j = 0; j < cols_; ++j) {
        acc += std::uint64_t{r[j]} * v[j];
        if (acc >= (std::uint64_t{1} << 62)) acc %= q;
      }
      out[i] = static_cast<FieldElement>(acc % q);
    }
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_ || a.field_ != b.field_)
      throw DimensionMismatch("matrix product shape/field mismatch");
    const std::uint64_t q = a.field_.modulus();
    Matrix out(a.field_, a.rows_, b.cols_);
    std::vector<std::uint64_t> acc(b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t k = 0; k < a.cols_; ++k) {
        std::uint64_t x = a(i, k);
        if (x == 0) continue;
        const FieldElement* br = b.entries_.data() + k * b.cols_;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          acc[j] += x * br[j];
          if (acc[j] >= (std::uint64_t{1} << 62)) acc[j] %= q;
        }
      }
      for (std::size_t j = 0; j < b.cols_; ++j)
        out.entries_[i * b.cols_ + j] = static_cast<FieldElement>(acc[j] % q);
    }
    return out;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix out = a;
    for (std::size_t i = 0; i < out.entries_.size(); ++i)
      out.entries_[i] = a.field_.add(a.entries_[i], b.entries_[i]);
    return out;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix out = a;
    for (std::size_t i = 0; i < out.entries_.size(); ++i)
      out.entries_[i] = a.field_.sub(a.entries_[i], b.entries_[i]);
    return out;
  }

  Matrix scaled(FieldElement s) const {
    Matrix out = *this;
    for (auto& e : out.entries_) e = field_.mul(e, s % field_.modulus());
    return out;
  }

  Matrix transpose() const {
    Matrix out(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out.set(j, i, (*this)(i, j));
    return out;
  }

  // Kronecker product; index (i,j) of the left/right factor maps to
  // i*right.rows() + j.
  Matrix kronecker(const Matrix& right) const {
    Matrix out(field_, rows_ * right.rows_, cols_ * right.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        for (std::size_t k = 0; k < right.rows_; ++k)
          for (std::size_t l = 0; l < right.cols_; ++l)
            out.set(i * right.rows_ + k, j * right.cols_ + l,
                    field_.mul((*this)(i, j), right(k, l)));
    return out;
  }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](FieldElement e) { return e == 0; });
  }

  bool is_identity() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(i, j) != (i == j ? 1u : 0u)) return false;
    return true;
  }

  FieldElement trace() const {
    FieldElement t = 0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i)
      t = field_.add(t, (*this)(i, i));
    return t;
  }

  bool commutes_with(const Matrix& other) const {
    return (*this) * other == other * (*this);
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.entries_ == b.entries_;
  }

  friend std::strong_ordering operator<=>(const Matrix& a, const Matrix& b) {
    if (auto c = a.field_.modulus() <=> b.field_.modulus(); c != 0) return c;
    if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
    if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
    return a.entries_ <=> b.entries_;
  }

  std::string to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
      os << (i ? ",[" : "[");
      for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
      os << ']';
    }
    os << ']';
    return os.str();
  }

  std::vector<std::vector<std::int64_t>> to_rows() const {
    std::vector<std::vector<std::int64_t>> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      out[i].assign(row(i).begin(), row(i).end());
    return out;
  }

 private:
  void require_same_shape(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_ || field_ != b.field_)
      throw DimensionMismatch("matrix shape/field mismatch");
  }

  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FieldElement> entries_;
};

struct RrefResult {
  Matrix reduced;
  std::size_t rank;
  std::vector<std::size_t> pivots;
};

// Gauss-Jordan elimination: leftmost pivot column first, topmost nonzero row
// in that column as pivot row. The result is the unique RREF of m.
inline RrefResult rref(Matrix m) {
  const PrimeField f = m.field();
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t p = rank;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != rank) std::swap_ranges(m.row(p).begin(), m.row(p).end(), m.row(rank).begin());
    auto pr = m.row(rank);
    FieldElement inv = f.inv(pr[c]);
    for (auto& e : pr) e = f.mul(e, inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank || m(r, c) == 0) continue;
      FieldElement factor = f.neg(m(r, c));
      auto rr = m.row(r);
      for (std::size_t j = c; j < m.cols(); ++j) rr[j] = f.mul_add(rr[j], factor, pr[j]);
    }
    pivots.push_back(c);
    ++rank;
  }
  return {std::move(m), rank, std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return rref(m).rank; }

class SubspaceBasis;
SubspaceBasis nullspace(const Matrix& m);

// A subspace of F_q^n held as its RREF row basis.
class SubspaceBasis {
 public:
  SubspaceBasis(PrimeField field, std::size_t ambient_dim)
      : field_(field), ambient_(ambient_dim) {}

  static SubspaceBasis span(PrimeField field, std::size_t ambient_dim,
                            const std::vector<Vector>& generators) {
    SubspaceBasis s(field, ambient_dim);
    if (generators.empty()) return s;
    auto r = rref(Matrix::from_row_vectors(field, ambient_dim, generators));
    s.pivots_ = r.pivots;
    for (std::size_t i = 0; i < r.rank; ++i)
      s.vectors_.emplace_back(r.reduced.row(i).begin(), r.reduced.row(i).end());
    return s;
  }

  static SubspaceBasis full(PrimeField field, std::size_t ambient_dim) {
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < ambient_dim; ++i) {
      Vector e(ambient_dim, 0);
      e[i] = 1;
      gens.push_back(std::move(e));
    }
    return span(field, ambient_dim, gens);
  }

  // Span of the columns of m.
  static SubspaceBasis column_space(const Matrix& m) {
    std::vector<Vector> cols;
    for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
    return span(m.field(), m.rows(), cols);
  }

  const PrimeField& field() const noexcept { return field_; }
  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return vectors_.size(); }
  bool is_zero() const noexcept { return vectors_.empty(); }
  bool is_full() const noexcept { return vectors_.size() == ambient_; }
  const std::vector<Vector>& vectors() const noexcept { return vectors_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  // v minus its component in the subspace along the pivot coordinates.
  Vector reduce(Vector v) const {
    for (std::size_t i = 0; i < vectors_.size(); ++i) {
      FieldElement c = v[pivots_[i]];
      if (c == 0) continue;
      FieldElement neg = field_.neg(c);
      for (std::size_t j = 0; j < ambient_; ++j)
        v[j] = field_.mul_add(v[j], neg, vectors_[i][j]);
    }
    return v;
  }

  bool contains(const Vector& v) const {
    Vector r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](FieldElement e) { return e == 0; });
  }

  bool contains(const SubspaceBasis& other) const {
    return std::all_of(other.vectors_.begin(), other.vectors_.end(),
                       [&](const Vector& v) { return contains(v); });
  }

  // Coordinates of v (assumed to lie in the subspace) in this basis.
  Vector coordinates(const Vector& v) const {
    Vector c(vectors_.size());
    for (std::size_t i = 0; i < vectors_.size(); ++i) c[i] = v[pivots_[i]];
    return c;
  }

  // Vector with the given coordinates in this basis.
  Vector combine(const Vector& coords) const {
    Vector v(ambient_, 0);
    for (std::size_t i = 0; i < vectors_.size(); ++i) {
      if (coords[i] == 0) continue;
      for (std::size_t j = 0; j < ambient_; ++j)
        v[j] = field_.mul_add(v[j], coords[i], vectors_[i][j]);
    }
    return v;
  }

  SubspaceBasis operator+(const SubspaceBasis& other) const {
    std::vector<Vector> gens = vectors_;
    gens.insert(gens.end(), other.vectors_.begin(), other.vectors_.end());
    return span(field_, ambient_, gens);
  }

  SubspaceBasis intersect(const SubspaceBasis& other) const;

  // Rows = basis vectors.
  Matrix as_matrix() const {
    return Matrix::from_row_vectors(field_, ambient_, vectors_);
  }

  // Ambient coordinates of the basis vectors as columns (ambient x dim).
  Matrix as_columns() const { return as_matrix().transpose(); }

  // Non-pivot coordinates, in increasing order.
  std::vector<std::size_t> free_coordinates() const {
    std::vector<std::size_t> out;
    std::size_t k = 0;
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (k < pivots_.size() && pivots_[k] == j)
        ++k;
      else
        out.push_back(j);
    }
    return out;
  }

  friend bool operator==(const SubspaceBasis& a, const SubspaceBasis& b) {
    return a.field_ == b.field_ && a.ambient_ == b.ambient_ &&
           a.vectors_ == b.vectors_;
  }

  // Lexicographic on (dim, basis rows).
  friend std::strong_ordering operator<=>(const SubspaceBasis& a,
                                          const SubspaceBasis& b) {
    if (auto c = a.ambient_ <=> b.ambient_; c != 0) return c;
    if (auto c = a.vectors_.size() <=> b.vectors_.size(); c != 0) return c;
    return a.vectors_ <=> b.vectors_;
  }

  std::string to_string() const {
    std::ostringstream os;
    os << "span{";
    for (std::size_t i = 0; i < vectors_.size(); ++i) {
      os << (i ? ", (" : "(");
      for (std::size_t j = 0; j < ambient_; ++j) os << (j ? "," : "") << vectors_[i][j];
      os << ')';
    }
    os << '}';
    return os.str();
  }

 private:
  PrimeField field_;
  std::size_t ambient_;
  std::vector<Vector> vectors_;
  std::vector<std::size_t> pivots_;
};

// Kernel {v : m v = 0} as a canonical basis of F_q^cols.
inline SubspaceBasis nullspace(const Matrix& m) {
  const PrimeField f = m.field();
  auto r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vector> gens;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = f.neg(r.reduced(i, free));
    gens.push_back(std::move(v));
  }
  return SubspaceBasis::span(f, m.cols(), gens);
}

inline SubspaceBasis SubspaceBasis::intersect(const SubspaceBasis& other) const {
  // x in both iff x = sum a_i u_i = sum b_j w_j; solve [U^T | -W^T] (a,b) = 0.
  if (is_zero() || other.is_zero()) return SubspaceBasis(field_, ambient_);
  Matrix sys(field_, ambient_, dim() + other.dim());
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < ambient_; ++j) sys.set(j, i, vectors_[i][j]);
  for (std::size_t i = 0; i < other.dim(); ++i)
    for (std::size_t j = 0; j < ambient_; ++j)
      sys.set(j, dim() + i, field_.neg(other.vectors_[i][j]));
  auto ker = nullspace(sys);
  std::vector<Vector> gens;
  for (const auto& k : ker.vectors()) gens.push_back(combine(Vector(k.begin(), k.begin() + dim())));
  return span(field_, ambient_, gens);
}

inline Matrix invert(const Matrix& m) {
  if (!m.is_square()) throw DimensionMismatch("invert: matrix is not square");
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.set(i, j, m(i, j));
    aug.set(i, n + i, 1);
  }
  auto r = rref(std::move(aug));
  std::size_t left_rank = 0;
  while (left_rank < r.pivots.size() && r.pivots[left_rank] < n) ++left_rank;
  if (left_rank < n) throw SingularMatrix(left_rank, n);
  Matrix out(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.set(i, j, r.reduced(i, n + j));
  return out;
}

inline bool is_invertible(const Matrix& m) {
  return m.is_square() && rank(m) == m.rows();
}

// Incremental semi-echelon basis used by spinning. Rows are kept in
// insertion order; row i has a 1 at pivots_[i] and zeros at earlier pivots.
class EchelonBuilder {
 public:
  EchelonBuilder(PrimeField field, std::size_t ambient_dim)
      : field_(field), ambient_(ambient_dim) {}

  std::size_t dim() const noexcept { return rows_.size(); }
  const std::vector<Vector>& rows() const noexcept { return rows_; }

  Vector reduce(Vector v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      FieldElement c = v[pivots_[i]];
      if (c == 0) continue;
      FieldElement neg = field_.neg(c);
      const Vector& r = rows_[i];
      for (std::size_t j = 0; j < ambient_; ++j)
        if (r[j]) v[j] = field_.mul_add(v[j], neg, r[j]);
    }
    return v;
  }

  // Returns true if v was outside the current span.
  bool insert(Vector v) {
    v = reduce(std::move(v));
    std::size_t p = 0;
    while (p < ambient_ && v[p] == 0) ++p;
    if (p == ambient_) return false;
    FieldElement inv = field_.inv(v[p]);
    for (auto& e : v) e = field_.mul(e, inv);
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

  SubspaceBasis basis() const { return SubspaceBasis::span(field_, ambient_, rows_); }

 private:
  PrimeField field_;
  std::size_t ambient_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

// Canonical representatives of the 1-dimensional subspaces of the row span
// of `space`: every nonzero combination whose first nonzero coordinate is 1.
// Calls visit(v) for each; stops early when visit returns false.
template <class Visit>
void for_each_line(const SubspaceBasis& space, Visit&& visit) {
  const std::size_t k = space.dim();
  const std::uint64_t q = space.field().modulus();
  for (std::size_t lead = 0; lead < k; ++lead) {
    // coords: zeros before lead, 1 at lead, arbitrary after.
    Vector coords(k, 0);
    coords[lead] = 1;
    const std::size_t tail = k - lead - 1;
    for (;;) {
      if (!visit(space.combine(coords))) return;
      std::size_t i = 0;
      while (i < tail) {
        auto& c = coords[lead + 1 + i];
        if (++c < q) break;
        c = 0;
        ++i;
      }
      if (i == tail) break;
    }
  }
}

inline std::uint64_t line_count(std::uint64_t q, std::size_t dim,
                                std::uint64_t cap = ~std::uint64_t{0}) {
  // (q^dim - 1) / (q - 1), saturating at cap.
  std::uint64_t total = 0, power = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    total += power;
    if (total >= cap) return cap;
    if (power > cap / q) return cap;
    power *= q;
  }
  return total;
}

}  // namespace skewbrace
