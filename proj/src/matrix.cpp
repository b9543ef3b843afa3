#include "msdim/matrix.hpp"

#include <algorithm>

#include "msdim/errors.hpp"

namespace msdim {

FqMatrix::FqMatrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

FqMatrix FqMatrix::identity(FieldPtr field, std::size_t n) {
  FqMatrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

FqMatrix FqMatrix::from_rows(FieldPtr field, std::size_t cols, const std::vector<FqVector>& rows) {
  FqMatrix m(std::move(field), 0, cols);
  for (const auto& r : rows)
    m.append_row(r);
  return m;
}

void FqMatrix::append_row(std::span<const FieldElem> v) {
  if (v.size() != cols_)
    throw DomainError("row length does not match matrix width");
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

FqMatrix FqMatrix::operator*(const FqMatrix& rhs) const {
  if (cols_ != rhs.rows_)
    throw DomainError("matrix dimensions do not match for multiplication");
  FqMatrix out(field_, rows_, rhs.cols_);
  const GaloisField& f = *field_;
  const std::uint64_t p = f.characteristic();
  const bool delayed = f.is_prime_field() && (p - 1) * (p - 1) <= (~0ull) / (cols_ + 1);
  if (delayed) {
    std::vector<std::uint64_t> acc(rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      const FieldElem* a = data_.data() + i * cols_;
      for (std::size_t k = 0; k < cols_; ++k) {
        const std::uint64_t c = a[k];
        if (c == 0)
          continue;
        const FieldElem* b = rhs.data_.data() + k * rhs.cols_;
        for (std::size_t j = 0; j < rhs.cols_; ++j)
          acc[j] += c * b[j];
      }
      FieldElem* o = out.data_.data() + i * rhs.cols_;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        o[j] = static_cast<FieldElem>(acc[j] % p);
    }
    return out;
  }
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      f.axpy(out.data_.data() + i * rhs.cols_, (*this)(i, k), rhs.data_.data() + k * rhs.cols_, rhs.cols_);
  return out;
}

FqMatrix FqMatrix::operator+(const FqMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw DomainError("matrix dimensions do not match for addition");
  FqMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i)
    out.data_[i] = field_->add(data_[i], rhs.data_[i]);
  return out;
}

FqMatrix FqMatrix::operator-(const FqMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw DomainError("matrix dimensions do not match for subtraction");
  FqMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i)
    out.data_[i] = field_->sub(data_[i], rhs.data_[i]);
  return out;
}

FqMatrix FqMatrix::scaled(FieldElem c) const {
  FqMatrix out = *this;
  field_->scale(out.data_.data(), c, out.data_.size());
  return out;
}

FqMatrix FqMatrix::transpose() const {
  FqMatrix out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      out(j, i) = (*this)(i, j);
  return out;
}

FqMatrix FqMatrix::kron(const FqMatrix& rhs) const {
  FqMatrix out(field_, rows_ * rhs.rows_, cols_ * rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const FieldElem a = (*this)(i, j);
      if (a == 0)
        continue;
      for (std::size_t k = 0; k < rhs.rows_; ++k)
        for (std::size_t l = 0; l < rhs.cols_; ++l)
          out(i * rhs.rows_ + k, j * rhs.cols_ + l) = field_->mul(a, rhs(k, l));
    }
  return out;
}

FqMatrix FqMatrix::inverse() const {
  if (rows_ != cols_)
    throw DomainError("only square matrices can be inverted");
  const std::size_t n = rows_;
  const GaloisField& f = *field_;
  FqMatrix a = *this;
  FqMatrix inv = identity(field_, n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c) == 0)
      ++piv;
    if (piv == n)
      throw DomainError("matrix is singular");
    if (piv != c) {
      std::swap_ranges(a.row(piv).begin(), a.row(piv).end(), a.row(c).begin());
      std::swap_ranges(inv.row(piv).begin(), inv.row(piv).end(), inv.row(c).begin());
    }
    const FieldElem s = f.inv(a(c, c));
    f.scale(a.row(c).data(), s, n);
    f.scale(inv.row(c).data(), s, n);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a(r, c) == 0)
        continue;
      const FieldElem m = f.neg(a(r, c));
      f.axpy(a.row(r).data(), m, a.row(c).data(), n);
      f.axpy(inv.row(r).data(), m, inv.row(c).data(), n);
    }
  }
  return inv;
}

FqVector FqMatrix::apply(std::span<const FieldElem> v) const {
  if (v.size() != rows_)
    throw DomainError("vector length does not match matrix");
  FqVector out(cols_, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    field_->axpy(out.data(), v[i], data_.data() + i * cols_, cols_);
  return out;
}

bool FqMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](FieldElem x) { return x == 0; });
}

bool FqMatrix::is_identity() const {
  if (rows_ != cols_)
    return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1u : 0u))
        return false;
  return true;
}

FieldElem FqMatrix::trace() const {
  FieldElem t = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i)
    t = field_->add(t, (*this)(i, i));
  return t;
}

RrefResult rref(const FqMatrix& m) {
  const GaloisField& f = *m.field();
  FqMatrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c) == 0)
      ++piv;
    if (piv == a.rows())
      continue;
    if (piv != r)
      std::swap_ranges(a.row(piv).begin(), a.row(piv).end(), a.row(r).begin());
    f.scale(a.row(r).data(), f.inv(a(r, c)), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0)
        continue;
      f.axpy(a.row(i).data(), f.neg(a(i, c)), a.row(r).data(), a.cols());
    }
    pivots.push_back(c);
    ++r;
  }
  FqMatrix reduced(m.field(), 0, m.cols());
  for (std::size_t i = 0; i < r; ++i)
    reduced.append_row(a.row(i));
  return {std::move(reduced), r, std::move(pivots)};
}

FqMatrix nullspace(const FqMatrix& m) {
  const GaloisField& f = *m.field();
  const RrefResult rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : rr.pivots)
    is_pivot[c] = true;
  FqMatrix out(m.field(), 0, m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free])
      continue;
    FqVector v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < rr.rank; ++i)
      v[rr.pivots[i]] = f.neg(rr.reduced(i, free));
    out.append_row(v);
  }
  return rref(out).reduced;
}

FqMatrix left_nullspace(const FqMatrix& m) { return nullspace(m.transpose()); }

bool EchelonSpace::reduce(FqVector& v) const {
  const GaloisField& f = *field_;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const FieldElem c = v[pivots_[i]];
    if (c != 0)
      f.axpy(v.data(), f.neg(c), rows_[i].data(), dim_);
  }
  return std::all_of(v.begin(), v.end(), [](FieldElem x) { return x == 0; });
}

bool EchelonSpace::insert(FqVector v) {
  if (reduce(v))
    return false;
  std::size_t piv = 0;
  while (v[piv] == 0)
    ++piv;
  field_->scale(v.data(), field_->inv(v[piv]), dim_);
  rows_.push_back(std::move(v));
  pivots_.push_back(piv);
  return true;
}

FqMatrix EchelonSpace::basis() const {
  FqMatrix m(field_, 0, dim_);
  for (const auto& r : rows_)
    m.append_row(r);
  return rref(m).reduced;
}

FqMatrix spin(const FqMatrix& seeds, std::span<const FqMatrix> actions) {
  const std::size_t n = seeds.cols();
  for (const auto& a : actions)
    if (a.rows() != n || a.cols() != n)
      throw DomainError("action matrices must be square of the vector length");
  EchelonSpace space(seeds.field(), n);
  std::vector<FqVector> queue;
  for (std::size_t i = 0; i < seeds.rows(); ++i) {
    FqVector v = seeds.row_vector(i);
    if (space.insert(v))
      queue.push_back(std::move(v));
  }
  for (std::size_t k = 0; k < queue.size() && space.rank() < n; ++k)
    for (const auto& a : actions) {
      FqVector w = a.apply(queue[k]);
      if (space.insert(w))
        queue.push_back(std::move(w));
    }
  return space.basis();
}

Poly charpoly(const FqMatrix& m) {
  if (m.rows() != m.cols())
    throw DomainError("characteristic polynomial needs a square matrix");
  const GaloisField& f = *m.field();
  const std::size_t n = m.rows();
  FqMatrix h = m;
  // Reduce to upper Hessenberg form by similarity transformations.
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && h(piv, j) == 0)
      ++piv;
    if (piv == n)
      continue;
    if (piv != j + 1) {
      std::swap_ranges(h.row(piv).begin(), h.row(piv).end(), h.row(j + 1).begin());
      for (std::size_t r = 0; r < n; ++r)
        std::swap(h(r, piv), h(r, j + 1));
    }
    const FieldElem t = f.inv(h(j + 1, j));
    for (std::size_t i = j + 2; i < n; ++i) {
      const FieldElem u = f.mul(h(i, j), t);
      if (u == 0)
        continue;
      f.axpy(h.row(i).data(), f.neg(u), h.row(j + 1).data(), n);
      for (std::size_t r = 0; r < n; ++r)
        h(r, j + 1) = f.add(h(r, j + 1), f.mul(u, h(r, i)));
    }
  }
  const PolyRing ring(m.field());
  std::vector<Poly> p(n + 1);
  p[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    // (x - h_kk) p_{k-1}
    Poly cur = ring.mul({f.neg(h(k - 1, k - 1)), 1}, p[k - 1]);
    FieldElem t = 1;
    for (std::size_t i = 1; i < k; ++i) {
      t = f.mul(t, h(k - i, k - i - 1));
      if (t == 0)
        break;
      const FieldElem c = f.mul(t, h(k - i - 1, k - 1));
      if (c != 0)
        cur = ring.sub(cur, ring.scale(p[k - i - 1], c));
    }
    p[k] = std::move(cur);
  }
  return p[n];
}

FqMatrix poly_eval(const Poly& poly, const FqMatrix& m) {
  const std::size_t n = m.rows();
  FqMatrix acc(m.field(), n, n);
  for (std::size_t i = poly.size(); i-- > 0;) {
    acc = acc * m;
    for (std::size_t d = 0; d < n; ++d)
      acc(d, d) = m.field()->add(acc(d, d), poly[i]);
  }
  return acc;
}

}  // namespace msdim
