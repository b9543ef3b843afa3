#pragma once

#include <span>
#include <vector>

#include "msdim/field.hpp"
#include "msdim/poly.hpp"

namespace msdim {

using FqVector = std::vector<FieldElem>;

/// Dense row-major matrix over GF(q). Vectors are rows and matrices act on
/// them from the right.
class FqMatrix {
 public:
  FqMatrix() = default;
  FqMatrix(FieldPtr field, std::size_t rows, std::size_t cols);
  static FqMatrix identity(FieldPtr field, std::size_t n);
  static FqMatrix from_rows(FieldPtr field, std::size_t cols, const std::vector<FqVector>& rows);

  const FieldPtr& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  FieldElem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  FieldElem operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<FieldElem> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const FieldElem> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  FqVector row_vector(std::size_t i) const { return {row(i).begin(), row(i).end()}; }
  void append_row(std::span<const FieldElem> v);

  FqMatrix operator*(const FqMatrix& rhs) const;
  FqMatrix operator+(const FqMatrix& rhs) const;
  FqMatrix operator-(const FqMatrix& rhs) const;
  FqMatrix scaled(FieldElem c) const;
  FqMatrix transpose() const;
  /// Kronecker product.
  FqMatrix kron(const FqMatrix& rhs) const;
  /// Throws DomainError when singular or not square.
  FqMatrix inverse() const;
  FqVector apply(std::span<const FieldElem> v) const;  // v * this

  bool is_zero() const;
  bool is_identity() const;
  FieldElem trace() const;

  friend bool operator==(const FqMatrix& a, const FqMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  FieldPtr field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FieldElem> data_;
};

struct RrefResult {
  FqMatrix reduced;  ///< nonzero rows only
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

RrefResult rref(const FqMatrix& m);
/// Rows spanning { x : m * x^T = 0 }, in reduced echelon form.
FqMatrix nullspace(const FqMatrix& m);
/// Rows spanning { v : v * m = 0 }.
FqMatrix left_nullspace(const FqMatrix& m);

/// A subspace held as rows in reduced echelon form with unit pivots.
class EchelonSpace {
 public:
  EchelonSpace(FieldPtr field, std::size_t dim) : field_(std::move(field)), dim_(dim) {}

  std::size_t rank() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }
  /// Reduces v in place against the basis; returns true if it became zero.
  bool reduce(FqVector& v) const;
  /// Adds v if independent; returns true on success.
  bool insert(FqVector v);
  bool contains(FqVector v) const { return reduce(v); }
  /// Basis in reduced row echelon form.
  FqMatrix basis() const;
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  FieldPtr field_;
  std::size_t dim_;
  std::vector<FqVector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Smallest subspace containing the seed rows and closed under v -> v * A
/// for every action matrix, in reduced echelon form.
FqMatrix spin(const FqMatrix& seeds, std::span<const FqMatrix> actions);

Poly charpoly(const FqMatrix& m);
FqMatrix poly_eval(const Poly& f, const FqMatrix& m);

}  // namespace msdim
