#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace msdim {

using FieldElem = std::uint32_t;

class GaloisField;
using FieldPtr = std::shared_ptr<const GaloisField>;

/// GF(p^k). Elements are coded as integers sum c_i p^i, where c_i are the
/// coefficients of the residue polynomial; codes below p form the prime field.
///
/// The defining modulus is the least monic irreducible of degree k when
/// monic polynomials x^k + sum c_i x^i are ordered by the code sum c_i p^i.
/// Extension fields use log/exp tables and are limited to p^k <= 2^16.
class GaloisField {
 public:
  static FieldPtr make(unsigned p, unsigned k = 1);

  unsigned characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  std::uint32_t size() const { return q_; }
  bool is_prime_field() const { return k_ == 1; }
  /// Coefficients of the defining polynomial over GF(p), low to high.
  const std::vector<FieldElem>& modulus() const { return modulus_; }
  /// Generator of the multiplicative group.
  FieldElem primitive_element() const { return primitive_; }

  FieldElem add(FieldElem a, FieldElem b) const {
    if (k_ == 1) {
      const FieldElem s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    return add_ext(a, b);
  }
  FieldElem neg(FieldElem a) const {
    if (k_ == 1)
      return a == 0 ? 0 : p_ - a;
    return neg_ext(a);
  }
  FieldElem sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }
  FieldElem mul(FieldElem a, FieldElem b) const {
    if (k_ == 1)
      return static_cast<FieldElem>(static_cast<std::uint64_t>(a) * b % p_);
    if (a == 0 || b == 0)
      return 0;
    return exp_[log_[a] + log_[b]];
  }
  /// Throws DomainError for 0.
  FieldElem inv(FieldElem a) const;
  FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }
  FieldElem pow(FieldElem a, std::uint64_t e) const;
  FieldElem from_int(std::int64_t v) const;

  /// dst[i] += c * src[i]
  void axpy(FieldElem* dst, FieldElem c, const FieldElem* src, std::size_t n) const;
  void scale(FieldElem* v, FieldElem c, std::size_t n) const;

  bool operator==(const GaloisField& o) const { return p_ == o.p_ && k_ == o.k_; }

  GaloisField(unsigned p, unsigned k);

 private:
  FieldElem add_ext(FieldElem a, FieldElem b) const;
  FieldElem neg_ext(FieldElem a) const;
  FieldElem slow_mul(FieldElem a, FieldElem b) const;

  unsigned p_;
  unsigned k_;
  std::uint32_t q_;
  std::vector<FieldElem> modulus_;
  FieldElem primitive_ = 1;
  std::vector<FieldElem> exp_;  // doubled length
  std::vector<std::uint32_t> log_;
  std::vector<FieldElem> inv_;
  std::vector<FieldElem> add_table_;  // q*q when q is small
  std::vector<FieldElem> neg_table_;
};

}  // namespace msdim
