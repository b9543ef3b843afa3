#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "msdim/field.hpp"

namespace msdim {

/// Coefficients low to high with no trailing zeros; the zero polynomial is empty.
using Poly = std::vector<FieldElem>;

/// Univariate polynomial arithmetic and factorization over one GF(q).
class PolyRing {
 public:
  explicit PolyRing(FieldPtr field) : field_(std::move(field)) {}

  const FieldPtr& field() const { return field_; }

  static int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }
  static Poly x() { return {0, 1}; }
  Poly constant(FieldElem c) const;
  Poly trim(Poly f) const;
  Poly monic(const Poly& f) const;

  Poly add(const Poly& a, const Poly& b) const;
  Poly sub(const Poly& a, const Poly& b) const;
  Poly mul(const Poly& a, const Poly& b) const;
  Poly scale(const Poly& a, FieldElem c) const;
  /// Throws DomainError for division by zero.
  std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) const;
  Poly mod(const Poly& a, const Poly& b) const { return divmod(a, b).second; }
  Poly div(const Poly& a, const Poly& b) const { return divmod(a, b).first; }
  /// Monic gcd; gcd(0, 0) = 0.
  Poly gcd(const Poly& a, const Poly& b) const;
  Poly derivative(const Poly& f) const;
  Poly powmod(const Poly& base, std::uint64_t e, const Poly& m) const;
  FieldElem eval(const Poly& f, FieldElem x) const;

  bool is_irreducible(const Poly& f) const;

  /// Monic irreducible factors with multiplicities, sorted by (degree,
  /// coefficients). The product reproduces monic(f). Throws DomainError for 0.
  std::vector<std::pair<Poly, unsigned>> factor(const Poly& f) const;

  /// Distinct monic irreducible factors of degree <= max_degree only.
  std::vector<Poly> small_factors(const Poly& f, unsigned max_degree) const;

 private:
  std::vector<std::pair<Poly, unsigned>> squarefree(const Poly& f) const;
  /// (product of all irreducible factors of degree d, d) for a squarefree monic f.
  std::vector<std::pair<Poly, unsigned>> distinct_degree(const Poly& f, unsigned max_degree) const;
  void equal_degree(const Poly& f, unsigned d, std::vector<Poly>& out, std::uint64_t& seed) const;
  Poly frobenius_root(const Poly& f) const;

  FieldPtr field_;
};

}  // namespace msdim
