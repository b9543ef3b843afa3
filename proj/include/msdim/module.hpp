#pragma once

#include <cstdint>
#include <vector>

#include "msdim/matrix.hpp"
#include "msdim/permgroup.hpp"

namespace msdim {

class GroupElements;

/// Right FG-module: one matrix per group generator, acting on row vectors.
class GModule {
 public:
  GModule(FieldPtr field, std::size_t dim, std::vector<FqMatrix> action);

  const FieldPtr& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  std::size_t num_generators() const { return action_.size(); }
  const FqMatrix& action(std::size_t i) const { return action_[i]; }
  const std::vector<FqMatrix>& actions() const { return action_; }

  /// True when every generator acts as the identity.
  bool is_trivial() const;
  /// Matrix of the word g_{w0} g_{w1} ... .
  FqMatrix word_matrix(const std::vector<std::uint32_t>& word) const;

  /// Action on span(basis); basis must be an invariant subspace in RREF.
  GModule submodule(const FqMatrix& basis) const;
  GModule quotient(const FqMatrix& basis) const;
  GModule dual() const;
  GModule tensor(const GModule& other) const;
  /// Extension of scalars to a field containing the current one.
  GModule extended(FieldPtr larger) const;

 private:
  FieldPtr field_;
  std::size_t dim_;
  std::vector<FqMatrix> action_;
};

FqMatrix extend_scalars(const FqMatrix& m, const FieldPtr& larger);

/// Permutation module of g (natural action, or a coset action built with
/// coset_action) over GF(p^k).
GModule perm_module(const PermGroup& g, const FieldPtr& field);
GModule trivial_module(const PermGroup& g, const FieldPtr& field);
GModule regular_module(const PermGroup& g, const FieldPtr& field);

/// For `samples` random words w in the generators, evaluates w^{ord(w)}
/// and checks it acts as the identity, as it does in g.
bool satisfies_relations(const PermGroup& g, const GModule& m, std::uint64_t seed, int samples = 20);

/// Traces of the class representatives of g (in the order of
/// GroupElements::classes) that are p-regular.
std::vector<FieldElem> class_traces(const GroupElements& e, const GModule& m, unsigned p);

}  // namespace msdim
