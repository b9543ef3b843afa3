#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "msdim/module.hpp"

namespace msdim {

/// Linear combination of words in the generators; evaluates the same
/// algebra element on any module for the same generator list.
struct AlgebraRecipe {
  struct Term {
    FieldElem coefficient;
    std::vector<std::uint32_t> word;
  };
  std::vector<Term> terms;

  FqMatrix evaluate(const GModule& m) const;
};

/// Witness of irreducibility: an algebra element B, an irreducible factor f
/// of its characteristic polynomial with dim ker f(B) = deg f, and a kernel
/// vector v that spins to the whole module. The standard basis obtained by
/// spinning v supports homomorphism computations out of the module.
struct IrreducibleCertificate {
  AlgebraRecipe recipe;
  Poly factor;
  FqVector vector;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> steps;  ///< (parent, generator)
  std::vector<FqMatrix> std_action;
};

struct MeatAxeOptions {
  std::uint64_t seed = 0x6d7364696dULL;
  unsigned max_factor_degree = 12;
  unsigned max_attempts = 400;
};

/// Outcome of one irreducibility test: either a proper nonzero submodule
/// (basis in RREF) or a certificate.
struct SplitResult {
  std::optional<FqMatrix> submodule;
  std::optional<IrreducibleCertificate> certificate;
};

SplitResult split_or_certify(const GModule& m, const MeatAxeOptions& opt = {});
bool is_irreducible(const GModule& m, const MeatAxeOptions& opt = {});

/// dim Hom(S, M) where cert certifies S.
std::size_t hom_dimension(const GModule& s, const IrreducibleCertificate& cert, const GModule& m);

/// Composition factor up to isomorphism.
struct SimpleRecord {
  std::shared_ptr<const GModule> module;
  IrreducibleCertificate certificate;
  std::size_t d = 0;
  std::size_t e = 0;
  std::size_t abs_dim = 0;
  std::size_t multiplicity_in_source = 0;
};

std::vector<SimpleRecord> chop(const GModule& m, const MeatAxeOptions& opt = {});
/// Precondition error when s is reducible.
std::size_t endo_field_degree(const GModule& s, const MeatAxeOptions& opt = {});
bool isomorphic(const SimpleRecord& a, const GModule& b);

struct SimpleModuleInfo {
  SimpleRecord record;
  unsigned depth = 0;
  std::vector<FieldElem> traces;  ///< on p-regular class representatives
  /// Over GF(p^e) the module split into e pairwise non-isomorphic absolutely
  /// irreducible pieces of dimension d/e; unset when not checked.
  std::optional<bool> split_verified;
};

struct SimpleModulesResult {
  unsigned p = 0;
  std::size_t p_regular_classes = 0;
  std::vector<SimpleModuleInfo> simples;  ///< over GF(p)
  std::vector<std::size_t> abs_dims;      ///< sorted multiset over the closure
  std::size_t modules_chopped = 0;
  bool used_regular_module = false;
  std::uint64_t seed = 0;
};

struct SearchOptions {
  MeatAxeOptions meataxe;
  unsigned max_depth = 8;
  std::size_t max_tensor_dim = 1600;
  Order regular_fallback_bound = 1000;
  bool verify_splitting = true;
};

/// Throws IncompletenessError when the search cannot account for every
/// p-regular class.
SimpleModulesResult simple_modules(const PermGroup& g, unsigned p, const SearchOptions& opt = {});
std::vector<std::size_t> all_absolutely_simple_dims(const PermGroup& g, unsigned p,
                                                    const SearchOptions& opt = {});
std::size_t m_s(const PermGroup& g, unsigned p, const SearchOptions& opt = {});
bool has_defect_zero_simple(const PermGroup& g, unsigned p, const SearchOptions& opt = {});
bool has_defect_zero_simple(const SimpleModulesResult& r, Order group_order);

}  // namespace msdim
