#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "msdim/bounds.hpp"
#include "msdim/meataxe.hpp"
#include "msdim/pcomplex.hpp"

namespace msdim {

enum class VerdictStatus { pass, fail, unverified };
const char* status_name(VerdictStatus s);

struct Verdict {
  std::string claim;
  VerdictStatus status = VerdictStatus::unverified;
  std::string detail;
};

struct SimpleFingerprint {
  std::size_t d = 0;
  std::size_t e = 0;
  std::vector<FieldElem> traces;
  std::optional<bool> split_verified;
};

struct AnalysisReport {
  std::string name;
  Order order = 0;
  unsigned p = 0;
  Order p_part = 0;
  PrimeClass p_class = PrimeClass::generic;
  bool o_p_trivial = false;
  std::optional<bool> frattini_trivial;
  bool p_solvable = false;
  bool simple = false;

  std::optional<Order> x_order;
  std::optional<Order> xc_order;
  std::optional<Order> out_p_part;
  std::optional<Order> bound_i;
  std::optional<Order> bound_ii;
  std::optional<Order> socle_order;
  std::optional<Order> max_abelian_order;
  std::vector<Order> maximal_abelian_orders;

  std::size_t p_regular_classes = 0;
  std::optional<std::size_t> m_s;
  std::vector<std::size_t> simple_dims;
  std::vector<SimpleFingerprint> simples;
  std::optional<bool> defect_zero;

  std::map<std::string, std::int64_t> euler;  ///< by complex kind name
  std::optional<VirtualCharacter> steinberg;
  std::optional<bool> steinberg_nonzero;

  std::vector<Verdict> verdicts;
  std::vector<std::string> notes;
  std::uint64_t seed = 0;

  /// 1 if any verdict failed, else 2 if any is unverified, else 0.
  int exit_status() const;
  const Verdict* verdict(const std::string& claim) const;
};

struct AnalysisOptions {
  SearchOptions search;
  Order lattice_bound = kDefaultLatticeBound;
  bool complexes = true;
  /// Complex whose Steinberg character is reported.
  ComplexKind complex = ComplexKind::poset;
  /// Recompute m_s on G/O_p(G) and O^p(G) for the reduction and Clifford checks.
  bool sections = true;
};

AnalysisReport verify_theorem1(const PermGroup& g, unsigned p, const std::string& name = "",
                               const AnalysisOptions& opt = {});

}  // namespace msdim
