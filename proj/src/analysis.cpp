#include "msdim/analysis.hpp"

#include <algorithm>
#include <functional>

#include "msdim/errors.hpp"
#include "msdim/subgroups.hpp"

namespace msdim {

const char* status_name(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::pass:
      return "pass";
    case VerdictStatus::fail:
      return "fail";
    case VerdictStatus::unverified:
      return "unverified";
  }
  return "?";
}

int AnalysisReport::exit_status() const {
  bool unverified = false;
  for (const auto& v : verdicts) {
    if (v.status == VerdictStatus::fail)
      return 1;
    unverified = unverified || v.status == VerdictStatus::unverified;
  }
  return unverified ? 2 : 0;
}

const Verdict* AnalysisReport::verdict(const std::string& claim) const {
  for (const auto& v : verdicts)
    if (v.claim == claim)
      return &v;
  return nullptr;
}

namespace {

std::string ge(std::size_t lhs, Order rhs) { return std::to_string(lhs) + " >= " + std::to_string(rhs); }

void add(AnalysisReport& r, std::string claim, bool ok, std::string detail) {
  r.verdicts.push_back({std::move(claim), ok ? VerdictStatus::pass : VerdictStatus::fail, std::move(detail)});
}

void unverified(AnalysisReport& r, std::string claim, std::string detail) {
  r.verdicts.push_back({std::move(claim), VerdictStatus::unverified, std::move(detail)});
}

// Runs f; capability-type failures become notes and an empty result.
template <typename F>
auto attempt(AnalysisReport& r, const char* what, F&& f) -> std::optional<decltype(f())> {
  try {
    return f();
  } catch (const CapabilityError& e) {
    r.notes.push_back(std::string(what) + ": " + e.what());
  } catch (const IncompletenessError& e) {
    r.notes.push_back(std::string(what) + ": " + e.what());
  }
  return std::nullopt;
}

}  // namespace

AnalysisReport verify_theorem1(const PermGroup& g, unsigned p, const std::string& name, const AnalysisOptions& opt) {
  AnalysisReport r;
  r.name = name;
  r.order = g.order();
  r.p = p;
  r.p_class = classify_prime(p);
  r.p_part = p_part(r.order, p);
  r.seed = opt.search.meataxe.seed;
  r.p_regular_classes = count_p_regular_classes(g, p);

  const PermGroup op = core_p(g, p);
  r.o_p_trivial = op.is_trivial();
  r.frattini_trivial = attempt(r, "frattini", [&] { return frattini_trivial(g); });
  r.p_solvable = is_p_solvable(g, p);
  r.simple = is_nonabelian_simple(g);
  const bool hypotheses = r.o_p_trivial && r.frattini_trivial.value_or(false);
  const bool hypotheses_unknown = r.o_p_trivial && !r.frattini_trivial;

  // simple modules
  const auto mods = attempt(r, "simple modules", [&] { return simple_modules(g, p, opt.search); });
  if (mods) {
    r.simple_dims = mods->abs_dims;
    r.m_s = mods->abs_dims.back();
    r.defect_zero = has_defect_zero_simple(*mods, r.order);
    for (const auto& s : mods->simples)
      r.simples.push_back({s.record.d, s.record.e, s.traces, s.split_verified});
    std::size_t sum_e = 0;
    for (const auto& s : mods->simples)
      sum_e += s.record.e;
    add(r, "counting_invariant", sum_e == r.p_regular_classes && mods->abs_dims.size() == r.p_regular_classes,
        std::to_string(sum_e) + " absolutely irreducible classes, " + std::to_string(r.p_regular_classes) +
            " p-regular classes");
  } else {
    unverified(r, "counting_invariant", "simple module search incomplete");
  }

  // structure behind the two bounds
  std::optional<LayerData> layer;
  if (hypotheses) {
    layer = attempt(r, "layer", [&] { return layer_data(g, p); });
    if (layer) {
      r.x_order = layer->x.order();
      r.xc_order = layer->xc.order();
      r.out_p_part = p_part(r.order / layer->xc.order(), p);
      r.bound_i = bound_part_i(g, p, *layer);
      if (r.p_class != PrimeClass::generic)
        r.bound_ii = attempt(r, "bound_ii", [&] { return bound_part_ii(g, p, *layer, opt.lattice_bound); });
      const auto& e = g.elements();
      std::vector<ElemId> gens;
      for (const auto& n : minimal_normal_subgroups(g))
        for (ElemId x : e.generating_set(e.set_of(n)))
          gens.push_back(x);
      r.socle_order = e.closure(gens).size();
    }
  }
  r.max_abelian_order = attempt(r, "abelian subgroups", [&] { return max_abelian_p_order(g, p, g, std::nullopt, opt.lattice_bound); });
  if (auto orders = attempt(r, "maximal abelian subgroups", [&] { return maximal_abelian_p_orders(g, p, opt.lattice_bound); }))
    r.maximal_abelian_orders = *orders;

  auto bound_check = [&](const std::string& claim, std::optional<Order> bound, const std::string& label) {
    if (r.m_s && bound)
      add(r, claim, *r.m_s >= *bound, "m_s = " + ge(*r.m_s, *bound) + " = " + label);
    else
      unverified(r, claim, r.m_s ? label + " unavailable" : "m_s unavailable");
  };

  // the two main lower bounds
  if (hypotheses || hypotheses_unknown) {
    if (hypotheses_unknown) {
      unverified(r, r.p_class == PrimeClass::generic ? "odd_nonmersenne_bound" : "abelian_subgroup_bound",
                 "Frattini subgroup not computed");
    } else if (r.p_class == PrimeClass::generic) {
      bound_check("odd_nonmersenne_bound", r.bound_i, "bound_i");
    } else {
      bound_check("abelian_subgroup_bound", r.bound_ii, "bound_ii");
    }
  }
  // F*(G) a p'-group: with Phi(G) = 1 this means O_p(G) = 1 and X = 1
  if (r.p_class == PrimeClass::generic && hypotheses && r.x_order == Order{1})
    bound_check("pprime_socle_sylow_bound", r.p_part, "|G|_p");
  if (r.o_p_trivial && r.p_solvable)
    bound_check("psolvable_abelian_bound", r.max_abelian_order, "max abelian p-subgroup order");
  if (r.simple && r.p_part > 1) {
    std::optional<Order> least;
    if (!r.maximal_abelian_orders.empty())
      least = r.maximal_abelian_orders.front();
    bound_check("simple_group_abelian_bound", least, "least maximal abelian p-subgroup order");
  }

  // complexes
  if (opt.complexes && r.p_part > 1) {
    std::map<ComplexKind, VirtualCharacter> chars;
    for (auto kind : {ComplexKind::poset, ComplexKind::elementary_abelian, ComplexKind::bouc}) {
      auto orbits = attempt(r, "chain orbits", [&] { return chain_orbits(g, p, kind, std::nullopt, opt.lattice_bound); });
      if (!orbits)
        continue;
      r.euler[std::string(kind_name(kind))] = reduced_euler_characteristic(*orbits);
      chars.emplace(kind, steinberg_character(g, p, *orbits));
    }
    if (chars.count(opt.complex)) {
      const auto& st = chars.at(opt.complex);
      r.steinberg = st;
      r.steinberg_nonzero = !st.is_zero();
      if (chars.size() == 3)
        add(r, "complex_agreement",
            chars.at(ComplexKind::poset).values == chars.at(ComplexKind::elementary_abelian).values &&
                chars.at(ComplexKind::poset).values == chars.at(ComplexKind::bouc).values,
            "poset, elementary abelian and Bouc characters compared value by value");
      else
        unverified(r, "complex_agreement", "not every complex was enumerated");
      if (!r.o_p_trivial)
        add(r, "steinberg_vanishing", st.is_zero(), "O_p(G) has order " + std::to_string(op.order()));
      if (!st.is_zero()) {
        bool singular_zero = true;
        for (std::size_t k = 0; k < st.values.size(); ++k)
          singular_zero = singular_zero && (st.class_reps[k].p_regular || st.values[k] == 0);
        const bool divisible = st.at_identity() % static_cast<std::int64_t>(r.p_part) == 0;
        add(r, "steinberg_projective", singular_zero && divisible,
            "identity value " + std::to_string(st.at_identity()) + ", |G|_p = " + std::to_string(r.p_part));
        std::optional<Order> least;
        if (!r.maximal_abelian_orders.empty())
          least = r.maximal_abelian_orders.front();
        bound_check("nonzero_steinberg_abelian_bound", least, "least maximal abelian p-subgroup order");
      }
      if (r.o_p_trivial && r.p_solvable) {
        const auto chi = r.euler.at(std::string(kind_name(opt.complex)));
        add(r, "hawkes_isaacs", chi != 0, "reduced Euler characteristic " + std::to_string(chi));
      }
    } else {
      unverified(r, "complex_agreement", "chain enumeration unavailable");
    }
  }

  // sections
  if (opt.sections && r.m_s) {
    if (!r.o_p_trivial) {
      const auto q = quotient(g, op);
      if (auto mq = attempt(r, "quotient simple modules", [&] { return m_s(q, p, opt.search); }))
        add(r, "op_reduction", *mq == *r.m_s, "m_s(G/O_p(G)) = " + std::to_string(*mq));
      else
        unverified(r, "op_reduction", "quotient search incomplete");
    }
    const PermGroup h = o_p_residual(g, p);
    if (h.order() != g.order()) {
      if (auto mh = attempt(r, "O^p simple modules", [&] { return m_s(h, p, opt.search); })) {
        const Order index = g.order() / h.order();
        add(r, "clifford_bounds", *mh <= *r.m_s && *r.m_s <= index * *mh,
            std::to_string(*mh) + " <= " + std::to_string(*r.m_s) + " <= " + std::to_string(index) + " * " +
                std::to_string(*mh));
      } else {
        unverified(r, "clifford_bounds", "O^p(G) search incomplete");
      }
    }
  }
  return r;
}

}  // namespace msdim
