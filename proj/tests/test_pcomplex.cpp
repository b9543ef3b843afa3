#include <doctest.h>

#include <algorithm>
#include <set>

#include "msdim/builders.hpp"
#include "msdim/errors.hpp"
#include "msdim/pcomplex.hpp"
#include "msdim/subgroups.hpp"

using namespace msdim;

namespace {

// Brute-force model of the p-subgroup poset of a small group.
struct BrutePoset {
  const GroupElements& e;
  std::vector<ElemSet> subs;

  BrutePoset(const GroupElements& el, unsigned p, ComplexKind kind) : e(el) {
    std::set<ElemSet> found;
    for (ElemId a = 0; a < e.size(); ++a)
      for (ElemId b = a; b < e.size(); ++b) {
        const std::vector<ElemId> gens{a, b};
        ElemSet h = e.closure(gens);
        if (h.size() > 1 && is_p_power(h.size(), p))
          found.insert(std::move(h));
      }
    const std::vector<ElemSet> all_p(found.begin(), found.end());
    for (const auto& u : all_p)
      if (keep(u, p, kind, all_p))
        subs.push_back(u);
  }

  ElemSet conj(const ElemSet& u, ElemId g) const {
    ElemSet v;
    for (ElemId x : u)
      v.push_back(e.mul(e.mul(e.inv(g), x), g));
    std::sort(v.begin(), v.end());
    return v;
  }

  bool keep(const ElemSet& u, unsigned p, ComplexKind kind, const std::vector<ElemSet>& all_p) const {
    if (kind == ComplexKind::elementary_abelian) {
      for (ElemId x : u) {
        if (e.element_order(x) > p)
          return false;
        for (ElemId y : u)
          if (e.mul(x, y) != e.mul(y, x))
            return false;
      }
      return true;
    }
    if (kind == ComplexKind::bouc) {
      ElemSet n;
      for (ElemId g = 0; g < e.size(); ++g)
        if (conj(u, g) == u)
          n.push_back(g);
      // O_p(N) = intersection of the Sylow p-subgroups of N
      const Order sp = p_part(n.size(), p);
      ElemSet core = n;
      for (const auto& s : all_p)
        if (s.size() == sp && std::includes(n.begin(), n.end(), s.begin(), s.end())) {
          ElemSet t;
          std::set_intersection(core.begin(), core.end(), s.begin(), s.end(), std::back_inserter(t));
          core = std::move(t);
        }
      if (sp == 1)
        core = {0};
      return core == u;
    }
    return true;
  }

  std::vector<std::vector<std::size_t>> chains() const {
    std::vector<std::vector<std::size_t>> out{{}};
    for (std::size_t k = 0; k < out.size(); ++k) {
      const auto c = out[k];
      for (std::size_t j = 0; j < subs.size(); ++j)
        if (c.empty() || (subs[j].size() > subs[c.back()].size() &&
                          std::includes(subs[j].begin(), subs[j].end(), subs[c.back()].begin(), subs[c.back()].end()))) {
          auto d = c;
          d.push_back(j);
          out.push_back(std::move(d));
        }
    }
    return out;
  }

  // value at g: signed count of chains fixed by g
  std::vector<std::int64_t> steinberg() const {
    const auto all = chains();
    std::vector<std::int64_t> vals;
    for (const auto& cls : e.classes()) {
      std::int64_t v = 0;
      for (const auto& c : all) {
        bool fixed = true;
        for (std::size_t i : c)
          fixed = fixed && conj(subs[i], cls.representative) == subs[i];
        if (fixed)
          v += c.size() % 2 == 0 ? 1 : -1;
      }
      vals.push_back(v);
    }
    return vals;
  }

  std::size_t orbit_count() const {
    std::set<std::vector<ElemSet>> canon;
    for (const auto& c : chains()) {
      std::vector<ElemSet> best;
      for (ElemId g = 0; g < e.size(); ++g) {
        std::vector<ElemSet> img;
        for (std::size_t i : c)
          img.push_back(conj(subs[i], g));
        if (g == 0 || img < best)
          best = std::move(img);
      }
      canon.insert(std::move(best));
    }
    return canon.size();
  }

  std::size_t class_count() const {
    std::set<ElemSet> canon;
    for (const auto& u : subs) {
      ElemSet best = u;
      for (ElemId g = 0; g < e.size(); ++g)
        best = std::min(best, conj(u, g));
      canon.insert(best);
    }
    return canon.size();
  }
};

PermGroup q8() {
  return PermGroup(8, {Permutation::from_cycles("(0 1 2 3)(4 5 6 7)", 8),
                       Permutation::from_cycles("(0 4 2 6)(1 7 3 5)", 8)});
}

const std::vector<ComplexKind> kKinds{ComplexKind::poset, ComplexKind::elementary_abelian, ComplexKind::bouc};

}  // namespace

TEST_CASE("p_subgroup_classes examples") {
  auto s3 = build("sym:3");
  auto c2 = p_subgroup_classes(s3, 2, ComplexKind::poset);
  REQUIRE(c2.size() == 1);
  CHECK(c2[0].size() == 2);
  auto c3 = p_subgroup_classes(s3, 3, ComplexKind::poset);
  REQUIRE(c3.size() == 1);
  CHECK(c3[0].size() == 3);

  const auto q = q8();
  const auto classes = p_subgroup_classes(q, 2, ComplexKind::poset);
  CHECK(classes.size() == 5);
  CHECK(BrutePoset(q.elements(), 2, ComplexKind::poset).class_count() == 5);
  std::multiset<std::size_t> sizes;
  for (const auto& c : classes)
    sizes.insert(c.size());
  CHECK(sizes == std::multiset<std::size_t>{2, 4, 4, 4, 8});
  // Q8 has a single involution
  CHECK(p_subgroup_classes(q, 2, ComplexKind::elementary_abelian).size() == 1);

  CHECK_THROWS_AS(p_subgroup_classes(build("sym:4"), 2, ComplexKind::poset, std::nullopt, 4), CapabilityError);
  CHECK_THROWS_AS(p_subgroup_classes(s3, 4, ComplexKind::poset), DomainError);
}

TEST_CASE("chain_orbits examples") {
  const auto s3 = build("sym:3");
  const auto o = chain_orbits(s3, 2, ComplexKind::poset);
  REQUIRE(o.size() == 2);
  CHECK(o[0].m == 0);
  CHECK(o[0].stabilizer_order == 6);
  CHECK(o[1].m == 1);
  CHECK(o[1].stabilizer_order == 2);
  CHECK(o[1].orbit_size == 3);

  for (unsigned p : {2u, 3u, 5u, 7u}) {
    const auto c = chain_orbits(build("cyclic:" + std::to_string(p)), p, ComplexKind::poset);
    REQUIRE(c.size() == 2);
    CHECK(c[0].stabilizer_order == p);
    CHECK(c[1].stabilizer_order == p);
  }

  const auto s4 = build("sym:4");
  CHECK(chain_orbits(s4, 2, ComplexKind::poset).size() ==
        BrutePoset(s4.elements(), 2, ComplexKind::poset).orbit_count());
}

TEST_CASE("reduced Euler characteristic examples") {
  CHECK(reduced_euler_characteristic(build("sym:3"), 2, ComplexKind::poset) == 2);
  CHECK(reduced_euler_characteristic(build("cyclic:5"), 5, ComplexKind::poset) == 0);
  CHECK(reduced_euler_characteristic(build("sym:3"), 3, ComplexKind::poset) == 0);
}

TEST_CASE("steinberg character examples") {
  const auto s3 = build("sym:3");
  const auto st = steinberg_character(s3, 2, ComplexKind::poset);
  REQUIRE(st.values.size() == 3);
  CHECK(st.class_reps[1].element_order == 2);
  CHECK(st.class_reps[2].element_order == 3);
  CHECK(st.values == std::vector<std::int64_t>{-2, 0, 1});
  CHECK(st.at_identity() == -reduced_euler_characteristic(s3, 2, ComplexKind::poset));

  CHECK(steinberg_nonzero(s3, 2));
  // O_2(S_4) = V_4, so the character vanishes there
  CHECK_FALSE(steinberg_nonzero(build("sym:4"), 2));
  CHECK(steinberg_nonzero(build("alt:5"), 2));
  CHECK_FALSE(steinberg_nonzero(s3, 3));
  for (unsigned p : {2u, 3u, 5u})
    CHECK(steinberg_character(build("cyclic:" + std::to_string(p)), p, ComplexKind::poset).is_zero());
}

TEST_CASE("chain enumeration matches brute force") {
  const std::vector<std::pair<const char*, unsigned>> cases{{"sym:3", 2}, {"sym:3", 3}, {"sym:4", 2}, {"sym:4", 3},
                                                            {"alt:5", 2}, {"alt:5", 3}, {"alt:4", 2}, {"dihedral:8", 2},
                                                            {"dihedral:12", 2}, {"dihedral:12", 3}};
  for (const auto& [spec, p] : cases) {
    const auto g = build(spec);
    for (auto kind : kKinds) {
      CAPTURE(spec);
      CAPTURE(p);
      CAPTURE(kind_name(kind));
      const BrutePoset brute(g.elements(), p, kind);
      const auto orbits = chain_orbits(g, p, kind);
      CHECK(orbits.size() == brute.orbit_count());
      CHECK(p_subgroup_classes(g, p, kind).size() == brute.class_count());
      CHECK(steinberg_character(g, p, orbits).values == brute.steinberg());
      for (const auto& o : orbits)
        CHECK(o.orbit_size * o.stabilizer_order == g.order());
    }
  }
}

TEST_CASE("complex agreement, projectivity and vanishing") {
  const std::vector<std::pair<const char*, unsigned>> cases{
      {"sym:3", 2}, {"sym:3", 3}, {"sym:4", 2}, {"sym:4", 3}, {"alt:5", 2}, {"alt:5", 3}, {"alt:5", 5},
      {"sym:5", 2}, {"sym:5", 3}, {"dihedral:8", 2}, {"dihedral:10", 2}, {"frobenius:11:5", 5},
      {"fermat_example:3", 2}, {"sl2:8", 2}, {"sl2:8", 3}, {"alt:6", 3}};
  for (const auto& [spec, p] : cases) {
    CAPTURE(spec);
    CAPTURE(p);
    const auto g = build(spec);
    const auto st = steinberg_character(g, p, ComplexKind::poset);
    CHECK(steinberg_character(g, p, ComplexKind::elementary_abelian).values == st.values);
    CHECK(steinberg_character(g, p, ComplexKind::bouc).values == st.values);
    const bool op_trivial = core_p(g, p).order() == 1;
    if (!op_trivial)
      CHECK(st.is_zero());
    for (std::size_t k = 0; k < st.values.size(); ++k)
      if (!st.class_reps[k].p_regular)
        CHECK(st.values[k] == 0);
    CHECK(st.at_identity() % static_cast<std::int64_t>(p_part(g.order(), p)) == 0);
    if (op_trivial && is_p_solvable(g, p))
      CHECK(reduced_euler_characteristic(g, p, ComplexKind::poset) != 0);
  }
}

TEST_CASE("Euler characteristic does not depend on the seeding Sylow subgroup") {
  for (const auto& [spec, p] : std::vector<std::pair<const char*, unsigned>>{{"sym:4", 2}, {"alt:5", 2}, {"sym:5", 3}}) {
    const auto g = build(spec);
    const auto& e = g.elements();
    const ElemSet p0 = e.set_of(sylow(g, p));
    const auto base = reduced_euler_characteristic(chain_orbits(g, p, ComplexKind::poset));
    for (ElemId x = 1; x < e.size(); x += 7) {
      const ElemSet q = e.conjugate(p0, x);
      CHECK(reduced_euler_characteristic(chain_orbits(g, p, ComplexKind::poset, q)) == base);
    }
  }
  const auto s3 = build("sym:3");
  CHECK_THROWS_AS(chain_orbits(s3, 2, ComplexKind::poset, ElemSet{0}), DomainError);
}

TEST_CASE("chain census CSV") {
  const auto csv = chain_census_csv(ComplexKind::poset, chain_orbits(build("sym:3"), 2, ComplexKind::poset));
  CHECK(csv ==
        "kind,m,orders,stabilizer_order,orbit_size,sign\n"
        "poset,0,,6,1,1\n"
        "poset,1,2,2,3,-1\n");
  const auto d8 = chain_census_csv(ComplexKind::bouc, chain_orbits(build("dihedral:8"), 2, ComplexKind::bouc));
  CHECK(d8 == "kind,m,orders,stabilizer_order,orbit_size,sign\nbouc,0,,8,1,1\nbouc,1,8,8,1,-1\n");
  CHECK(parse_kind("elab") == ComplexKind::elementary_abelian);
  CHECK_THROWS_AS(parse_kind("quillen"), MalformedInput);
}
