// One PASS/FAIL line per acceptance criterion. Exits non-zero when a
// criterion outside kKnownFalse fails.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "msdim/builders.hpp"
#include "msdim/glnq.hpp"
#include "msdim/report.hpp"
#include "msdim/subgroups.hpp"

using namespace msdim;

namespace {

// Criterion 10 asserts m_s(S4, 3) = m_s(S3, 3); the left side is 3 and the
// right side 1, since V4 = O_2(S4) and not O_3(S4).
const std::set<int> kKnownFalse = {10};

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [fails: " << what << "]";
    }
  }
};

struct Pair {
  std::string name;
  PermGroup g;
  unsigned p;
};

std::vector<Pair> corpus_pairs() {
  std::vector<Pair> out;
  for (const char* file : {MSDIM_SOURCE_DIR "/corpus/paper.corpus", MSDIM_SOURCE_DIR "/corpus/slow.corpus"})
    for (const auto& e : read_corpus(file)) {
      const PermGroup g = build(e.builder);
      for (unsigned p : e.primes)
        out.push_back({e.name, g, p});
    }
  return out;
}

bool has_pair(const std::vector<Pair>& pairs, const std::string& builder, unsigned p) {
  const Order order = build(builder).order();
  const auto gens = build(builder).generators();
  return std::any_of(pairs.begin(), pairs.end(),
                     [&](const Pair& x) { return x.p == p && x.g.order() == order && x.g.generators() == gens; });
}

std::string dims(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < v.size(); ++i)
    os << (i ? "," : "") << v[i];
  os << "}";
  return os.str();
}

}  // namespace

int main() {
  int unexpected = 0;
  int passed = 0;
  const auto pairs = corpus_pairs();

  auto criterion = [&](int id, const std::string& title, double limit_seconds, const std::function<void(Outcome&)>& body) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      body(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.expect(secs < limit_seconds, "time limit " + std::to_string(limit_seconds) + " s");
    std::cout << (o.ok ? "PASS" : "FAIL") << "  [" << id << "] " << title << ":" << o.detail.str() << " ("
              << static_cast<long>(secs * 1000) << " ms)\n";
    if (o.ok)
      ++passed;
    else if (!kKnownFalse.count(id))
      ++unexpected;
  };

  criterion(1, "SL(2,4) and SL(2,8) at p = 2", 5 + 60, [](Outcome& o) {
    const auto a = simple_modules(build("sl2:4"), 2);
    o.detail << " SL(2,4) dims " << dims(a.abs_dims);
    o.expect(a.abs_dims == std::vector<std::size_t>{1, 2, 2, 4}, "SL(2,4) multiset");
    o.expect(a.abs_dims.back() == p_part(60, 2), "m_s = |G|_2");
    const auto b = simple_modules(build("sl2:8"), 2);
    o.detail << ", SL(2,8) dims " << dims(b.abs_dims);
    o.expect(b.abs_dims == std::vector<std::size_t>{1, 2, 2, 2, 4, 4, 4, 8}, "SL(2,8) multiset");
  });

  criterion(2, "fermat_example:3 at p = 2", 30, [](Outcome& o) {
    const auto g = build("fermat_example:3");
    const auto r = verify_theorem1(g, 2, "fermat_example:3");
    const Order sylow_order = sylow(g, 2).order();
    const Order n = core_p(g, 3).order();
    o.detail << " m_s = " << (r.m_s ? std::to_string(*r.m_s) : "?") << ", |P| = " << sylow_order << ", |N| = " << n
             << ", bound_ii = " << r.bound_ii.value_or(0);
    o.expect(r.m_s == std::size_t{4}, "m_s = 4");
    o.expect(sylow_order == 8 && n == 9, "|P| = 8 < 9 = |N|");
    o.expect(r.bound_ii == Order{4}, "bound_ii = 4");
    const auto* v = r.verdict("abelian_subgroup_bound");
    o.expect(v && v->status == VerdictStatus::pass, "abelian subgroup bound verdict");
  });

  criterion(3, "fermat_example:5 at 2 and mersenne_example:3 at 3", 180, [](Outcome& o) {
    const auto f5 = build("fermat_example:5");
    const auto m5 = m_s(f5, 2);
    const Order p5 = sylow(f5, 2).order();
    o.detail << " m_s = " << m5 << " with |P| = " << p5;
    o.expect(m5 == 16 && m5 == p5 / 2, "m_s(fermat_example:5) = |P|/2 = 16");
    const auto m3 = build("mersenne_example:3");
    const auto mm = m_s(m3, 3);
    o.detail << "; m_s = " << mm << " with |P| = " << sylow(m3, 3).order();
    o.expect(mm == 27, "m_s(mersenne_example:3) = 27");
  });

  criterion(4, "Steinberg vanishing when O_p(G) != 1", 10, [&](Outcome& o) {
    for (auto [b, p] : std::vector<std::pair<std::string, unsigned>>{
             {"sym:3", 3}, {"sym:4", 2}, {"cyclic:5", 5}, {"cyclic:3", 3}, {"dihedral:8", 2}})
      o.expect(has_pair(pairs, b, p), b + " at " + std::to_string(p) + " in corpus");
    std::size_t checked = 0;
    for (const auto& x : pairs) {
      if (core_p(x.g, x.p).is_trivial())
        continue;
      ++checked;
      o.expect(steinberg_character(x.g, x.p, ComplexKind::poset).is_zero(), x.name + " at " + std::to_string(x.p));
    }
    o.detail << " " << checked << " pairs, all identically zero";
  });

  criterion(5, "poset, elementary abelian and Bouc characters agree", 120, [](Outcome& o) {
    for (auto [b, p] : std::vector<std::pair<std::string, unsigned>>{
             {"sym:4", 2}, {"sym:4", 3}, {"alt:5", 2}, {"alt:5", 3}, {"alt:5", 5}, {"sym:5", 2}}) {
      const auto g = build(b);
      const auto st = steinberg_character(g, p, ComplexKind::poset).values;
      o.expect(steinberg_character(g, p, ComplexKind::elementary_abelian).values == st &&
                   steinberg_character(g, p, ComplexKind::bouc).values == st,
               b + " at " + std::to_string(p));
    }
    o.detail << " 6 pairs compared value by value";
  });

  criterion(6, "nonzero Steinberg characters are projective", 60, [&](Outcome& o) {
    std::size_t checked = 0;
    for (const auto& x : pairs) {
      const auto st = steinberg_character(x.g, x.p, ComplexKind::poset);
      if (st.is_zero())
        continue;
      ++checked;
      bool singular_zero = true;
      for (std::size_t k = 0; k < st.values.size(); ++k)
        singular_zero = singular_zero && (st.class_reps[k].p_regular || st.values[k] == 0);
      o.expect(singular_zero, x.name + " at " + std::to_string(x.p) + " nonzero on a p-singular class");
      o.expect(st.at_identity() % static_cast<std::int64_t>(p_part(x.g.order(), x.p)) == 0,
               x.name + " at " + std::to_string(x.p) + " identity value");
    }
    o.detail << " " << checked << " pairs";
  });

  criterion(7, "Hawkes-Isaacs for p-solvable groups with O_p(G) = 1", 60, [&](Outcome& o) {
    std::size_t checked = 0;
    for (const auto& x : pairs) {
      if (!is_p_solvable(x.g, x.p) || !core_p(x.g, x.p).is_trivial())
        continue;
      ++checked;
      o.expect(reduced_euler_characteristic(x.g, x.p, ComplexKind::poset) != 0, x.name + " at " + std::to_string(x.p));
    }
    o.detail << " " << checked << " pairs, reduced Euler characteristic nonzero";
  });

  criterion(8, "odd non-Mersenne bound at p = 5", 60, [](Outcome& o) {
    for (auto [b, expect] : std::vector<std::pair<std::string, Order>>{
             {"frobenius:11:5", 5}, {"alt:5", 5}, {"direct:alt:5,frobenius:11:5", 25}}) {
      const auto g = build(b);
      const auto r = verify_theorem1(g, 5, b);
      o.detail << " " << b << ": m_s = " << r.m_s.value_or(0) << " >= " << r.bound_i.value_or(0) << ";";
      o.expect(r.bound_i == expect, b + " bound_i");
      if (r.x_order == Order{1})
        o.expect(r.bound_i == r.p_part, b + " X = 1 gives |G|_5");
      const auto* v = r.verdict("odd_nonmersenne_bound");
      o.expect(v && v->status == VerdictStatus::pass, b + " verdict");
    }
  });

  criterion(9, "counting invariant on every corpus pair", 120, [&](Outcome& o) {
    for (const auto& x : pairs) {
      const auto s = simple_modules(x.g, x.p);
      o.expect(s.abs_dims.size() == count_p_regular_classes(x.g, x.p), x.name + " at " + std::to_string(x.p));
    }
    o.detail << " " << pairs.size() << " pairs";
  });

  criterion(10, "reduction, multiplicativity and Clifford bounds", 60, [](Outcome& o) {
    const auto s4 = build("sym:4");
    const auto v4 = core_p(s4, 2);
    const auto s4_3 = m_s(s4, 3);
    const auto quot_3 = m_s(quotient(s4, v4), 3);
    const auto s3_3 = m_s(build("sym:3"), 3);
    o.detail << " m_s(S4,3) = " << s4_3 << ", m_s(S4/V4,3) = " << quot_3 << ", m_s(S3,3) = " << s3_3;
    o.expect(s4_3 == quot_3 && quot_3 == s3_3, "m_s(S4,3) = m_s(S4/V4,3) = m_s(S3,3)");
    // the identity does hold for O_p(G): at p = 2, V4 = O_2(S4)
    const auto s4_2 = m_s(s4, 2);
    const auto s3_2 = m_s(build("sym:3"), 2);
    o.detail << "; m_s(S4,2) = " << s4_2 << " = m_s(S3,2) = " << s3_2;
    o.expect(s4_2 == s3_2, "reduction by O_2(S4)");
    const auto prod = m_s(build("direct:sym:3,alt:5"), 2);
    const auto a5_2 = m_s(build("alt:5"), 2);
    o.detail << "; m_s(S3 x A5,2) = " << prod;
    o.expect(prod == s3_2 * a5_2 && prod == 8, "multiplicativity");
    for (const char* b : {"sym:3", "sym:4", "cyclic:6"}) {
      const auto g = build(b);
      const auto h = o_p_residual(g, 2);
      const auto mg = m_s(g, 2);
      const auto mh = m_s(h, 2);
      const Order index = g.order() / h.order();
      o.expect(mh <= mg && mg <= index * mh, std::string("Clifford bounds for ") + b);
    }
  });

  criterion(11, "regular orbits of Sylow subgroups of GL(n, q)", 5, [](Outcome& o) {
    const auto five = count_regular_orbits(sylow_glnq(4, 2, 5), 4);
    const auto three = count_regular_orbits(sylow_glnq(2, 2, 3), 2);
    o.detail << " GL(4,2) p = 5: " << five << ", GL(2,2) p = 3: " << three;
    o.expect(five == 3, "three regular orbits");
    o.expect(three == 1, "one regular orbit");
  });

  std::cout << passed << "/11 criteria pass";
  if (!kKnownFalse.empty()) {
    std::cout << "; expected to fail as stated:";
    for (int id : kKnownFalse)
      std::cout << " " << id;
  }
  std::cout << "\n";
  return unexpected == 0 ? 0 : 1;
}
