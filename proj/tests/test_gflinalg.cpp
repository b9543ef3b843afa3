#include <doctest.h>

#include <random>

#include "msdim/errors.hpp"
#include "msdim/matrix.hpp"
#include "msdim/poly.hpp"

using namespace msdim;

namespace {

FqMatrix random_matrix(const FieldPtr& f, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  FqMatrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      m(i, j) = static_cast<FieldElem>(rng() % f->size());
  return m;
}

// Determinant by plain elimination, used as an oracle for charpoly.
FieldElem det(FqMatrix a) {
  const auto& f = *a.field();
  FieldElem d = 1;
  const std::size_t n = a.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0)
      ++p;
    if (p == n)
      return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j)
        std::swap(a(p, j), a(c, j));
      d = f.neg(d);
    }
    d = f.mul(d, a(c, c));
    const FieldElem inv = f.inv(a(c, c));
    for (std::size_t r = c + 1; r < n; ++r) {
      const FieldElem m = f.mul(a(r, c), inv);
      for (std::size_t j = 0; j < n; ++j)
        a(r, j) = f.sub(a(r, j), f.mul(m, a(c, j)));
    }
  }
  return d;
}

}  // namespace

TEST_CASE("field construction and moduli") {
  auto f4 = GaloisField::make(2, 2);
  CHECK(f4->size() == 4);
  CHECK(f4->modulus() == std::vector<FieldElem>{1, 1, 1});  // x^2 + x + 1
  auto f8 = GaloisField::make(2, 3);
  CHECK(f8->modulus() == std::vector<FieldElem>{1, 1, 0, 1});  // x^3 + x + 1
  auto f9 = GaloisField::make(3, 2);
  CHECK(f9->modulus() == std::vector<FieldElem>{1, 0, 1});  // x^2 + 1
  CHECK_THROWS_AS(GaloisField::make(4), DomainError);
  CHECK(GaloisField::make(7)->primitive_element() == 3);
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(7);
  for (auto [p, k] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {5, 1}, {2, 4}, {3, 3}, {7, 2}, {2, 10}}) {
    auto f = GaloisField::make(p, k);
    for (int t = 0; t < 1000; ++t) {
      FieldElem a = rng() % f->size(), b = rng() % f->size(), c = rng() % f->size();
      CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
      CHECK(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
      CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
      CHECK(f->add(a, f->neg(a)) == 0);
      if (a != 0)
        CHECK(f->mul(a, f->inv(a)) == 1);
    }
    // multiplicative group is cyclic of order q-1
    CHECK(f->pow(f->primitive_element(), f->size() - 1) == 1);
  }
  CHECK_THROWS_AS(GaloisField::make(3)->inv(0), DomainError);
}

TEST_CASE("poly_factor examples") {
  auto f2 = GaloisField::make(2);
  PolyRing r(f2);
  auto fac = r.factor({1, 0, 1});  // x^2 + 1
  REQUIRE(fac.size() == 1);
  CHECK(fac[0].first == Poly{1, 1});
  CHECK(fac[0].second == 2);

  fac = r.factor({1, 1, 1});
  REQUIRE(fac.size() == 1);
  CHECK(fac[0].first == Poly{1, 1, 1});
  CHECK(fac[0].second == 1);

  // x^4 + x = x (x + 1) (x^2 + x + 1); oracle: the product of the listed factors
  fac = r.factor({0, 1, 0, 0, 1});
  REQUIRE(fac.size() == 3);
  CHECK(fac[0].first == Poly{0, 1});
  CHECK(fac[1].first == Poly{1, 1});
  CHECK(fac[2].first == Poly{1, 1, 1});
  CHECK(r.mul(r.mul(fac[0].first, fac[1].first), fac[2].first) == Poly{0, 1, 0, 0, 1});
  // and no degree-1 factor of x^2+x+1 exists: exhaustive root search
  CHECK(r.eval({1, 1, 1}, 0) != 0);
  CHECK(r.eval({1, 1, 1}, 1) != 0);

  CHECK_THROWS_AS(r.factor({}), DomainError);
  CHECK(r.factor({1}).empty());
}

TEST_CASE("poly_factor reproduces random inputs") {
  std::mt19937_64 rng(11);
  for (auto [p, k] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {3, 1}, {5, 1}, {2, 2}, {3, 2}}) {
    auto f = GaloisField::make(p, k);
    PolyRing r(f);
    for (int t = 0; t < 100; ++t) {
      const int deg = 1 + static_cast<int>(rng() % 12);
      Poly g(static_cast<std::size_t>(deg) + 1);
      for (auto& c : g)
        c = static_cast<FieldElem>(rng() % f->size());
      g.back() = 1 + static_cast<FieldElem>(rng() % (f->size() - 1));
      // occasionally square a factor to exercise multiplicities
      if (t % 5 == 0)
        g = r.mul(g, r.trim({1, 1}));
      auto fac = r.factor(g);
      Poly prod{1};
      for (const auto& [h, e] : fac) {
        CHECK(r.is_irreducible(h));
        for (unsigned i = 0; i < e; ++i)
          prod = r.mul(prod, h);
      }
      CHECK(prod == r.monic(g));
    }
  }
}

TEST_CASE("small_factors only returns low-degree factors") {
  auto f2 = GaloisField::make(2);
  PolyRing r(f2);
  // (x+1)^2 (x^2+x+1) (x^3+x+1)
  Poly g = r.mul(r.mul(r.mul({1, 1}, {1, 1}), {1, 1, 1}), {1, 1, 0, 1});
  auto s = r.small_factors(g, 2);
  REQUIRE(s.size() == 2);
  CHECK(s[0] == Poly{1, 1});
  CHECK(s[1] == Poly{1, 1, 1});
  CHECK(r.small_factors(g, 3).size() == 3);
}

TEST_CASE("rref and nullspace examples") {
  auto f5 = GaloisField::make(5);
  auto id = FqMatrix::identity(f5, 3);
  auto rr = rref(id);
  CHECK(rr.rank == 3);
  CHECK(nullspace(id).rows() == 0);

  auto f2 = GaloisField::make(2);
  FqMatrix z(f2, 2, 4);
  CHECK(rref(z).rank == 0);
  CHECK(nullspace(z).rows() == 4);

  FqMatrix ones(f2, 2, 2);
  ones(0, 0) = ones(0, 1) = ones(1, 0) = ones(1, 1) = 1;
  CHECK(rref(ones).rank == 1);
  auto ns = nullspace(ones);
  REQUIRE(ns.rows() == 1);
  CHECK(ns.row_vector(0) == FqVector{1, 1});
}

TEST_CASE("rref and nullspace properties") {
  std::mt19937_64 rng(3);
  for (auto [p, k] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {3, 1}, {2, 3}, {5, 1}}) {
    auto f = GaloisField::make(p, k);
    for (int t = 0; t < 50; ++t) {
      const std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
      auto m = random_matrix(f, r, c, rng);
      if (t % 3 == 0 && r > 1)  // force dependencies
        for (std::size_t j = 0; j < c; ++j)
          m(r - 1, j) = m(0, j);
      auto rr = rref(m);
      CHECK(rref(rr.reduced).reduced == rr.reduced);
      auto ns = nullspace(m);
      CHECK(rr.rank + ns.rows() == c);
      if (ns.rows() > 0)
        CHECK((m * ns.transpose()).is_zero());
    }
  }
}

TEST_CASE("matrix inverse and charpoly") {
  std::mt19937_64 rng(5);
  for (auto [p, k] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {7, 1}}) {
    auto f = GaloisField::make(p, k);
    PolyRing ring(f);
    for (int t = 0; t < 30; ++t) {
      const std::size_t n = 1 + rng() % 6;
      auto m = random_matrix(f, n, n, rng);
      auto cp = charpoly(m);
      CHECK(cp.size() == n + 1);
      CHECK(poly_eval(cp, m).is_zero());  // Cayley-Hamilton
      // oracle: cp(l) = det(l I - m) for every field element l
      for (FieldElem l = 0; l < f->size(); ++l) {
        auto shifted = FqMatrix::identity(f, n).scaled(l) - m;
        CHECK(ring.eval(cp, l) == det(shifted));
      }
      if (det(m) != 0)
        CHECK((m * m.inverse()).is_identity());
      else
        CHECK_THROWS_AS(m.inverse(), DomainError);
    }
  }
}

TEST_CASE("spin examples") {
  auto f2 = GaloisField::make(2);
  FqMatrix e0(f2, 1, 3);
  e0(0, 0) = 1;
  std::vector<FqMatrix> ident{FqMatrix::identity(f2, 3)};
  CHECK(spin(e0, ident).rows() == 1);

  FqMatrix shift(f2, 3, 3);
  shift(0, 1) = shift(1, 2) = shift(2, 0) = 1;
  std::vector<FqMatrix> cyc{shift};
  CHECK(spin(e0, cyc).rows() == 3);

  // S_3 on three points fixes (1,1,1)
  FqMatrix swap01(f2, 3, 3);
  swap01(0, 1) = swap01(1, 0) = swap01(2, 2) = 1;
  std::vector<FqMatrix> s3{swap01, shift};
  FqMatrix all_ones(f2, 1, 3);
  all_ones(0, 0) = all_ones(0, 1) = all_ones(0, 2) = 1;
  auto fixed = spin(all_ones, s3);
  CHECK(fixed.rows() == 1);
  for (const auto& a : s3)
    CHECK((fixed * a) == fixed);
}

TEST_CASE("spun subspaces are invariant") {
  std::mt19937_64 rng(9);
  auto f3 = GaloisField::make(3);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 2 + rng() % 6;
    std::vector<FqMatrix> acts;
    for (int g = 0; g < 2; ++g) {
      auto m = random_matrix(f3, n, n, rng);
      acts.push_back(m);
    }
    auto seed = random_matrix(f3, 1, n, rng);
    auto w = spin(seed, acts);
    EchelonSpace space(f3, n);
    for (std::size_t i = 0; i < w.rows(); ++i)
      space.insert(w.row_vector(i));
    for (const auto& a : acts)
      for (std::size_t i = 0; i < w.rows(); ++i)
        CHECK(space.contains(a.apply(w.row(i))));
  }
}
