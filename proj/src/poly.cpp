#include "msdim/poly.hpp"

#include <algorithm>

#include "msdim/errors.hpp"

namespace msdim {

namespace {

std::uint64_t splitmix(std::uint64_t& s) {
  std::uint64_t z = (s += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

bool poly_less(const Poly& a, const Poly& b) {
  if (a.size() != b.size())
    return a.size() < b.size();
  return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

}  // namespace

Poly PolyRing::constant(FieldElem c) const { return c == 0 ? Poly{} : Poly{c}; }

Poly PolyRing::trim(Poly f) const {
  while (!f.empty() && f.back() == 0)
    f.pop_back();
  return f;
}

Poly PolyRing::monic(const Poly& f) const {
  if (f.empty())
    return f;
  return scale(f, field_->inv(f.back()));
}

Poly PolyRing::add(const Poly& a, const Poly& b) const {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = field_->add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  return trim(std::move(out));
}

Poly PolyRing::sub(const Poly& a, const Poly& b) const {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = field_->sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  return trim(std::move(out));
}

Poly PolyRing::mul(const Poly& a, const Poly& b) const {
  if (a.empty() || b.empty())
    return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    field_->axpy(out.data() + i, a[i], b.data(), b.size());
  return trim(std::move(out));
}

Poly PolyRing::scale(const Poly& a, FieldElem c) const {
  Poly out = a;
  field_->scale(out.data(), c, out.size());
  return trim(std::move(out));
}

std::pair<Poly, Poly> PolyRing::divmod(const Poly& a, const Poly& b) const {
  if (b.empty())
    throw DomainError("polynomial division by zero");
  if (a.size() < b.size())
    return {{}, a};
  Poly r = a;
  Poly q(a.size() - b.size() + 1, 0);
  const FieldElem lead_inv = field_->inv(b.back());
  for (std::size_t i = r.size() - 1;; --i) {
    const FieldElem c = field_->mul(r[i], lead_inv);
    q[i - (b.size() - 1)] = c;
    if (c != 0)
      field_->axpy(r.data() + i - (b.size() - 1), field_->neg(c), b.data(), b.size());
    if (i == b.size() - 1)
      break;
  }
  r.resize(b.size() - 1);
  return {trim(std::move(q)), trim(std::move(r))};
}

Poly PolyRing::gcd(const Poly& a, const Poly& b) const {
  Poly x = a, y = b;
  while (!y.empty()) {
    Poly r = mod(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

Poly PolyRing::derivative(const Poly& f) const {
  if (f.size() <= 1)
    return {};
  Poly out(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i)
    out[i - 1] = field_->mul(f[i], field_->from_int(static_cast<std::int64_t>(i)));
  return trim(std::move(out));
}

Poly PolyRing::powmod(const Poly& base, std::uint64_t e, const Poly& m) const {
  Poly acc = mod(constant(1), m);
  Poly b = mod(base, m);
  while (e) {
    if (e & 1)
      acc = mod(mul(acc, b), m);
    e >>= 1;
    if (e)
      b = mod(mul(b, b), m);
  }
  return acc;
}

FieldElem PolyRing::eval(const Poly& f, FieldElem x) const {
  FieldElem acc = 0;
  for (std::size_t i = f.size(); i-- > 0;)
    acc = field_->add(field_->mul(acc, x), f[i]);
  return acc;
}

bool PolyRing::is_irreducible(const Poly& f0) const {
  const Poly f = monic(trim(f0));
  const int n = degree(f);
  if (n <= 0)
    return false;
  if (n == 1)
    return true;
  const std::uint64_t q = field_->size();
  // x^(q^i) mod f for i = 1..n
  std::vector<Poly> frob(static_cast<std::size_t>(n) + 1);
  frob[0] = mod(x(), f);
  for (int i = 1; i <= n; ++i)
    frob[static_cast<std::size_t>(i)] = powmod(frob[static_cast<std::size_t>(i) - 1], q, f);
  if (sub(frob[static_cast<std::size_t>(n)], frob[0]).size() != 0)
    return false;
  int m = n;
  for (int r = 2; r <= m; ++r) {
    if (m % r)
      continue;
    while (m % r == 0)
      m /= r;
    const Poly g = gcd(f, sub(frob[static_cast<std::size_t>(n / r)], frob[0]));
    if (degree(g) != 0)
      return false;
  }
  return true;
}

Poly PolyRing::frobenius_root(const Poly& f) const {
  const unsigned p = field_->characteristic();
  std::uint64_t e = 1;
  for (unsigned i = 1; i < field_->degree(); ++i)
    e *= p;
  Poly out((f.size() - 1) / p + 1, 0);
  for (std::size_t i = 0; i < f.size(); i += p)
    out[i / p] = field_->pow(f[i], e);
  return trim(std::move(out));
}

std::vector<std::pair<Poly, unsigned>> PolyRing::squarefree(const Poly& f) const {
  std::vector<std::pair<Poly, unsigned>> out;
  Poly c = gcd(f, derivative(f));
  Poly w = div(f, c);
  unsigned i = 1;
  while (degree(w) > 0) {
    Poly y = gcd(w, c);
    Poly fac = div(w, y);
    if (degree(fac) > 0)
      out.emplace_back(monic(fac), i);
    w = std::move(y);
    c = div(c, w);
    ++i;
  }
  if (degree(c) > 0) {
    const unsigned p = field_->characteristic();
    for (auto& [g, e] : squarefree(monic(frobenius_root(c))))
      out.emplace_back(std::move(g), e * p);
  }
  return out;
}

std::vector<std::pair<Poly, unsigned>> PolyRing::distinct_degree(const Poly& f0, unsigned max_degree) const {
  std::vector<std::pair<Poly, unsigned>> out;
  Poly f = f0;
  Poly h = mod(x(), f);
  unsigned d = 1;
  const std::uint64_t q = field_->size();
  while (degree(f) >= static_cast<int>(2 * d) && d <= max_degree) {
    h = powmod(h, q, f);
    Poly g = gcd(f, sub(h, x()));
    if (degree(g) > 0) {
      out.emplace_back(g, d);
      f = div(f, g);
      h = mod(h, f);
    }
    ++d;
  }
  if (degree(f) > 0 && degree(f) < static_cast<int>(2 * d) &&
      static_cast<unsigned>(degree(f)) <= max_degree)
    out.emplace_back(monic(f), static_cast<unsigned>(degree(f)));
  return out;
}

void PolyRing::equal_degree(const Poly& f, unsigned d, std::vector<Poly>& out, std::uint64_t& seed) const {
  const int n = degree(f);
  if (n == static_cast<int>(d)) {
    out.push_back(monic(f));
    return;
  }
  const std::uint64_t q = field_->size();
  const bool even = field_->characteristic() == 2;
  for (;;) {
    Poly a(static_cast<std::size_t>(n), 0);
    for (auto& c : a)
      c = static_cast<FieldElem>(splitmix(seed) % q);
    a = trim(std::move(a));
    if (degree(a) <= 0)
      continue;
    Poly b;
    if (even) {
      // trace map a + a^2 + ... + a^(2^(k d - 1))
      const unsigned steps = field_->degree() * d;
      Poly t = a, acc = a;
      for (unsigned i = 1; i < steps; ++i) {
        t = mod(mul(t, t), f);
        acc = add(acc, t);
      }
      b = acc;
    } else {
      // a^((q^d - 1)/2) = prod_i (a^(q^i))^((q-1)/2)
      Poly t = mod(a, f), acc = constant(1);
      for (unsigned i = 0; i < d; ++i) {
        acc = mod(mul(acc, powmod(t, (q - 1) / 2, f)), f);
        t = powmod(t, q, f);
      }
      b = sub(acc, constant(1));
    }
    Poly g = gcd(f, b);
    if (degree(g) > 0 && degree(g) < n) {
      equal_degree(g, d, out, seed);
      equal_degree(div(f, g), d, out, seed);
      return;
    }
  }
}

std::vector<std::pair<Poly, unsigned>> PolyRing::factor(const Poly& f0) const {
  const Poly f = trim(f0);
  if (f.empty())
    throw DomainError("cannot factor the zero polynomial");
  std::vector<std::pair<Poly, unsigned>> out;
  if (degree(f) == 0)
    return out;
  std::uint64_t seed = 0x5eed;
  for (const auto& [part, mult] : squarefree(monic(f))) {
    for (const auto& [block, d] : distinct_degree(part, static_cast<unsigned>(degree(part)))) {
      std::vector<Poly> irr;
      equal_degree(block, d, irr, seed);
      for (auto& g : irr)
        out.emplace_back(std::move(g), mult);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
  return out;
}

std::vector<Poly> PolyRing::small_factors(const Poly& f0, unsigned max_degree) const {
  const Poly f = trim(f0);
  if (f.empty())
    throw DomainError("cannot factor the zero polynomial");
  std::vector<Poly> out;
  std::uint64_t seed = 0x5eed;
  for (const auto& [part, mult] : squarefree(monic(f))) {
    (void)mult;
    for (const auto& [block, d] : distinct_degree(part, max_degree))
      equal_degree(block, d, out, seed);
  }
  std::sort(out.begin(), out.end(), poly_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace msdim
