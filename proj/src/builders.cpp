#include "msdim/builders.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "msdim/errors.hpp"
#include "msdim/field.hpp"
#include "msdim/structure.hpp"
#include "msdim/subgroups.hpp"

namespace msdim {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

unsigned parse_uint(std::string_view s, std::string_view what) {
  s = trim(s);
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw BuildError("bad " + std::string(what) + ": '" + std::string(s) + "'");
  return v;
}

Permutation from_map(std::vector<Point> images) { return Permutation(std::move(images)); }

// Power of two 2^k with k >= 1, else 0.
unsigned log2_exact(unsigned q) {
  unsigned k = 0;
  while (q > 1 && q % 2 == 0) {
    q /= 2;
    ++k;
  }
  return q == 1 ? k : 0;
}

}  // namespace

PermGroup parse_group_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<std::size_t> degree;
  std::vector<Permutation> gens;
  while (std::getline(in, line)) {
    std::string_view l = line;
    if (auto h = l.find('#'); h != std::string_view::npos)
      l = l.substr(0, h);
    l = trim(l);
    if (l.empty())
      continue;
    if (!degree) {
      if (l.substr(0, 7) != "degree:")
        throw MalformedInput("group text must start with 'degree: n'");
      std::string_view rest = trim(l.substr(7));
      std::size_t d = 0;
      auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), d);
      if (ec != std::errc() || ptr != rest.data() + rest.size() || d == 0)
        throw MalformedInput("bad degree line");
      degree = d;
      continue;
    }
    gens.push_back(Permutation::from_cycles(l, *degree));
  }
  if (!degree)
    throw MalformedInput("missing degree line");
  return PermGroup(*degree, std::move(gens));
}

std::string format_group_text(const PermGroup& g) {
  std::string out = "degree: " + std::to_string(g.degree()) + "\n";
  for (const auto& x : g.generators())
    out += x.to_cycles() + "\n";
  return out;
}

PermGroup read_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw BuildError("cannot open group file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_group_text(ss.str());
}

PermGroup symmetric_group(std::size_t n) {
  if (n == 0)
    throw BuildError("sym:0 is not defined");
  if (n == 1)
    return PermGroup(1, {});
  std::vector<Point> t(n), c(n);
  for (std::size_t i = 0; i < n; ++i) {
    t[i] = static_cast<Point>(i);
    c[i] = static_cast<Point>((i + 1) % n);
  }
  std::swap(t[0], t[1]);
  if (n == 2)
    return PermGroup(2, {from_map(t)});
  return PermGroup(n, {from_map(t), from_map(c)});
}

PermGroup alternating_group(std::size_t n) {
  if (n == 0)
    throw BuildError("alt:0 is not defined");
  std::vector<Permutation> gens;
  for (std::size_t i = 2; i < n; ++i) {
    std::vector<Point> im(n);
    for (std::size_t j = 0; j < n; ++j)
      im[j] = static_cast<Point>(j);
    im[0] = 1;
    im[1] = static_cast<Point>(i);
    im[i] = 0;
    gens.push_back(from_map(im));
  }
  return PermGroup(n, std::move(gens));
}

PermGroup cyclic_group(std::size_t n) {
  if (n == 0)
    throw BuildError("cyclic:0 is not defined");
  std::vector<Point> im(n);
  for (std::size_t i = 0; i < n; ++i)
    im[i] = static_cast<Point>((i + 1) % n);
  return PermGroup(n, {from_map(im)});
}

PermGroup dihedral_group(std::size_t order) {
  if (order < 2 || order % 2 != 0)
    throw BuildError("dihedral:n needs an even order n >= 2");
  if (order == 2)
    return cyclic_group(2);
  if (order == 4)
    return PermGroup(4, {Permutation::from_cycles("(0 1)(2 3)", 4), Permutation::from_cycles("(0 2)(1 3)", 4)});
  const std::size_t m = order / 2;
  std::vector<Point> r(m), s(m);
  for (std::size_t i = 0; i < m; ++i) {
    r[i] = static_cast<Point>((i + 1) % m);
    s[i] = static_cast<Point>((m - i) % m);
  }
  return PermGroup(m, {from_map(r), from_map(s)});
}

PermGroup sl2_group(unsigned q) {
  const unsigned k = log2_exact(q);
  if (k == 0) {
    unsigned r = 2;
    while (q > 1 && q % r != 0)
      ++r;
    if (q > 2 && is_p_power(q, r))
      throw BuildError("sl2:" + std::to_string(q) + " acts unfaithfully on the projective line");
    throw BuildError("sl2:q needs q a power of 2, got " + std::to_string(q));
  }
  const auto f = GaloisField::make(2, k);
  const Point inf = q;
  std::vector<Point> t(q + 1), m(q + 1), s(q + 1);
  for (FieldElem x = 0; x < q; ++x) {
    t[x] = f->add(x, 1);
    m[x] = f->mul(x, f->primitive_element());
    s[x] = x == 0 ? inf : f->inv(x);
  }
  t[inf] = m[inf] = inf;
  s[inf] = 0;
  PermGroup g(q + 1, {from_map(t), from_map(m), from_map(s)});
  if (g.order() != static_cast<Order>(q) * (static_cast<Order>(q) * q - 1))
    throw BuildError("sl2 construction produced the wrong order");
  return g;
}

PermGroup mersenne_example(unsigned p) {
  const unsigned k = log2_exact(p + 1);
  if (!is_prime(p) || k == 0 || p == 2)
    throw BuildError("mersenne_example:p needs a Mersenne prime p, got " + std::to_string(p));
  const auto f = GaloisField::make(2, k);
  const Point b = p + 1;  // block size
  const Point n = p * b;
  std::vector<Point> t(n), m(n), c(n);
  for (Point i = 0; i < n; ++i)
    t[i] = m[i] = i;
  for (FieldElem x = 0; x < b; ++x) {
    t[x] = f->add(x, 1);
    m[x] = f->mul(x, f->primitive_element());
  }
  for (Point blk = 0; blk < p; ++blk)
    for (Point x = 0; x < b; ++x)
      c[blk * b + x] = ((blk + 1) % p) * b + x;
  PermGroup g(n, {from_map(t), from_map(m), from_map(c)});
  Order expect = 1;
  for (unsigned i = 0; i < p; ++i)
    expect *= static_cast<Order>(b) * p;
  expect *= p;
  if (g.order() != expect)
    throw BuildError("mersenne_example construction produced the wrong order");
  return g;
}

PermGroup fermat_example(unsigned q) {
  if (!is_prime(q) || q < 3 || log2_exact(q - 1) == 0)
    throw BuildError("fermat_example:q needs a Fermat prime q, got " + std::to_string(q));
  const auto f = GaloisField::make(q);
  const Point n = 2 * q;
  std::vector<Point> t(n), m(n), s(n);
  for (Point i = 0; i < n; ++i)
    t[i] = m[i] = i;
  for (FieldElem x = 0; x < q; ++x) {
    t[x] = f->add(x, 1);
    m[x] = f->mul(x, f->primitive_element());
    s[x] = x + q;
    s[x + q] = x;
  }
  PermGroup g(n, {from_map(t), from_map(m), from_map(s)});
  const Order expect = 2 * static_cast<Order>(q) * q * (q - 1) * (q - 1);
  if (g.order() != expect)
    throw BuildError("fermat_example construction produced the wrong order");
  return g;
}

PermGroup frobenius_group(unsigned p, unsigned k) {
  if (!is_prime(p) || k == 0 || (p - 1) % k != 0)
    throw BuildError("frobenius:p:k needs p prime and k dividing p-1");
  const auto f = GaloisField::make(p);
  const FieldElem a = f->pow(f->primitive_element(), (p - 1) / k);
  std::vector<Point> t(p), m(p);
  for (FieldElem x = 0; x < p; ++x) {
    t[x] = f->add(x, 1);
    m[x] = f->mul(x, a);
  }
  return PermGroup(p, {from_map(t), from_map(m)});
}

PermGroup build(std::string_view spec) {
  spec = trim(spec);
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos)
    throw BuildError("builder spec needs the form name:args, got '" + std::string(spec) + "'");
  const std::string_view name = spec.substr(0, colon);
  const std::string_view arg = spec.substr(colon + 1);
  try {
    if (name == "sym")
      return symmetric_group(parse_uint(arg, "degree"));
    if (name == "alt")
      return alternating_group(parse_uint(arg, "degree"));
    if (name == "cyclic")
      return cyclic_group(parse_uint(arg, "order"));
    if (name == "dihedral")
      return dihedral_group(parse_uint(arg, "order"));
    if (name == "sl2")
      return sl2_group(parse_uint(arg, "field size"));
    if (name == "mersenne_example")
      return mersenne_example(parse_uint(arg, "prime"));
    if (name == "fermat_example")
      return fermat_example(parse_uint(arg, "prime"));
    if (name == "frobenius") {
      const auto c2 = arg.find(':');
      if (c2 == std::string_view::npos)
        throw BuildError("frobenius needs p:k");
      return frobenius_group(parse_uint(arg.substr(0, c2), "prime"), parse_uint(arg.substr(c2 + 1), "order"));
    }
    if (name == "direct") {
      const auto comma = arg.find(',');
      if (comma == std::string_view::npos)
        throw BuildError("direct needs two comma-separated specs");
      return direct_product(build(arg.substr(0, comma)), build(arg.substr(comma + 1)));
    }
    if (name == "file")
      return read_group_file(std::string(trim(arg)));
    if (name == "gens") {
      const auto c2 = arg.find(':');
      if (c2 == std::string_view::npos)
        throw BuildError("gens needs degree:cycles;cycles");
      std::string text = "degree: " + std::string(arg.substr(0, c2)) + "\n";
      for (char ch : arg.substr(c2 + 1))
        text += ch == ';' ? '\n' : ch;
      return parse_group_text(text);
    }
  } catch (const MalformedInput& e) {
    throw BuildError(std::string("in '") + std::string(spec) + "': " + e.what());
  }
  throw BuildError("unknown builder '" + std::string(name) + "'");
}

}  // namespace msdim
