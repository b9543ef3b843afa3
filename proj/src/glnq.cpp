#include "msdim/glnq.hpp"

#include <numeric>
#include <unordered_set>

#include "msdim/errors.hpp"
#include "msdim/subgroups.hpp"

namespace msdim {

namespace {

std::uint64_t encode(std::span<const FieldElem> v, std::uint32_t q) {
  std::uint64_t code = 0;
  for (std::size_t i = v.size(); i-- > 0;)
    code = code * q + v[i];
  return code;
}

FqVector decode(std::uint64_t code, std::size_t n, std::uint32_t q) {
  FqVector v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = static_cast<FieldElem>(code % q);
    code /= q;
  }
  return v;
}

struct MatrixHash {
  std::size_t operator()(const FqMatrix& m) const noexcept {
    std::size_t h = 14695981039346656037ull;
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (FieldElem x : m.row(i))
        h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

std::uint64_t power_checked(std::uint64_t base, std::size_t e, std::uint64_t bound) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (r > bound / base)
      return bound + 1;
    r *= base;
  }
  return r;
}

unsigned multiplicative_order(unsigned q, unsigned p) {
  unsigned d = 1;
  std::uint64_t x = q % p;
  while (x != 1) {
    x = x * q % p;
    ++d;
  }
  return d;
}

// Matrix of y -> y * a on GF(q^d) in the basis 1, x, ..., x^{d-1}.
FqMatrix multiplication_matrix(const FieldPtr& big, const FieldPtr& base, FieldElem a) {
  const unsigned d = big->degree();
  const std::uint32_t q = base->size();
  FqMatrix m(base, d, d);
  FieldElem basis = 1;
  for (unsigned i = 0; i < d; ++i) {
    const FqVector row = decode(big->mul(basis, a), d, q);
    for (unsigned j = 0; j < d; ++j)
      m(i, j) = row[j];
    basis *= q;
  }
  return m;
}

FqMatrix frobenius_matrix(const FieldPtr& big, const FieldPtr& base) {
  const unsigned d = big->degree();
  const std::uint32_t q = base->size();
  FqMatrix m(base, d, d);
  FieldElem basis = 1;
  for (unsigned i = 0; i < d; ++i) {
    const FqVector row = decode(big->pow(basis, q), d, q);
    for (unsigned j = 0; j < d; ++j)
      m(i, j) = row[j];
    basis *= q;
  }
  return m;
}

// Place `block` at diagonal position `at` of an n x n identity.
FqMatrix embed(const FieldPtr& f, std::size_t n, const FqMatrix& block, std::size_t at) {
  FqMatrix m = FqMatrix::identity(f, n);
  for (std::size_t i = 0; i < block.rows(); ++i)
    for (std::size_t j = 0; j < block.cols(); ++j)
      m(at + i, at + j) = block(i, j);
  return m;
}

// Generators of a Sylow p-subgroup of Sym(m), as image vectors.
std::vector<std::vector<std::size_t>> sylow_symmetric(std::size_t m, unsigned p) {
  std::vector<std::vector<std::size_t>> gens;
  std::size_t offset = 0;
  std::vector<std::size_t> chunks;
  for (std::size_t rest = m, pk = 1; rest > 0; rest /= p, pk *= p)
    for (std::size_t c = 0; c < rest % p; ++c)
      chunks.push_back(pk);
  for (std::size_t size : chunks) {
    for (std::size_t pj = 1; pj < size; pj *= p) {
      std::vector<std::size_t> img(m);
      std::iota(img.begin(), img.end(), std::size_t{0});
      for (std::size_t i = 0; i < pj * p; ++i)
        img[offset + i] = offset + (i + pj) % (pj * p);
      gens.push_back(std::move(img));
    }
    offset += size;
  }
  return gens;
}

FqMatrix block_permutation(const FieldPtr& f, std::size_t n, std::size_t block, const std::vector<std::size_t>& img) {
  FqMatrix m(f, n, n);
  for (std::size_t b = 0; b < img.size(); ++b)
    for (std::size_t i = 0; i < block; ++i)
      m(b * block + i, img[b] * block + i) = 1;
  for (std::size_t i = img.size() * block; i < n; ++i)
    m(i, i) = 1;
  return m;
}

}  // namespace

std::uint64_t matrix_group_order(const std::vector<FqMatrix>& gens, std::size_t n, std::uint64_t limit) {
  if (gens.empty())
    return 1;
  const auto& f = gens.front().field();
  std::unordered_set<FqMatrix, MatrixHash> seen;
  std::vector<FqMatrix> queue{FqMatrix::identity(f, n)};
  seen.insert(queue.front());
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto& g : gens) {
      FqMatrix x = queue[i] * g;
      if (seen.insert(x).second) {
        if (seen.size() > limit)
          throw CapabilityError("matrix group exceeds " + std::to_string(limit) + " elements");
        queue.push_back(std::move(x));
      }
    }
  return seen.size();
}

std::uint64_t count_regular_orbits(const std::vector<FqMatrix>& gens, std::size_t n, std::uint64_t vector_bound) {
  if (gens.empty())
    throw DomainError("count_regular_orbits needs at least one generator to fix the field");
  const auto& f = gens.front().field();
  const std::uint32_t q = f->size();
  const std::uint64_t total = power_checked(q, n, vector_bound);
  if (total > vector_bound)
    throw CapabilityError("q^n exceeds the vector enumeration bound " + std::to_string(vector_bound));
  const std::uint64_t order = matrix_group_order(gens, n);
  std::vector<bool> seen(total, false);
  std::uint64_t regular = 0;
  std::vector<std::uint64_t> orbit;
  for (std::uint64_t start = 0; start < total; ++start) {
    if (seen[start])
      continue;
    orbit.assign(1, start);
    seen[start] = true;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      const FqVector v = decode(orbit[i], n, q);
      for (const auto& g : gens) {
        const std::uint64_t w = encode(g.apply(v), q);
        if (!seen[w]) {
          seen[w] = true;
          orbit.push_back(w);
        }
      }
    }
    if (orbit.size() == order)
      ++regular;
  }
  return regular;
}

std::uint64_t glnq_p_part(std::size_t n, unsigned q, unsigned p) {
  // |GL(n,q)| = q^{n(n-1)/2} prod_{i=1..n} (q^i - 1)
  std::uint64_t part = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    std::uint64_t pp = 1;
    for (std::uint64_t mod = p;; mod *= p) {
      std::uint64_t r = 1;
      for (std::size_t k = 0; k < i; ++k)
        r = static_cast<std::uint64_t>(static_cast<unsigned __int128>(r) * q % mod);
      if (r != 1 % mod)
        break;
      pp = mod;
      if (mod > (std::uint64_t{1} << 58) / p)
        break;
    }
    part *= pp;
  }
  return part;
}

std::vector<FqMatrix> sylow_glnq(std::size_t n, unsigned q, unsigned p) {
  if (!is_prime(p))
    throw DomainError("p must be prime");
  if (!is_prime(q))
    throw CapabilityError("sylow_glnq is implemented for prime q only");
  if (p == q)
    throw DomainError("p must differ from the characteristic");
  if (n == 0)
    throw DomainError("n must be positive");
  const auto f = GaloisField::make(q);
  std::vector<FqMatrix> gens;
  std::size_t block = 0;
  FqMatrix local;
  std::vector<FqMatrix> local_extra;
  if (p == 2 && q % 4 == 3) {
    block = 2;
    const auto big = GaloisField::make(q, 2);
    const std::uint64_t two = p_part(static_cast<Order>(q) * q - 1, 2);
    local = multiplication_matrix(big, f, big->pow(big->primitive_element(), (static_cast<std::uint64_t>(q) * q - 1) / two));
    local_extra.push_back(frobenius_matrix(big, f));
  } else {
    block = p == 2 ? 1 : multiplicative_order(q % p, p);
    if (block > n)
      return {FqMatrix::identity(f, n)};
    std::uint64_t qd = 1;
    for (std::size_t i = 0; i < block; ++i)
      qd *= q;
    if (qd > 65536)
      throw CapabilityError("extension field GF(q^d) too large");
    const auto big = GaloisField::make(q, static_cast<unsigned>(block));
    const std::uint64_t pa = p_part(qd - 1, p);
    local = multiplication_matrix(big, f, big->pow(big->primitive_element(), (qd - 1) / pa));
  }
  const std::size_t m = n / block;
  for (std::size_t b = 0; b < m; ++b) {
    gens.push_back(embed(f, n, local, b * block));
    for (const auto& x : local_extra)
      gens.push_back(embed(f, n, x, b * block));
  }
  if (m > 0) {
    for (const auto& img : sylow_symmetric(m, p))
      gens.push_back(block_permutation(f, n, block, img));
  }
  if (p == 2 && q % 4 == 3 && n % 2 == 1) {
    FqMatrix minus = FqMatrix::identity(f, n);
    minus(n - 1, n - 1) = f->neg(1);
    gens.push_back(std::move(minus));
  }
  if (gens.empty())
    gens.push_back(FqMatrix::identity(f, n));
  const std::uint64_t expect = glnq_p_part(n, q, p);
  const std::uint64_t got = matrix_group_order(gens, n);
  if (got != expect)
    throw BuildError("Sylow construction has order " + std::to_string(got) + ", expected " + std::to_string(expect));
  return gens;
}

}  // namespace msdim
