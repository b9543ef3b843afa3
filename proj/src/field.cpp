#include "msdim/field.hpp"

#include "msdim/errors.hpp"
#include "msdim/poly.hpp"
#include "msdim/subgroups.hpp"

namespace msdim {

namespace {

std::vector<FieldElem> digits(FieldElem a, unsigned p, unsigned k) {
  std::vector<FieldElem> d(k);
  for (unsigned i = 0; i < k; ++i) {
    d[i] = a % p;
    a /= p;
  }
  return d;
}

FieldElem undigits(const std::vector<FieldElem>& d, unsigned p) {
  FieldElem a = 0;
  for (std::size_t i = d.size(); i-- > 0;)
    a = a * p + d[i];
  return a;
}

std::vector<unsigned> prime_divisors(std::uint64_t n) {
  std::vector<unsigned> out;
  for (unsigned d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0)
        n /= d;
    }
  if (n > 1)
    out.push_back(static_cast<unsigned>(n));
  return out;
}

}  // namespace

FieldPtr GaloisField::make(unsigned p, unsigned k) { return std::make_shared<const GaloisField>(p, k); }

GaloisField::GaloisField(unsigned p, unsigned k) : p_(p), k_(k) {
  if (!is_prime(p))
    throw DomainError("field characteristic " + std::to_string(p) + " is not prime");
  if (k == 0)
    throw DomainError("field extension degree must be positive");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q > (1u << 16) && k > 1)
      throw CapabilityError("extension fields are limited to 2^16 elements");
  }
  if (q > (1ull << 31))
    throw CapabilityError("prime fields are limited to p < 2^31");
  q_ = static_cast<std::uint32_t>(q);

  if (k == 1) {
    modulus_ = {0, 1};
    if (p == 2) {
      primitive_ = 1;
    } else {
      const auto divs = prime_divisors(p - 1);
      for (FieldElem g = 2; g < p; ++g) {
        bool ok = true;
        for (unsigned r : divs)
          ok = ok && pow(g, (p - 1) / r) != 1;
        if (ok) {
          primitive_ = g;
          break;
        }
      }
    }
    if (p <= (1u << 16)) {
      inv_.assign(p, 0);
      for (FieldElem a = 1; a < p; ++a)
        inv_[a] = pow(a, p - 2);
    }
    return;
  }

  const auto prime = make(p, 1);
  const PolyRing ring(prime);
  std::uint64_t lower_count = q_;
  for (std::uint64_t code = 0; code < lower_count; ++code) {
    Poly f = digits(static_cast<FieldElem>(code), p, k);
    f.push_back(1);
    if (ring.is_irreducible(f)) {
      modulus_ = f;
      break;
    }
  }

  neg_table_.resize(q_);
  for (FieldElem a = 0; a < q_; ++a) {
    auto d = digits(a, p, k);
    for (auto& c : d)
      c = c == 0 ? 0 : p - c;
    neg_table_[a] = undigits(d, p);
  }
  if (q_ <= 1024) {
    add_table_.resize(static_cast<std::size_t>(q_) * q_);
    for (FieldElem a = 0; a < q_; ++a)
      for (FieldElem b = 0; b < q_; ++b) {
        auto da = digits(a, p, k), db = digits(b, p, k);
        for (unsigned i = 0; i < k; ++i)
          da[i] = (da[i] + db[i]) % p;
        add_table_[static_cast<std::size_t>(a) * q_ + b] = undigits(da, p);
      }
  }

  const auto divs = prime_divisors(q_ - 1);
  for (FieldElem g = 2; g < q_; ++g) {
    bool ok = true;
    for (unsigned r : divs) {
      FieldElem acc = 1;
      for (std::uint64_t i = 0; i < (q_ - 1) / r; ++i)
        acc = slow_mul(acc, g);
      ok = ok && acc != 1;
    }
    if (ok) {
      primitive_ = g;
      break;
    }
  }
  exp_.resize(2 * static_cast<std::size_t>(q_ - 1));
  log_.assign(q_, 0);
  FieldElem acc = 1;
  for (std::uint32_t i = 0; i < q_ - 1; ++i) {
    exp_[i] = exp_[i + q_ - 1] = acc;
    log_[acc] = i;
    acc = slow_mul(acc, primitive_);
  }
}

FieldElem GaloisField::slow_mul(FieldElem a, FieldElem b) const {
  auto da = digits(a, p_, k_), db = digits(b, p_, k_);
  std::vector<std::uint64_t> prod(2 * k_, 0);
  for (unsigned i = 0; i < k_; ++i)
    for (unsigned j = 0; j < k_; ++j)
      prod[i + j] = (prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p_;
  for (unsigned i = 2 * k_ - 1; i >= k_; --i) {
    const std::uint64_t c = prod[i];
    if (c == 0)
      continue;
    prod[i] = 0;
    for (unsigned j = 0; j < k_; ++j)
      prod[i - k_ + j] = (prod[i - k_ + j] + (p_ - modulus_[j]) % p_ * c) % p_;
  }
  std::vector<FieldElem> out(k_);
  for (unsigned i = 0; i < k_; ++i)
    out[i] = static_cast<FieldElem>(prod[i]);
  return undigits(out, p_);
}

FieldElem GaloisField::add_ext(FieldElem a, FieldElem b) const {
  if (!add_table_.empty())
    return add_table_[static_cast<std::size_t>(a) * q_ + b];
  FieldElem out = 0, scale = 1;
  for (unsigned i = 0; i < k_; ++i) {
    const FieldElem s = (a % p_ + b % p_) % p_;
    out += s * scale;
    scale *= p_;
    a /= p_;
    b /= p_;
  }
  return out;
}

FieldElem GaloisField::neg_ext(FieldElem a) const { return neg_table_[a]; }

FieldElem GaloisField::inv(FieldElem a) const {
  if (a == 0)
    throw DomainError("inverse of zero");
  if (k_ > 1)
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  if (!inv_.empty())
    return inv_[a];
  return pow(a, p_ - 2);
}

FieldElem GaloisField::pow(FieldElem a, std::uint64_t e) const {
  FieldElem acc = 1;
  while (e) {
    if (e & 1)
      acc = mul(acc, a);
    a = mul(a, a);
    e >>= 1;
  }
  return acc;
}

FieldElem GaloisField::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0)
    r += p_;
  return static_cast<FieldElem>(r);
}

void GaloisField::axpy(FieldElem* dst, FieldElem c, const FieldElem* src, std::size_t n) const {
  if (c == 0)
    return;
  if (k_ == 1) {
    const std::uint64_t cc = c;
    for (std::size_t i = 0; i < n; ++i)
      dst[i] = static_cast<FieldElem>((dst[i] + cc * src[i]) % p_);
    return;
  }
  const std::uint32_t lc = log_[c];
  for (std::size_t i = 0; i < n; ++i)
    if (src[i] != 0)
      dst[i] = add_ext(dst[i], exp_[lc + log_[src[i]]]);
}

void GaloisField::scale(FieldElem* v, FieldElem c, std::size_t n) const {
  for (std::size_t i = 0; i < n; ++i)
    v[i] = mul(v[i], c);
}

}  // namespace msdim
