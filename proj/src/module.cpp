#include "msdim/module.hpp"

#include <random>

#include "msdim/elements.hpp"
#include "msdim/errors.hpp"

namespace msdim {

GModule::GModule(FieldPtr field, std::size_t dim, std::vector<FqMatrix> action)
    : field_(std::move(field)), dim_(dim), action_(std::move(action)) {
  if (dim_ == 0)
    throw DomainError("module dimension must be positive");
  for (const auto& a : action_)
    if (a.rows() != dim_ || a.cols() != dim_)
      throw MalformedInput("action matrix has the wrong shape");
}

bool GModule::is_trivial() const {
  for (const auto& a : action_)
    if (!a.is_identity())
      return false;
  return true;
}

FqMatrix GModule::word_matrix(const std::vector<std::uint32_t>& word) const {
  if (word.empty())
    return FqMatrix::identity(field_, dim_);
  FqMatrix m = action_[word[0]];
  for (std::size_t i = 1; i < word.size(); ++i)
    m = m * action_[word[i]];
  return m;
}

GModule GModule::submodule(const FqMatrix& basis) const {
  const auto rr = rref(basis);
  const std::size_t k = rr.rank;
  std::vector<FqMatrix> acts;
  for (const auto& a : action_) {
    FqMatrix s(field_, k, k);
    for (std::size_t i = 0; i < k; ++i) {
      const FqVector img = a.apply(rr.reduced.row(i));
      for (std::size_t j = 0; j < k; ++j)
        s(i, j) = img[rr.pivots[j]];
    }
    acts.push_back(std::move(s));
  }
  return GModule(field_, k, std::move(acts));
}

GModule GModule::quotient(const FqMatrix& basis) const {
  const auto rr = rref(basis);
  std::vector<bool> is_pivot(dim_, false);
  for (auto c : rr.pivots)
    is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < dim_; ++c)
    if (!is_pivot[c])
      free.push_back(c);
  const std::size_t k = free.size();
  std::vector<FqMatrix> acts;
  for (const auto& a : action_) {
    FqMatrix s(field_, k, k);
    for (std::size_t i = 0; i < k; ++i) {
      FqVector img(a.row(free[i]).begin(), a.row(free[i]).end());
      for (std::size_t r = 0; r < rr.rank; ++r) {
        const FieldElem c = img[rr.pivots[r]];
        if (c != 0)
          field_->axpy(img.data(), field_->neg(c), rr.reduced.row(r).data(), dim_);
      }
      for (std::size_t j = 0; j < k; ++j)
        s(i, j) = img[free[j]];
    }
    acts.push_back(std::move(s));
  }
  return GModule(field_, k, std::move(acts));
}

GModule GModule::dual() const {
  std::vector<FqMatrix> acts;
  for (const auto& a : action_)
    acts.push_back(a.inverse().transpose());
  return GModule(field_, dim_, std::move(acts));
}

GModule GModule::tensor(const GModule& other) const {
  if (other.action_.size() != action_.size())
    throw DomainError("tensor factors belong to different generator lists");
  std::vector<FqMatrix> acts;
  for (std::size_t i = 0; i < action_.size(); ++i)
    acts.push_back(action_[i].kron(other.action_[i]));
  return GModule(field_, dim_ * other.dim_, std::move(acts));
}

FqMatrix extend_scalars(const FqMatrix& m, const FieldPtr& larger) {
  const auto& f = *m.field();
  if (larger->characteristic() != f.characteristic() || larger->degree() % f.degree() != 0)
    throw DomainError("target field does not contain the source field");
  if (f.degree() != 1 && larger->degree() != f.degree())
    throw CapabilityError("scalar extension is implemented from prime fields only");
  FqMatrix out(larger, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(i, j) = m(i, j);
  return out;
}

GModule GModule::extended(FieldPtr larger) const {
  std::vector<FqMatrix> acts;
  for (const auto& a : action_)
    acts.push_back(extend_scalars(a, larger));
  return GModule(std::move(larger), dim_, std::move(acts));
}

GModule perm_module(const PermGroup& g, const FieldPtr& field) {
  std::vector<FqMatrix> acts;
  for (const auto& x : g.generators()) {
    FqMatrix a(field, g.degree(), g.degree());
    for (Point i = 0; i < g.degree(); ++i)
      a(i, x[i]) = 1;
    acts.push_back(std::move(a));
  }
  return GModule(field, g.degree(), std::move(acts));
}

GModule trivial_module(const PermGroup& g, const FieldPtr& field) {
  std::vector<FqMatrix> acts(g.generators().size(), FqMatrix::identity(field, 1));
  return GModule(field, 1, std::move(acts));
}

GModule regular_module(const PermGroup& g, const FieldPtr& field) {
  const auto& e = g.elements();
  const std::size_t n = e.size();
  std::vector<FqMatrix> acts;
  for (std::size_t s = 0; s < e.num_generators(); ++s) {
    FqMatrix a(field, n, n);
    const ElemId gen = e.generator(s);
    for (ElemId x = 0; x < n; ++x)
      a(x, e.mul(x, gen)) = 1;
    acts.push_back(std::move(a));
  }
  return GModule(field, n, std::move(acts));
}

bool satisfies_relations(const PermGroup& g, const GModule& m, std::uint64_t seed, int samples) {
  const auto& gens = g.generators();
  if (gens.size() != m.num_generators())
    return false;
  for (const auto& a : m.actions())
    if (rref(a).rank != m.dim())
      return false;
  if (gens.empty())
    return true;
  std::mt19937_64 rng(seed);
  for (int t = 0; t < samples; ++t) {
    const std::size_t len = 1 + rng() % 6;
    std::vector<std::uint32_t> word(len);
    Permutation w(g.degree());
    for (auto& s : word) {
      s = static_cast<std::uint32_t>(rng() % gens.size());
      w = w * gens[s];
    }
    FqMatrix mw = m.word_matrix(word);
    Order ord = w.order();
    FqMatrix acc = FqMatrix::identity(m.field(), m.dim());
    for (FqMatrix base = mw; ord > 0; ord >>= 1) {
      if (ord & 1)
        acc = acc * base;
      if (ord > 1)
        base = base * base;
    }
    if (!acc.is_identity())
      return false;
  }
  return true;
}

std::vector<FieldElem> class_traces(const GroupElements& e, const GModule& m, unsigned p) {
  std::vector<FieldElem> out;
  for (const auto& c : e.classes())
    if (c.element_order % p != 0)
      out.push_back(m.word_matrix(e.word(c.representative)).trace());
  return out;
}

}  // namespace msdim
