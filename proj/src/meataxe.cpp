#include "msdim/meataxe.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <tuple>

#include "msdim/elements.hpp"
#include "msdim/errors.hpp"
#include "msdim/structure.hpp"
#include "msdim/subgroups.hpp"

namespace msdim {

FqMatrix AlgebraRecipe::evaluate(const GModule& m) const {
  const auto& f = m.field();
  FqMatrix out(f, m.dim(), m.dim());
  for (const auto& t : terms)
    out = out + m.word_matrix(t.word).scaled(t.coefficient);
  return out;
}

namespace {

AlgebraRecipe random_recipe(std::mt19937_64& rng, std::size_t ngens, std::uint32_t q) {
  AlgebraRecipe r;
  r.terms.push_back({static_cast<FieldElem>(rng() % q), {}});
  if (ngens == 0)
    return r;
  const std::size_t nterms = 2 + rng() % 3;
  for (std::size_t t = 0; t < nterms; ++t) {
    std::vector<std::uint32_t> w(1 + rng() % 4);
    for (auto& s : w)
      s = static_cast<std::uint32_t>(rng() % ngens);
    r.terms.push_back({static_cast<FieldElem>(1 + rng() % (q - 1)), std::move(w)});
  }
  return r;
}

FqMatrix single_row(const FieldPtr& f, std::span<const FieldElem> v) {
  FqMatrix m(f, 0, v.size());
  m.append_row(v);
  return m;
}

IrreducibleCertificate make_certificate(const GModule& m, AlgebraRecipe recipe, Poly factor, FqVector v) {
  IrreducibleCertificate c;
  c.recipe = std::move(recipe);
  c.factor = std::move(factor);
  c.vector = v;
  const auto& f = m.field();
  EchelonSpace space(f, m.dim());
  std::vector<FqVector> basis{v};
  space.insert(v);
  for (std::size_t i = 0; i < basis.size() && basis.size() < m.dim(); ++i)
    for (std::uint32_t g = 0; g < m.num_generators(); ++g) {
      FqVector w = m.action(g).apply(basis[i]);
      if (space.insert(w)) {
        basis.push_back(std::move(w));
        c.steps.emplace_back(static_cast<std::uint32_t>(i), g);
      }
    }
  if (basis.size() != m.dim())
    throw BuildError("certificate vector does not generate the module");
  const FqMatrix b = FqMatrix::from_rows(f, m.dim(), basis);
  const FqMatrix binv = b.inverse();
  for (const auto& a : m.actions())
    c.std_action.push_back(b * a * binv);
  return c;
}

IrreducibleCertificate one_dim_certificate(const GModule& m) {
  const auto& f = m.field();
  AlgebraRecipe r;
  r.terms.push_back({1, {}});
  return make_certificate(m, std::move(r), Poly{f->neg(1), 1}, FqVector{1});
}

bool same_generator_traces(const GModule& a, const GModule& b) {
  if (a.dim() != b.dim() || a.num_generators() != b.num_generators())
    return false;
  for (std::size_t g = 0; g < a.num_generators(); ++g)
    if (a.action(g).trace() != b.action(g).trace())
      return false;
  return true;
}

}  // namespace

SplitResult split_or_certify(const GModule& m, const MeatAxeOptions& opt) {
  if (m.dim() == 1)
    return {std::nullopt, one_dim_certificate(m)};
  const auto& f = m.field();
  PolyRing ring(f);
  std::mt19937_64 rng(opt.seed ^ (0x9e3779b97f4a7c15ULL * m.dim()));
  std::vector<FqMatrix> transposes;
  for (unsigned attempt = 0; attempt < opt.max_attempts; ++attempt) {
    AlgebraRecipe recipe = random_recipe(rng, m.num_generators(), f->size());
    const FqMatrix b = recipe.evaluate(m);
    const auto factors = ring.small_factors(charpoly(b), opt.max_factor_degree);
    for (const auto& fac : factors) {
      const FqMatrix fb = poly_eval(fac, b);
      const FqMatrix kernel = left_nullspace(fb);
      if (kernel.rows() == 0)
        continue;
      const FqMatrix w = spin(single_row(f, kernel.row(0)), m.actions());
      if (w.rows() < m.dim())
        return {w, std::nullopt};
      if (kernel.rows() != static_cast<std::size_t>(ring.degree(fac)))
        continue;
      if (transposes.empty())
        for (const auto& a : m.actions())
          transposes.push_back(a.transpose());
      const FqMatrix dual_kernel = left_nullspace(fb.transpose());
      const FqMatrix u = spin(single_row(f, dual_kernel.row(0)), transposes);
      if (u.rows() < m.dim())
        return {nullspace(u), std::nullopt};
      return {std::nullopt, make_certificate(m, std::move(recipe), fac, kernel.row_vector(0))};
    }
  }
  throw IncompletenessError("irreducibility test found no usable algebra element in dimension " +
                            std::to_string(m.dim()));
}

bool is_irreducible(const GModule& m, const MeatAxeOptions& opt) {
  return split_or_certify(m, opt).certificate.has_value();
}

std::size_t hom_dimension(const GModule& s, const IrreducibleCertificate& cert, const GModule& m) {
  if (s.num_generators() != m.num_generators())
    return 0;
  const auto& f = m.field();
  const FqMatrix kernel = left_nullspace(poly_eval(cert.factor, cert.recipe.evaluate(m)));
  const std::size_t k = kernel.rows();
  if (k == 0)
    return 0;
  const std::size_t d = s.dim(), n = m.dim();
  const std::size_t ngens = m.num_generators();
  FqMatrix residuals(f, 0, std::max<std::size_t>(1, ngens * d * n));
  FqVector flat(residuals.cols(), 0);
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<FqVector> rows{kernel.row_vector(j)};
    for (const auto& [parent, g] : cert.steps)
      rows.push_back(m.action(g).apply(rows[parent]));
    const FqMatrix c = FqMatrix::from_rows(f, n, rows);
    for (std::size_t g = 0; g < ngens; ++g) {
      const FqMatrix r = cert.std_action[g] * c - c * m.action(g);
      for (std::size_t i = 0; i < d; ++i)
        std::copy(r.row(i).begin(), r.row(i).end(), flat.begin() + static_cast<std::ptrdiff_t>((g * d + i) * n));
    }
    residuals.append_row(flat);
  }
  return k - rref(residuals).rank;
}

bool isomorphic(const SimpleRecord& a, const GModule& b) {
  return same_generator_traces(*a.module, b) && hom_dimension(*a.module, a.certificate, b) > 0;
}

std::vector<SimpleRecord> chop(const GModule& m, const MeatAxeOptions& opt) {
  std::vector<GModule> work{m};
  std::vector<SimpleRecord> out;
  while (!work.empty()) {
    GModule cur = std::move(work.back());
    work.pop_back();
    auto r = split_or_certify(cur, opt);
    if (r.submodule) {
      GModule sub = cur.submodule(*r.submodule);
      work.push_back(cur.quotient(*r.submodule));
      work.push_back(std::move(sub));
      continue;
    }
    bool merged = false;
    for (auto& rec : out)
      if (isomorphic(rec, cur)) {
        ++rec.multiplicity_in_source;
        merged = true;
        break;
      }
    if (merged)
      continue;
    SimpleRecord rec;
    rec.d = cur.dim();
    rec.e = hom_dimension(cur, *r.certificate, cur);
    rec.abs_dim = rec.d / rec.e;
    rec.multiplicity_in_source = 1;
    rec.certificate = std::move(*r.certificate);
    rec.module = std::make_shared<const GModule>(std::move(cur));
    out.push_back(std::move(rec));
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.d < b.d; });
  return out;
}

std::size_t endo_field_degree(const GModule& s, const MeatAxeOptions& opt) {
  auto r = split_or_certify(s, opt);
  if (!r.certificate)
    throw PreconditionError("endomorphism field degree requires an irreducible module");
  return hom_dimension(s, *r.certificate, s);
}

SimpleModulesResult simple_modules(const PermGroup& g, unsigned p, const SearchOptions& opt) {
  if (!is_prime(p))
    throw DomainError("p must be prime");
  const auto field = GaloisField::make(p);
  const auto& elems = g.elements();
  SimpleModulesResult res;
  res.p = p;
  res.seed = opt.meataxe.seed;
  res.p_regular_classes = count_p_regular_classes(g, p);

  std::size_t sum_e = 0;
  std::set<std::tuple<std::size_t, unsigned, std::size_t, std::size_t>> pairs;

  auto add_simple = [&](SimpleRecord rec, unsigned depth) {
    for (const auto& s : res.simples)
      if (isomorphic(s.record, *rec.module))
        return false;
    SimpleModuleInfo info;
    info.record = std::move(rec);
    info.record.multiplicity_in_source = 1;
    info.depth = depth;
    info.traces = class_traces(elems, *info.record.module, p);
    sum_e += info.record.e;
    const std::size_t k = res.simples.size();
    res.simples.push_back(std::move(info));
    const auto& added = res.simples[k];
    if (!added.record.module->is_trivial())
      for (std::size_t i = 0; i <= k; ++i) {
        const auto& other = res.simples[i];
        if (other.record.module->is_trivial())
          continue;
        const std::size_t prod = other.record.d * added.record.d;
        const unsigned dep = other.depth + added.depth;
        if (prod <= opt.max_tensor_dim && dep <= opt.max_depth)
          pairs.emplace(prod, dep, i, k);
      }
    return true;
  };
  auto absorb = [&](const GModule& m, unsigned depth) {
    ++res.modules_chopped;
    for (auto& rec : chop(m, opt.meataxe)) {
      const auto module = rec.module;
      if (add_simple(std::move(rec), depth) && sum_e < res.p_regular_classes) {
        const GModule dual = module->dual();
        auto r = split_or_certify(dual, opt.meataxe);
        SimpleRecord drec;
        drec.d = dual.dim();
        drec.e = hom_dimension(dual, *r.certificate, dual);
        drec.abs_dim = drec.d / drec.e;
        drec.certificate = std::move(*r.certificate);
        drec.module = std::make_shared<const GModule>(dual);
        add_simple(std::move(drec), depth);
      }
    }
  };

  absorb(trivial_module(g, field), 0);
  if (sum_e < res.p_regular_classes)
    absorb(perm_module(g, field), 1);
  while (sum_e < res.p_regular_classes && !pairs.empty()) {
    const auto [prod, dep, i, j] = *pairs.begin();
    pairs.erase(pairs.begin());
    const GModule t = res.simples[i].record.module->tensor(*res.simples[j].record.module);
    absorb(t, dep);
  }
  if (sum_e < res.p_regular_classes && g.order() <= opt.regular_fallback_bound) {
    res.used_regular_module = true;
    absorb(regular_module(g, field), 0);
  }
  if (sum_e != res.p_regular_classes)
    throw IncompletenessError("found simple modules accounting for " + std::to_string(sum_e) + " of " +
                              std::to_string(res.p_regular_classes) + " p-regular classes");

  for (const auto& s : res.simples)
    for (std::size_t i = 0; i < s.record.e; ++i)
      res.abs_dims.push_back(s.record.abs_dim);
  std::sort(res.abs_dims.begin(), res.abs_dims.end());

  if (opt.verify_splitting)
    for (auto& s : res.simples) {
      const std::size_t e = s.record.e;
      if (e == 1)
        continue;
      Order q = 1;
      for (std::size_t i = 0; i < e && q <= 65536; ++i)
        q *= p;
      if (q > 65536)
        continue;
      const auto big = GaloisField::make(p, static_cast<unsigned>(e));
      const auto parts = chop(s.record.module->extended(big), opt.meataxe);
      bool ok = parts.size() == e;
      for (const auto& part : parts)
        ok = ok && part.e == 1 && part.d == s.record.abs_dim && part.multiplicity_in_source == 1;
      s.split_verified = ok;
    }
  return res;
}

std::vector<std::size_t> all_absolutely_simple_dims(const PermGroup& g, unsigned p, const SearchOptions& opt) {
  return simple_modules(g, p, opt).abs_dims;
}

std::size_t m_s(const PermGroup& g, unsigned p, const SearchOptions& opt) {
  return all_absolutely_simple_dims(g, p, opt).back();
}

bool has_defect_zero_simple(const SimpleModulesResult& r, Order group_order) {
  const Order pp = p_part(group_order, r.p);
  return std::any_of(r.abs_dims.begin(), r.abs_dims.end(), [&](std::size_t d) { return d % pp == 0; });
}

bool has_defect_zero_simple(const PermGroup& g, unsigned p, const SearchOptions& opt) {
  return has_defect_zero_simple(simple_modules(g, p, opt), g.order());
}

}  // namespace msdim
