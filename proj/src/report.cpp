#include "msdim/report.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <thread>

#include "msdim/builders.hpp"
#include "msdim/errors.hpp"

namespace msdim {

using nlohmann::json;

namespace {

template <typename T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

json character_json(const VirtualCharacter& st) {
  json classes = json::array();
  for (std::size_t k = 0; k < st.class_reps.size(); ++k) {
    const auto& c = st.class_reps[k];
    classes.push_back({{"representative", c.representative.to_cycles()},
                       {"size", c.size},
                       {"element_order", c.element_order},
                       {"p_regular", c.p_regular},
                       {"value", st.values[k]}});
  }
  return classes;
}

std::string hex64(std::uint64_t x) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

json options_json(const AnalysisOptions& o) {
  return {{"seed", o.search.meataxe.seed},
          {"max_factor_degree", o.search.meataxe.max_factor_degree},
          {"max_attempts", o.search.meataxe.max_attempts},
          {"max_depth", o.search.max_depth},
          {"max_tensor_dim", o.search.max_tensor_dim},
          {"regular_fallback_bound", o.search.regular_fallback_bound},
          {"lattice_bound", o.lattice_bound},
          {"complexes", o.complexes},
          {"complex", std::string(kind_name(o.complex))},
          {"sections", o.sections}};
}

std::optional<json> cache_load(const std::filesystem::path& file, const json& key) {
  std::ifstream in(file);
  if (!in)
    return std::nullopt;
  try {
    json cached = json::parse(in);
    if (cached.at("key") == key)
      return cached.at("report");
  } catch (const json::exception&) {
  }
  return std::nullopt;
}

void cache_store(const std::filesystem::path& file, const json& key, const json& report) {
  std::error_code ec;
  std::filesystem::create_directories(file.parent_path(), ec);
  const auto tmp = file.string() + ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
  {
    std::ofstream out(tmp);
    if (!out)
      return;
    out << json{{"key", key}, {"report", report}}.dump();
  }
  std::filesystem::rename(tmp, file, ec);
}

}  // namespace

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s)
    h = (h ^ c) * 1099511628211ull;
  return h;
}

json to_json(const AnalysisReport& r) {
  json simples = json::array();
  for (const auto& s : r.simples)
    simples.push_back({{"d", s.d}, {"e", s.e}, {"generator_traces", s.traces}, {"split_verified", opt(s.split_verified)}});
  json verdicts = json::array();
  for (const auto& v : r.verdicts)
    verdicts.push_back({{"claim", v.claim}, {"status", status_name(v.status)}, {"detail", v.detail}});
  json out = {
      {"name", r.name},
      {"order", r.order},
      {"p", r.p},
      {"p_part", r.p_part},
      {"flags",
       {{"o_p_trivial", r.o_p_trivial},
        {"frattini_trivial", opt(r.frattini_trivial)},
        {"p_class", prime_class_name(r.p_class)},
        {"p_solvable", r.p_solvable},
        {"nonabelian_simple", r.simple}}},
      {"x_order", opt(r.x_order)},
      {"xc_order", opt(r.xc_order)},
      {"out_p_part", opt(r.out_p_part)},
      {"bound_i", opt(r.bound_i)},
      {"bound_ii", opt(r.bound_ii)},
      {"bound_ii_choice", "largest qualifying maximal abelian subgroup"},
      {"socle_order", opt(r.socle_order)},
      {"max_abelian_order", opt(r.max_abelian_order)},
      {"maximal_abelian_orders", r.maximal_abelian_orders},
      {"p_regular_classes", r.p_regular_classes},
      {"m_s", opt(r.m_s)},
      {"simple_dims", r.simple_dims},
      {"simples", simples},
      {"defect_zero", opt(r.defect_zero)},
      {"reduced_euler", r.euler},
      {"steinberg", r.steinberg ? character_json(*r.steinberg) : json(nullptr)},
      {"steinberg_nonzero", opt(r.steinberg_nonzero)},
      {"verdicts", verdicts},
      {"notes", r.notes},
      {"seed", r.seed},
  };
  return out;
}

json toolchain_fingerprint() {
#if defined(__clang__)
  const std::string compiler = "clang " __clang_version__;
#elif defined(__GNUC__)
  const std::string compiler = "gcc " __VERSION__;
#else
  const std::string compiler = "unknown";
#endif
  return {{"msdim", MSDIM_VERSION}, {"compiler", compiler}, {"schema_version", kSchemaVersion}};
}

std::size_t default_workers() {
  if (const char* env = std::getenv("MSDIM_WORKERS")) {
    try {
      const unsigned long n = std::stoul(env);
      if (n > 0)
        return n;
    } catch (const std::exception&) {
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

int PairResult::exit_status() const {
  if (report.is_null())
    return 2;
  bool unverified = false;
  for (const auto& v : report.at("verdicts")) {
    const auto s = v.at("status").get<std::string>();
    if (s == "fail")
      return 1;
    unverified = unverified || s == "unverified";
  }
  return unverified ? 2 : 0;
}

std::vector<PairResult> run_pairs(const std::vector<CorpusEntry>& corpus, const RunOptions& opt) {
  std::vector<PairResult> results;
  for (const auto& e : corpus) {
    bool skip = false;
    for (const auto& t : opt.skip_tags)
      skip = skip || e.has_tag(t);
    if (skip)
      continue;
    for (unsigned p : e.primes)
      results.push_back({e.name, e.builder, p, e.tags, nullptr, "", false});
  }

  const json toolchain = toolchain_fingerprint();
  const json options = options_json(opt.analysis);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < results.size();) {
      PairResult& r = results[i];
      const json key = {{"builder", r.builder}, {"p", r.p}, {"toolchain", toolchain}, {"options", options}};
      const auto file = std::filesystem::path(opt.cache_dir) / (hex64(fnv1a(key.dump())) + ".json");
      if (opt.use_cache) {
        if (auto hit = cache_load(file, key)) {
          r.report = std::move(*hit);
          r.report["name"] = r.name;
          r.cached = true;
          continue;
        }
      }
      try {
        const PermGroup g = build(r.builder);
        r.report = to_json(verify_theorem1(g, r.p, r.name, opt.analysis));
        if (opt.use_cache)
          cache_store(file, key, r.report);
      } catch (const std::exception& ex) {
        r.report = nullptr;
        r.error = ex.what();
      }
    }
  };
  const std::size_t n = std::max<std::size_t>(1, std::min(opt.workers, results.size()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < n; ++t)
    pool.emplace_back(work);
  work();
  for (auto& t : pool)
    t.join();
  return results;
}

json report_file(const std::vector<PairResult>& results, std::uint64_t seed) {
  json entries = json::array();
  for (const auto& r : results)
    entries.push_back({{"name", r.name},
                       {"builder", r.builder},
                       {"p", r.p},
                       {"tags", r.tags},
                       {"error", r.error.empty() ? json(nullptr) : json(r.error)},
                       {"report", r.report}});
  return {{"schema_version", kSchemaVersion}, {"toolchain", toolchain_fingerprint()}, {"seed", seed}, {"entries", entries}};
}

int combined_exit_status(const std::vector<PairResult>& results) {
  int worst = 0;
  for (const auto& r : results) {
    const int s = r.exit_status();
    if (s == 1)
      return 1;
    worst = std::max(worst, s);
  }
  return worst;
}

SteinbergSearch search_steinberg_zero(const std::vector<CorpusEntry>& corpus, unsigned p, Order lattice_bound) {
  SteinbergSearch out;
  for (const auto& e : corpus) {
    try {
      const PermGroup g = build(e.builder);
      if (!core_p(g, p).is_trivial()) {
        out.excluded.push_back(e.name);
        continue;
      }
      if (steinberg_character(g, p, chain_orbits(g, p, ComplexKind::poset, std::nullopt, lattice_bound)).is_zero())
        out.hits.push_back({e.name, e.builder, g.order()});
    } catch (const BuildError& ex) {
      out.skipped.push_back(e.name + ": " + ex.what());
    } catch (const CapabilityError& ex) {
      out.skipped.push_back(e.name + ": " + ex.what());
    }
  }
  return out;
}

}  // namespace msdim
