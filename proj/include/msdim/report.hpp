#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "msdim/analysis.hpp"
#include "msdim/corpus.hpp"

namespace msdim {

inline constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const AnalysisReport& r);

/// Version, compiler and schema; part of every report and cache key.
nlohmann::json toolchain_fingerprint();

struct RunOptions {
  AnalysisOptions analysis;
  std::size_t workers = 1;
  bool use_cache = true;
  std::string cache_dir = ".msdim-cache";
  /// Skip entries carrying this tag (e.g. "slow"); empty keeps everything.
  std::vector<std::string> skip_tags;
};

/// Worker count from MSDIM_WORKERS, else the hardware concurrency.
std::size_t default_workers();

/// Outcome of one (entry, prime) pair. `report` holds the serialized
/// AnalysisReport, or null when the builder or a capability check failed.
struct PairResult {
  std::string name;
  std::string builder;
  unsigned p = 0;
  std::vector<std::string> tags;
  nlohmann::json report;
  std::string error;
  bool cached = false;

  /// Same contract as AnalysisReport::exit_status; errors count as unverified.
  int exit_status() const;
};

std::vector<PairResult> run_pairs(const std::vector<CorpusEntry>& corpus, const RunOptions& opt);

/// schema_version, toolchain, seed and one element per pair in corpus order.
nlohmann::json report_file(const std::vector<PairResult>& results, std::uint64_t seed);
int combined_exit_status(const std::vector<PairResult>& results);

struct SteinbergHit {
  std::string name;
  std::string builder;
  Order order = 0;
};

struct SteinbergSearch {
  std::vector<SteinbergHit> hits;
  std::vector<std::string> excluded;  ///< O_p(G) != 1
  std::vector<std::string> skipped;   ///< builder or capability errors
};

/// Corpus members with O_p(G) = 1 whose Steinberg character vanishes.
SteinbergSearch search_steinberg_zero(const std::vector<CorpusEntry>& corpus, unsigned p,
                                      Order lattice_bound = kDefaultLatticeBound);

std::uint64_t fnv1a(const std::string& s);

}  // namespace msdim
