#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "msdim/builders.hpp"
#include "msdim/corpus.hpp"
#include "msdim/errors.hpp"
#include "msdim/report.hpp"
#include "msdim/subgroups.hpp"

using namespace msdim;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("msdim-test-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir / name;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(MSDIM_CLI) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

RunOptions quick_options(const std::string& cache) {
  RunOptions opt;
  opt.workers = 1;
  opt.cache_dir = scratch(cache).string();
  opt.use_cache = false;
  return opt;
}

}  // namespace

TEST_CASE("builders") {
  const auto sl24 = build("sl2:4");
  CHECK(sl24.order() == 60);
  CHECK(sl24.degree() == 5);
  const auto f3 = build("fermat_example:3");
  CHECK(f3.order() == 72);
  CHECK(core_p(f3, 3).order() == 9);
  CHECK(sylow(f3, 2).order() == 8);
  const auto m3 = build("mersenne_example:3");
  CHECK(m3.order() == 5184);
  CHECK(m3.degree() == 12);
  CHECK(core_p(m3, 2).order() == 64);
  CHECK(build("sl2:8").order() == 504);
  CHECK(build("dihedral:4").order() == 4);
  CHECK(build("direct:sym:3,alt:5").order() == 360);
  CHECK(build("frobenius:11:5").order() == 55);
  CHECK_THROWS_AS(build("nonsense:3"), BuildError);
  CHECK_THROWS_AS(build("sl2:9"), BuildError);
  CHECK_THROWS_AS(build("sym:x"), BuildError);
  CHECK_THROWS_AS(build("file:/nonexistent/group.txt"), BuildError);
}

TEST_CASE("group text round trip") {
  for (const char* spec : {"sym:4", "sl2:8", "fermat_example:3", "direct:cyclic:3,dihedral:8"}) {
    CAPTURE(spec);
    const auto g = build(spec);
    const auto text = format_group_text(g);
    const auto h = parse_group_text(text);
    CHECK(h.order() == g.order());
    CHECK(h.generators() == g.generators());
    const auto path = scratch("group.txt");
    write_file(path, "# saved\n" + text);
    CHECK(build("file:" + path.string()).order() == g.order());
  }
}

TEST_CASE("corpus parsing") {
  const auto c = parse_corpus_text(
      "# header\n"
      "\n"
      "S3 | sym:3 | 2,3 | p-solvable, small  # trailing\n"
      "A5 | alt:5 | 5\n");
  REQUIRE(c.size() == 2);
  CHECK(c[0].name == "S3");
  CHECK(c[0].builder == "sym:3");
  CHECK(c[0].primes == std::vector<unsigned>{2, 3});
  CHECK(c[0].tags == std::vector<std::string>{"p-solvable", "small"});
  CHECK(c[0].has_tag("small"));
  CHECK(c[1].tags.empty());
  CHECK(c[1].line == 4);
  CHECK(parse_corpus_text("").empty());
  CHECK_THROWS_AS(parse_corpus_text("S3 | sym:3"), MalformedInput);
  CHECK_THROWS_AS(parse_corpus_text("S3 | sym:3 | 4"), MalformedInput);
  CHECK_THROWS_AS(parse_corpus_text("S3 | sym:3 | two"), MalformedInput);
  CHECK_THROWS_AS(parse_corpus_text("S3 | sym:3 | 2\nS3 | sym:4 | 2"), MalformedInput);
  try {
    parse_corpus_text("a | b | 2\n\nbad line\n", "x.corpus");
  } catch (const MalformedInput& e) {
    CHECK(std::string(e.what()).find("x.corpus:3") != std::string::npos);
  }
  const auto bundled = read_corpus(MSDIM_SOURCE_DIR "/corpus/paper.corpus");
  CHECK(bundled.size() >= 15);
}

TEST_CASE("empty corpus gives an empty report") {
  const auto results = run_pairs({}, quick_options("cache-empty"));
  CHECK(results.empty());
  CHECK(combined_exit_status(results) == 0);
  CHECK(report_file(results, 7).at("entries").empty());
  CHECK(report_file(results, 7).at("schema_version") == kSchemaVersion);
}

TEST_CASE("sym:4 at p = 3 reports m_s and Steinberg data") {
  const auto results = run_pairs(parse_corpus_text("S4 | sym:4 | 3"), quick_options("cache-s4"));
  REQUIRE(results.size() == 1);
  const auto& r = results[0].report;
  CHECK(r.at("m_s") == 3);
  CHECK(r.at("simple_dims") == nlohmann::json({1, 1, 3, 3}));
  CHECK(r.at("steinberg_nonzero") == true);
  CHECK(r.at("steinberg").size() == 5);
  CHECK(r.at("flags").at("p_class") == "mersenne");
  CHECK(results[0].exit_status() == 0);
}

TEST_CASE("builder errors are recorded per entry") {
  const auto results = run_pairs(parse_corpus_text("bad | sl2:9 | 2\nok | sym:3 | 2"), quick_options("cache-bad"));
  REQUIRE(results.size() == 2);
  CHECK(results[0].report.is_null());
  CHECK(results[0].error.find("sl2") != std::string::npos);
  CHECK(results[0].exit_status() == 2);
  CHECK(results[1].exit_status() == 0);
  CHECK(combined_exit_status(results) == 2);
}

TEST_CASE("reports are deterministic across worker counts and the cache") {
  const auto corpus = parse_corpus_text(
      "S3 | sym:3 | 2,3\n"
      "A5 | alt:5 | 2,5\n"
      "D10 | dihedral:10 | 2,5\n"
      "F21 | frobenius:7:3 | 3\n");
  auto opt = quick_options("cache-det");
  fs::remove_all(opt.cache_dir);
  const auto a = report_file(run_pairs(corpus, opt), 1).dump(2);
  opt.workers = 4;
  const auto b = report_file(run_pairs(corpus, opt), 1).dump(2);
  CHECK(a == b);
  opt.use_cache = true;
  const auto first = run_pairs(corpus, opt);
  const auto second = run_pairs(corpus, opt);
  CHECK_FALSE(first[0].cached);
  for (const auto& r : second)
    CHECK(r.cached);
  CHECK(report_file(second, 1).dump(2) == a);

  auto other_seed = opt;
  other_seed.analysis.search.meataxe.seed = 12345;
  CHECK_FALSE(run_pairs(corpus, other_seed)[0].cached);
  fs::remove_all(opt.cache_dir);
}

TEST_CASE("fnv1a") {
  CHECK(fnv1a("") == 0xcbf29ce484222325ull);
  CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cull);
}

TEST_CASE("search-steinberg-zero") {
  CHECK(search_steinberg_zero(parse_corpus_text("S3 | sym:3 | 2"), 2).hits.empty());
  const auto restricted = search_steinberg_zero(parse_corpus_text("S4 | sym:4 | 2\nD8 | dihedral:8 | 2\nC2 | cyclic:2 | 2"), 2);
  CHECK(restricted.hits.empty());
  CHECK(restricted.excluded.size() == 3);
  const auto bundled = search_steinberg_zero(read_corpus(MSDIM_SOURCE_DIR "/corpus/paper.corpus"), 2);
  CHECK(bundled.hits.empty());
  CHECK(bundled.skipped.empty());
}

TEST_CASE("command line exit codes") {
  CHECK(run_cli("analyze sym:3 -p 2") == 0);
  CHECK(run_cli("analyze fermat_example:3 -p 2 --complex bouc --csv") == 0);
  CHECK(run_cli("analyze sl2:9 -p 2") == 3);
  CHECK(run_cli("analyze sym:3") != 0);
  const auto empty = scratch("empty.corpus");
  write_file(empty, "# nothing\n");
  CHECK(run_cli("corpus run " + empty.string() + " --no-cache") == 0);
  const auto s3 = scratch("s3.corpus");
  write_file(s3, "S3 | sym:3 | 2\n");
  const auto out = scratch("hits.json");
  CHECK(run_cli("search-steinberg-zero " + s3.string() + " -p 2 --json " + out.string()) == 0);
  const auto hits = nlohmann::json::parse(slurp(out));
  CHECK(hits.at("hits").empty());
  CHECK(run_cli("regular-orbits --n 4 --q 2 -p 5") == 0);
  const auto report = scratch("a5.json");
  CHECK(run_cli("analyze alt:5 -p 2 --json " + report.string()) == 0);
  const auto j = nlohmann::json::parse(slurp(report));
  CHECK(j.at("m_s") == 4);
  CHECK(j.at("bound_ii") == 4);
}
