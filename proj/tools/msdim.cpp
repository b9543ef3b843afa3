#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "msdim/builders.hpp"
#include "msdim/errors.hpp"
#include "msdim/glnq.hpp"
#include "msdim/report.hpp"

using namespace msdim;
using nlohmann::json;

namespace {

constexpr int kInputError = 3;

void write_json(const json& j, const std::string& path) {
  if (path == "-") {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out)
    throw MalformedInput("cannot write " + path);
  out << j.dump(2) << '\n';
}

std::string show(const json& v) { return v.is_null() ? "-" : v.dump(); }

void print_summary(const json& r, std::ostream& os) {
  os << r.at("name").get<std::string>() << "  |G| = " << r.at("order") << "  p = " << r.at("p")
     << "  |G|_p = " << r.at("p_part") << "  (" << r.at("flags").at("p_class").get<std::string>() << ")\n";
  os << "  m_s = " << show(r.at("m_s")) << "  dims = " << r.at("simple_dims").dump() << '\n';
  os << "  O_p trivial = " << r.at("flags").at("o_p_trivial") << "  Phi trivial = " << show(r.at("flags").at("frattini_trivial"))
     << "  |X| = " << show(r.at("x_order")) << "  bound_i = " << show(r.at("bound_i"))
     << "  bound_ii = " << show(r.at("bound_ii")) << '\n';
  os << "  reduced Euler = " << r.at("reduced_euler").dump() << "  St nonzero = " << show(r.at("steinberg_nonzero"))
     << "  defect zero = " << show(r.at("defect_zero")) << '\n';
  for (const auto& v : r.at("verdicts"))
    os << "  [" << v.at("status").get<std::string>() << "] " << v.at("claim").get<std::string>() << ": "
       << v.at("detail").get<std::string>() << '\n';
  for (const auto& n : r.at("notes"))
    os << "  note: " << n.get<std::string>() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lower bounds for simple module dimensions of finite groups"};
  app.set_version_flag("--version", std::string(MSDIM_VERSION));
  app.require_subcommand(1);

  AnalysisOptions aopt;
  std::uint64_t seed = aopt.search.meataxe.seed;
  std::string complex_name = "poset";

  auto* analyze = app.add_subcommand("analyze", "Analyse one group at one prime");
  std::string spec;
  unsigned p = 0;
  std::string json_out;
  bool csv = false;
  bool no_sections = false;
  analyze->add_option("spec", spec, "Builder spec, e.g. alt:5 or fermat_example:3")->required();
  analyze->add_option("-p,--prime", p, "Prime")->required();
  analyze->add_option("--complex", complex_name, "Complex for the Steinberg character")
      ->check(CLI::IsMember({"poset", "elab", "elementary_abelian", "bouc"}));
  analyze->add_option("--json", json_out, "Write the JSON report (- for stdout)");
  analyze->add_flag("--csv", csv, "Print the chain census CSV of the chosen complex");
  analyze->add_option("--seed", seed, "Seed for the module chopping generator");
  analyze->add_flag("--no-sections", no_sections, "Skip the O_p reduction and Clifford checks");

  auto* corpus = app.add_subcommand("corpus", "Corpus operations");
  corpus->require_subcommand(1);
  auto* run = corpus->add_subcommand("run", "Analyse every entry of a corpus file");
  std::string corpus_file;
  bool no_cache = false;
  std::string cache_dir = ".msdim-cache";
  std::size_t workers = default_workers();
  std::vector<std::string> skip_tags;
  run->add_option("file", corpus_file, "Corpus file")->required()->check(CLI::ExistingFile);
  run->add_option("--json", json_out, "Write the report file (- for stdout)");
  run->add_flag("--no-cache", no_cache, "Recompute every pair");
  run->add_option("--cache-dir", cache_dir, "Cache directory");
  run->add_option("--workers", workers, "Worker threads (default: MSDIM_WORKERS or all cores)")->check(CLI::PositiveNumber);
  run->add_option("--skip-tag", skip_tags, "Skip entries with this tag");
  run->add_option("--seed", seed, "Seed for the module chopping generator");

  auto* search = app.add_subcommand("search-steinberg-zero", "Groups with O_p(G) = 1 and vanishing Steinberg character");
  search->add_option("file", corpus_file, "Corpus file")->required()->check(CLI::ExistingFile);
  search->add_option("-p,--prime", p, "Prime")->required();
  search->add_option("--json", json_out, "Write hits as JSON (- for stdout)");

  auto* orbits = app.add_subcommand("regular-orbits", "Regular orbits of a Sylow p-subgroup of GL(n, q)");
  std::size_t n = 0;
  unsigned q = 0;
  orbits->add_option("--n", n, "Dimension")->required()->check(CLI::PositiveNumber);
  orbits->add_option("--q", q, "Field size (prime)")->required();
  orbits->add_option("-p,--p", p, "Prime")->required();

  auto* group = app.add_subcommand("group", "Print a built group in the group text format");
  group->add_option("spec", spec, "Builder spec")->required();

  CLI11_PARSE(app, argc, argv);

  aopt.search.meataxe.seed = seed;
  aopt.complex = parse_kind(complex_name);
  aopt.sections = !no_sections;

  try {
    if (*analyze) {
      const PermGroup g = build(spec);
      const auto report = verify_theorem1(g, p, spec, aopt);
      const json j = to_json(report);
      if (!json_out.empty())
        write_json(j, json_out);
      if (json_out != "-")
        print_summary(j, std::cout);
      if (csv)
        std::cout << chain_census_csv(aopt.complex, chain_orbits(g, p, aopt.complex, std::nullopt, aopt.lattice_bound));
      return report.exit_status();
    }
    if (*run) {
      RunOptions ropt;
      ropt.analysis = aopt;
      ropt.workers = workers;
      ropt.use_cache = !no_cache;
      ropt.cache_dir = cache_dir;
      ropt.skip_tags = skip_tags;
      const auto results = run_pairs(read_corpus(corpus_file), ropt);
      if (!json_out.empty())
        write_json(report_file(results, seed), json_out);
      if (json_out != "-") {
        for (const auto& r : results) {
          static const char* label[] = {"pass", "FAIL", "unverified"};
          std::cout << label[r.exit_status()] << "  " << r.name << "  p=" << r.p;
          if (!r.report.is_null())
            std::cout << "  m_s=" << show(r.report.at("m_s"));
          else
            std::cout << "  error: " << r.error;
          std::cout << (r.cached ? "  (cached)" : "") << '\n';
          if (!r.report.is_null())
            for (const auto& v : r.report.at("verdicts"))
              if (v.at("status") == "fail")
                std::cout << "    fail " << v.at("claim").get<std::string>() << ": " << v.at("detail").get<std::string>() << '\n';
        }
      }
      return combined_exit_status(results);
    }
    if (*search) {
      const auto s = search_steinberg_zero(read_corpus(corpus_file), p, aopt.lattice_bound);
      json hits = json::array();
      for (const auto& h : s.hits)
        hits.push_back({{"name", h.name}, {"builder", h.builder}, {"order", h.order}});
      const json j = {{"p", p}, {"hits", hits}, {"excluded", s.excluded}, {"skipped", s.skipped}};
      if (!json_out.empty())
        write_json(j, json_out);
      if (json_out != "-") {
        std::cout << s.hits.size() << " hit(s), " << s.excluded.size() << " excluded by O_p(G) != 1, " << s.skipped.size()
                  << " skipped\n";
        for (const auto& h : s.hits)
          std::cout << "  " << h.name << "  " << h.builder << "  |G| = " << h.order << '\n';
        for (const auto& k : s.skipped)
          std::cout << "  skipped " << k << '\n';
      }
      return s.skipped.empty() ? 0 : 2;
    }
    if (*orbits) {
      const auto gens = sylow_glnq(n, q, p);
      const auto order = matrix_group_order(gens, n);
      const auto count = count_regular_orbits(gens, n);
      std::cout << "GL(" << n << ", " << q << "), p = " << p << ": |R| = " << order << ", regular orbits = " << count << '\n';
      return 0;
    }
    if (*group) {
      std::cout << format_group_text(build(spec));
      return 0;
    }
  } catch (const CapabilityError& e) {
    std::cerr << "capability limit: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return 0;
}
