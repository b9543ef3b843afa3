#include "msdim/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "msdim/errors.hpp"
#include "msdim/subgroups.hpp"

namespace msdim {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos)
    return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep))
    out.push_back(trim(item));
  if (!s.empty() && s.back() == sep)
    out.push_back("");
  return out;
}

}  // namespace

bool CorpusEntry::has_tag(const std::string& t) const { return std::find(tags.begin(), tags.end(), t) != tags.end(); }

std::vector<CorpusEntry> parse_corpus(std::istream& in, const std::string& origin) {
  std::vector<CorpusEntry> out;
  std::set<std::string> names;
  std::string raw;
  for (std::size_t lineno = 1; std::getline(in, raw); ++lineno) {
    const std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty())
      continue;
    auto where = [&] { return origin + ":" + std::to_string(lineno) + ": "; };
    const auto fields = split(line, '|');
    if (fields.size() < 3 || fields.size() > 4)
      throw MalformedInput(where() + "expected `name | builder | primes | tags`");
    CorpusEntry e;
    e.name = fields[0];
    e.builder = fields[1];
    e.line = lineno;
    if (e.name.empty() || e.builder.empty())
      throw MalformedInput(where() + "empty name or builder");
    if (!names.insert(e.name).second)
      throw MalformedInput(where() + "duplicate entry name " + e.name);
    for (const auto& tok : split(fields[2], ',')) {
      unsigned p = 0;
      try {
        std::size_t used = 0;
        const unsigned long v = std::stoul(tok, &used);
        if (used != tok.size() || v > 1u << 20)
          throw std::invalid_argument(tok);
        p = static_cast<unsigned>(v);
      } catch (const std::exception&) {
        throw MalformedInput(where() + "bad prime `" + tok + "`");
      }
      if (!is_prime(p))
        throw MalformedInput(where() + std::to_string(p) + " is not prime");
      e.primes.push_back(p);
    }
    if (fields.size() == 4)
      for (const auto& t : split(fields[3], ','))
        if (!t.empty())
          e.tags.push_back(t);
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<CorpusEntry> parse_corpus_text(const std::string& text, const std::string& origin) {
  std::istringstream in(text);
  return parse_corpus(in, origin);
}

std::vector<CorpusEntry> read_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw MalformedInput("cannot open corpus file " + path);
  return parse_corpus(in, path);
}

}  // namespace msdim
