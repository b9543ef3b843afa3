#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace msdim {

/// One corpus line: `name | builder | p1,p2 | tag1,tag2`.
struct CorpusEntry {
  std::string name;
  std::string builder;
  std::vector<unsigned> primes;
  std::vector<std::string> tags;
  std::size_t line = 0;

  bool has_tag(const std::string& t) const;
};

/// Blank lines and `#` comments are skipped. MalformedInput names the line.
std::vector<CorpusEntry> parse_corpus(std::istream& in, const std::string& origin = "<corpus>");
std::vector<CorpusEntry> parse_corpus_text(const std::string& text, const std::string& origin = "<corpus>");
std::vector<CorpusEntry> read_corpus(const std::string& path);

}  // namespace msdim
