#include "msdim/perm.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "msdim/errors.hpp"

namespace msdim {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x])
      throw MalformedInput("image array is not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::from_cycles(std::string_view text, std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(')
      throw MalformedInput("expected '(' in cycle notation: " + std::string(text));
    ++i;
    std::vector<Point> cycle;
    for (;;) {
      skip_ws();
      if (i >= text.size())
        throw MalformedInput("unterminated cycle: " + std::string(text));
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw MalformedInput("bad character in cycle notation: " + std::string(text));
      std::uint64_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (v >= degree)
          throw MalformedInput("point " + std::to_string(v) + " outside degree " + std::to_string(degree));
        ++i;
      }
      if (used[v])
        throw MalformedInput("point " + std::to_string(v) + " repeated in cycle notation");
      used[v] = true;
      cycle.push_back(static_cast<Point>(v));
    }
    for (std::size_t j = 0; j < cycle.size(); ++j)
      images[cycle[j]] = cycle[(j + 1) % cycle.size()];
    skip_ws();
  }
  return Permutation(std::move(images));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    out.images_[i] = rhs.images_[images_[i]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    out.images_[images_[i]] = static_cast<Point>(i);
  return out;
}

Permutation Permutation::pow(std::int64_t e) const {
  Permutation base = e < 0 ? inverse() : *this;
  std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
  Permutation acc(degree());
  while (n) {
    if (n & 1)
      acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

Order Permutation::order() const {
  std::vector<bool> seen(images_.size(), false);
  Order acc = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i])
      continue;
    Order len = 0;
    for (Point j = static_cast<Point>(i); !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    acc = std::lcm(acc, len);
  }
  return acc;
}

Point Permutation::first_moved() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return static_cast<Point>(i);
  return static_cast<Point>(images_.size());
}

std::string Permutation::to_cycles() const {
  std::ostringstream os;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i)
      continue;
    any = true;
    os << '(';
    Point j = static_cast<Point>(i);
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first)
        os << ' ';
      os << j;
      first = false;
      j = images_[j];
    }
    os << ')';
  }
  if (!any)
    os << "()";
  return os.str();
}

Permutation Permutation::extended(std::size_t degree) const {
  return shifted(0, degree);
}

Permutation Permutation::shifted(std::size_t offset, std::size_t degree) const {
  if (offset + images_.size() > degree)
    throw DomainError("shifted permutation does not fit the target degree");
  Permutation out(degree);
  for (std::size_t i = 0; i < images_.size(); ++i)
    out.images_[offset + i] = static_cast<Point>(offset + images_[i]);
  return out;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 14695981039346656037ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace msdim
