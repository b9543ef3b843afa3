#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace msdim {

using Point = std::uint32_t;
using Order = std::uint64_t;

/// A bijection of {0, ..., degree-1}, stored as its image array.
///
/// Products compose left to right: (a * b)[i] == b[a[i]], so a permutation
/// acts on points from the right. Every other module in the library follows
/// the same convention (row vectors times matrices).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);
  /// Throws MalformedInput unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);

  /// Parses disjoint-cycle notation such as "(0 1)(2 3)" or "()" over
  /// 0-based points. Whitespace and commas inside cycles are ignored.
  static Permutation from_cycles(std::string_view text, std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point i) const { return images_[i]; }
  const std::vector<Point>& images() const { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  Permutation pow(std::int64_t e) const;

  bool is_identity() const;
  Order order() const;
  /// Least moved point, or degree() for the identity.
  Point first_moved() const;

  /// Disjoint-cycle string, "()" for the identity.
  std::string to_cycles() const;

  /// Same permutation on a larger domain, fixing the new points.
  Permutation extended(std::size_t degree) const;
  /// Shifts the support by `offset` inside a domain of size `degree`.
  Permutation shifted(std::size_t offset, std::size_t degree) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace msdim
