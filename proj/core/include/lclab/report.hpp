#pragma once

#include <cstddef>
#include <optional>
#include <string>

namespace lclab {

/// Position (n, m) in a triangle: row n, column m.
struct Coord {
  std::size_t n = 0;
  std::size_t m = 0;
  friend bool operator==(const Coord&, const Coord&) = default;
  friend auto operator<=>(const Coord&, const Coord&) = default;
};

/// Outcome of an identity or oracle check. A failing report names the first
/// disagreeing coordinate when there is one.
struct CheckReport {
  std::string name;
  bool pass = true;
  std::size_t comparisons = 0;
  std::optional<Coord> first_mismatch;
  std::string detail;

  void fail(Coord at, std::string why) {
    if (pass) {
      pass = false;
      first_mismatch = at;
      detail = std::move(why);
    }
  }
};

}  // namespace lclab
