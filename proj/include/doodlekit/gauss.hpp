#pragma once

// Gauss data of virtual doodle diagrams.
//
// Slot convention at a real crossing drawn with both strands oriented
// downward: 1 = upper-left entry, 2 = upper-right entry, 3 = lower-left exit,
// 4 = lower-right exit. The strand entering at 1 leaves at 4, the one
// entering at 2 leaves at 3.

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "doodlekit/twin_word.hpp"

namespace doodlekit {

namespace slot {
inline constexpr int upper_left = 1;
inline constexpr int upper_right = 2;
inline constexpr int lower_left = 3;
inline constexpr int lower_right = 4;
}  // namespace slot

constexpr bool is_entry_slot(int s) { return s == slot::upper_left || s == slot::upper_right; }
constexpr bool is_exit_slot(int s) { return s == slot::lower_left || s == slot::lower_right; }
// Exit slot reached by a strand entering at `entry`.
constexpr int continuation(int entry) { return entry == slot::upper_left ? slot::lower_right : slot::lower_left; }

struct CrossingEnd {
  int crossing = 1;
  int slot = 1;

  auto operator<=>(const CrossingEnd&) const = default;
};

struct GaussArc {
  CrossingEnd from;  // exit end
  CrossingEnd to;    // entry end

  auto operator<=>(const GaussArc&) const = default;
};

struct GaussData {
  int crossings = 0;
  std::vector<GaussArc> arcs;  // kept sorted
  int free_loops = 0;

  GaussData() = default;
  GaussData(int crossings, std::vector<GaussArc> arcs, int free_loops);

  bool operator==(const GaussData&) const = default;
};

// Throws SlotMisuse, MatchingViolation or NegativeCount.
void validate(const GaussData& g);

// Crossing bijection sigma (sigma[c-1] is the image of crossing c) carrying
// the arcs of `a` onto those of `b`; the lexicographically least one.
std::optional<std::vector<int>> isomorphic(const GaussData& a, const GaussData& b);

GaussData relabel(const GaussData& g, const std::vector<int>& sigma);

// Gauss data of the closure of w. Real letters become crossings 1, 2, ...
// in reading order; virtual letters only permute positions.
GaussData closure_gauss(const TwinWord& w);

std::string format_end(CrossingEnd e);
std::string format_gauss(const GaussData& g);
std::string format_bijection(const std::vector<int>& sigma);
// Parses the line format and validates the result.
GaussData parse_gauss(std::string_view text);

}  // namespace doodlekit
