#include "doodlekit/braid.hpp"

#include <algorithm>
#include <map>

#include "doodlekit/error.hpp"

namespace doodlekit {

namespace {

// An in-transit strand is identified by the exit end its arc starts from;
// free loops use crossing 0 and a running number.
using StrandId = CrossingEnd;

}  // namespace

TwinWord braid(const GaussData& g) {
  try {
    validate(g);
  } catch (const Error& e) {
    throw Error(ErrorKind::invalid_gauss_data, std::string("cannot braid invalid Gauss data: ") + e.what());
  }
  if (g.crossings == 0 && g.free_loops == 0) {
    throw Error(ErrorKind::empty_diagram, "the empty diagram is not the closure of any twin");
  }

  std::map<CrossingEnd, CrossingEnd> source_of;  // entry end -> exit end
  std::vector<StrandId> cut_order;
  for (int k = 1; k <= g.free_loops; ++k) cut_order.push_back({0, k});
  for (const auto& a : g.arcs) {
    source_of[a.to] = a.from;
    if (a.to.crossing <= a.from.crossing) cut_order.push_back(a.from);
  }
  std::sort(cut_order.begin() + g.free_loops, cut_order.end());

  std::vector<StrandId> radial = cut_order;
  std::vector<TwinLetter> letters;
  auto position_of = [&](const StrandId& id) {
    return static_cast<std::size_t>(std::find(radial.begin(), radial.end(), id) - radial.begin());
  };
  auto swap_at = [&](std::size_t p) {  // swaps positions p and p+1 (0-based)
    std::swap(radial[p], radial[p + 1]);
    letters.push_back(virtual_letter(static_cast<int>(p) + 1));
  };

  for (int c = 1; c <= g.crossings; ++c) {
    const auto left_arc = source_of.at({c, slot::upper_left});
    const auto right_arc = source_of.at({c, slot::upper_right});
    std::size_t left = position_of(left_arc);
    std::size_t right = position_of(right_arc);
    // Bring the arc entering slot 2 immediately to the right of the arc entering slot 1.
    while (right > left + 1) {
      swap_at(right - 1);
      --right;
    }
    while (right < left) {
      swap_at(right);
      ++right;
    }
    left = position_of(left_arc);
    right = position_of(right_arc);
    letters.push_back(real_letter(static_cast<int>(left) + 1));
    radial[left] = {c, slot::lower_left};
    radial[right] = {c, slot::lower_right};
  }

  // Restore the cut order so the closure joins every bottom position to its own top.
  std::map<StrandId, std::size_t> rank;
  for (std::size_t k = 0; k < cut_order.size(); ++k) rank[cut_order[k]] = k;
  for (bool sorted = false; !sorted;) {
    sorted = true;
    for (std::size_t p = 0; p + 1 < radial.size(); ++p) {
      if (rank.at(radial[p]) > rank.at(radial[p + 1])) {
        swap_at(p);
        sorted = false;
      }
    }
  }
  return TwinWord(static_cast<int>(radial.size()), std::move(letters));
}

}  // namespace doodlekit
