#pragma once

// Budgeted bidirectional search for a move trace between two twin words.
//
// The search is a semi-decision procedure: Equivalent carries a trace,
// Distinct cites an invariant mismatch, Unknown reports what was explored.

#include <cstddef>
#include <optional>
#include <string>
#include <variant>

#include "doodlekit/backend.hpp"
#include "doodlekit/moves.hpp"
#include "doodlekit/twin_word.hpp"

namespace doodlekit {

struct SearchBudget {
  std::size_t max_states = 100000;
  std::size_t max_len = 0;  // 0: derived from the inputs
  int max_n = 0;            // 0: derived from the inputs
  MoveSet moves = all_moves;
};

// Caps actually used for a pair of inputs once the zero defaults are filled in.
MoveCaps resolve_caps(const TwinWord& u, const TwinWord& v, const SearchBudget& budget);

struct Equivalent {
  MoveTrace trace;
  std::size_t states_explored = 0;
};

struct Distinct {
  std::string invariant;
  std::string left;
  std::string right;
};

struct Unknown {
  std::size_t states_explored = 0;
  std::size_t max_states = 0;
  std::size_t max_len = 0;
  int max_n = 0;
  int depth_left = 0;
  int depth_right = 0;
  bool exhausted = false;  // false: both frontiers emptied before the budget ran out
};

using Verdict = std::variant<Equivalent, Distinct, Unknown>;

// Bidirectional breadth-first search only; no invariant check.
std::optional<MoveTrace> find_trace(const TwinWord& u, const TwinWord& v, const SearchBudget& budget,
                                    Backend backend = Backend::serial, Unknown* report = nullptr);

Verdict equivalent_closures(const TwinWord& u, const TwinWord& v, const SearchBudget& budget = {},
                            Backend backend = Backend::serial);

// One summary line; Equivalent verdicts are followed by the certificate.
std::string format_verdict(const Verdict& v);

}  // namespace doodlekit
