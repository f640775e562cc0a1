#pragma once

// The Markov move system M0-M5 on twin words, move traces and the
// certificate text format.
//
// Every move result is free-reduced; a step is "apply the rewrite, then
// cancel adjacent equal letters" (the cancellations are themselves M0).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "doodlekit/relations.hpp"
#include "doodlekit/twin_word.hpp"

namespace doodlekit {

// M0: replace the subword `removed` at `position` by `inserted`, where
// removed * inserted^-1 is a cyclic rotation of a relator of `family` (or of
// its inverse).
struct RelationMove {
  RelationFamily family;
  std::size_t position = 0;
  std::vector<TwinLetter> removed;
  std::vector<TwinLetter> inserted;

  bool operator==(const RelationMove&) const = default;
};

// M0: cancel all adjacent equal pairs.
struct CancelMove {
  bool operator==(const CancelMove&) const = default;
};

// M1: w -> g w g.
struct ConjugateMove {
  TwinLetter letter;

  bool operator==(const ConjugateMove&) const = default;
};

// M1: cyclic shift by one letter.
struct ShiftMove {
  bool first_to_end = true;

  bool operator==(const ShiftMove&) const = default;
};

// M2: beta ~ beta s_n or beta r_n.
struct RightStabilization {
  bool stabilize = true;
  LetterKind kind = LetterKind::real;

  bool operator==(const RightStabilization&) const = default;
};

// M3: beta ~ (1 (x) beta) s_1.
struct LeftStabilization {
  bool stabilize = true;

  bool operator==(const LeftStabilization&) const = default;
};

// M4: beta1 s_n beta2 s_n ~ beta1 r_n beta2 r_n (positions of the two letters).
struct RightExchange {
  std::size_t first = 0;
  std::size_t second = 0;

  bool operator==(const RightExchange&) const = default;
};

// M5: s_1 (1 (x) beta1) s_1 (1 (x) beta2) ~ r_1 (1 (x) beta1) r_1 (1 (x) beta2).
struct LeftExchange {
  std::size_t first = 0;
  std::size_t second = 0;

  bool operator==(const LeftExchange&) const = default;
};

using Move = std::variant<RelationMove, CancelMove, ConjugateMove, ShiftMove, RightStabilization, LeftStabilization,
                          RightExchange, LeftExchange>;

// 0..5 for M0..M5.
int move_class(const Move& m);

// Bit k enables class Mk.
using MoveSet = std::uint8_t;
inline constexpr MoveSet all_moves = 0x3F;
inline constexpr MoveSet relation_moves_only = 0x01;

struct MoveCaps {
  std::size_t max_len = 16;
  int max_n = 6;
  MoveSet moves = all_moves;
};

// Result of applying m to w, or nullopt when m does not apply.
std::optional<TwinWord> apply_move(const TwinWord& w, const Move& m);

struct Neighbor {
  Move move;
  TwinWord result;
};

// All words one move away, free-reduced, deduplicated, sorted by result.
std::vector<Neighbor> neighbors(const TwinWord& w, const MoveCaps& caps);

struct MoveStep {
  Move move;
  // When set, `move` carries `result` back to the previous word.
  bool reversed = false;
  TwinWord result;
};

struct MoveTrace {
  TwinWord start;
  std::vector<MoveStep> steps;

  const TwinWord& end() const { return steps.empty() ? start : steps.back().result; }
};

MoveTrace reverse_trace(const MoveTrace& t);
// Appends `tail`, which must start where `head` ends.
void append_trace(MoveTrace& head, const MoveTrace& tail);

// Throws ReplayFailure naming the first step that does not replay.
void replay(const MoveTrace& t);

std::string format_move(const Move& m);
Move parse_move(std::string_view text);

std::string format_word_at(const TwinWord& w);  // "<tokens>@n=<k>"
TwinWord parse_word_at(std::string_view text);

std::string format_certificate(const MoveTrace& t);
MoveTrace parse_certificate(std::string_view text);

}  // namespace doodlekit
