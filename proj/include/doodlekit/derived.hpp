#pragma once

// Derived moves: equivalences that follow from M0-M5, produced as
// replayable traces. The right-hand family works on the last strands, the
// left-hand family is its mirror image on the first strands.
//
// Words below live on n+1 strands; beta, beta2 live on n strands and
// t_j stands for s_j or r_j as chosen by `tau`.

#include <vector>

#include "doodlekit/backend.hpp"
#include "doodlekit/moves.hpp"
#include "doodlekit/twin_word.hpp"

namespace doodlekit {

enum class DerivedMove {
  // beta s_n ... s_{i+1} s_i s_{i+1} ... s_n ~ beta, 1 <= i <= n
  right_real_collapse,
  // s_n..s_i b1 s_i..s_n b2 ~ r_n..r_i b1 r_i..r_n b2, b1 in VT_i
  right_kind_swap,
  // t_n..t_i b1 t_i..t_n b2 ~ r_n..r_i b1 r_i..r_n b2, b1 in VT_i
  right_mixed_swap,
  // beta t_n..t_i t_{i-1} t_i..t_n ~ beta, 2 <= i <= n+1
  right_mixed_collapse,
  // (1 x beta) s_1 ... s_{i-1} s_i s_{i-1} ... s_1 ~ beta, 1 <= i <= n
  left_real_collapse,
  // s_1..s_i (i x b1) s_i..s_1 (1 x b2) ~ r_1..r_i (i x b1) r_i..r_1 (1 x b2), b1 in VT_{n+1-i}
  left_kind_swap,
  // the same with t_1..t_i on the left-hand side
  left_mixed_swap,
  // (1 x beta) t_1..t_{i-1} t_i t_{i-1}..t_1 ~ beta, 1 <= i <= n
  left_mixed_collapse,
  // (1 x beta) r_1 ~ beta
  left_virtual_stabilization,
};

struct DerivedParams {
  int n = 1;
  int i = 1;
  TwinWord beta;   // collapse moves and left_virtual_stabilization
  TwinWord beta1;  // swap moves
  TwinWord beta2;  // swap moves
  std::vector<LetterKind> tau;  // tau[j-1] is the kind of t_j, j = 1..n; mixed moves only
};

struct DerivedResult {
  TwinWord input;
  TwinWord output;
  MoveTrace trace;  // from input to output
};

// Throws PatternMismatch when params do not fit the move, SearchExhausted
// if a hop between waypoints cannot be resolved.
DerivedResult apply_derived(DerivedMove move, const DerivedParams& params, Backend backend = Backend::serial);

TwinWord derived_input(DerivedMove move, const DerivedParams& params);
TwinWord derived_output(DerivedMove move, const DerivedParams& params);

}  // namespace doodlekit
