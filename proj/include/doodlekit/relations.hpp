#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "doodlekit/twin_word.hpp"

namespace doodlekit {

// The seven families of defining relations of VT_n.
enum class RelationFamily {
  real_square,     // s_i s_i = 1
  real_far,        // s_i s_j = s_j s_i, |i-j| >= 2
  virtual_square,  // r_i r_i = 1
  virtual_far,     // r_i r_j = r_j r_i, |i-j| >= 2
  virtual_braid,   // r_i r_{i+1} r_i = r_{i+1} r_i r_{i+1}
  mixed_far,       // r_i s_j = s_j r_i, |i-j| >= 2
  mixed_braid,     // r_i r_{i+1} s_i = s_{i+1} r_i r_{i+1}
};

inline constexpr RelationFamily all_relation_families[] = {
    RelationFamily::real_square,   RelationFamily::real_far,  RelationFamily::virtual_square,
    RelationFamily::virtual_far,   RelationFamily::virtual_braid, RelationFamily::mixed_far,
    RelationFamily::mixed_braid,
};

std::string_view family_name(RelationFamily f);
std::optional<RelationFamily> parse_family(std::string_view name);

struct Relation {
  RelationFamily family;
  TwinWord lhs;
  TwinWord rhs;
};

// Every instance at the given strand count. Same-kind commutations are listed
// once per unordered pair; mixed commutations once per ordered pair (i, j).
std::vector<Relation> defining_relations(int strands);
std::vector<Relation> defining_relations(int strands, RelationFamily family);

// lhs * rhs^-1 as a cyclic word.
std::vector<TwinLetter> relator(const Relation& r);

}  // namespace doodlekit
