#include "doodlekit/relations.hpp"

#include <algorithm>
#include <cstdlib>

namespace doodlekit {

std::string_view family_name(RelationFamily f) {
  switch (f) {
    case RelationFamily::real_square: return "s-square";
    case RelationFamily::real_far: return "s-far";
    case RelationFamily::virtual_square: return "r-square";
    case RelationFamily::virtual_far: return "r-far";
    case RelationFamily::virtual_braid: return "r-braid";
    case RelationFamily::mixed_far: return "rs-far";
    case RelationFamily::mixed_braid: return "rs-braid";
  }
  return "?";
}

std::optional<RelationFamily> parse_family(std::string_view name) {
  for (auto f : all_relation_families) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

std::vector<Relation> defining_relations(int strands, RelationFamily family) {
  const int top = strands - 1;
  std::vector<Relation> out;
  auto add = [&](std::vector<TwinLetter> lhs, std::vector<TwinLetter> rhs) {
    out.push_back({family, TwinWord(strands, std::move(lhs)), TwinWord(strands, std::move(rhs))});
  };
  switch (family) {
    case RelationFamily::real_square:
      for (int i = 1; i <= top; ++i) add({real_letter(i), real_letter(i)}, {});
      break;
    case RelationFamily::virtual_square:
      for (int i = 1; i <= top; ++i) add({virtual_letter(i), virtual_letter(i)}, {});
      break;
    case RelationFamily::real_far:
      for (int i = 1; i <= top; ++i)
        for (int j = i + 2; j <= top; ++j)
          add({real_letter(i), real_letter(j)}, {real_letter(j), real_letter(i)});
      break;
    case RelationFamily::virtual_far:
      for (int i = 1; i <= top; ++i)
        for (int j = i + 2; j <= top; ++j)
          add({virtual_letter(i), virtual_letter(j)}, {virtual_letter(j), virtual_letter(i)});
      break;
    case RelationFamily::virtual_braid:
      for (int i = 1; i + 1 <= top; ++i)
        add({virtual_letter(i), virtual_letter(i + 1), virtual_letter(i)},
            {virtual_letter(i + 1), virtual_letter(i), virtual_letter(i + 1)});
      break;
    case RelationFamily::mixed_far:
      for (int i = 1; i <= top; ++i)
        for (int j = 1; j <= top; ++j)
          if (std::abs(i - j) >= 2) add({virtual_letter(i), real_letter(j)}, {real_letter(j), virtual_letter(i)});
      break;
    case RelationFamily::mixed_braid:
      for (int i = 1; i + 1 <= top; ++i)
        add({virtual_letter(i), virtual_letter(i + 1), real_letter(i)},
            {real_letter(i + 1), virtual_letter(i), virtual_letter(i + 1)});
      break;
  }
  return out;
}

std::vector<Relation> defining_relations(int strands) {
  std::vector<Relation> out;
  for (auto f : all_relation_families) {
    auto part = defining_relations(strands, f);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

std::vector<TwinLetter> relator(const Relation& r) {
  auto out = r.lhs.letters();
  out.insert(out.end(), r.rhs.letters().rbegin(), r.rhs.letters().rend());
  return out;
}

}  // namespace doodlekit
