#pragma once

// Free groups, substitution endomorphisms and the representation
// mu_n : VT_n -> Aut(F_n).

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "doodlekit/backend.hpp"
#include "doodlekit/relations.hpp"
#include "doodlekit/twin_word.hpp"

namespace doodlekit {

struct Syllable {
  int generator = 1;  // 1..rank
  int exponent = 1;   // +1 or -1

  bool operator==(const Syllable&) const = default;
};

class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(int rank, std::vector<Syllable> syllables = {});

  static FreeWord generator(int rank, int index);

  int rank() const noexcept { return rank_; }
  const std::vector<Syllable>& syllables() const noexcept { return syllables_; }
  bool empty() const noexcept { return syllables_.empty(); }
  bool is_reduced() const noexcept;

  bool operator==(const FreeWord&) const = default;

 private:
  int rank_ = 1;
  std::vector<Syllable> syllables_;
};

FreeWord reduce_free(const FreeWord& w);
FreeWord free_inverse(const FreeWord& w);
FreeWord free_concat(const FreeWord& u, const FreeWord& v);

// "x1 x2^-1"; the empty word is "1".
std::string format_free_word(const FreeWord& w);
FreeWord parse_free_word(std::string_view text, int rank);

class FreeEndomorphism {
 public:
  explicit FreeEndomorphism(int rank = 1);  // identity
  FreeEndomorphism(int rank, std::vector<FreeWord> images);

  int rank() const noexcept { return static_cast<int>(images_.size()); }
  const FreeWord& image(int generator) const { return images_.at(static_cast<std::size_t>(generator - 1)); }
  const std::vector<FreeWord>& images() const noexcept { return images_; }

  // Substitutes syllable-wise and reduces.
  FreeWord apply(const FreeWord& w) const;

  bool operator==(const FreeEndomorphism&) const = default;

 private:
  std::vector<FreeWord> images_;
};

// (f o g): x_k -> f(g(x_k)); g acts first.
FreeEndomorphism compose(const FreeEndomorphism& f, const FreeEndomorphism& g);

// One line per generator: "x<i> -> <word>".
std::string format_endomorphism(const FreeEndomorphism& f);

FreeEndomorphism mu(TwinLetter letter, int rank);
// mu(uv) = mu(u) o mu(v): the rightmost letter substitutes first.
FreeEndomorphism mu(const TwinWord& w);

struct RelationCheck {
  Relation relation;
  bool holds = false;
};

struct RelationReport {
  int strands = 0;
  std::vector<RelationCheck> checks;

  std::size_t total() const noexcept { return checks.size(); }
  std::size_t passed() const noexcept;
  bool all_hold() const noexcept { return passed() == total(); }
};

RelationReport verify_relations(int strands, Backend backend = Backend::serial);

struct SeparationWitness {
  int generator = 1;
  FreeWord left;
  FreeWord right;
};

// A witness proves u != v in VT_n. No witness proves nothing.
std::optional<SeparationWitness> separates(const TwinWord& u, const TwinWord& v);

}  // namespace doodlekit
