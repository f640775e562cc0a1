#pragma once

// Words in the virtual twin group VT_n.
//
// A word carries its strand count explicitly. Letters are s_i (real) and
// r_i (virtual), 1 <= i <= strands - 1. Every letter is an involution.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace doodlekit {

enum class LetterKind : std::uint8_t { real = 0, virt = 1 };

struct TwinLetter {
  LetterKind kind = LetterKind::real;
  std::uint16_t index = 1;

  auto operator<=>(const TwinLetter&) const = default;
};

constexpr TwinLetter real_letter(int i) { return {LetterKind::real, static_cast<std::uint16_t>(i)}; }
constexpr TwinLetter virtual_letter(int i) { return {LetterKind::virt, static_cast<std::uint16_t>(i)}; }
constexpr TwinLetter flipped(TwinLetter l) {
  return {l.kind == LetterKind::real ? LetterKind::virt : LetterKind::real, l.index};
}

class TwinWord {
 public:
  TwinWord() = default;
  // Throws InvalidStrandCount / IndexOutOfRange.
  explicit TwinWord(int strands, std::vector<TwinLetter> letters = {});

  int strands() const noexcept { return strands_; }
  const std::vector<TwinLetter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  TwinLetter operator[](std::size_t k) const { return letters_[k]; }

  std::size_t count_real() const noexcept;

  auto operator<=>(const TwinWord&) const = default;

 private:
  int strands_ = 1;
  std::vector<TwinLetter> letters_;
};

struct TwinWordHash {
  std::size_t operator()(const TwinWord& w) const noexcept;
};

// Bijection {1..n} -> {1..n}. Composition is left to right: p.then(q) maps
// k to q(p(k)).
class Permutation {
 public:
  explicit Permutation(int n = 0);
  explicit Permutation(std::vector<int> images);  // 1-based images; must be a bijection

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int k) const { return images_[static_cast<std::size_t>(k - 1)]; }
  const std::vector<int>& images() const noexcept { return images_; }

  Permutation then(const Permutation& next) const;
  Permutation inverse() const;
  std::vector<std::vector<int>> cycles() const;  // includes fixed points
  int cycle_count() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

// Cycle notation with fixed points omitted; identity prints as "()".
std::string format_cycles(const Permutation& p);

std::string format_letter(TwinLetter l);
std::string format_word(const TwinWord& w);

TwinLetter parse_letter(std::string_view token, int strands);
TwinWord parse_word(std::string_view text, int strands);

// "n=<k>" header line followed by the token line.
TwinWord parse_word_file(std::string_view text);
std::string format_word_file(const TwinWord& w);

TwinWord free_reduce(const TwinWord& w);
TwinWord inverse(const TwinWord& w);
TwinWord concat(const TwinWord& u, const TwinWord& v);
TwinWord shift_left(int m, const TwinWord& w);
// Reflects the diagram left to right: index i becomes strands - i.
TwinWord mirror(const TwinWord& w);
// Same letters on a different strand count; throws if an index does not fit.
TwinWord with_strands(const TwinWord& w, int strands);

Permutation pi(const TwinWord& w);
int closure_components(const TwinWord& w);

}  // namespace doodlekit
