#include "doodlekit/twin_word.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "doodlekit/error.hpp"

namespace doodlekit {

namespace {

void check_strands(int strands) {
  if (strands < 1) {
    throw Error(ErrorKind::invalid_strand_count,
                "strand count must be at least 1, got " + std::to_string(strands));
  }
}

void check_index(int index, int strands) {
  if (index < 1 || index > strands - 1) {
    throw Error(ErrorKind::index_out_of_range,
                "letter index " + std::to_string(index) + " outside 1.." +
                    std::to_string(strands - 1));
  }
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

TwinWord::TwinWord(int strands, std::vector<TwinLetter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  check_strands(strands_);
  for (const auto& l : letters_) check_index(l.index, strands_);
}

std::size_t TwinWord::count_real() const noexcept {
  return static_cast<std::size_t>(std::count_if(letters_.begin(), letters_.end(), [](TwinLetter l) {
    return l.kind == LetterKind::real;
  }));
}

std::size_t TwinWordHash::operator()(const TwinWord& w) const noexcept {
  std::uint64_t h = 1469598103934665603ULL ^ static_cast<std::uint64_t>(w.strands());
  for (const auto& l : w.letters()) {
    const std::uint64_t code = (static_cast<std::uint64_t>(l.index) << 1) | static_cast<std::uint64_t>(l.kind);
    h ^= code;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

Permutation::Permutation(int n) : images_(static_cast<std::size_t>(std::max(n, 0))) {
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > size() || seen[static_cast<std::size_t>(v - 1)]) {
      throw Error(ErrorKind::parse_error, "permutation images are not a bijection");
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.size() != size()) throw Error(ErrorKind::rank_mismatch, "permutation sizes differ");
  Permutation out(size());
  for (int k = 1; k <= size(); ++k) out.images_[static_cast<std::size_t>(k - 1)] = next((*this)(k));
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out(size());
  for (int k = 1; k <= size(); ++k) out.images_[static_cast<std::size_t>((*this)(k) - 1)] = k;
  return out;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (int start = 1; start <= size(); ++start) {
    if (seen[static_cast<std::size_t>(start - 1)]) continue;
    std::vector<int> cycle;
    for (int k = start; !seen[static_cast<std::size_t>(k - 1)]; k = (*this)(k)) {
      seen[static_cast<std::size_t>(k - 1)] = true;
      cycle.push_back(k);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

int Permutation::cycle_count() const { return static_cast<int>(cycles().size()); }

std::string format_cycles(const Permutation& p) {
  std::string out;
  for (const auto& cycle : p.cycles()) {
    if (cycle.size() < 2) continue;
    out += '(';
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (k) out += ' ';
      out += std::to_string(cycle[k]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::string format_letter(TwinLetter l) {
  return (l.kind == LetterKind::real ? "s" : "r") + std::to_string(l.index);
}

std::string format_word(const TwinWord& w) {
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out += ' ';
    out += format_letter(w[k]);
  }
  return out;
}

TwinLetter parse_letter(std::string_view token, int strands) {
  if (token.size() < 2 || (token[0] != 's' && token[0] != 'r')) {
    throw Error(ErrorKind::unknown_token, "unknown token '" + std::string(token) + "'");
  }
  const auto digits = token.substr(1);
  if (!std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw Error(ErrorKind::unknown_token, "unknown token '" + std::string(token) + "'");
  }
  int index = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || index > 65535) {
    throw Error(ErrorKind::index_out_of_range, "letter index in '" + std::string(token) + "' is too large");
  }
  check_index(index, strands);
  return {token[0] == 's' ? LetterKind::real : LetterKind::virt, static_cast<std::uint16_t>(index)};
}

TwinWord parse_word(std::string_view text, int strands) {
  check_strands(strands);
  std::vector<TwinLetter> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto start = text.find_first_not_of(" \t\r\n", pos);
    if (start == std::string_view::npos) break;
    auto end = text.find_first_of(" \t\r\n", start);
    if (end == std::string_view::npos) end = text.size();
    letters.push_back(parse_letter(text.substr(start, end - start), strands));
    pos = end;
  }
  return TwinWord(strands, std::move(letters));
}

TwinWord parse_word_file(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const auto line = trim(text.substr(pos, end - pos));
    if (!line.empty() && line[0] != '#') lines.push_back(line);
    pos = end + 1;
  }
  if (lines.empty() || lines[0].substr(0, 2) != "n=") {
    throw Error(ErrorKind::parse_error, "word file must start with an 'n=<int>' header");
  }
  if (lines.size() > 2) throw Error(ErrorKind::parse_error, "word file has more than one token line");
  const auto count = lines[0].substr(2);
  int strands = 0;
  const auto [ptr, ec] = std::from_chars(count.data(), count.data() + count.size(), strands);
  if (ec != std::errc{} || ptr != count.data() + count.size()) {
    throw Error(ErrorKind::parse_error, "bad strand count header '" + std::string(lines[0]) + "'");
  }
  return parse_word(lines.size() == 2 ? lines[1] : std::string_view{}, strands);
}

std::string format_word_file(const TwinWord& w) {
  return "n=" + std::to_string(w.strands()) + "\n" + format_word(w) + "\n";
}

TwinWord free_reduce(const TwinWord& w) {
  std::vector<TwinLetter> stack;
  stack.reserve(w.size());
  for (const auto& l : w.letters()) {
    if (!stack.empty() && stack.back() == l) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return TwinWord(w.strands(), std::move(stack));
}

TwinWord inverse(const TwinWord& w) {
  std::vector<TwinLetter> letters(w.letters().rbegin(), w.letters().rend());
  return TwinWord(w.strands(), std::move(letters));
}

TwinWord concat(const TwinWord& u, const TwinWord& v) {
  if (u.strands() != v.strands()) {
    throw Error(ErrorKind::rank_mismatch, "cannot concatenate words on " + std::to_string(u.strands()) +
                                              " and " + std::to_string(v.strands()) + " strands");
  }
  auto letters = u.letters();
  letters.insert(letters.end(), v.letters().begin(), v.letters().end());
  return TwinWord(u.strands(), std::move(letters));
}

TwinWord shift_left(int m, const TwinWord& w) {
  if (m < 0) throw Error(ErrorKind::invalid_strand_count, "shift must be non-negative");
  auto letters = w.letters();
  for (auto& l : letters) l.index = static_cast<std::uint16_t>(l.index + m);
  return TwinWord(w.strands() + m, std::move(letters));
}

TwinWord mirror(const TwinWord& w) {
  auto letters = w.letters();
  for (auto& l : letters) l.index = static_cast<std::uint16_t>(w.strands() - l.index);
  return TwinWord(w.strands(), std::move(letters));
}

TwinWord with_strands(const TwinWord& w, int strands) { return TwinWord(strands, w.letters()); }

Permutation pi(const TwinWord& w) {
  // at[p] = strand (by top position) currently at position p
  std::vector<int> at(static_cast<std::size_t>(w.strands()));
  std::iota(at.begin(), at.end(), 1);
  for (const auto& l : w.letters()) std::swap(at[l.index - 1u], at[l.index]);
  std::vector<int> images(at.size());
  for (std::size_t p = 0; p < at.size(); ++p) images[static_cast<std::size_t>(at[p] - 1)] = static_cast<int>(p) + 1;
  return Permutation(std::move(images));
}

int closure_components(const TwinWord& w) { return pi(w).cycle_count(); }

}  // namespace doodlekit
