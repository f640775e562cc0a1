#include "doodlekit/free_group.hpp"

#include <algorithm>
#include <charconv>

#include "doodlekit/error.hpp"
#include "doodlekit/kernels.hpp"

namespace doodlekit {

namespace {

void check_syllable(const Syllable& s, int rank) {
  if (s.generator < 1 || s.generator > rank || (s.exponent != 1 && s.exponent != -1)) {
    throw Error(ErrorKind::index_out_of_range, "free syllable x" + std::to_string(s.generator) + "^" +
                                                   std::to_string(s.exponent) + " invalid at rank " +
                                                   std::to_string(rank));
  }
}

bool cancels(const Syllable& a, const Syllable& b) {
  return a.generator == b.generator && a.exponent == -b.exponent;
}

}  // namespace

FreeWord::FreeWord(int rank, std::vector<Syllable> syllables) : rank_(rank), syllables_(std::move(syllables)) {
  if (rank_ < 1) throw Error(ErrorKind::invalid_strand_count, "free group rank must be at least 1");
  for (const auto& s : syllables_) check_syllable(s, rank_);
}

FreeWord FreeWord::generator(int rank, int index) { return FreeWord(rank, {{index, 1}}); }

bool FreeWord::is_reduced() const noexcept {
  for (std::size_t k = 1; k < syllables_.size(); ++k) {
    if (cancels(syllables_[k - 1], syllables_[k])) return false;
  }
  return true;
}

FreeWord reduce_free(const FreeWord& w) {
  std::vector<Syllable> stack;
  stack.reserve(w.syllables().size());
  for (const auto& s : w.syllables()) {
    if (!stack.empty() && cancels(stack.back(), s)) {
      stack.pop_back();
    } else {
      stack.push_back(s);
    }
  }
  return FreeWord(w.rank(), std::move(stack));
}

FreeWord free_inverse(const FreeWord& w) {
  std::vector<Syllable> out;
  out.reserve(w.syllables().size());
  for (auto it = w.syllables().rbegin(); it != w.syllables().rend(); ++it) out.push_back({it->generator, -it->exponent});
  return FreeWord(w.rank(), std::move(out));
}

FreeWord free_concat(const FreeWord& u, const FreeWord& v) {
  if (u.rank() != v.rank()) throw Error(ErrorKind::rank_mismatch, "free words of different rank");
  auto out = u.syllables();
  out.insert(out.end(), v.syllables().begin(), v.syllables().end());
  return FreeWord(u.rank(), std::move(out));
}

std::string format_free_word(const FreeWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t k = 0; k < w.syllables().size(); ++k) {
    if (k) out += ' ';
    out += 'x' + std::to_string(w.syllables()[k].generator);
    if (w.syllables()[k].exponent < 0) out += "^-1";
  }
  return out;
}

FreeWord parse_free_word(std::string_view text, int rank) {
  std::vector<Syllable> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto start = text.find_first_not_of(" \t", pos);
    if (start == std::string_view::npos) break;
    auto end = text.find_first_of(" \t", start);
    if (end == std::string_view::npos) end = text.size();
    auto token = text.substr(start, end - start);
    pos = end;
    if (token == "1") continue;
    int exponent = 1;
    if (token.size() > 3 && token.substr(token.size() - 3) == "^-1") {
      exponent = -1;
      token.remove_suffix(3);
    }
    int index = 0;
    if (token.size() < 2 || token[0] != 'x' ||
        std::from_chars(token.data() + 1, token.data() + token.size(), index).ptr != token.data() + token.size()) {
      throw Error(ErrorKind::unknown_token, "unknown free token '" + std::string(token) + "'");
    }
    Syllable s{index, exponent};
    check_syllable(s, rank);
    out.push_back(s);
  }
  return FreeWord(rank, std::move(out));
}

FreeEndomorphism::FreeEndomorphism(int rank) {
  if (rank < 1) throw Error(ErrorKind::invalid_strand_count, "free group rank must be at least 1");
  for (int k = 1; k <= rank; ++k) images_.push_back(FreeWord::generator(rank, k));
}

FreeEndomorphism::FreeEndomorphism(int rank, std::vector<FreeWord> images) {
  if (static_cast<int>(images.size()) != rank) throw Error(ErrorKind::rank_mismatch, "wrong number of generator images");
  for (auto& w : images) {
    if (w.rank() != rank) throw Error(ErrorKind::rank_mismatch, "generator image of wrong rank");
    images_.push_back(reduce_free(w));
  }
}

FreeWord FreeEndomorphism::apply(const FreeWord& w) const {
  if (w.rank() != rank()) throw Error(ErrorKind::rank_mismatch, "free word rank differs from endomorphism rank");
  std::vector<Syllable> out;
  for (const auto& s : w.syllables()) {
    const auto& img = images_[static_cast<std::size_t>(s.generator - 1)].syllables();
    if (s.exponent > 0) {
      for (const auto& t : img) {
        if (!out.empty() && cancels(out.back(), t)) out.pop_back(); else out.push_back(t);
      }
    } else {
      for (auto it = img.rbegin(); it != img.rend(); ++it) {
        const Syllable t{it->generator, -it->exponent};
        if (!out.empty() && cancels(out.back(), t)) out.pop_back(); else out.push_back(t);
      }
    }
  }
  return FreeWord(rank(), std::move(out));
}

FreeEndomorphism compose(const FreeEndomorphism& f, const FreeEndomorphism& g) {
  if (f.rank() != g.rank()) {
    throw Error(ErrorKind::rank_mismatch, "cannot compose endomorphisms of rank " + std::to_string(f.rank()) +
                                              " and " + std::to_string(g.rank()));
  }
  std::vector<FreeWord> images;
  images.reserve(static_cast<std::size_t>(g.rank()));
  for (const auto& img : g.images()) images.push_back(f.apply(img));
  return FreeEndomorphism(f.rank(), std::move(images));
}

std::string format_endomorphism(const FreeEndomorphism& f) {
  std::string out;
  for (int k = 1; k <= f.rank(); ++k) out += "x" + std::to_string(k) + " -> " + format_free_word(f.image(k)) + "\n";
  return out;
}

FreeEndomorphism mu(TwinLetter letter, int rank) {
  if (letter.index < 1 || letter.index >= rank) {
    throw Error(ErrorKind::index_out_of_range, "letter " + format_letter(letter) + " outside rank " + std::to_string(rank));
  }
  FreeEndomorphism id(rank);
  auto images = id.images();
  const int i = letter.index;
  auto& xi = images[static_cast<std::size_t>(i - 1)];
  auto& xj = images[static_cast<std::size_t>(i)];
  if (letter.kind == LetterKind::real) {
    xi = FreeWord(rank, {{i, 1}, {i + 1, 1}});
    xj = FreeWord(rank, {{i + 1, -1}});
  } else {
    std::swap(xi, xj);
  }
  return FreeEndomorphism(rank, std::move(images));
}

FreeEndomorphism mu(const TwinWord& w) {
  FreeEndomorphism out(w.strands());
  for (const auto& l : w.letters()) out = compose(out, mu(l, w.strands()));
  return out;
}

std::size_t RelationReport::passed() const noexcept {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return c.holds; }));
}

RelationReport verify_relations(int strands, Backend backend) {
  if (strands < 2) throw Error(ErrorKind::invalid_strand_count, "verify_relations needs at least 2 strands");
  RelationReport report{strands, {}};
  auto relations = defining_relations(strands);
  const auto holds = check_relations_under_mu(relations, backend);
  for (std::size_t k = 0; k < relations.size(); ++k) report.checks.push_back({std::move(relations[k]), holds[k] != 0});
  return report;
}

std::optional<SeparationWitness> separates(const TwinWord& u, const TwinWord& v) {
  if (u.strands() != v.strands()) {
    throw Error(ErrorKind::rank_mismatch, "words live on " + std::to_string(u.strands()) + " and " +
                                              std::to_string(v.strands()) + " strands");
  }
  const auto fu = mu(u);
  const auto fv = mu(v);
  for (int k = 1; k <= fu.rank(); ++k) {
    if (fu.image(k) != fv.image(k)) return SeparationWitness{k, fu.image(k), fv.image(k)};
  }
  return std::nullopt;
}

}  // namespace doodlekit
