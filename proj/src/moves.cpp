#include "doodlekit/moves.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <unordered_set>

#include "doodlekit/error.hpp"

namespace doodlekit {

namespace {

using Letters = std::vector<TwinLetter>;

struct RotatedRelator {
  RelationFamily family;
  Letters letters;  // a rotation of a relator or of its inverse
};

// Rotations grouped by first letter: by_letter[2*(index-1)+kind].
struct RelatorTable {
  std::vector<std::vector<RotatedRelator>> by_letter;
  std::vector<std::pair<RelationFamily, Letters>> relators;
};

std::size_t letter_slot(TwinLetter l) { return 2u * (l.index - 1u) + static_cast<std::size_t>(l.kind); }

std::shared_ptr<const RelatorTable> relator_table(int strands) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const RelatorTable>> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(strands); it != cache.end()) return it->second;

  auto table = std::make_shared<RelatorTable>();
  table->by_letter.resize(2u * static_cast<std::size_t>(std::max(strands - 1, 0)));
  std::set<std::pair<int, Letters>> seen;
  for (const auto& rel : defining_relations(strands)) {
    const auto r = relator(rel);
    table->relators.push_back({rel.family, r});
    for (const Letters& base : {r, Letters(r.rbegin(), r.rend())}) {
      for (std::size_t k = 0; k < base.size(); ++k) {
        Letters rot(base.begin() + static_cast<std::ptrdiff_t>(k), base.end());
        rot.insert(rot.end(), base.begin(), base.begin() + static_cast<std::ptrdiff_t>(k));
        if (!seen.insert({static_cast<int>(rel.family), rot}).second) continue;
        table->by_letter[letter_slot(rot.front())].push_back({rel.family, std::move(rot)});
      }
    }
  }
  cache.emplace(strands, table);
  return table;
}

bool is_relator_rotation(const Letters& cyclic, RelationFamily family, int strands) {
  if (cyclic.empty()) return false;
  const auto table = relator_table(strands);
  for (const auto& [fam, r] : table->relators) {
    if (fam != family || r.size() != cyclic.size()) continue;
    for (const Letters& base : {r, Letters(r.rbegin(), r.rend())}) {
      for (std::size_t k = 0; k < base.size(); ++k) {
        if (std::equal(cyclic.begin(), cyclic.end() - static_cast<std::ptrdiff_t>(k), base.begin() + static_cast<std::ptrdiff_t>(k)) &&
            std::equal(cyclic.end() - static_cast<std::ptrdiff_t>(k), cyclic.end(), base.begin())) {
          return true;
        }
      }
    }
  }
  return false;
}

TwinWord reduced(int strands, Letters letters) {
  Letters stack;
  stack.reserve(letters.size());
  for (const auto& l : letters) {
    if (!stack.empty() && stack.back() == l) stack.pop_back(); else stack.push_back(l);
  }
  return TwinWord(strands, std::move(stack));
}

std::size_t count_index(const Letters& w, int index) {
  return static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [&](TwinLetter l) { return l.index == index; }));
}

std::optional<TwinWord> apply_relation(const TwinWord& w, const RelationMove& m) {
  const auto& letters = w.letters();
  if (m.removed.empty() && m.inserted.empty()) return std::nullopt;
  if (m.position > letters.size() || m.removed.size() > letters.size() - m.position) return std::nullopt;
  if (!std::equal(m.removed.begin(), m.removed.end(), letters.begin() + static_cast<std::ptrdiff_t>(m.position))) return std::nullopt;
  for (const auto& l : m.inserted) {
    if (l.index < 1 || l.index >= w.strands()) return std::nullopt;
  }
  Letters cyclic = m.removed;
  cyclic.insert(cyclic.end(), m.inserted.rbegin(), m.inserted.rend());
  if (!is_relator_rotation(cyclic, m.family, w.strands())) return std::nullopt;
  Letters out(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(m.position));
  out.insert(out.end(), m.inserted.begin(), m.inserted.end());
  out.insert(out.end(), letters.begin() + static_cast<std::ptrdiff_t>(m.position + m.removed.size()), letters.end());
  return reduced(w.strands(), std::move(out));
}

std::optional<TwinWord> apply_exchange(const TwinWord& w, std::size_t first, std::size_t second, bool right) {
  const auto& letters = w.letters();
  if (w.strands() < 2 || first >= second || second >= letters.size()) return std::nullopt;
  const int index = right ? w.strands() - 1 : 1;
  if (right && second != letters.size() - 1) return std::nullopt;
  if (!right && first != 0) return std::nullopt;
  if (letters[first].index != index || letters[second] != letters[first]) return std::nullopt;
  if (count_index(letters, index) != 2) return std::nullopt;
  Letters out = letters;
  out[first] = flipped(out[first]);
  out[second] = flipped(out[second]);
  return reduced(w.strands(), std::move(out));
}

struct Applier {
  const TwinWord& w;

  std::optional<TwinWord> operator()(const RelationMove& m) const { return apply_relation(w, m); }

  std::optional<TwinWord> operator()(const CancelMove&) const { return reduced(w.strands(), w.letters()); }

  std::optional<TwinWord> operator()(const ConjugateMove& m) const {
    if (m.letter.index < 1 || m.letter.index >= w.strands()) return std::nullopt;
    Letters out;
    out.reserve(w.size() + 2);
    out.push_back(m.letter);
    out.insert(out.end(), w.letters().begin(), w.letters().end());
    out.push_back(m.letter);
    return reduced(w.strands(), std::move(out));
  }

  std::optional<TwinWord> operator()(const ShiftMove& m) const {
    if (w.empty()) return std::nullopt;
    Letters out = w.letters();
    if (m.first_to_end) {
      std::rotate(out.begin(), out.begin() + 1, out.end());
    } else {
      std::rotate(out.rbegin(), out.rbegin() + 1, out.rend());
    }
    return reduced(w.strands(), std::move(out));
  }

  std::optional<TwinWord> operator()(const RightStabilization& m) const {
    const int n = w.strands();
    if (m.stabilize) {
      Letters out = w.letters();
      out.push_back({m.kind, static_cast<std::uint16_t>(n)});
      return reduced(n + 1, std::move(out));
    }
    if (n < 2 || w.empty()) return std::nullopt;
    const auto last = w.letters().back();
    if (last.index != n - 1 || last.kind != m.kind || count_index(w.letters(), n - 1) != 1) return std::nullopt;
    Letters out(w.letters().begin(), w.letters().end() - 1);
    return reduced(n - 1, std::move(out));
  }

  std::optional<TwinWord> operator()(const LeftStabilization& m) const {
    const int n = w.strands();
    if (m.stabilize) {
      Letters out = w.letters();
      for (auto& l : out) ++l.index;
      out.push_back(real_letter(1));
      return reduced(n + 1, std::move(out));
    }
    if (n < 2 || w.empty() || w.letters().back() != real_letter(1) || count_index(w.letters(), 1) != 1) {
      return std::nullopt;
    }
    Letters out(w.letters().begin(), w.letters().end() - 1);
    for (auto& l : out) --l.index;
    return reduced(n - 1, std::move(out));
  }

  std::optional<TwinWord> operator()(const RightExchange& m) const { return apply_exchange(w, m.first, m.second, true); }
  std::optional<TwinWord> operator()(const LeftExchange& m) const { return apply_exchange(w, m.first, m.second, false); }
};

std::string format_letters(const Letters& ls) {
  if (ls.empty()) return "-";
  std::string out;
  for (std::size_t k = 0; k < ls.size(); ++k) {
    if (k) out += ',';
    out += format_letter(ls[k]);
  }
  return out;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string f; in >> f;) out.push_back(f);
  return out;
}

std::size_t parse_position(std::string_view s) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || v == 0) {
    throw Error(ErrorKind::parse_error, "bad position '" + std::string(s) + "'");
  }
  return v - 1;
}

Letters parse_letters(std::string_view s) {
  Letters out;
  if (s == "-") return out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    auto end = s.find(',', pos);
    if (end == std::string_view::npos) end = s.size();
    // Bounds are checked when the move is applied.
    out.push_back(parse_letter(s.substr(pos, end - pos), 65536));
    pos = end + 1;
  }
  return out;
}

std::pair<std::size_t, std::size_t> parse_pair(std::string_view s) {
  if (s.substr(0, 3) != "at=") throw Error(ErrorKind::parse_error, "expected 'at=<p>,<q>' in '" + std::string(s) + "'");
  s.remove_prefix(3);
  const auto comma = s.find(',');
  if (comma == std::string_view::npos) throw Error(ErrorKind::parse_error, "expected two positions");
  return {parse_position(s.substr(0, comma)), parse_position(s.substr(comma + 1))};
}

}  // namespace

int move_class(const Move& m) {
  switch (m.index()) {
    case 0:
    case 1: return 0;
    case 2:
    case 3: return 1;
    case 4: return 2;
    case 5: return 3;
    case 6: return 4;
    default: return 5;
  }
}

std::optional<TwinWord> apply_move(const TwinWord& w, const Move& m) { return std::visit(Applier{w}, m); }

std::vector<Neighbor> neighbors(const TwinWord& w, const MoveCaps& caps) {
  std::vector<Neighbor> found;
  const auto& letters = w.letters();
  const int n = w.strands();
  auto offer = [&](Move m) {
    auto r = apply_move(w, m);
    if (!r || *r == w || r->size() > caps.max_len || r->strands() > caps.max_n) return;
    found.push_back({std::move(m), std::move(*r)});
  };
  auto enabled = [&](int k) { return (caps.moves >> k) & 1u; };

  if (enabled(0) && n >= 2) {
    const auto table = relator_table(n);
    for (std::size_t p = 0; p < letters.size(); ++p) {
      for (const auto& rot : table->by_letter[letter_slot(letters[p])]) {
        const auto& r = rot.letters;
        std::size_t match = 0;
        while (match < r.size() && p + match < letters.size() && letters[p + match] == r[match]) ++match;
        for (std::size_t k = 1; k <= match; ++k) {
          RelationMove m{rot.family, p, Letters(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(k)),
                         Letters(r.rbegin(), r.rend() - static_cast<std::ptrdiff_t>(k))};
          offer(std::move(m));
        }
      }
    }
  }
  if (enabled(1) && !letters.empty()) {
    offer(ShiftMove{true});
    offer(ShiftMove{false});
    for (int i = 1; i < n; ++i) {
      offer(ConjugateMove{real_letter(i)});
      offer(ConjugateMove{virtual_letter(i)});
    }
  }
  if (enabled(2)) {
    for (auto kind : {LetterKind::real, LetterKind::virt}) {
      offer(RightStabilization{true, kind});
      offer(RightStabilization{false, kind});
    }
  }
  if (enabled(3)) {
    offer(LeftStabilization{true});
    offer(LeftStabilization{false});
  }
  if (n >= 2 && letters.size() >= 2) {
    if (enabled(4) && letters.back().index == n - 1) {
      for (std::size_t p = 0; p + 1 < letters.size(); ++p) {
        if (letters[p].index == n - 1) offer(RightExchange{p, letters.size() - 1});
      }
    }
    if (enabled(5) && letters.front().index == 1) {
      for (std::size_t p = 1; p < letters.size(); ++p) {
        if (letters[p].index == 1) offer(LeftExchange{0, p});
      }
    }
  }

  // For each result keep the shortest rewrite, earliest found on ties.
  auto cost = [&](std::size_t k) {
    const auto* r = std::get_if<RelationMove>(&found[k].move);
    return r ? r->removed.size() + r->inserted.size() : 0;
  };
  std::vector<std::size_t> order(found.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (found[a].result != found[b].result) return found[a].result < found[b].result;
    return cost(a) < cost(b);
  });
  std::vector<Neighbor> out;
  out.reserve(found.size());
  for (std::size_t k : order) {
    if (!out.empty() && out.back().result == found[k].result) continue;
    out.push_back(std::move(found[k]));
  }
  return out;
}

MoveTrace reverse_trace(const MoveTrace& t) {
  MoveTrace out{t.end(), {}};
  for (std::size_t k = t.steps.size(); k-- > 0;) {
    const TwinWord& previous = k == 0 ? t.start : t.steps[k - 1].result;
    out.steps.push_back({t.steps[k].move, !t.steps[k].reversed, previous});
  }
  return out;
}

void append_trace(MoveTrace& head, const MoveTrace& tail) {
  if (head.end() != tail.start) throw Error(ErrorKind::replay_failure, "traces do not chain");
  head.steps.insert(head.steps.end(), tail.steps.begin(), tail.steps.end());
}

void replay(const MoveTrace& t) {
  const TwinWord* previous = &t.start;
  for (std::size_t k = 0; k < t.steps.size(); ++k) {
    const auto& step = t.steps[k];
    const auto& from = step.reversed ? step.result : *previous;
    const auto& to = step.reversed ? *previous : step.result;
    const auto got = apply_move(from, step.move);
    if (!got || *got != to) {
      throw Error(ErrorKind::replay_failure, "step " + std::to_string(k + 1) + " (" + format_move(step.move) +
                                                 (got ? ") yields " + format_word_at(*got) : ") does not apply") +
                                                 ", expected " + format_word_at(to));
    }
    previous = &step.result;
  }
}

std::string format_move(const Move& m) {
  struct Formatter {
    std::string operator()(const RelationMove& r) const {
      return "M0 " + std::string(family_name(r.family)) + " at=" + std::to_string(r.position + 1) + " " +
             format_letters(r.removed) + " => " + format_letters(r.inserted);
    }
    std::string operator()(const CancelMove&) const { return "M0 cancel"; }
    std::string operator()(const ConjugateMove& c) const { return "M1 conj " + format_letter(c.letter); }
    std::string operator()(const ShiftMove& s) const {
      return s.first_to_end ? "M1 shift first-to-end" : "M1 shift last-to-front";
    }
    std::string operator()(const RightStabilization& s) const {
      return std::string("M2 ") + (s.stabilize ? "stab " : "destab ") + (s.kind == LetterKind::real ? "real" : "virtual");
    }
    std::string operator()(const LeftStabilization& s) const { return s.stabilize ? "M3 stab" : "M3 destab"; }
    std::string operator()(const RightExchange& e) const {
      return "M4 at=" + std::to_string(e.first + 1) + "," + std::to_string(e.second + 1);
    }
    std::string operator()(const LeftExchange& e) const {
      return "M5 at=" + std::to_string(e.first + 1) + "," + std::to_string(e.second + 1);
    }
  };
  return std::visit(Formatter{}, m);
}

Move parse_move(std::string_view text) {
  const auto f = split_ws(text);
  auto fail = [&]() -> Move { throw Error(ErrorKind::parse_error, "unrecognised move '" + std::string(trim(text)) + "'"); };
  if (f.empty()) return fail();
  const auto& tag = f[0];
  if (tag == "M0") {
    if (f.size() == 2 && f[1] == "cancel") return CancelMove{};
    if (f.size() != 6 || f[2].substr(0, 3) != "at=" || f[4] != "=>") return fail();
    const auto family = parse_family(f[1]);
    if (!family) return fail();
    return RelationMove{*family, parse_position(std::string_view(f[2]).substr(3)), parse_letters(f[3]), parse_letters(f[5])};
  }
  if (tag == "M1") {
    if (f.size() == 3 && f[1] == "conj") return ConjugateMove{parse_letter(f[2], 65536)};
    if (f.size() == 3 && f[1] == "shift" && f[2] == "first-to-end") return ShiftMove{true};
    if (f.size() == 3 && f[1] == "shift" && f[2] == "last-to-front") return ShiftMove{false};
    return fail();
  }
  if (tag == "M2" && f.size() == 3 && (f[1] == "stab" || f[1] == "destab") && (f[2] == "real" || f[2] == "virtual")) {
    return RightStabilization{f[1] == "stab", f[2] == "real" ? LetterKind::real : LetterKind::virt};
  }
  if (tag == "M3" && f.size() == 2 && (f[1] == "stab" || f[1] == "destab")) return LeftStabilization{f[1] == "stab"};
  if ((tag == "M4" || tag == "M5") && f.size() == 2) {
    const auto [p, q] = parse_pair(f[1]);
    if (tag == "M4") return RightExchange{p, q};
    return LeftExchange{p, q};
  }
  return fail();
}

std::string format_word_at(const TwinWord& w) { return format_word(w) + "@n=" + std::to_string(w.strands()); }

TwinWord parse_word_at(std::string_view text) {
  text = trim(text);
  const auto at = text.rfind("@n=");
  if (at == std::string_view::npos) throw Error(ErrorKind::parse_error, "expected '<word>@n=<k>' in '" + std::string(text) + "'");
  const auto count = text.substr(at + 3);
  int strands = 0;
  const auto [ptr, ec] = std::from_chars(count.data(), count.data() + count.size(), strands);
  if (count.empty() || ec != std::errc{} || ptr != count.data() + count.size()) {
    throw Error(ErrorKind::parse_error, "bad strand count in '" + std::string(text) + "'");
  }
  return parse_word(text.substr(0, at), strands);
}

std::string format_certificate(const MoveTrace& t) {
  std::string out = "# doodlekit certificate\n";
  out += "from " + format_word_at(t.start) + "\n";
  out += "to " + format_word_at(t.end()) + "\n";
  for (const auto& s : t.steps) {
    out += std::string("step ") + (s.reversed ? "rev " : "") + format_move(s.move) + " -> " + format_word_at(s.result) + "\n";
  }
  return out;
}

MoveTrace parse_certificate(std::string_view text) {
  std::optional<TwinWord> from, to;
  MoveTrace t;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = trim(line);
    if (body.empty() || body[0] == '#') continue;
    const auto where = " on line " + std::to_string(line_no);
    if (body.substr(0, 5) == "from ") {
      if (from || !t.steps.empty()) throw Error(ErrorKind::parse_error, "unexpected 'from'" + where);
      from = parse_word_at(body.substr(5));
      t.start = *from;
    } else if (body.substr(0, 3) == "to ") {
      if (to) throw Error(ErrorKind::parse_error, "duplicate 'to'" + where);
      to = parse_word_at(body.substr(3));
    } else if (body.substr(0, 5) == "step ") {
      if (!from) throw Error(ErrorKind::parse_error, "'step' before 'from'" + where);
      auto rest = body.substr(5);
      const auto arrow = rest.find(" -> ");
      if (arrow == std::string_view::npos) throw Error(ErrorKind::parse_error, "step lacks ' -> '" + where);
      auto move_text = trim(rest.substr(0, arrow));
      bool reversed = false;
      if (move_text.substr(0, 4) == "rev ") {
        reversed = true;
        move_text.remove_prefix(4);
      }
      t.steps.push_back({parse_move(move_text), reversed, parse_word_at(rest.substr(arrow + 4))});
    } else {
      throw Error(ErrorKind::parse_error, "malformed line" + where);
    }
  }
  if (!from || !to) throw Error(ErrorKind::parse_error, "certificate needs 'from' and 'to' lines");
  if (t.end() != *to) throw Error(ErrorKind::replay_failure, "trace ends at " + format_word_at(t.end()) + ", not at " + format_word_at(*to));
  return t;
}

}  // namespace doodlekit
