#include "doodlekit/gauss.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <functional>
#include <sstream>

#include "doodlekit/error.hpp"

namespace doodlekit {

namespace {

// Partner lookup: partner[c-1][slot-1] is the other end of the arc at c.slot.
using PartnerTable = std::vector<std::array<CrossingEnd, 4>>;

PartnerTable partners(const GaussData& g) {
  PartnerTable t(static_cast<std::size_t>(g.crossings));
  for (const auto& a : g.arcs) {
    t[static_cast<std::size_t>(a.from.crossing - 1)][static_cast<std::size_t>(a.from.slot - 1)] = a.to;
    t[static_cast<std::size_t>(a.to.crossing - 1)][static_cast<std::size_t>(a.to.slot - 1)] = a.from;
  }
  return t;
}

// For each own slot: (partner slot, partner on the same crossing).
using Profile = std::array<std::pair<int, bool>, 4>;

Profile profile(const PartnerTable& t, int c) {
  Profile p{};
  for (std::size_t s = 0; s < 4; ++s) {
    const auto& other = t[static_cast<std::size_t>(c - 1)][s];
    p[s] = {other.slot, other.crossing == c};
  }
  return p;
}

int parse_int(std::string_view s, std::string_view what) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw Error(ErrorKind::parse_error, "bad " + std::string(what) + " '" + std::string(s) + "'");
  }
  return v;
}

CrossingEnd parse_end(std::string_view s) {
  const auto dot = s.find('.');
  if (dot == std::string_view::npos) throw Error(ErrorKind::parse_error, "crossing end '" + std::string(s) + "' lacks '.'");
  CrossingEnd e{parse_int(s.substr(0, dot), "crossing id"), parse_int(s.substr(dot + 1), "slot")};
  if (e.slot < 1 || e.slot > 4) throw Error(ErrorKind::slot_misuse, "slot " + std::to_string(e.slot) + " outside 1..4");
  return e;
}

}  // namespace

GaussData::GaussData(int crossings_, std::vector<GaussArc> arcs_, int free_loops_)
    : crossings(crossings_), arcs(std::move(arcs_)), free_loops(free_loops_) {
  std::sort(arcs.begin(), arcs.end());
}

std::string format_end(CrossingEnd e) { return std::to_string(e.crossing) + "." + std::to_string(e.slot); }

void validate(const GaussData& g) {
  if (g.crossings < 0) throw Error(ErrorKind::negative_count, "negative crossing count");
  if (g.free_loops < 0) throw Error(ErrorKind::negative_count, "negative free loop count");
  for (const auto& a : g.arcs) {
    if (!is_exit_slot(a.from.slot) || !is_entry_slot(a.to.slot)) {
      throw Error(ErrorKind::slot_misuse,
                  "arc " + format_end(a.from) + " -> " + format_end(a.to) + " must run from an exit slot to an entry slot");
    }
  }
  std::vector<int> seen(static_cast<std::size_t>(g.crossings) * 4, 0);
  for (const auto& a : g.arcs) {
    for (const auto& e : {a.from, a.to}) {
      if (e.crossing < 1 || e.crossing > g.crossings) {
        throw Error(ErrorKind::matching_violation, "end " + format_end(e) + " names a crossing outside 1.." +
                                                       std::to_string(g.crossings));
      }
      if (++seen[static_cast<std::size_t>((e.crossing - 1) * 4 + e.slot - 1)] > 1) {
        throw Error(ErrorKind::matching_violation, "end " + format_end(e) + " is used twice");
      }
    }
  }
  for (int c = 1; c <= g.crossings; ++c) {
    for (int s = 1; s <= 4; ++s) {
      if (!seen[static_cast<std::size_t>((c - 1) * 4 + s - 1)]) {
        throw Error(ErrorKind::matching_violation, "end " + format_end({c, s}) + " is not matched");
      }
    }
  }
}

std::optional<std::vector<int>> isomorphic(const GaussData& a, const GaussData& b) {
  if (a.crossings != b.crossings || a.free_loops != b.free_loops || a.arcs.size() != b.arcs.size()) return std::nullopt;
  const int n = a.crossings;
  const auto ta = partners(a);
  const auto tb = partners(b);
  std::vector<Profile> pa, pb;
  for (int c = 1; c <= n; ++c) {
    pa.push_back(profile(ta, c));
    pb.push_back(profile(tb, c));
  }
  std::vector<int> sigma(static_cast<std::size_t>(n), 0);
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);

  // Every arc of `a` between assigned crossings must map onto an arc of `b`.
  auto consistent = [&](int c, int d) {
    for (std::size_t s = 0; s < 4; ++s) {
      const auto& other = ta[static_cast<std::size_t>(c - 1)][s];
      const int image = other.crossing == c ? d : sigma[static_cast<std::size_t>(other.crossing - 1)];
      if (image == 0) continue;
      const auto& mapped = tb[static_cast<std::size_t>(d - 1)][s];
      if (mapped.crossing != image || mapped.slot != other.slot) return false;
    }
    return true;
  };

  std::function<bool(int)> assign = [&](int c) {
    if (c > n) return true;
    for (int d = 1; d <= n; ++d) {
      if (used[static_cast<std::size_t>(d)] || pa[static_cast<std::size_t>(c - 1)] != pb[static_cast<std::size_t>(d - 1)]) continue;
      if (!consistent(c, d)) continue;
      sigma[static_cast<std::size_t>(c - 1)] = d;
      used[static_cast<std::size_t>(d)] = true;
      if (assign(c + 1)) return true;
      sigma[static_cast<std::size_t>(c - 1)] = 0;
      used[static_cast<std::size_t>(d)] = false;
    }
    return false;
  };
  if (!assign(1)) return std::nullopt;
  return sigma;
}

GaussData relabel(const GaussData& g, const std::vector<int>& sigma) {
  std::vector<GaussArc> arcs;
  arcs.reserve(g.arcs.size());
  auto map = [&](CrossingEnd e) { return CrossingEnd{sigma.at(static_cast<std::size_t>(e.crossing - 1)), e.slot}; };
  for (const auto& a : g.arcs) arcs.push_back({map(a.from), map(a.to)});
  return GaussData(g.crossings, std::move(arcs), g.free_loops);
}

GaussData closure_gauss(const TwinWord& w) {
  const auto n = static_cast<std::size_t>(w.strands());
  // Pending source at each position: an exit end, or the top position the
  // segment started from (encoded as crossing 0, slot = top position).
  std::vector<CrossingEnd> pending(n);
  for (std::size_t p = 0; p < n; ++p) pending[p] = {0, static_cast<int>(p) + 1};
  std::vector<std::optional<CrossingEnd>> first_entry(n);
  std::vector<GaussArc> arcs;
  int crossing = 0;

  auto enter = [&](const CrossingEnd& source, CrossingEnd entry) {
    if (source.crossing == 0) {
      first_entry[static_cast<std::size_t>(source.slot - 1)] = entry;
    } else {
      arcs.push_back({source, entry});
    }
  };

  for (const auto& l : w.letters()) {
    const std::size_t left = l.index - 1u;
    if (l.kind == LetterKind::virt) {
      std::swap(pending[left], pending[left + 1]);
      continue;
    }
    ++crossing;
    enter(pending[left], {crossing, slot::upper_left});
    enter(pending[left + 1], {crossing, slot::upper_right});
    pending[left] = {crossing, slot::lower_left};
    pending[left + 1] = {crossing, slot::lower_right};
  }

  // Closure joins bottom position q to top position q. A top segment that
  // reaches the bottom without a crossing continues at the top of its bottom
  // position: next_top[p] = q.
  std::vector<int> next_top(n, 0);
  for (std::size_t q = 0; q < n; ++q) {
    if (pending[q].crossing == 0) next_top[static_cast<std::size_t>(pending[q].slot - 1)] = static_cast<int>(q) + 1;
  }
  for (std::size_t q = 0; q < n; ++q) {
    if (pending[q].crossing == 0) continue;
    std::size_t top = q;
    while (!first_entry[top]) top = static_cast<std::size_t>(next_top[top] - 1);
    arcs.push_back({pending[q], *first_entry[top]});
  }

  int free_loops = 0;
  std::vector<bool> seen(n, false);
  for (std::size_t p = 0; p < n; ++p) {
    if (seen[p] || first_entry[p]) continue;
    // Tops without crossings: those not reached from an exit form closed cycles.
    std::size_t k = p;
    bool closed = true;
    std::vector<std::size_t> path;
    while (!seen[k]) {
      seen[k] = true;
      path.push_back(k);
      if (first_entry[k]) { closed = false; break; }
      k = static_cast<std::size_t>(next_top[k] - 1);
    }
    if (closed && std::find(path.begin(), path.end(), k) != path.end()) ++free_loops;
  }
  return GaussData(crossing, std::move(arcs), free_loops);
}

std::string format_gauss(const GaussData& g) {
  std::string out = "crossings " + std::to_string(g.crossings) + "\nfreeloops " + std::to_string(g.free_loops) + "\n";
  for (const auto& a : g.arcs) out += "arc " + format_end(a.from) + " " + format_end(a.to) + "\n";
  return out;
}

std::string format_bijection(const std::vector<int>& sigma) {
  std::string out;
  for (std::size_t c = 0; c < sigma.size(); ++c) {
    if (c) out += ' ';
    out += std::to_string(c + 1) + "->" + std::to_string(sigma[c]);
  }
  return out;
}

GaussData parse_gauss(std::string_view text) {
  std::optional<int> crossings, loops;
  std::vector<GaussArc> arcs;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string key;
    if (!(fields >> key)) continue;
    std::vector<std::string> rest;
    for (std::string f; fields >> f;) rest.push_back(f);
    const auto where = " on line " + std::to_string(line_no);
    if (key == "crossings" && rest.size() == 1) {
      if (crossings) throw Error(ErrorKind::parse_error, "duplicate 'crossings'" + where);
      crossings = parse_int(rest[0], "crossing count");
    } else if (key == "freeloops" && rest.size() == 1) {
      if (loops) throw Error(ErrorKind::parse_error, "duplicate 'freeloops'" + where);
      loops = parse_int(rest[0], "free loop count");
    } else if (key == "arc" && rest.size() == 2) {
      arcs.push_back({parse_end(rest[0]), parse_end(rest[1])});
    } else {
      throw Error(ErrorKind::parse_error, "malformed line" + where + ": '" + line + "'");
    }
  }
  if (!crossings) throw Error(ErrorKind::parse_error, "missing 'crossings' line");
  GaussData g(*crossings, std::move(arcs), loops.value_or(0));
  validate(g);
  return g;
}

}  // namespace doodlekit
