#include "doodlekit/search.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

#include "doodlekit/kernels.hpp"

namespace doodlekit {

namespace {

struct Node {
  TwinWord word;
  std::size_t parent = 0;
  std::optional<Move> move;  // carries parent's word to this one
  int depth = 0;
};

class Side {
 public:
  Side(const TwinWord& start, std::size_t budget) : budget_(budget) {
    nodes_.push_back({start, 0, std::nullopt, 0});
    index_.emplace(start, 0);
    frontier_.push_back(0);
  }

  bool can_grow() const { return !frontier_.empty() && !exhausted_; }
  bool exhausted() const { return exhausted_; }
  int depth() const { return depth_; }
  std::size_t size() const { return nodes_.size(); }
  const Node& node(std::size_t k) const { return nodes_[k]; }

  std::optional<std::size_t> find(const TwinWord& w) const {
    const auto it = index_.find(w);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  // Expands one full level. The frontier is kept sorted by word and children
  // are merged serially in that order, so parents do not depend on backend.
  void grow(const MoveCaps& caps, Backend backend) {
    std::vector<TwinWord> words;
    words.reserve(frontier_.size());
    for (auto k : frontier_) words.push_back(nodes_[k].word);
    const auto expanded = expand_frontier(words, caps, backend);
    std::vector<std::size_t> next;
    ++depth_;
    for (std::size_t f = 0; f < frontier_.size() && !exhausted_; ++f) {
      for (const auto& nb : expanded[f]) {
        if (index_.count(nb.result)) continue;
        if (nodes_.size() >= budget_) {
          exhausted_ = true;
          break;
        }
        index_.emplace(nb.result, nodes_.size());
        next.push_back(nodes_.size());
        nodes_.push_back({nb.result, frontier_[f], nb.move, depth_});
      }
    }
    std::sort(next.begin(), next.end(), [&](std::size_t a, std::size_t b) { return nodes_[a].word < nodes_[b].word; });
    frontier_ = std::move(next);
  }

  // Trace from the start word to node k.
  MoveTrace path_to(std::size_t k) const {
    std::vector<std::size_t> chain;
    for (std::size_t at = k; at != 0; at = nodes_[at].parent) chain.push_back(at);
    MoveTrace t{nodes_[0].word, {}};
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      t.steps.push_back({*nodes_[*it].move, false, nodes_[*it].word});
    }
    return t;
  }

 private:
  std::size_t budget_;
  std::vector<Node> nodes_;
  std::unordered_map<TwinWord, std::size_t, TwinWordHash> index_;
  std::vector<std::size_t> frontier_;
  int depth_ = 0;
  bool exhausted_ = false;
};

// Meeting word minimizing (total depth, word); symmetric in the two sides.
std::optional<std::pair<std::size_t, std::size_t>> best_meet(const Side& a, const Side& b) {
  const Side& small = a.size() <= b.size() ? a : b;
  const Side& large = a.size() <= b.size() ? b : a;
  std::optional<std::pair<std::size_t, std::size_t>> best;
  int best_depth = std::numeric_limits<int>::max();
  for (std::size_t k = 0; k < small.size(); ++k) {
    const auto other = large.find(small.node(k).word);
    if (!other) continue;
    const int d = small.node(k).depth + large.node(*other).depth;
    if (d < best_depth || (d == best_depth && small.node(k).word < small.node(best->first).word)) {
      best_depth = d;
      best = {k, *other};
    }
  }
  if (best && &small != &a) std::swap(best->first, best->second);
  return best;
}

MoveTrace with_cancel(const TwinWord& w) {
  MoveTrace t{w, {}};
  const auto r = free_reduce(w);
  if (r != w) t.steps.push_back({CancelMove{}, false, r});
  return t;
}

}  // namespace

MoveCaps resolve_caps(const TwinWord& u, const TwinWord& v, const SearchBudget& budget) {
  MoveCaps caps;
  caps.moves = budget.moves;
  caps.max_len = budget.max_len ? budget.max_len : std::max(u.size(), v.size()) + 2;
  caps.max_n = budget.max_n ? budget.max_n : std::max(u.strands(), v.strands()) + 1;
  return caps;
}

namespace {

struct Attempt {
  std::optional<MoveTrace> trace;
  std::size_t states = 0;
  int depth_a = 0;
  int depth_b = 0;
  bool exhausted = false;
};

Attempt search_once(const TwinWord& u, const TwinWord& v, const MoveCaps& caps, std::size_t max_states,
                    Backend backend) {
  const std::size_t half = std::max<std::size_t>(max_states / 2, 1);
  Side a(u, half);
  Side b(v, half);
  Attempt out;
  for (;;) {
    if (const auto meet = best_meet(a, b)) {
      out.trace = a.path_to(meet->first);
      append_trace(*out.trace, reverse_trace(b.path_to(meet->second)));
      break;
    }
    if (!a.can_grow() && !b.can_grow()) break;
    if (a.can_grow()) a.grow(caps, backend);
    if (b.can_grow()) b.grow(caps, backend);
  }
  out.states = a.size() + b.size();
  out.depth_a = a.depth();
  out.depth_b = b.depth();
  out.exhausted = a.exhausted() || b.exhausted();
  return out;
}

}  // namespace

std::optional<MoveTrace> find_trace(const TwinWord& u, const TwinWord& v, const SearchBudget& budget, Backend backend,
                                    Unknown* report) {
  auto caps = resolve_caps(u, v, budget);
  auto head = with_cancel(u);
  const auto tail = reverse_trace(with_cancel(v));
  std::size_t used = 0;
  Attempt last;
  // An automatic length cap widens whenever the capped space closes
  // without a meeting, until the state budget runs out.
  for (;;) {
    last = search_once(head.end(), tail.start, caps, budget.max_states - used, backend);
    used += last.states;
    if (last.trace || last.exhausted || budget.max_len != 0 || used + 2 > budget.max_states) break;
    caps.max_len += 2;
  }
  if (report) {
    *report = Unknown{used, budget.max_states, caps.max_len, caps.max_n, last.depth_a, last.depth_b, last.exhausted};
  }
  if (!last.trace) return std::nullopt;
  append_trace(head, *last.trace);
  append_trace(head, tail);
  return head;
}

Verdict equivalent_closures(const TwinWord& u, const TwinWord& v, const SearchBudget& budget, Backend backend) {
  const int cu = closure_components(u);
  const int cv = closure_components(v);
  if (cu != cv) return Distinct{"closure_components", std::to_string(cu), std::to_string(cv)};
  Unknown report;
  auto trace = find_trace(u, v, budget, backend, &report);
  if (!trace) return report;
  return Equivalent{std::move(*trace), report.states_explored};
}

std::string format_verdict(const Verdict& v) {
  if (const auto* e = std::get_if<Equivalent>(&v)) {
    return "Equivalent (" + std::to_string(e->trace.steps.size()) + " steps)\n" + format_certificate(e->trace);
  }
  if (const auto* d = std::get_if<Distinct>(&v)) {
    return "Distinct: " + d->invariant + " " + d->left + " vs " + d->right + "\n";
  }
  const auto& u = std::get<Unknown>(v);
  return "Unknown: " + std::to_string(u.states_explored) + " states explored (max-states " +
         std::to_string(u.max_states) + ", max-len " + std::to_string(u.max_len) + ", max-n " +
         std::to_string(u.max_n) + ", depths " + std::to_string(u.depth_left) + "/" + std::to_string(u.depth_right) +
         (u.exhausted ? ", budget exhausted" : ", frontiers empty") + ")\n";
}

}  // namespace doodlekit
