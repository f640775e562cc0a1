#include "doodlekit/derived.hpp"

#include <algorithm>
#include <initializer_list>

#include "doodlekit/error.hpp"
#include "doodlekit/search.hpp"

namespace doodlekit {

namespace {

using Letters = std::vector<TwinLetter>;

TwinLetter letter(LetterKind kind, int index) { return {kind, static_cast<std::uint16_t>(index)}; }

// kind_hi, ..., kind_lo; empty when hi < lo.
Letters down(LetterKind kind, int hi, int lo) {
  Letters out;
  for (int j = hi; j >= lo; --j) out.push_back(letter(kind, j));
  return out;
}

Letters up(LetterKind kind, int lo, int hi) {
  Letters out;
  for (int j = lo; j <= hi; ++j) out.push_back(letter(kind, j));
  return out;
}

Letters rev(Letters ls) {
  std::reverse(ls.begin(), ls.end());
  return ls;
}

Letters cat(std::initializer_list<Letters> parts) {
  Letters out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

constexpr auto S = LetterKind::real;
constexpr auto R = LetterKind::virt;

// s_top .. s_bot c s_bot .. s_top
Letters bracket(int top, int bot, const Letters& c) { return cat({down(S, top, bot), c, up(S, bot, top)}); }

TwinLetter mirrored_letter(TwinLetter l, int strands) { return letter(l.kind, strands - l.index); }

void ensure(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::pattern_mismatch, what);
}

enum class RightMove { exchange, destab_real, destab_virtual };

MoveTrace left_virtual_destabilization(const TwinWord& beta, Backend backend);

// Accumulates a trace through waypoints written for the right-hand family.
// With `mirrored` set every waypoint is reflected before it is resolved, so
// the same recipe yields the left-hand family.
class Builder {
 public:
  Builder(const TwinWord& start, bool mirrored, Backend backend) : mirrored_(mirrored), backend_(backend) {
    trace_.start = actual(start);
    settle();
  }

  bool mirrored() const { return mirrored_; }
  Backend backend() const { return backend_; }
  MoveTrace take() { return std::move(trace_); }

  void relations(const TwinWord& target) {
    const auto t = free_reduce(actual(target));
    const auto& from = trace_.end();
    if (t == from) return;
    if (t.strands() == from.strands()) {
      SearchBudget b{200000, std::max(from.size(), t.size()) + 2, from.strands(), relation_moves_only};
      if (auto found = find_trace(from, t, b, backend_)) {
        append(*found);
        return;
      }
    }
    search(t);
  }

  // w -> a_k .. a_1 w a_1 .. a_k
  void conjugate(const Letters& alpha) {
    for (auto a : alpha) {
      const int n = trace_.end().strands();
      ConjugateMove m{mirrored_ ? mirrored_letter(a, n) : a};
      auto next = apply_move(trace_.end(), m);
      ensure(next.has_value(), "conjugating letter out of range");
      trace_.steps.push_back({m, false, std::move(*next)});
    }
  }

  void right_move(const TwinWord& target, RightMove kind) {
    const auto t = free_reduce(actual(target));
    const auto& from = trace_.end();
    if (t == from) return;
    MoveCaps caps{from.size() + 2, std::max(from.strands(), t.strands()) + 1, all_moves};
    for (auto& nb : neighbors(from, caps)) {
      if (nb.result == t) {
        trace_.steps.push_back({std::move(nb.move), false, std::move(nb.result)});
        return;
      }
    }
    if (kind == RightMove::destab_virtual && mirrored_) {
      append(left_virtual_destabilization(t, backend_));
      return;
    }
    search(t);
  }

  void append(const MoveTrace& t) {
    append_trace(trace_, t);
    settle();
  }

 private:
  TwinWord actual(const TwinWord& w) const { return mirrored_ ? mirror(w) : w; }

  void settle() {
    const auto r = free_reduce(trace_.end());
    if (r != trace_.end()) trace_.steps.push_back({CancelMove{}, false, r});
  }

  void search(const TwinWord& t) {
    auto found = find_trace(trace_.end(), t, SearchBudget{}, backend_);
    if (!found) {
      throw Error(ErrorKind::search_exhausted,
                  "no trace from " + format_word_at(trace_.end()) + " to " + format_word_at(t) + " within budget");
    }
    append(*found);
  }

  bool mirrored_;
  Backend backend_;
  MoveTrace trace_;
};

TwinWord word(int strands, const Letters& ls) { return TwinWord(strands, ls); }

// Runs `recipe` in a fresh builder from `start` and appends the reversed
// result to `b`.
template <class Recipe>
void backwards(Builder& b, const TwinWord& start, Recipe recipe) {
  Builder sub(start, b.mirrored(), b.backend());
  recipe(sub);
  b.append(reverse_trace(sub.take()));
}

// beta D(i) -> beta, where D(i) = s_n..s_{i+1} s_i s_{i+1}..s_n.
void real_collapse(Builder& b, const Letters& beta, int n, int i) {
  const int N = n + 1;
  if (i == n) {
    b.right_move(word(n, beta), RightMove::destab_real);
    return;
  }
  const Letters c{letter(S, i)};
  b.right_move(word(N, cat({beta, {letter(R, n)}, bracket(n - 1, i + 1, c), {letter(R, n)}})), RightMove::exchange);
  for (int k = n - 1; k >= i + 1; --k) {
    const auto rk = down(R, n - 1, k);
    const auto sk = down(S, n, k + 1);
    b.relations(word(N, cat({beta, rk, sk, {letter(R, k)}, bracket(k - 1, i + 1, c), {letter(R, k)}, rev(sk), rev(rk)})));
  }
  const auto ri = down(R, n - 1, i);
  b.relations(word(N, cat({beta, ri, bracket(n, i + 2, {letter(S, i + 1)}), rev(ri)})));
  b.conjugate(ri);
  const auto inner = free_reduce(word(n, cat({rev(ri), beta, ri}))).letters();
  real_collapse(b, inner, n, i + 1);
  b.conjugate(rev(ri));
}

// s_n..s_i b1 s_i..s_n b2 -> r_n..r_i b1 r_i..r_n b2
void kind_swap(Builder& b, int n, int i, const Letters& b1, const Letters& b2) {
  const int N = n + 1;
  b.conjugate(rev(b2));
  b.right_move(word(N, cat({b2, {letter(R, n)}, bracket(n - 1, i, b1), {letter(R, n)}})), RightMove::exchange);
  b.conjugate(b2);
  if (i == n) return;
  for (int k = n - 1; k >= i; --k) {
    const auto rk = down(R, n - 1, k);
    const auto sk = down(S, n, k + 1);
    b.relations(word(N, cat({rk, sk, {letter(R, k)}, bracket(k - 1, i, b1), {letter(R, k)}, rev(sk), rev(rk), b2})));
  }
  const auto ri = down(R, n - 1, i);
  b.conjugate(ri);
  const auto b1p = cat({{letter(R, i)}, b1, {letter(R, i)}});
  const auto b2p = cat({rev(ri), b2, ri});
  kind_swap(b, n, i + 1, b1p, b2p);
  b.conjugate(rev(ri));
  b.relations(word(N, cat({down(R, n, i), b1, up(R, i, n), b2})));
}

Letters tau_run(const std::vector<LetterKind>& kinds, int hi, int lo) {
  Letters out;
  for (int j = hi; j >= lo; --j) out.push_back(letter(kinds[static_cast<std::size_t>(j - 1)], j));
  return out;
}

// t_n..t_i b1 t_i..t_n b2 -> r_n..r_i b1 r_i..r_n b2
void mixed_swap(Builder& b, int n, int i, std::vector<LetterKind> kinds, const Letters& b1, const Letters& b2) {
  const int N = n + 1;
  for (;;) {
    const auto top = kinds[static_cast<std::size_t>(n - 1)];
    int lo = n;
    while (lo > i && kinds[static_cast<std::size_t>(lo - 2)] == top) --lo;
    if (lo == i && top == R) return;
    const auto below = tau_run(kinds, lo - 1, i);
    const auto core = cat({below, b1, rev(below)});
    if (top == S) {
      kind_swap(b, n, lo, core, b2);
    } else {
      const auto start = word(N, cat({down(S, n, lo), core, up(S, lo, n), b2}));
      backwards(b, start, [&](Builder& sub) { kind_swap(sub, n, lo, core, b2); });
    }
    for (int j = lo; j <= n; ++j) {
      auto& k = kinds[static_cast<std::size_t>(j - 1)];
      k = k == S ? R : S;
    }
  }
}

// beta t_n..t_i t_{i-1} t_i..t_n -> beta
void mixed_collapse(Builder& b, const Letters& beta, int n, int i, const std::vector<LetterKind>& kinds) {
  const int N = n + 1;
  if (i == n + 1) {
    b.right_move(word(n, beta), kinds[static_cast<std::size_t>(n - 1)] == S ? RightMove::destab_real
                                                                             : RightMove::destab_virtual);
    return;
  }
  const auto centre = letter(kinds[static_cast<std::size_t>(i - 2)], i - 1);
  b.conjugate(beta);
  mixed_swap(b, n, i, kinds, {centre}, beta);
  if (centre.kind == S) {
    const auto start = word(N, cat({down(S, n, i), {centre}, up(S, i, n), beta}));
    backwards(b, start, [&](Builder& sub) { kind_swap(sub, n, i, {centre}, beta); });
    b.conjugate(rev(beta));
    real_collapse(b, beta, n, i - 1);
    return;
  }
  b.conjugate(rev(beta));
  const auto p = up(R, i - 1, n - 1);
  b.relations(word(N, cat({beta, p, {letter(R, n)}, rev(p)})));
  b.conjugate(p);
  b.right_move(free_reduce(word(n, cat({rev(p), beta, p}))), RightMove::destab_virtual);
  b.conjugate(rev(p));
}

MoveTrace left_virtual_destabilization(const TwinWord& beta, Backend backend) {
  const int n = beta.strands();
  const int N = n + 1;
  const auto shifted = shift_left(1, beta).letters();
  Builder b(word(N, cat({shifted, {letter(R, 1)}})), false, backend);
  const auto c = up(R, 1, n);
  b.conjugate(c);
  const auto& ls = beta.letters();
  for (std::size_t k = 1; k <= ls.size(); ++k) {
    const Letters head(ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(k));
    const Letters tail(shifted.begin() + static_cast<std::ptrdiff_t>(k), shifted.end());
    b.relations(word(N, cat({head, rev(c), tail, {letter(R, 1)}, c})));
  }
  const auto p = up(R, 1, n - 1);
  b.relations(word(N, cat({ls, p, {letter(R, n)}, rev(p)})));
  b.conjugate(p);
  b.right_move(free_reduce(word(n, cat({rev(p), ls, p}))), RightMove::destab_virtual);
  b.conjugate(rev(p));
  return b.take();
}

bool is_left(DerivedMove m) {
  return m == DerivedMove::left_real_collapse || m == DerivedMove::left_kind_swap || m == DerivedMove::left_mixed_swap ||
         m == DerivedMove::left_mixed_collapse;
}

DerivedMove right_counterpart(DerivedMove m) {
  switch (m) {
    case DerivedMove::left_real_collapse: return DerivedMove::right_real_collapse;
    case DerivedMove::left_kind_swap: return DerivedMove::right_kind_swap;
    case DerivedMove::left_mixed_swap: return DerivedMove::right_mixed_swap;
    case DerivedMove::left_mixed_collapse: return DerivedMove::right_mixed_collapse;
    default: return m;
  }
}

void check_params(DerivedMove m, const DerivedParams& p) {
  const int n = p.n;
  ensure(n >= 1, "n must be at least 1");
  const bool collapse = m == DerivedMove::right_real_collapse || m == DerivedMove::right_mixed_collapse ||
                        m == DerivedMove::left_real_collapse || m == DerivedMove::left_mixed_collapse ||
                        m == DerivedMove::left_virtual_stabilization;
  const bool mixed = m == DerivedMove::right_mixed_swap || m == DerivedMove::right_mixed_collapse ||
                     m == DerivedMove::left_mixed_swap || m == DerivedMove::left_mixed_collapse;
  if (collapse) {
    ensure(p.beta.strands() == n, "beta must live on n strands");
  } else {
    const int b1 = is_left(m) ? n + 1 - p.i : p.i;
    ensure(p.beta1.strands() == b1, "beta1 must live on " + std::to_string(b1) + " strands");
    ensure(p.beta2.strands() == n, "beta2 must live on n strands");
  }
  if (mixed) ensure(static_cast<int>(p.tau.size()) == n, "tau must give one kind per index 1..n");
  int lo = 1;
  int hi = n;
  if (m == DerivedMove::right_mixed_collapse) {
    lo = 2;
    hi = n + 1;
  }
  if (m != DerivedMove::left_virtual_stabilization) {
    ensure(p.i >= lo && p.i <= hi, "i must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

// Parameters of the right-hand move whose mirror image is the left-hand one.
DerivedParams mirrored_params(DerivedMove m, const DerivedParams& p) {
  DerivedParams q = p;
  q.i = m == DerivedMove::left_mixed_collapse ? p.n + 2 - p.i : p.n + 1 - p.i;
  q.beta = mirror(p.beta);
  q.beta1 = mirror(p.beta1);
  q.beta2 = mirror(p.beta2);
  q.tau.assign(p.tau.rbegin(), p.tau.rend());
  return q;
}

TwinWord right_input(DerivedMove m, const DerivedParams& p) {
  const int n = p.n;
  const int N = n + 1;
  const auto& beta = p.beta.letters();
  switch (m) {
    case DerivedMove::right_real_collapse: return word(N, cat({beta, bracket(n, p.i + 1, {letter(S, p.i)})}));
    case DerivedMove::right_kind_swap:
      return word(N, cat({down(S, n, p.i), p.beta1.letters(), up(S, p.i, n), p.beta2.letters()}));
    case DerivedMove::right_mixed_swap: {
      const auto t = tau_run(p.tau, n, p.i);
      return word(N, cat({t, p.beta1.letters(), rev(t), p.beta2.letters()}));
    }
    case DerivedMove::right_mixed_collapse: {
      const auto t = tau_run(p.tau, n, p.i);
      return word(N, cat({beta, t, {letter(p.tau[static_cast<std::size_t>(p.i - 2)], p.i - 1)}, rev(t)}));
    }
    default: return word(N, cat({shift_left(1, p.beta).letters(), {letter(R, 1)}}));
  }
}

TwinWord right_output(DerivedMove m, const DerivedParams& p) {
  if (m == DerivedMove::right_kind_swap || m == DerivedMove::right_mixed_swap) {
    return word(p.n + 1, cat({down(R, p.n, p.i), p.beta1.letters(), up(R, p.i, p.n), p.beta2.letters()}));
  }
  return p.beta;
}

}  // namespace

TwinWord derived_input(DerivedMove m, const DerivedParams& p) {
  check_params(m, p);
  if (is_left(m)) return mirror(right_input(right_counterpart(m), mirrored_params(m, p)));
  return right_input(m, p);
}

TwinWord derived_output(DerivedMove m, const DerivedParams& p) {
  check_params(m, p);
  if (is_left(m)) return mirror(right_output(right_counterpart(m), mirrored_params(m, p)));
  return right_output(m, p);
}

DerivedResult apply_derived(DerivedMove m, const DerivedParams& params, Backend backend) {
  check_params(m, params);
  DerivedResult result{derived_input(m, params), derived_output(m, params), {}};
  if (m == DerivedMove::left_virtual_stabilization) {
    result.trace = left_virtual_destabilization(params.beta, backend);
    return result;
  }
  const bool left = is_left(m);
  const auto r = right_counterpart(m);
  const auto p = left ? mirrored_params(m, params) : params;
  Builder b(right_input(r, p), left, backend);
  const auto& beta = p.beta.letters();
  switch (r) {
    case DerivedMove::right_real_collapse: real_collapse(b, beta, p.n, p.i); break;
    case DerivedMove::right_kind_swap: kind_swap(b, p.n, p.i, p.beta1.letters(), p.beta2.letters()); break;
    case DerivedMove::right_mixed_swap: mixed_swap(b, p.n, p.i, p.tau, p.beta1.letters(), p.beta2.letters()); break;
    default: mixed_collapse(b, beta, p.n, p.i, p.tau); break;
  }
  // Land on the output exactly as written, even where it is not reduced.
  b.relations(right_output(r, p));
  result.trace = b.take();
  if (result.trace.end() != result.output) {
    result.trace.steps.push_back({CancelMove{}, true, result.output});
  }
  return result;
}

}  // namespace doodlekit
