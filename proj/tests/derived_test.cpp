#include <doctest.h>

#include <set>

#include "doodlekit/derived.hpp"
#include "doodlekit/error.hpp"
#include "support.hpp"

using namespace doodlekit;
using doodlekit::testing::word;

std::vector<std::pair<DerivedMove, DerivedParams>> derived_instances(int max_n);

TEST_CASE("collapse example follows the exchange route") {
  DerivedParams p;
  p.n = 2;
  p.i = 1;
  p.beta = word(2, "r1");
  const auto r = apply_derived(DerivedMove::right_real_collapse, p);
  CHECK(r.input == word(3, "r1 s2 s1 s2"));
  CHECK(r.output == word(2, "r1"));
  CHECK_NOTHROW(replay(r.trace));
  std::set<int> classes;
  for (const auto& s : r.trace.steps) classes.insert(move_class(s.move));
  CHECK(classes == std::set<int>{0, 1, 2, 4});
  CHECK(move_class(r.trace.steps.front().move) == 4);
}

TEST_CASE("left virtual stabilization example") {
  DerivedParams p;
  p.n = 2;
  p.beta = word(2, "s1");
  const auto r = apply_derived(DerivedMove::left_virtual_stabilization, p);
  CHECK(r.input == word(3, "s2 r1"));
  CHECK(r.output == word(2, "s1"));
  CHECK_NOTHROW(replay(r.trace));
  for (const auto& s : r.trace.steps) CHECK(move_class(s.move) != 3);
}

TEST_CASE("input patterns") {
  DerivedParams p;
  p.n = 2;
  p.i = 2;
  p.beta = word(2, "s1");
  CHECK(derived_input(DerivedMove::left_real_collapse, p) == word(3, "s2 s1 s2 s1"));
  CHECK(derived_input(DerivedMove::right_real_collapse, p) == word(3, "s1 s2"));
  p.i = 1;
  p.beta1 = TwinWord(1);
  p.beta2 = word(2, "r1");
  CHECK(derived_input(DerivedMove::right_kind_swap, p) == word(3, "s2 s1 s1 s2 r1"));
  CHECK(derived_output(DerivedMove::right_kind_swap, p) == word(3, "r2 r1 r1 r2 r1"));
  p.i = 3;
  p.tau = {LetterKind::virt, LetterKind::real};
  CHECK(derived_input(DerivedMove::right_mixed_collapse, p) == word(3, "s1 s2"));
  p.i = 2;
  CHECK(derived_input(DerivedMove::right_mixed_collapse, p) == word(3, "s1 s2 r1 s2"));
  p.i = 1;
  p.beta1 = word(2, "s1");
  p.tau = {LetterKind::real, LetterKind::virt};
  CHECK(derived_input(DerivedMove::left_mixed_swap, p) == word(3, "s1 s2 s1 r2"));
  CHECK(derived_output(DerivedMove::left_mixed_swap, p) == word(3, "r1 s2 r1 r2"));
}

TEST_CASE("pattern mismatches are reported") {
  DerivedParams p;
  p.n = 2;
  p.i = 3;
  p.beta = TwinWord(2);
  CHECK_THROWS_AS(apply_derived(DerivedMove::right_real_collapse, p), Error);
  p.i = 1;
  p.beta = TwinWord(3);
  CHECK_THROWS_AS(apply_derived(DerivedMove::right_real_collapse, p), Error);
  p.beta = TwinWord(2);
  CHECK_THROWS_AS(apply_derived(DerivedMove::right_mixed_collapse, p), Error);
  p.tau = {LetterKind::real};
  p.i = 2;
  CHECK_THROWS_AS(apply_derived(DerivedMove::right_mixed_collapse, p), Error);
  p.beta1 = TwinWord(2);
  p.beta2 = TwinWord(2);
  p.i = 1;
  CHECK_THROWS_AS(apply_derived(DerivedMove::right_kind_swap, p), Error);
  try {
    apply_derived(DerivedMove::right_kind_swap, p);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::pattern_mismatch);
  }
}

TEST_CASE("every derived instance replays") {
  const auto instances = derived_instances(3);
  CHECK(instances.size() > 1000);
  for (const auto& [m, p] : instances) {
    const auto r = apply_derived(m, p);
    CHECK(r.trace.start == r.input);
    CHECK(r.trace.end() == r.output);
    CHECK_NOTHROW(replay(r.trace));
    CHECK(closure_components(r.input) == closure_components(r.output));
  }
}
