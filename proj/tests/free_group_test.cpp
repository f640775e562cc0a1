#include <doctest.h>

#include "doodlekit/error.hpp"
#include "doodlekit/free_group.hpp"
#include "doodlekit/relations.hpp"
#include "support.hpp"

using namespace doodlekit;
using doodlekit::testing::random_word;
using doodlekit::testing::word;

namespace {

// Plain signed-integer free words (+g / -g) and a substitution evaluator that
// does not go through FreeEndomorphism::compose.
using Flat = std::vector<int>;

Flat reduce_flat(const Flat& w) {
  Flat out;
  for (int g : w) {
    if (!out.empty() && out.back() == -g) out.pop_back(); else out.push_back(g);
  }
  return out;
}

Flat letter_image(TwinLetter l, int x) {
  const int i = l.index;
  const int g = x < 0 ? -x : x;
  Flat img{g};
  if (l.kind == LetterKind::virt) {
    if (g == i) img = {i + 1};
    if (g == i + 1) img = {i};
  } else {
    if (g == i) img = {i, i + 1};
    if (g == i + 1) img = {-(i + 1)};
  }
  if (x > 0) return img;
  Flat inv;
  for (auto it = img.rbegin(); it != img.rend(); ++it) inv.push_back(-*it);
  return inv;
}

// Image of x_k: the rightmost letter substitutes first.
Flat oracle_image(const TwinWord& w, int k) {
  Flat cur{k};
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    Flat next;
    for (int x : cur) {
      const auto img = letter_image(*it, x);
      next.insert(next.end(), img.begin(), img.end());
    }
    cur = reduce_flat(next);
  }
  return cur;
}

Flat flat(const FreeWord& w) {
  Flat out;
  for (const auto& s : w.syllables()) out.push_back(s.generator * s.exponent);
  return out;
}

// Independent count of the seven relation families on n strands.
std::size_t expected_relation_count(int n) {
  const std::size_t m = static_cast<std::size_t>(n - 1);
  const std::size_t far = m >= 2 ? (m - 1) * (m - 2) / 2 : 0;
  const std::size_t adjacent = m >= 1 ? m - 1 : 0;
  return m + far + m + far + adjacent + 2 * far + adjacent;
}

}  // namespace

TEST_CASE("free reduction examples") {
  CHECK(reduce_free(parse_free_word("x1 x1^-1", 2)).empty());
  CHECK(format_free_word(reduce_free(parse_free_word("x1 x2 x2^-1 x1", 2))) == "x1 x1");
  CHECK(format_free_word(reduce_free(parse_free_word("x1 x2 x1^-1", 2))) == "x1 x2 x1^-1");
  CHECK(format_free_word(FreeWord(3)) == "1");
  CHECK(parse_free_word("1", 3).empty());
  CHECK_THROWS_AS(parse_free_word("y1", 3), Error);
  CHECK_THROWS_AS(parse_free_word("x4", 3), Error);
}

TEST_CASE("composition") {
  const auto s = mu(real_letter(1), 2);
  const auto r = mu(virtual_letter(1), 2);
  CHECK(compose(FreeEndomorphism(2), s) == s);
  CHECK(compose(s, s) == FreeEndomorphism(2));
  CHECK(compose(r, r) == FreeEndomorphism(2));
  CHECK_THROWS_AS(compose(FreeEndomorphism(2), FreeEndomorphism(3)), Error);
}

TEST_CASE("mu examples") {
  CHECK(format_endomorphism(mu(word(2, "s1"))) == "x1 -> x1 x2\nx2 -> x2^-1\n");
  CHECK(mu(word(2, "s1 s1")) == FreeEndomorphism(2));
  CHECK(format_free_word(mu(word(3, "r1 r2 s1")).image(1)) == "x2 x3");
  CHECK(format_free_word(mu(word(3, "s2 r1 r2")).image(1)) == "x2 x3");
}

TEST_CASE("mu agrees with direct substitution") {
  std::mt19937 rng(21);
  for (int t = 0; t < 400; ++t) {
    const int n = doodlekit::testing::random_strands(rng, 2, 5);
    const auto w = random_word(rng, n, 10);
    const auto f = mu(w);
    for (int k = 1; k <= n; ++k) CHECK(flat(f.image(k)) == oracle_image(w, k));
  }
}

TEST_CASE("mu is a homomorphism into automorphisms") {
  std::mt19937 rng(22);
  for (int t = 0; t < 300; ++t) {
    const int n = doodlekit::testing::random_strands(rng, 2, 5);
    const auto u = random_word(rng, n, 8);
    const auto v = random_word(rng, n, 8);
    CHECK(mu(concat(u, v)) == compose(mu(u), mu(v)));
    CHECK(compose(mu(u), mu(inverse(u))) == FreeEndomorphism(n));
  }
}

TEST_CASE("relation counts match independent enumeration") {
  CHECK(defining_relations(2).size() == 2);
  CHECK(defining_relations(4).size() == 14);
  for (int n = 2; n <= 8; ++n) CHECK(defining_relations(n).size() == expected_relation_count(n));
  for (int n = 2; n <= 6; ++n) {
    const auto report = verify_relations(n);
    CHECK(report.total() == expected_relation_count(n));
    CHECK(report.all_hold());
  }
}

TEST_CASE("relations hold under the oracle as well") {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& rel : defining_relations(n)) {
      for (int k = 1; k <= n; ++k) CHECK(oracle_image(rel.lhs, k) == oracle_image(rel.rhs, k));
    }
  }
}

TEST_CASE("forbidden moves are separated") {
  for (int n = 3; n <= 6; ++n) {
    for (int i = 1; i + 1 <= n - 1; ++i) {
      const auto si = real_letter(i);
      const auto sj = real_letter(i + 1);
      const auto ri = virtual_letter(i);
      const auto rj = virtual_letter(i + 1);
      CHECK(separates(TwinWord(n, {si, sj, si}), TwinWord(n, {sj, si, sj})).has_value());
      CHECK(separates(TwinWord(n, {ri, sj, si}), TwinWord(n, {sj, si, rj})).has_value());
    }
  }
  const auto a = separates(word(3, "s1 s2 s1"), word(3, "s2 s1 s2"));
  REQUIRE(a);
  CHECK(a->generator == 1);
  CHECK(format_free_word(a->left) == "x1 x3");
  CHECK(format_free_word(a->right) == "x1 x2 x3");
  const auto b = separates(word(3, "r1 s2 s1"), word(3, "s2 s1 r2"));
  REQUIRE(b);
  CHECK(b->generator == 1);
  CHECK(format_free_word(b->left) == "x2 x1 x3");
  CHECK(format_free_word(b->right) == "x1 x2 x3");
}

TEST_CASE("separation is sound on equal elements") {
  // Relation instances and u vs reduced u are equal in the group.
  std::mt19937 rng(23);
  for (int t = 0; t < 300; ++t) {
    const auto w = random_word(rng, 4, 12);
    CHECK_FALSE(separates(w, free_reduce(w)).has_value());
  }
  for (const auto& rel : defining_relations(5)) CHECK_FALSE(separates(rel.lhs, rel.rhs).has_value());
  CHECK_THROWS_AS(separates(word(2, "s1"), word(3, "s1")), Error);
}
