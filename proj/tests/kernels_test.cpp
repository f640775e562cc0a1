#include <doctest.h>

#include <omp.h>

#include "doodlekit/kernels.hpp"
#include "support.hpp"

using namespace doodlekit;
using doodlekit::testing::random_strands;
using doodlekit::testing::random_word;

namespace {

struct Threads {
  explicit Threads(int n) : saved(omp_get_max_threads()) { omp_set_num_threads(n); }
  ~Threads() { omp_set_num_threads(saved); }
  int saved;
};

}  // namespace

TEST_CASE("backend names") {
  CHECK(parse_backend("serial") == Backend::serial);
  CHECK(parse_backend("openmp") == Backend::openmp);
  CHECK_FALSE(parse_backend("cuda").has_value());
  CHECK(backend_name(Backend::openmp) == "openmp");
  CHECK(openmp_available());
}

TEST_CASE("relation checks agree across backends") {
  Threads threads(4);
  for (int n = 2; n <= 7; ++n) {
    const auto rels = defining_relations(n);
    CHECK(serial::check_relations_under_mu(rels) == openmp::check_relations_under_mu(rels));
  }
}

TEST_CASE("frontier expansion agrees across backends") {
  Threads threads(4);
  std::mt19937 rng(71);
  for (int t = 0; t < 20; ++t) {
    std::vector<TwinWord> frontier;
    for (int k = 0; k < 40; ++k) frontier.push_back(free_reduce(random_word(rng, random_strands(rng, 1, 5), 10)));
    const MoveCaps caps{12, 6, all_moves};
    const auto a = serial::expand_frontier(frontier, caps);
    const auto b = openmp::expand_frontier(frontier, caps);
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
      REQUIRE(a[k].size() == b[k].size());
      for (std::size_t j = 0; j < a[k].size(); ++j) {
        CHECK(a[k][j].result == b[k][j].result);
        CHECK(a[k][j].move == b[k][j].move);
      }
    }
  }
}
