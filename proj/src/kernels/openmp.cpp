#include <exception>

#include "doodlekit/free_group.hpp"
#include "doodlekit/kernels.hpp"

namespace doodlekit::openmp {

namespace {

// Runs body(k) for k in [0, count) across threads; the first exception (by
// index) is rethrown on the calling thread.
template <class Body>
void parallel_for(std::size_t count, Body body) {
  std::vector<std::exception_ptr> errors(count);
  const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 4)
  for (long long k = 0; k < n; ++k) {
    try {
      body(static_cast<std::size_t>(k));
    } catch (...) {
      errors[static_cast<std::size_t>(k)] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

std::vector<char> check_relations_under_mu(const std::vector<Relation>& relations) {
  std::vector<char> holds(relations.size(), 0);
  parallel_for(relations.size(), [&](std::size_t k) { holds[k] = mu(relations[k].lhs) == mu(relations[k].rhs) ? 1 : 0; });
  return holds;
}

std::vector<std::vector<Neighbor>> expand_frontier(const std::vector<TwinWord>& frontier, const MoveCaps& caps) {
  std::vector<std::vector<Neighbor>> out(frontier.size());
  parallel_for(frontier.size(), [&](std::size_t k) { out[k] = neighbors(frontier[k], caps); });
  return out;
}

}  // namespace doodlekit::openmp
