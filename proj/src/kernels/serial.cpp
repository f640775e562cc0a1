#include "doodlekit/free_group.hpp"
#include "doodlekit/kernels.hpp"

namespace doodlekit::serial {

std::vector<char> check_relations_under_mu(const std::vector<Relation>& relations) {
  std::vector<char> holds(relations.size(), 0);
  for (std::size_t k = 0; k < relations.size(); ++k) {
    holds[k] = mu(relations[k].lhs) == mu(relations[k].rhs) ? 1 : 0;
  }
  return holds;
}

std::vector<std::vector<Neighbor>> expand_frontier(const std::vector<TwinWord>& frontier, const MoveCaps& caps) {
  std::vector<std::vector<Neighbor>> out(frontier.size());
  for (std::size_t k = 0; k < frontier.size(); ++k) out[k] = neighbors(frontier[k], caps);
  return out;
}

}  // namespace doodlekit::serial
