#include "doodlekit/kernels.hpp"

namespace doodlekit {

std::vector<char> check_relations_under_mu(const std::vector<Relation>& relations, Backend backend) {
  return backend == Backend::openmp ? openmp::check_relations_under_mu(relations)
                                    : serial::check_relations_under_mu(relations);
}

std::vector<std::vector<Neighbor>> expand_frontier(const std::vector<TwinWord>& frontier, const MoveCaps& caps,
                                                   Backend backend) {
  return backend == Backend::openmp ? openmp::expand_frontier(frontier, caps) : serial::expand_frontier(frontier, caps);
}

}  // namespace doodlekit
