#pragma once

// Data-parallel kernels. Each has a serial reference and an OpenMP
// implementation; the dispatchers pick one by Backend. Outputs are
// index-aligned with inputs, so both backends agree element for element.

#include <vector>

#include "doodlekit/backend.hpp"
#include "doodlekit/moves.hpp"
#include "doodlekit/relations.hpp"
#include "doodlekit/twin_word.hpp"

namespace doodlekit {

// holds[k] != 0 iff mu(lhs) == mu(rhs) for relations[k].
std::vector<char> check_relations_under_mu(const std::vector<Relation>& relations, Backend backend);

// out[k] = neighbors(frontier[k], caps).
std::vector<std::vector<Neighbor>> expand_frontier(const std::vector<TwinWord>& frontier, const MoveCaps& caps,
                                                   Backend backend);

namespace serial {
std::vector<char> check_relations_under_mu(const std::vector<Relation>& relations);
std::vector<std::vector<Neighbor>> expand_frontier(const std::vector<TwinWord>& frontier, const MoveCaps& caps);
}  // namespace serial

namespace openmp {
std::vector<char> check_relations_under_mu(const std::vector<Relation>& relations);
std::vector<std::vector<Neighbor>> expand_frontier(const std::vector<TwinWord>& frontier, const MoveCaps& caps);
}  // namespace openmp

}  // namespace doodlekit
