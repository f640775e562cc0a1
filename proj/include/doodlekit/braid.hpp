#pragma once

#include "doodlekit/gauss.hpp"
#include "doodlekit/twin_word.hpp"

namespace doodlekit {

// Braiding process: a twin word whose closure has Gauss data isomorphic to g.
//
// Crossing c sits in sector c of an annulus, the cut lies between the last
// and the first sector, and every arc runs counterclockwise from its source
// sector to its target sector, crossing the cut iff target <= source. Strands
// are the cut-crossing arcs plus one per free loop. Throws InvalidGaussData
// or EmptyDiagram.
TwinWord braid(const GaussData& g);

}  // namespace doodlekit
