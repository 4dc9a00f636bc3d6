#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "freeknot/chord_diagram.hpp"
#include "freeknot/construct.hpp"
#include "freeknot/framed_graph.hpp"
#include "freeknot/multigraph.hpp"
#include "freeknot/parity.hpp"

namespace freeknot {

// One double occurrence word per line. '#' starts a comment; blank lines
// are skipped. Parse errors carry `origin` and the 1-based line number.
std::vector<ChordDiagram> read_dow(std::istream& in,
                                   const std::string& origin);

// Header "fg <vertices> <circles>", then one line per edge
// "e <v>.<slot> <v>.<slot>" with slots in 0..3. Comments as above; every
// socket must end up covered exactly once.
FramedFourGraph read_fg(std::istream& in, const std::string& origin);
std::string write_fg(const FramedFourGraph& g);

// Header "tg <vertices>", then one line per edge "e <u> <v>". read_graph
// places no degree constraint; read_tg additionally checks that the graph
// is trivalent and connected.
MultiGraph read_graph(std::istream& in, const std::string& origin);
TrivalentGraph read_tg(std::istream& in, const std::string& origin);
std::string write_tg(const TrivalentGraph& g);

// DOT rendering. Diagrams become the core cycle (one node per endpoint,
// labeled by its chord) plus one dashed edge per chord; the empty diagram
// becomes a single core node standing for the bare circle. Framed graphs
// become box nodes with slot labels at each edge end and one circle node
// per vertex-free circle. Interlacement graphs render plainly.
std::string export_dot(const ChordDiagram& cd);
std::string export_dot(const FramedFourGraph& g);
std::string export_dot(const InterlacementGraph& ig);

}  // namespace freeknot
