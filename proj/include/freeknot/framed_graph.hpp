#pragma once

#include <utility>
#include <vector>

#include "freeknot/chord_diagram.hpp"

namespace freeknot {

// A framed 4-valent multigraph, possibly together with vertex-free circle
// components. Vertex v owns the socket range [4v, 4v+4); socket = 4*v + slot
// with slots 0..3, and slots (0,2) and (1,3) form the two opposite pairs of
// half-edges at every vertex. Edges are a perfect matching on sockets, so
// loops and parallel edges are fine. Circles carry no sockets and are
// tracked as a count. Values are immutable once constructed.
class FramedFourGraph {
 public:
  // The graph with no vertices and no circles.
  FramedFourGraph() = default;

  static FramedFourGraph circles(int count);

  // Builds a graph from socket pairs. Every socket of every vertex must be
  // covered exactly once; throws ValidationError otherwise.
  static FramedFourGraph from_edges(
      int vertex_count, const std::vector<std::pair<int, int>>& socket_edges,
      int circle_count = 0);

  int vertex_count() const { return vertex_count_; }
  int circle_count() const { return circle_count_; }
  int edge_count() const { return vertex_count_ * 2; }
  int socket_count() const { return vertex_count_ * 4; }

  // The socket matched with `socket` by its edge.
  int mate(int socket) const { return mate_[socket]; }

  static constexpr int opposite(int socket) { return socket ^ 2; }
  static constexpr int vertex_of(int socket) { return socket >> 2; }
  static constexpr int slot_of(int socket) { return socket & 3; }
  static constexpr int socket_of(int vertex, int slot) {
    return 4 * vertex + slot;
  }

  // Edges as socket pairs {a, b} with a < b, listed in increasing a.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  // Index into edges() of the edge covering `socket`.
  int edge_at(int socket) const { return edge_at_[socket]; }

  // Whether the vertex-bearing part is connected (vacuously true when there
  // are no vertices). Circles are ignored.
  bool vertices_connected() const;

 private:
  int vertex_count_ = 0;
  int circle_count_ = 0;
  std::vector<int> mate_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> edge_at_;
};

// The decomposition of a graph into unicursal components: closed traversals
// that continue through the opposite half-edge at every vertex, plus the
// vertex-free circles. Every edge lies on exactly one traversal.
struct UnicursalDecomposition {
  // Edge indices (into FramedFourGraph::edges()) in traversal order, one
  // list per vertex-bearing component.
  std::vector<std::vector<int>> traversals;
  int circle_count = 0;

  int count() const {
    return static_cast<int>(traversals.size()) + circle_count;
  }
};

UnicursalDecomposition unicursal_components(const FramedFourGraph& g);

// The framed graph of a chord diagram: one vertex per chord, one edge per
// arc between consecutive endpoints along the core circle. The traversal
// through each chord end uses opposite slots, so the core circle is the
// single unicursal component. The empty diagram maps to one circle.
FramedFourGraph chord_diagram_to_framed(const ChordDiagram& cd);

// Inverse of the above on graphs with exactly one unicursal component.
// Chords are named after vertex indices. Throws ValidationError when the
// component count differs from one.
ChordDiagram framed_to_chord_diagram(const FramedFourGraph& g);

// Framing-preserving isomorphism: a vertex bijection carrying edges to
// edges and opposite pairs to opposite pairs, with equal circle counts.
bool isomorphic(const FramedFourGraph& a, const FramedFourGraph& b);

// The vertex-bearing connected components as standalone graphs with
// vertices renumbered by discovery order. Circles are not included.
std::vector<FramedFourGraph> connected_components(const FramedFourGraph& g);

}  // namespace freeknot
