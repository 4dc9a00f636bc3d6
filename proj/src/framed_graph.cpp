#include "freeknot/framed_graph.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include "freeknot/errors.hpp"

namespace freeknot {

FramedFourGraph FramedFourGraph::circles(int count) {
  if (count < 0) throw ValidationError("negative circle count");
  FramedFourGraph g;
  g.circle_count_ = count;
  return g;
}

FramedFourGraph FramedFourGraph::from_edges(
    int vertex_count, const std::vector<std::pair<int, int>>& socket_edges,
    int circle_count) {
  if (vertex_count < 0) throw ValidationError("negative vertex count");
  if (circle_count < 0) throw ValidationError("negative circle count");
  if (static_cast<int>(socket_edges.size()) != 2 * vertex_count)
    throw ValidationError("framed 4-graph on " + std::to_string(vertex_count) +
                          " vertices needs exactly " +
                          std::to_string(2 * vertex_count) + " edges, got " +
                          std::to_string(socket_edges.size()));

  FramedFourGraph g;
  g.vertex_count_ = vertex_count;
  g.circle_count_ = circle_count;
  g.mate_.assign(4 * vertex_count, -1);
  for (auto [a, b] : socket_edges) {
    for (int s : {a, b})
      if (s < 0 || s >= 4 * vertex_count)
        throw ValidationError("socket " + std::to_string(s) + " out of range");
    if (a == b)
      throw ValidationError("edge joins socket " + std::to_string(a) +
                            " to itself");
    if (g.mate_[a] != -1 || g.mate_[b] != -1)
      throw ValidationError("socket covered by more than one edge");
    g.mate_[a] = b;
    g.mate_[b] = a;
  }
  for (int s = 0; s < 4 * vertex_count; ++s)
    if (g.mate_[s] == -1)
      throw ValidationError("socket " + std::to_string(s) +
                            " (vertex " + std::to_string(vertex_of(s)) +
                            " slot " + std::to_string(slot_of(s)) +
                            ") has no edge");

  g.edges_.reserve(2 * vertex_count);
  for (int s = 0; s < 4 * vertex_count; ++s)
    if (s < g.mate_[s]) g.edges_.emplace_back(s, g.mate_[s]);
  g.edge_at_.assign(4 * vertex_count, -1);
  for (int i = 0; i < static_cast<int>(g.edges_.size()); ++i) {
    g.edge_at_[g.edges_[i].first] = i;
    g.edge_at_[g.edges_[i].second] = i;
  }
  return g;
}

bool FramedFourGraph::vertices_connected() const {
  if (vertex_count_ <= 1) return true;
  std::vector<char> seen(vertex_count_, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int slot = 0; slot < 4; ++slot) {
      int w = vertex_of(mate_[socket_of(v, slot)]);
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == vertex_count_;
}

UnicursalDecomposition unicursal_components(const FramedFourGraph& g) {
  UnicursalDecomposition out;
  out.circle_count = g.circle_count();
  std::vector<char> visited(g.socket_count(), 0);
  for (int start = 0; start < g.socket_count(); ++start) {
    if (visited[start]) continue;
    std::vector<int> traversal;
    int a = start;
    do {
      traversal.push_back(g.edge_at(a));
      visited[a] = 1;
      visited[g.mate(a)] = 1;
      a = FramedFourGraph::opposite(g.mate(a));
    } while (a != start);
    out.traversals.push_back(std::move(traversal));
  }
  return out;
}

FramedFourGraph chord_diagram_to_framed(const ChordDiagram& cd) {
  if (cd.empty()) return FramedFourGraph::circles(1);
  const int m = cd.length();
  std::vector<int> in_sock(m), out_sock(m);
  for (int p = 0; p < m; ++p) {
    int c = cd.chord_at(p);
    int pass = (p == cd.chord_ends(c).first) ? 0 : 1;
    in_sock[p] = FramedFourGraph::socket_of(c, pass == 0 ? 0 : 1);
    out_sock[p] = FramedFourGraph::socket_of(c, pass == 0 ? 2 : 3);
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(m);
  for (int p = 0; p < m; ++p)
    edges.emplace_back(out_sock[p], in_sock[(p + 1) % m]);
  return FramedFourGraph::from_edges(cd.chord_count(), edges, 0);
}

ChordDiagram framed_to_chord_diagram(const FramedFourGraph& g) {
  if (g.vertex_count() == 0) {
    if (g.circle_count() == 1) return ChordDiagram();
    throw ValidationError("graph has " + std::to_string(g.circle_count()) +
                          " unicursal components, expected exactly 1");
  }
  if (g.circle_count() > 0)
    throw ValidationError(
        "graph has circle components alongside vertices; one unicursal "
        "component required");

  std::vector<int> word;
  word.reserve(g.edge_count());
  int a = 0;
  do {
    word.push_back(FramedFourGraph::vertex_of(g.mate(a)));
    a = FramedFourGraph::opposite(g.mate(a));
  } while (a != 0 && static_cast<int>(word.size()) <= g.edge_count());
  if (a != 0 || static_cast<int>(word.size()) != g.edge_count())
    throw ValidationError("graph has more than one unicursal component");

  std::vector<std::string> names(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) names[v] = std::to_string(v);
  return ChordDiagram::from_id_word(word, names);
}

namespace {

// The eight slot permutations mapping opposite pairs to opposite pairs.
std::array<std::array<int, 4>, 8> admissible_slot_maps() {
  std::array<std::array<int, 4>, 8> maps{};
  int k = 0;
  for (int img0 = 0; img0 < 4; ++img0) {
    for (int pick = 0; pick < 2; ++pick) {
      std::array<int, 4> m{};
      m[0] = img0;
      m[2] = FramedFourGraph::opposite(img0) & 3;
      int other_first = (img0 == 0 || img0 == 2) ? 1 : 0;
      int img1 = pick == 0 ? other_first : (FramedFourGraph::opposite(
                                                other_first) &
                                            3);
      m[1] = img1;
      m[3] = FramedFourGraph::opposite(img1) & 3;
      maps[k++] = m;
    }
  }
  return maps;
}

std::vector<std::vector<int>> connected_vertex_components(
    const FramedFourGraph& g) {
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(g.vertex_count(), 0);
  for (int v0 = 0; v0 < g.vertex_count(); ++v0) {
    if (seen[v0]) continue;
    std::vector<int> comp{v0};
    seen[v0] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      int v = comp[i];
      for (int slot = 0; slot < 4; ++slot) {
        int w = FramedFourGraph::vertex_of(
            g.mate(FramedFourGraph::socket_of(v, slot)));
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

FramedFourGraph induced_subgraph(const FramedFourGraph& g,
                                 const std::vector<int>& vertices) {
  std::vector<int> local(g.vertex_count(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i)
    local[vertices[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> edges;
  for (auto [a, b] : g.edges()) {
    int va = FramedFourGraph::vertex_of(a);
    int vb = FramedFourGraph::vertex_of(b);
    if (local[va] < 0 && local[vb] < 0) continue;
    edges.emplace_back(
        FramedFourGraph::socket_of(local[va], FramedFourGraph::slot_of(a)),
        FramedFourGraph::socket_of(local[vb], FramedFourGraph::slot_of(b)));
  }
  return FramedFourGraph::from_edges(static_cast<int>(vertices.size()), edges,
                                     0);
}

// Backtracking framing-preserving isomorphism between connected graphs of
// equal (small) order.
class IsoSearch {
 public:
  IsoSearch(const FramedFourGraph& a, const FramedFourGraph& b)
      : a_(a), b_(b), maps_(admissible_slot_maps()) {}

  bool run() {
    const int n = a_.vertex_count();
    if (n != b_.vertex_count()) return false;
    if (n == 0) return true;
    image_.assign(n, -1);
    used_.assign(n, 0);
    slot_map_.assign(n, -1);
    order_ = bfs_order();
    return place(0);
  }

 private:
  std::vector<int> bfs_order() const {
    std::vector<int> order{0};
    std::vector<char> seen(a_.vertex_count(), 0);
    seen[0] = 1;
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (int slot = 0; slot < 4; ++slot) {
        int w = FramedFourGraph::vertex_of(
            a_.mate(FramedFourGraph::socket_of(order[i], slot)));
        if (!seen[w]) {
          seen[w] = 1;
          order.push_back(w);
        }
      }
    }
    return order;
  }

  // Checks every edge of `v` whose other endpoint is already placed.
  bool consistent(int v) const {
    for (int slot = 0; slot < 4; ++slot) {
      int s = FramedFourGraph::socket_of(v, slot);
      int t = a_.mate(s);
      int w = FramedFourGraph::vertex_of(t);
      if (image_[w] < 0) continue;
      int s_img = FramedFourGraph::socket_of(image_[v],
                                             maps_[slot_map_[v]][slot]);
      int t_img = FramedFourGraph::socket_of(
          image_[w], maps_[slot_map_[w]][FramedFourGraph::slot_of(t)]);
      if (b_.mate(s_img) != t_img) return false;
    }
    return true;
  }

  bool place(std::size_t idx) {
    if (idx == order_.size()) return true;
    int v = order_[idx];
    for (int w = 0; w < b_.vertex_count(); ++w) {
      if (used_[w]) continue;
      image_[v] = w;
      used_[w] = 1;
      for (int k = 0; k < 8; ++k) {
        slot_map_[v] = k;
        if (consistent(v) && place(idx + 1)) return true;
      }
      image_[v] = -1;
      used_[w] = 0;
      slot_map_[v] = -1;
    }
    return false;
  }

  const FramedFourGraph& a_;
  const FramedFourGraph& b_;
  std::array<std::array<int, 4>, 8> maps_;
  std::vector<int> image_;
  std::vector<char> used_;
  std::vector<int> slot_map_;
  std::vector<int> order_;
};

}  // namespace

bool isomorphic(const FramedFourGraph& a, const FramedFourGraph& b) {
  if (a.vertex_count() != b.vertex_count()) return false;
  if (a.circle_count() != b.circle_count()) return false;
  if (a.vertex_count() == 0) return true;

  auto comps_a = connected_vertex_components(a);
  auto comps_b = connected_vertex_components(b);
  if (comps_a.size() != comps_b.size()) return false;

  // Components that are single unicursal curves compare by canonical word;
  // the rest fall back to a backtracking search.
  auto key_of = [](const FramedFourGraph& sub) -> std::string {
    if (unicursal_components(sub).count() != 1) return std::string();
    return canonical_word(framed_to_chord_diagram(sub)).to_string() + "#";
  };

  std::vector<FramedFourGraph> rest_a, rest_b;
  std::vector<std::string> keys_a, keys_b;
  for (const auto& comp : comps_a) {
    FramedFourGraph sub = induced_subgraph(a, comp);
    std::string key = key_of(sub);
    if (key.empty())
      rest_a.push_back(std::move(sub));
    else
      keys_a.push_back(std::move(key));
  }
  for (const auto& comp : comps_b) {
    FramedFourGraph sub = induced_subgraph(b, comp);
    std::string key = key_of(sub);
    if (key.empty())
      rest_b.push_back(std::move(sub));
    else
      keys_b.push_back(std::move(key));
  }
  std::sort(keys_a.begin(), keys_a.end());
  std::sort(keys_b.begin(), keys_b.end());
  if (keys_a != keys_b) return false;
  if (rest_a.size() != rest_b.size()) return false;

  // Isomorphism is an equivalence, so greedy matching is safe.
  std::vector<char> taken(rest_b.size(), 0);
  for (auto& ga : rest_a) {
    bool matched = false;
    for (std::size_t j = 0; j < rest_b.size(); ++j) {
      if (taken[j]) continue;
      if (IsoSearch(ga, rest_b[j]).run()) {
        taken[j] = 1;
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

std::vector<FramedFourGraph> connected_components(const FramedFourGraph& g) {
  std::vector<FramedFourGraph> out;
  for (const auto& comp : connected_vertex_components(g))
    out.push_back(induced_subgraph(g, comp));
  return out;
}

}  // namespace freeknot
