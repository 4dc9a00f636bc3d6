#include "freeknot/multigraph.hpp"

#include <algorithm>

namespace freeknot {

std::vector<int> degrees(const MultiGraph& g) {
  std::vector<int> deg(g.vertex_count, 0);
  for (auto [u, v] : g.edges) {
    deg[u] += 1;
    deg[v] += 1;
  }
  return deg;
}

bool connected(const MultiGraph& g) {
  if (g.vertex_count <= 1) return true;
  std::vector<std::vector<int>> adj(g.vertex_count);
  for (auto [u, v] : g.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<char> seen(g.vertex_count, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == g.vertex_count;
}

std::vector<std::pair<int, int>> normalised_edges(const MultiGraph& g) {
  std::vector<std::pair<int, int>> out;
  out.reserve(g.edges.size());
  for (auto [u, v] : g.edges) out.emplace_back(std::min(u, v), std::max(u, v));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace freeknot
