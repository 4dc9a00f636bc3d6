#include "freeknot/planarity.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <utility>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "freeknot/bracket.hpp"
#include "freeknot/errors.hpp"

namespace freeknot {

namespace {

constexpr int kMaxScanVertices = 22;

int rotation_next(std::uint64_t rotations, int socket) {
  int v = FramedFourGraph::vertex_of(socket);
  int slot = FramedFourGraph::slot_of(socket);
  int step = (rotations >> v) & 1 ? 3 : 1;
  return FramedFourGraph::socket_of(v, (slot + step) & 3);
}

int face_count(const FramedFourGraph& g, std::uint64_t rotations) {
  const int darts = g.socket_count();
  std::vector<char> seen(darts, 0);
  int faces = 0;
  for (int d = 0; d < darts; ++d) {
    if (seen[d]) continue;
    ++faces;
    int x = d;
    do {
      seen[x] = 1;
      x = rotation_next(rotations, g.mate(x));
    } while (x != d);
  }
  return faces;
}

void require_scannable(const FramedFourGraph& g) {
  if (g.circle_count() != 0)
    throw ValidationError("circles have no rotation system; drop them first");
  if (!g.vertices_connected())
    throw ValidationError("rotation scan needs a connected graph");
  if (g.vertex_count() > kMaxScanVertices)
    throw BudgetError("too many vertices for an exhaustive rotation scan");
}

struct TraceBudget {
  std::uint64_t left = 0;
  bool dead = false;

  bool spend() {
    if (left == 0) {
      dead = true;
      return false;
    }
    --left;
    return true;
  }
};

std::optional<bool> planar_framed_within(const FramedFourGraph& g,
                                         TraceBudget& budget) {
  const int V = g.vertex_count();
  if (V == 0) return true;
  if (V >= 63) {
    budget.dead = true;
    return std::nullopt;
  }
  for (std::uint64_t r = 0; r < (std::uint64_t{1} << V); ++r) {
    if (!budget.spend()) return std::nullopt;
    if (face_count(g, r) == V + 2) return true;
  }
  return false;
}

std::pair<FramedFourGraph, std::vector<int>> insert_framed_crossing(
    const FramedFourGraph& g, const std::vector<int>& roots, int ei, int ej) {
  auto [a, b] = g.edges()[ei];
  auto [c, d] = g.edges()[ej];
  const int w = g.vertex_count();
  std::map<std::pair<int, int>, int> root_of;
  std::vector<std::pair<int, int>> edges;
  auto add = [&](int x, int y, int root) {
    edges.emplace_back(x, y);
    root_of[std::minmax(x, y)] = root;
  };
  for (int t = 0; t < g.edge_count(); ++t)
    if (t != ei && t != ej)
      add(g.edges()[t].first, g.edges()[t].second, roots[t]);
  add(a, FramedFourGraph::socket_of(w, 0), roots[ei]);
  add(FramedFourGraph::socket_of(w, 2), b, roots[ei]);
  add(c, FramedFourGraph::socket_of(w, 1), roots[ej]);
  add(FramedFourGraph::socket_of(w, 3), d, roots[ej]);
  FramedFourGraph out = FramedFourGraph::from_edges(w + 1, edges);
  std::vector<int> new_roots(out.edge_count());
  for (int t = 0; t < out.edge_count(); ++t)
    new_roots[t] = root_of.at(out.edges()[t]);
  return {std::move(out), std::move(new_roots)};
}

std::string describe_framed_edge(const FramedFourGraph& g, int e) {
  auto [a, b] = g.edges()[e];
  std::ostringstream out;
  out << FramedFourGraph::vertex_of(a) << '.' << FramedFourGraph::slot_of(a)
      << '-' << FramedFourGraph::vertex_of(b) << '.'
      << FramedFourGraph::slot_of(b);
  return out.str();
}

// Iterative-deepening insertion search. Signatures are pairs of original
// edges; a crossing-minimal immersion never crosses an edge with itself and
// never crosses the same pair twice, so each level enumerates strictly
// increasing signature sets, times the choice of current segment per side.
struct FramedSearch {
  const FramedFourGraph* base = nullptr;
  TraceBudget budget;
  std::vector<std::pair<int, int>> sigs;
  std::vector<std::pair<int, int>> trail;
  std::optional<std::vector<std::pair<int, int>>> witness;

  // True when the subtree was searched completely; false stops the caller
  // (a witness appeared or the budget died).
  bool level(const FramedFourGraph& cur, const std::vector<int>& roots,
             int left, std::size_t next_sig) {
    if (left == 0) {
      auto planar = planar_framed_within(cur, budget);
      if (!planar) return false;
      if (*planar) {
        witness = trail;
        return false;
      }
      return true;
    }
    for (std::size_t s = next_sig; s + left <= sigs.size(); ++s) {
      auto [r1, r2] = sigs[s];
      for (int i = 0; i < cur.edge_count(); ++i) {
        if (roots[i] != r1) continue;
        for (int j = 0; j < cur.edge_count(); ++j) {
          if (roots[j] != r2) continue;
          auto [next, next_roots] = insert_framed_crossing(cur, roots, i, j);
          trail.push_back(sigs[s]);
          bool searched = level(next, next_roots, left - 1, s + 1);
          trail.pop_back();
          if (!searched) return false;
        }
      }
    }
    return true;
  }

  std::string describe(const std::vector<std::pair<int, int>>& picks) const {
    if (picks.empty()) return "planar as given";
    std::ostringstream out;
    out << "crossings on edge pairs:";
    for (auto [r1, r2] : picks)
      out << ' ' << describe_framed_edge(*base, r1) << " x "
          << describe_framed_edge(*base, r2);
    return out.str();
  }
};

int parse_vertex_name(const std::string& name, int limit) {
  std::size_t used = 0;
  int value = -1;
  try {
    value = std::stoi(name, &used);
  } catch (const std::exception&) {
    throw ValidationError("chord name '" + name +
                          "' does not index a graph vertex");
  }
  if (used != name.size() || value < 0 || value >= limit)
    throw ValidationError("chord name '" + name +
                          "' does not index a graph vertex");
  return value;
}

}  // namespace

int genus_of_rotation(const FramedFourGraph& g, std::uint64_t rotations) {
  if (g.vertex_count() == 0) return 0;
  // V - E + F = 2 - 2g with E = 2V, for connected g.
  return (2 + g.vertex_count() - face_count(g, rotations)) / 2;
}

int genus_min(const FramedFourGraph& g) {
  require_scannable(g);
  const int V = g.vertex_count();
  if (V == 0) return 0;
  int best = INT_MAX;
  for (std::uint64_t r = 0; r < (std::uint64_t{1} << V); ++r) {
    best = std::min(best, genus_of_rotation(g, r));
    if (best == 0) break;
  }
  return best;
}

bool is_planar_framed(const FramedFourGraph& g) {
  return genus_min(g) == 0;
}

bool is_planar_graph(const MultiGraph& g) {
  using BoostGraph =
      boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  std::vector<std::pair<int, int>> real;
  for (auto [u, v] : g.edges)
    if (u != v) real.emplace_back(u, v);
  // Subdividing every edge leaves planarity alone and feeds the test a
  // simple graph even when the input has parallel edges.
  BoostGraph bg(g.vertex_count + real.size());
  for (std::size_t i = 0; i < real.size(); ++i) {
    int mid = g.vertex_count + static_cast<int>(i);
    boost::add_edge(real[i].first, mid, bg);
    boost::add_edge(mid, real[i].second, bg);
  }
  return boost::boyer_myrvold_planarity_test(bg);
}

MultiGraph underlying_multigraph(const FramedFourGraph& g) {
  MultiGraph out{g.vertex_count(), {}};
  for (auto [a, b] : g.edges())
    out.edges.emplace_back(FramedFourGraph::vertex_of(a),
                           FramedFourGraph::vertex_of(b));
  return out;
}

std::string to_string(const CrossingBound& b) {
  std::ostringstream out;
  switch (b.kind) {
    case BoundKind::exact:
      out << "exact " << b.value;
      break;
    case BoundKind::lower_bound:
      out << "at least " << b.value;
      break;
    case BoundKind::upper_bound:
      out << "at most " << b.value;
      break;
    case BoundKind::exhausted:
      out << "at least " << b.value << ", search exhausted";
      break;
  }
  if (!b.witness.empty()) out << " (" << b.witness << ")";
  return out.str();
}

CrossingBound cr_framed_exact(const FramedFourGraph& g, std::uint64_t budget) {
  if (g.circle_count() != 0)
    throw ValidationError("crossing search needs a graph without circles");
  if (!g.vertices_connected())
    throw ValidationError("crossing search needs a connected graph");
  CrossingBound out;
  if (g.vertex_count() == 0) {
    out.kind = BoundKind::exact;
    out.witness = "empty graph";
    return out;
  }

  FramedSearch search;
  search.base = &g;
  search.budget.left = budget;
  for (int r1 = 0; r1 < g.edge_count(); ++r1)
    for (int r2 = r1 + 1; r2 < g.edge_count(); ++r2)
      search.sigs.emplace_back(r1, r2);
  std::vector<int> roots(g.edge_count());
  std::iota(roots.begin(), roots.end(), 0);

  for (int k = 0;; ++k) {
    if (k > static_cast<int>(search.sigs.size()))
      throw InternalError("crossing search ran past the good-drawing bound");
    bool complete = search.level(g, roots, k, 0);
    if (search.witness) {
      out.kind = BoundKind::exact;
      out.value = k;
      out.witness = search.describe(*search.witness);
      return out;
    }
    if (!complete) {
      out.kind = BoundKind::exhausted;
      out.value = k;
      out.witness = "budget ran out during the " + std::to_string(k) +
                    "-crossing level";
      return out;
    }
  }
}

namespace {

struct GraphSearch {
  const MultiGraph* base = nullptr;
  std::uint64_t budget = 0;
  bool dead = false;
  std::vector<std::pair<int, int>> sigs;
  std::vector<std::pair<int, int>> trail;
  std::optional<std::vector<std::pair<int, int>>> witness;

  bool level(const MultiGraph& cur, const std::vector<int>& roots, int left,
             std::size_t next_sig) {
    if (left == 0) {
      if (budget == 0) {
        dead = true;
        return false;
      }
      --budget;
      if (is_planar_graph(cur)) {
        witness = trail;
        return false;
      }
      return true;
    }
    const int m = static_cast<int>(cur.edges.size());
    for (std::size_t s = next_sig; s + left <= sigs.size(); ++s) {
      auto [r1, r2] = sigs[s];
      for (int i = 0; i < m; ++i) {
        if (roots[i] != r1) continue;
        for (int j = 0; j < m; ++j) {
          if (roots[j] != r2) continue;
          MultiGraph next{cur.vertex_count + 1, {}};
          std::vector<int> next_roots;
          for (int t = 0; t < m; ++t) {
            if (t == i || t == j) continue;
            next.edges.push_back(cur.edges[t]);
            next_roots.push_back(roots[t]);
          }
          int w = cur.vertex_count;
          auto [u1, v1] = cur.edges[i];
          auto [u2, v2] = cur.edges[j];
          next.edges.emplace_back(u1, w);
          next.edges.emplace_back(w, v1);
          next.edges.emplace_back(u2, w);
          next.edges.emplace_back(w, v2);
          next_roots.insert(next_roots.end(),
                            {roots[i], roots[i], roots[j], roots[j]});
          trail.push_back(sigs[s]);
          bool searched = level(next, next_roots, left - 1, s + 1);
          trail.pop_back();
          if (!searched) return false;
        }
      }
    }
    return true;
  }

  std::string describe(const std::vector<std::pair<int, int>>& picks) const {
    if (picks.empty()) return "planar as given";
    std::ostringstream out;
    out << "crossings on edge pairs:";
    for (auto [r1, r2] : picks) {
      auto [a, b] = base->edges[r1];
      auto [c, d] = base->edges[r2];
      out << ' ' << a << '-' << b << " x " << c << '-' << d;
    }
    return out.str();
  }
};

}  // namespace

CrossingBound cr_graph_exact(const MultiGraph& g, std::uint64_t budget) {
  if (!connected(g))
    throw ValidationError("crossing search needs a connected graph");
  // Loops never force crossings: draw them tightly around their vertex.
  MultiGraph base{g.vertex_count, {}};
  for (auto [u, v] : g.edges)
    if (u != v) base.edges.emplace_back(u, v);

  GraphSearch search;
  search.base = &base;
  search.budget = budget;
  const int m = static_cast<int>(base.edges.size());
  // Minimal drawings never cross adjacent edges, so only independent pairs
  // qualify as signatures.
  for (int r1 = 0; r1 < m; ++r1)
    for (int r2 = r1 + 1; r2 < m; ++r2) {
      auto [a, b] = base.edges[r1];
      auto [c, d] = base.edges[r2];
      if (a != c && a != d && b != c && b != d)
        search.sigs.emplace_back(r1, r2);
    }
  std::vector<int> roots(m);
  std::iota(roots.begin(), roots.end(), 0);

  CrossingBound out;
  for (int k = 0;; ++k) {
    if (k > static_cast<int>(search.sigs.size()))
      throw InternalError("crossing search ran past the good-drawing bound");
    bool complete = search.level(base, roots, k, 0);
    if (search.witness) {
      out.kind = BoundKind::exact;
      out.value = k;
      out.witness = search.describe(*search.witness);
      return out;
    }
    if (!complete) {
      out.kind = BoundKind::exhausted;
      out.value = k;
      out.witness = "budget ran out during the " + std::to_string(k) +
                    "-crossing level";
      return out;
    }
  }
}

namespace {

// The traversal part of a smoothing result as a diagram, when it is a
// single unicursal component besides circles.
std::optional<ChordDiagram> single_traversal_diagram(
    const FramedFourGraph& g) {
  auto dec = unicursal_components(g);
  if (g.vertex_count() == 0)
    return dec.traversals.empty() ? std::optional<ChordDiagram>(ChordDiagram())
                                  : std::nullopt;
  if (dec.traversals.size() != 1) return std::nullopt;
  FramedFourGraph vertex_part =
      FramedFourGraph::from_edges(g.vertex_count(), g.edges());
  return framed_to_chord_diagram(vertex_part);
}

}  // namespace

void verify_smoothing_descent(const FramedFourGraph& g,
                              const ChordDiagram& target, long budget) {
  BracketValue bracket_g = bracket(g);
  BracketValue bracket_t = bracket(target);
  if (!(bracket_g == bracket_t))
    throw ValidationError("brackets differ: " + bracket_g.to_string() +
                          " vs " + bracket_t.to_string());

  SmoothingSearch found = find_smoothing_equivalent(g, target, budget);
  if (found.status == SearchStatus::exhausted)
    throw BudgetError("smoothing search budget ran out after " +
                      std::to_string(found.attempts) + " assignments");
  if (found.status == SearchStatus::not_found)
    throw InternalError("brackets agree yet no smoothing reduces to target");

  ChordDiagram current = framed_to_chord_diagram(smooth_many(g, found.choices));
  const std::string target_key = canonical_word(target).to_string();
  while (true) {
    std::optional<MoveSite> site;
    for (const MoveSite& m : find_moves(current)) {
      if (m.kind == MoveSite::Kind::r2_remove) {
        site = m;
        break;
      }
    }
    if (!site) break;
    ChordDiagram next = apply_move(current, *site);
    FramedFourGraph frame = chord_diagram_to_framed(current);
    bool realizable = false;
    for (SmoothVariant va :
         {SmoothVariant::join_01_23, SmoothVariant::join_03_12}) {
      for (SmoothVariant vb :
           {SmoothVariant::join_01_23, SmoothVariant::join_03_12}) {
        FramedFourGraph sm = smooth_many(
            frame, {{site->chords[0], va}, {site->chords[1], vb}});
        auto diagram = single_traversal_diagram(sm);
        if (!diagram) continue;
        if (canonical_word(*diagram).to_string() ==
            canonical_word(next).to_string()) {
          realizable = true;
          break;
        }
      }
      if (realizable) break;
    }
    if (!realizable)
      throw ValidationError(
          "an R2 step of the reduction is not realizable as a smoothing (" +
          site->to_spec(current) + " on " + current.to_string() + ")");
    current = next;
  }
  if (canonical_word(current).to_string() != target_key)
    throw InternalError("R2 reductions disagree on their endpoint");
}

ViLowerResult vi_lower_bound(const FramedFourGraph& delta,
                             const ChordDiagram& gamma,
                             const std::optional<ChainEvidence>& chain,
                             std::uint64_t budget) {
  CertifyOutcome cert = certify_minimal(gamma);
  if (!cert.ok())
    throw ValidationError("diagram does not certify: " +
                          cert.refused_predicate);

  FramedFourGraph gamma_frame = chord_diagram_to_framed(gamma);
  if (!isomorphic(delta, gamma_frame)) {
    long search_budget = static_cast<long>(
        std::min<std::uint64_t>(budget, static_cast<std::uint64_t>(LONG_MAX)));
    verify_smoothing_descent(delta, gamma, search_budget);
  }

  ViLowerResult out;
  out.bound.kind = BoundKind::lower_bound;
  out.bound.witness = "no chain link produced a floor";
  bool have = false;
  auto consider = [&](const std::string& label, const CrossingBound& b) {
    out.links.push_back(label + ": " + to_string(b));
    if (!have || b.proven_at_least() > out.bound.value) {
      have = true;
      out.bound.value = b.proven_at_least();
      out.bound.witness = out.links.back();
    }
  };

  consider("own framed graph", cr_framed_exact(gamma_frame, budget));

  if (chain) {
    FramedFourGraph resolved = smooth_many(gamma_frame, chain->recovery);
    auto diagram = single_traversal_diagram(resolved);
    if (!diagram ||
        canonical_word(*diagram).to_string() !=
            canonical_word(chain->gamma_prime).to_string())
      throw ValidationError(
          "recovery choices do not resolve the diagram to the claimed one");
    FramedFourGraph prime_frame = chord_diagram_to_framed(chain->gamma_prime);
    consider("resolved diagram graph", cr_framed_exact(prime_frame, budget));

    if (chain->base_graph) {
      const TrivalentGraph& L = *chain->base_graph;
      MultiGraph named{L.vertex_count(), {}};
      for (auto [a, b] : underlying_multigraph(prime_frame).edges) {
        int u = parse_vertex_name(chain->gamma_prime.chord_name(a),
                                  L.vertex_count());
        int v = parse_vertex_name(chain->gamma_prime.chord_name(b),
                                  L.vertex_count());
        named.edges.emplace_back(u, v);
      }
      auto sub = normalised_edges(L.graph);
      auto super = normalised_edges(named);
      if (!std::includes(super.begin(), super.end(), sub.begin(), sub.end()))
        throw ValidationError(
            "base graph is not a sub-multigraph of the resolved diagram's "
            "graph");
      consider("base graph", cr_graph_exact(L.graph, budget));
    }
  }
  return out;
}

}  // namespace freeknot
