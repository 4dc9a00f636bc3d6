#include "freeknot/construct.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "freeknot/errors.hpp"
#include "freeknot/framed_graph.hpp"
#include "freeknot/parity.hpp"

namespace freeknot {

namespace {

std::uint64_t derived_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

int mod_inverse(int r, int p) {
  // p is prime, so r^(p-2) works; p stays small here, plain loop is fine.
  for (int s = 1; s < p; ++s)
    if (s * r % p == 1) return s;
  throw InternalError("no inverse mod p");
}

int chord_vertex(const ChordDiagram& cd, int pos) {
  return std::stoi(cd.chord_name(cd.chord_at(pos)));
}

ChordDiagram delete_chord_by_id(const ChordDiagram& cd, int gone) {
  std::vector<int> word;
  for (int p = 0; p < cd.length(); ++p)
    if (cd.chord_at(p) != gone) word.push_back(cd.chord_at(p));
  return ChordDiagram::from_id_word(word, cd.chord_names());
}

}  // namespace

TrivalentGraph make_trivalent(int vertex_count,
                              std::vector<std::pair<int, int>> edges) {
  MultiGraph g{vertex_count, std::move(edges)};
  if (vertex_count <= 0)
    throw ValidationError("trivalent graph needs at least one vertex");
  for (auto [u, v] : g.edges)
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
      throw ValidationError("edge endpoint out of range");
  auto deg = degrees(g);
  for (int v = 0; v < vertex_count; ++v)
    if (deg[v] != 3)
      throw ValidationError("vertex " + std::to_string(v) + " has degree " +
                            std::to_string(deg[v]) + ", expected 3");
  if (!connected(g)) throw ValidationError("trivalent graph not connected");
  return TrivalentGraph{std::move(g)};
}

ChordDiagram qr_diagram(int p) {
  if (!is_prime(p)) throw ValidationError(std::to_string(p) + " is not prime");
  if (p < 7)
    throw ValidationError("need a prime >= 7, got " + std::to_string(p));

  std::vector<std::string> tokens;
  tokens.reserve(p - 3);
  for (int r = 2; r <= p - 2; ++r) {
    int inv = mod_inverse(r, p);
    tokens.push_back(std::to_string(std::min(r, inv)));
  }
  return ChordDiagram::from_tokens(tokens);
}

PairAndFrameResult pair_and_frame(const TrivalentGraph& L,
                                  std::uint64_t seed) {
  const int n = L.vertex_count();
  if (n % 2 != 0)
    throw ValidationError("trivalent graph must have an even vertex count");
  std::mt19937_64 rng(seed);

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);

  PairAndFrameResult out;
  std::vector<std::pair<int, int>> all_edges = L.graph.edges;
  const int base_edges = static_cast<int>(all_edges.size());
  for (int i = 0; i < n; i += 2) {
    out.pairing.emplace_back(perm[i], perm[i + 1]);
    all_edges.emplace_back(perm[i], perm[i + 1]);
  }

  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (edge id, to)
  for (int e = 0; e < static_cast<int>(all_edges.size()); ++e) {
    auto [u, v] = all_edges[e];
    adj[u].emplace_back(e, v);
    adj[v].emplace_back(e, u);
  }
  for (auto& list : adj) std::shuffle(list.begin(), list.end(), rng);

  // Hierholzer: every degree is 4 and the graph is connected, so a circuit
  // through all edges exists.
  std::vector<char> used(all_edges.size(), 0);
  std::vector<std::size_t> ptr(n, 0);
  std::vector<std::pair<int, int>> stack{{0, -1}};  // (vertex, incoming edge)
  std::vector<std::pair<int, int>> popped;
  while (!stack.empty()) {
    int v = stack.back().first;
    bool advanced = false;
    while (ptr[v] < adj[v].size()) {
      auto [eid, w] = adj[v][ptr[v]++];
      if (used[eid]) continue;
      used[eid] = 1;
      stack.emplace_back(w, eid);
      advanced = true;
      break;
    }
    if (!advanced) {
      popped.push_back(stack.back());
      stack.pop_back();
    }
  }
  std::reverse(popped.begin(), popped.end());
  if (popped.size() != all_edges.size() + 1)
    throw InternalError("euler circuit missed some edges");

  std::vector<int> word;
  for (std::size_t i = 1; i < popped.size(); ++i) {
    word.push_back(popped[i].first);
    out.circuit_edges.push_back(popped[i].second);
  }
  std::vector<std::string> names(n);
  for (int v = 0; v < n; ++v) names[v] = std::to_string(v);
  out.diagram = ChordDiagram::from_id_word(word, names);

  const int m = out.diagram.length();
  out.arc_is_pairing.assign(m, false);
  for (int p = 0; p < m; ++p)
    out.arc_is_pairing[p] = out.circuit_edges[(p + 1) % m] >= base_edges;
  return out;
}

OddifyResult oddify(const ChordDiagram& cd) {
  if (cd.empty())
    throw ValidationError("cannot oddify the empty diagram");
  const int n = cd.chord_count();
  const int m = cd.length();

  // A chord with adjacent endpoints leaves no room: any chord linking only
  // it has both ends beside it and the two always form a removable bigon.
  for (int c = 0; c < n; ++c) {
    auto [first, second] = cd.chord_ends(c);
    if (second - first == 1 || (first == 0 && second == m - 1))
      throw ValidationError("chord " + cd.chord_name(c) +
                            " has adjacent endpoints; its flanking chord "
                            "would always form a removable bigon");
  }

  // Hosts with even interlacement need one flanking chord to flip parity;
  // odd hosts take one per end to keep it.
  std::vector<char> flanked(m, 0);
  for (int c = 0; c < n; ++c) {
    auto [first, second] = cd.chord_ends(c);
    if (chord_parity(cd, c) == Parity::even) {
      flanked[first] = 1;
    } else {
      flanked[first] = 1;
      flanked[second] = 1;
    }
  }

  std::set<std::string> used_names(cd.chord_names().begin(),
                                   cd.chord_names().end());
  auto fresh_small_name = [&](const std::string& host, int which) {
    std::string name = host + (which == 0 ? "a" : "b");
    while (used_names.count(name)) name += "'";
    used_names.insert(name);
    return name;
  };

  std::vector<int> word;
  std::vector<std::string> names = cd.chord_names();
  OddifyResult out;
  std::vector<std::string> small_names_in_order;
  for (int p = 0; p < m; ++p) {
    if (flanked[p]) {
      int host = cd.chord_at(p);
      const std::string& host_name = cd.chord_name(host);
      int which = (p == cd.chord_ends(host).first) ? 0 : 1;
      std::string small = fresh_small_name(host_name, which);
      int id = static_cast<int>(names.size());
      names.push_back(small);
      out.small_chords[host_name].push_back(small);
      small_names_in_order.push_back(small);
      word.push_back(id);
      word.push_back(cd.chord_at(p));
      word.push_back(id);
    } else {
      word.push_back(cd.chord_at(p));
    }
  }
  out.gamma = ChordDiagram::from_id_word(word, names);

  if (out.gamma.chord_count() > 3 * n)
    throw InternalError("oddified diagram exceeds 3x chord bound");

  // Every flanking chord must link its host and nothing else.
  for (const auto& [host_name, smalls] : out.small_chords) {
    for (const auto& small : smalls) {
      int sid = *out.gamma.find_chord(small);
      int hid = *out.gamma.find_chord(host_name);
      if (interlacement_degree(out.gamma, sid) != 1 ||
          !linked(out.gamma, sid, hid))
        throw InternalError("flanking chord " + small +
                            " links more than its host");
    }
  }

  for (int c = 0; c < out.gamma.chord_count(); ++c)
    if (chord_parity(out.gamma, c) == Parity::even)
      throw ValidationError("oddify left chord " + out.gamma.chord_name(c) +
                            " even");
  if (!is_irreducibly_odd(out.gamma)) {
    for (int a = 0; a < out.gamma.chord_count(); ++a)
      for (int b = a + 1; b < out.gamma.chord_count(); ++b)
        if (r2_pair(out.gamma, a, b))
          throw ValidationError("oddify output admits a decreasing R2 on " +
                                out.gamma.chord_name(a) + "," +
                                out.gamma.chord_name(b));
    throw InternalError("oddify output not irreducibly odd");
  }

  // Peel the flanking chords one at a time; each must resolve back to the
  // plain deletion of its chord.
  std::map<std::string, SmoothVariant> step_variant;
  ChordDiagram current = out.gamma;
  for (auto it = small_names_in_order.rbegin();
       it != small_names_in_order.rend(); ++it) {
    int sid = *current.find_chord(*it);
    ChordDiagram target = delete_chord_by_id(current, sid);
    FramedFourGraph g = chord_diagram_to_framed(current);
    bool done = false;
    for (SmoothVariant variant :
         {SmoothVariant::join_01_23, SmoothVariant::join_03_12}) {
      FramedFourGraph res = smooth(g, {sid, variant});
      if (unicursal_components(res).count() != 1) continue;
      if (canonical_word(framed_to_chord_diagram(res)).to_string() ==
          canonical_word(target).to_string()) {
        step_variant[*it] = variant;
        done = true;
        break;
      }
    }
    if (!done)
      throw ValidationError("resolving flanking chord " + *it +
                            " does not recover the deletion");
    current = target;
  }
  if (canonical_word(current).to_string() != canonical_word(cd).to_string())
    throw InternalError("peeling flanking chords did not recover the input");

  for (const auto& small : small_names_in_order)
    out.recovery.push_back(
        {*out.gamma.find_chord(small), step_variant.at(small)});
  FramedFourGraph all_at_once =
      smooth_many(chord_diagram_to_framed(out.gamma), out.recovery);
  if (unicursal_components(all_at_once).count() != 1 ||
      canonical_word(framed_to_chord_diagram(all_at_once)).to_string() !=
          canonical_word(cd).to_string())
    throw ValidationError(
        "resolving all flanking chords together does not recover the input");

  return out;
}

Lemma2Output lemma2(const TrivalentGraph& L, std::uint64_t seed,
                    int retry_budget) {
  std::string last_failure = "no attempts made";
  for (int attempt = 0; attempt < retry_budget; ++attempt) {
    std::uint64_t s = attempt == 0 ? seed : derived_seed(seed, attempt);
    PairAndFrameResult pf = pair_and_frame(L, s);

    // The circuit arcs are exactly the edges of L plus the pairing.
    const int m = pf.diagram.length();
    std::vector<std::pair<int, int>> non_pairing, pairing_arcs;
    for (int p = 0; p < m; ++p) {
      int u = chord_vertex(pf.diagram, p);
      int v = chord_vertex(pf.diagram, (p + 1) % m);
      auto edge = std::minmax(u, v);
      if (pf.arc_is_pairing[p])
        pairing_arcs.emplace_back(edge.first, edge.second);
      else
        non_pairing.emplace_back(edge.first, edge.second);
    }
    std::sort(non_pairing.begin(), non_pairing.end());
    std::sort(pairing_arcs.begin(), pairing_arcs.end());
    MultiGraph pairing_graph{L.vertex_count(), pf.pairing};
    if (non_pairing != normalised_edges(L.graph) ||
        pairing_arcs != normalised_edges(pairing_graph))
      throw InternalError("circuit arcs do not match the source edges");

    try {
      OddifyResult odd = oddify(pf.diagram);
      Lemma2Output out;
      out.gamma_prime = pf.diagram;
      out.gamma = odd.gamma;
      out.pairing = pf.pairing;
      out.circuit_edges = pf.circuit_edges;
      out.small_chords = odd.small_chords;
      out.recovery = odd.recovery;
      out.stats.v_L = L.vertex_count();
      out.stats.chords_gamma_prime = pf.diagram.chord_count();
      out.stats.chords_gamma = odd.gamma.chord_count();
      out.stats.attempts = attempt + 1;
      return out;
    } catch (const ValidationError& e) {
      last_failure = e.what();
    }
  }
  throw BudgetError("no valid augmentation after " +
                    std::to_string(retry_budget) +
                    " attempts; last failure: " + last_failure);
}

TrivalentGraph random_cubic(int n, std::uint64_t seed) {
  if (n < 4) throw ValidationError("need at least 4 vertices");
  if (n % 2 != 0) throw ValidationError("vertex count must be even");

  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::mt19937_64 rng(attempt == 0 ? seed : derived_seed(seed, attempt));
    std::vector<int> stubs;
    stubs.reserve(3 * n);
    for (int v = 0; v < n; ++v)
      for (int k = 0; k < 3; ++k) stubs.push_back(v);
    std::shuffle(stubs.begin(), stubs.end(), rng);
    std::vector<std::pair<int, int>> edges;
    bool simple = true;
    std::set<std::pair<int, int>> distinct;
    for (std::size_t i = 0; i < stubs.size(); i += 2) {
      auto e = std::minmax(stubs[i], stubs[i + 1]);
      if (e.first == e.second || !distinct.insert(e).second) simple = false;
      edges.emplace_back(stubs[i], stubs[i + 1]);
    }
    if (!simple) continue;
    MultiGraph g{n, edges};
    if (!connected(g)) continue;
    return TrivalentGraph{std::move(g)};
  }
  throw BudgetError("could not sample a simple connected cubic graph");
}

ChordDiagram virtual_to_free(std::string_view gauss_code) {
  std::istringstream in{std::string(gauss_code)};
  std::string tok;
  std::vector<std::string> labels;
  std::map<std::string, std::pair<int, int>> seen;  // label -> (#O, #U)
  while (in >> tok) {
    if (tok.size() < 3 || (tok.front() != 'O' && tok.front() != 'U') ||
        (tok.back() != '+' && tok.back() != '-'))
      throw ValidationError("bad gauss code token '" + tok +
                            "', expected e.g. O1+ or U2-");
    std::string label = tok.substr(1, tok.size() - 2);
    if (tok.front() == 'O')
      seen[label].first += 1;
    else
      seen[label].second += 1;
    labels.push_back(label);
  }
  for (const auto& [label, counts] : seen) {
    if (counts.first != 1 || counts.second != 1)
      throw ValidationError("crossing " + label + " appears " +
                            std::to_string(counts.first) + " times as O and " +
                            std::to_string(counts.second) + " times as U");
  }
  return ChordDiagram::from_tokens(labels);
}

std::pair<ChordDiagram, std::vector<SmoothingChoice>> reconstruct_descent(
    const ChordDiagram& gamma, const TrivalentGraph& L) {
  const int n = L.vertex_count();
  auto vertex_name = [&](const std::string& name) -> int {
    std::size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(name, &used);
    } catch (const std::exception&) {
      return -1;
    }
    if (used != name.size() || v < 0 || v >= n) return -1;
    return v;
  };

  std::vector<std::string> peel_names;
  ChordDiagram current = gamma;
  bool peeled = true;
  std::map<std::string, SmoothVariant> variant_of;
  while (peeled) {
    peeled = false;
    for (int c = 0; c < current.chord_count(); ++c) {
      if (vertex_name(current.chord_name(c)) >= 0) continue;
      ChordDiagram target = delete_chord_by_id(current, c);
      FramedFourGraph g = chord_diagram_to_framed(current);
      bool resolved = false;
      for (SmoothVariant variant :
           {SmoothVariant::join_01_23, SmoothVariant::join_03_12}) {
        FramedFourGraph res = smooth(g, {c, variant});
        if (unicursal_components(res).count() != 1) continue;
        if (canonical_word(framed_to_chord_diagram(res)).to_string() ==
            canonical_word(target).to_string()) {
          variant_of[current.chord_name(c)] = variant;
          resolved = true;
          break;
        }
      }
      if (!resolved)
        throw ValidationError("chord " + current.chord_name(c) +
                              " does not resolve to its own deletion");
      peel_names.push_back(current.chord_name(c));
      current = target;
      peeled = true;
      break;
    }
  }

  if (current.chord_count() != n)
    throw ValidationError("peeled diagram has " +
                          std::to_string(current.chord_count()) +
                          " chords, expected one per graph vertex");

  std::vector<std::pair<int, int>> arcs;
  const int m = current.length();
  for (int p = 0; p < m; ++p) {
    int u = vertex_name(current.chord_name(current.chord_at(p)));
    int v = vertex_name(current.chord_name(current.chord_at((p + 1) % m)));
    if (u < 0 || v < 0)
      throw ValidationError("peeled diagram still has non-vertex chords");
    auto e = std::minmax(u, v);
    arcs.emplace_back(e.first, e.second);
  }
  std::sort(arcs.begin(), arcs.end());
  std::vector<std::pair<int, int>> want = normalised_edges(L.graph);
  std::vector<std::pair<int, int>> extra;
  for (auto arc : arcs) {
    auto it = std::find(want.begin(), want.end(), arc);
    if (it != want.end())
      want.erase(it);
    else
      extra.push_back(arc);
  }
  if (!want.empty())
    throw ValidationError("graph edge " + std::to_string(want[0].first) +
                          "-" + std::to_string(want[0].second) +
                          " is not an arc of the peeled diagram");
  std::vector<int> matched(n, 0);
  for (auto [u, v] : extra) {
    matched[u] += 1;
    matched[v] += 1;
  }
  for (int v = 0; v < n; ++v)
    if (matched[v] != 1)
      throw ValidationError(
          "leftover arcs are not a perfect matching: vertex " +
          std::to_string(v) + " is covered " + std::to_string(matched[v]) +
          " times");

  std::vector<SmoothingChoice> recovery;
  for (const auto& name : peel_names)
    recovery.push_back({*gamma.find_chord(name), variant_of.at(name)});
  return {std::move(current), std::move(recovery)};
}

std::optional<TrivalentGraph> builtin_trivalent(std::string_view name) {
  if (name == "k4")
    return make_trivalent(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  if (name == "prism3")
    return make_trivalent(6, {{0, 1},
                              {1, 2},
                              {2, 0},
                              {3, 4},
                              {4, 5},
                              {5, 3},
                              {0, 3},
                              {1, 4},
                              {2, 5}});
  if (name == "petersen")
    return make_trivalent(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                               {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                               {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
  return std::nullopt;
}

}  // namespace freeknot
