#include "freeknot/moves.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "freeknot/errors.hpp"
#include "freeknot/parity.hpp"

namespace freeknot {

namespace {

bool ends_adjacent(const ChordDiagram& cd, int chord) {
  auto [p, q] = cd.chord_ends(chord);
  const int m = cd.length();
  return (p + 1) % m == q || (q + 1) % m == p;
}

// Fresh labels for added chords: the smallest decimal strings not in use.
std::vector<std::string> fresh_names(const ChordDiagram& cd, int count) {
  std::set<std::string> used(cd.chord_names().begin(), cd.chord_names().end());
  std::vector<std::string> out;
  for (int k = 1; static_cast<int>(out.size()) < count; ++k) {
    std::string name = std::to_string(k);
    if (!used.count(name)) out.push_back(name);
  }
  return out;
}

ChordDiagram delete_chords(const ChordDiagram& cd, const std::vector<int>& gone) {
  std::vector<int> word;
  for (int p = 0; p < cd.length(); ++p) {
    int c = cd.chord_at(p);
    if (std::find(gone.begin(), gone.end(), c) == gone.end())
      word.push_back(c);
  }
  return ChordDiagram::from_id_word(word, cd.chord_names());
}

void validate_arc(const ChordDiagram& cd, int arc) {
  int max_arc = cd.empty() ? 0 : cd.length() - 1;
  if (arc < 0 || arc > max_arc)
    throw ValidationError("arc index " + std::to_string(arc) +
                          " out of range");
}

// Inserts `letters` (ids offset past existing chords) after position
// `arc` of the word; for the empty diagram the letters become the word.
std::vector<int> insert_after(const std::vector<int>& word, int arc,
                              const std::vector<int>& letters) {
  std::vector<int> out;
  out.reserve(word.size() + letters.size());
  if (word.empty()) {
    out = letters;
    return out;
  }
  for (int p = 0; p < static_cast<int>(word.size()); ++p) {
    out.push_back(word[p]);
    if (p == arc)
      for (int x : letters) out.push_back(x);
  }
  return out;
}

bool valid_r3_pairs(const ChordDiagram& cd,
                    const std::vector<std::pair<int, int>>& pairs) {
  if (pairs.size() != 3) return false;
  const int m = cd.length();
  std::set<int> positions;
  std::set<int> chords;
  std::vector<std::pair<int, int>> chord_pairs;
  for (auto [p, q] : pairs) {
    if (p < 0 || p >= m || q != (p + 1) % m) return false;
    positions.insert(p);
    positions.insert(q);
    int a = cd.chord_at(p);
    int b = cd.chord_at(q);
    if (a == b) return false;
    chords.insert(a);
    chords.insert(b);
    chord_pairs.emplace_back(std::min(a, b), std::max(a, b));
  }
  if (positions.size() != 6 || chords.size() != 3) return false;
  std::sort(chord_pairs.begin(), chord_pairs.end());
  return std::adjacent_find(chord_pairs.begin(), chord_pairs.end()) ==
         chord_pairs.end();
}

}  // namespace

std::string MoveSite::to_spec(const ChordDiagram& cd) const {
  std::ostringstream out;
  switch (kind) {
    case Kind::r1_remove:
      out << "r1-:" << cd.chord_name(chords[0]);
      break;
    case Kind::r2_remove:
      out << "r2-:" << cd.chord_name(chords[0]) << ','
          << cd.chord_name(chords[1]);
      break;
    case Kind::r1_add:
      out << "r1+:" << arcs[0];
      break;
    case Kind::r2_add:
      out << "r2+:" << arcs[0] << ',' << arcs[1] << ','
          << (crossed ? "crossed" : "nested");
      break;
    case Kind::r3:
      out << "r3:";
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (i) out << ',';
        out << pairs[i].first << '-' << pairs[i].second;
      }
      break;
  }
  return out.str();
}

std::vector<MoveSite> find_moves(const ChordDiagram& cd) {
  std::vector<MoveSite> sites;
  const int m = cd.length();

  for (int c = 0; c < cd.chord_count(); ++c) {
    if (ends_adjacent(cd, c)) {
      MoveSite s;
      s.kind = MoveSite::Kind::r1_remove;
      s.chords = {c};
      sites.push_back(std::move(s));
    }
  }

  for (int a = 0; a < cd.chord_count(); ++a) {
    for (int b = a + 1; b < cd.chord_count(); ++b) {
      if (r2_pair(cd, a, b)) {
        MoveSite s;
        s.kind = MoveSite::Kind::r2_remove;
        s.chords = {a, b};
        sites.push_back(std::move(s));
      }
    }
  }

  // R3: three disjoint adjacent endpoint pairs covering three chords, each
  // chord contributing one end to each of two different pairs.
  std::vector<std::pair<int, int>> mixed;
  for (int p = 0; p < m; ++p) {
    int q = (p + 1) % m;
    if (cd.chord_at(p) != cd.chord_at(q)) mixed.emplace_back(p, q);
  }
  for (std::size_t i = 0; i < mixed.size(); ++i)
    for (std::size_t j = i + 1; j < mixed.size(); ++j)
      for (std::size_t k = j + 1; k < mixed.size(); ++k) {
        std::vector<std::pair<int, int>> pairs{mixed[i], mixed[j], mixed[k]};
        if (valid_r3_pairs(cd, pairs)) {
          MoveSite s;
          s.kind = MoveSite::Kind::r3;
          s.pairs = std::move(pairs);
          sites.push_back(std::move(s));
        }
      }

  int arc_count = cd.empty() ? 1 : m;
  for (int arc = 0; arc < arc_count; ++arc) {
    MoveSite s;
    s.kind = MoveSite::Kind::r1_add;
    s.arcs = {arc};
    sites.push_back(std::move(s));
  }

  for (int i = 0; i < arc_count; ++i)
    for (int j = i; j < arc_count; ++j)
      for (bool crossed : {false, true}) {
        MoveSite s;
        s.kind = MoveSite::Kind::r2_add;
        s.arcs = {i, j};
        s.crossed = crossed;
        sites.push_back(std::move(s));
      }

  return sites;
}

ChordDiagram apply_move(const ChordDiagram& cd, const MoveSite& site) {
  switch (site.kind) {
    case MoveSite::Kind::r1_remove: {
      if (site.chords.size() != 1)
        throw ValidationError("r1- needs exactly one chord");
      int c = site.chords[0];
      if (c < 0 || c >= cd.chord_count())
        throw ValidationError("r1-: no such chord");
      if (!ends_adjacent(cd, c))
        throw ValidationError("r1-: chord " + cd.chord_name(c) +
                              " has no adjacent ends");
      return delete_chords(cd, {c});
    }
    case MoveSite::Kind::r2_remove: {
      if (site.chords.size() != 2)
        throw ValidationError("r2- needs exactly two chords");
      int a = site.chords[0], b = site.chords[1];
      if (a < 0 || b < 0 || a >= cd.chord_count() || b >= cd.chord_count())
        throw ValidationError("r2-: no such chord");
      if (!r2_pair(cd, a, b))
        throw ValidationError("r2-: chords " + cd.chord_name(a) + "," +
                              cd.chord_name(b) +
                              " are not pairwise adjacent at both ends");
      return delete_chords(cd, {a, b});
    }
    case MoveSite::Kind::r1_add: {
      if (site.arcs.size() != 1)
        throw ValidationError("r1+ needs exactly one arc");
      validate_arc(cd, site.arcs[0]);
      auto names = cd.chord_names();
      int x = static_cast<int>(names.size());
      names.push_back(fresh_names(cd, 1)[0]);
      return ChordDiagram::from_id_word(
          insert_after(cd.word(), site.arcs[0], {x, x}), names);
    }
    case MoveSite::Kind::r2_add: {
      if (site.arcs.size() != 2)
        throw ValidationError("r2+ needs exactly two arcs");
      int i = site.arcs[0], j = site.arcs[1];
      validate_arc(cd, i);
      validate_arc(cd, j);
      if (i > j) std::swap(i, j);
      auto names = cd.chord_names();
      auto fresh = fresh_names(cd, 2);
      int x = static_cast<int>(names.size());
      int y = x + 1;
      names.push_back(fresh[0]);
      names.push_back(fresh[1]);
      std::vector<int> word;
      if (i == j) {
        word = insert_after(cd.word(), i,
                            site.crossed ? std::vector<int>{x, y, x, y}
                                         : std::vector<int>{x, y, y, x});
      } else {
        word = insert_after(cd.word(), j,
                            site.crossed ? std::vector<int>{x, y}
                                         : std::vector<int>{y, x});
        word = insert_after(word, i, {x, y});
      }
      return ChordDiagram::from_id_word(word, names);
    }
    case MoveSite::Kind::r3: {
      if (!valid_r3_pairs(cd, site.pairs))
        throw ValidationError("r3: site is not a valid triangle");
      std::vector<int> word = cd.word();
      for (auto [p, q] : site.pairs) std::swap(word[p], word[q]);
      return ChordDiagram::from_id_word(word, cd.chord_names());
    }
  }
  throw InternalError("unhandled move kind");
}

MoveSite parse_move_site(const ChordDiagram& cd, const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw ValidationError("move spec needs kind:args, got " + spec);
  std::string kind = spec.substr(0, colon);
  std::string args = spec.substr(colon + 1);
  std::vector<std::string> parts;
  {
    std::string cur;
    for (char ch : args) {
      if (ch == ',') {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    parts.push_back(cur);
  }
  auto to_int = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      int v = std::stoi(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw ValidationError("bad number '" + s + "' in move spec");
    }
  };
  auto to_chord = [&](const std::string& s) {
    auto id = cd.find_chord(s);
    if (!id) throw ValidationError("unknown chord label " + s);
    return *id;
  };

  MoveSite site;
  if (kind == "r1-") {
    if (parts.size() != 1) throw ValidationError("r1- takes one chord");
    site.kind = MoveSite::Kind::r1_remove;
    site.chords = {to_chord(parts[0])};
  } else if (kind == "r2-") {
    if (parts.size() != 2) throw ValidationError("r2- takes two chords");
    site.kind = MoveSite::Kind::r2_remove;
    site.chords = {to_chord(parts[0]), to_chord(parts[1])};
  } else if (kind == "r1+") {
    if (parts.size() != 1) throw ValidationError("r1+ takes one arc");
    site.kind = MoveSite::Kind::r1_add;
    site.arcs = {to_int(parts[0])};
  } else if (kind == "r2+") {
    if (parts.size() != 3)
      throw ValidationError("r2+ takes two arcs and a flavour");
    site.kind = MoveSite::Kind::r2_add;
    site.arcs = {to_int(parts[0]), to_int(parts[1])};
    if (parts[2] == "crossed")
      site.crossed = true;
    else if (parts[2] == "nested")
      site.crossed = false;
    else
      throw ValidationError("r2+ flavour must be nested or crossed");
  } else if (kind == "r3") {
    if (parts.size() != 3) throw ValidationError("r3 takes three pairs");
    site.kind = MoveSite::Kind::r3;
    for (const auto& part : parts) {
      auto dash = part.find('-');
      if (dash == std::string::npos)
        throw ValidationError("r3 pair needs p-q, got " + part);
      site.pairs.emplace_back(to_int(part.substr(0, dash)),
                              to_int(part.substr(dash + 1)));
    }
  } else {
    throw ValidationError("unknown move kind " + kind);
  }
  return site;
}

FramedFourGraph smooth(const FramedFourGraph& g, SmoothingChoice choice) {
  return smooth_many(g, {choice});
}

FramedFourGraph smooth_many(const FramedFourGraph& g,
                            const std::vector<SmoothingChoice>& choices) {
  const int V = g.vertex_count();
  std::vector<int> partner(g.socket_count(), -1);
  std::vector<char> removed(V, 0);
  for (const auto& ch : choices) {
    if (ch.vertex < 0 || ch.vertex >= V)
      throw ValidationError("smoothing vertex " + std::to_string(ch.vertex) +
                            " out of range");
    if (removed[ch.vertex])
      throw ValidationError("vertex " + std::to_string(ch.vertex) +
                            " smoothed twice");
    removed[ch.vertex] = 1;
    int base = FramedFourGraph::socket_of(ch.vertex, 0);
    if (ch.variant == SmoothVariant::join_01_23) {
      partner[base + 0] = base + 1;
      partner[base + 1] = base + 0;
      partner[base + 2] = base + 3;
      partner[base + 3] = base + 2;
    } else {
      partner[base + 0] = base + 3;
      partner[base + 3] = base + 0;
      partner[base + 1] = base + 2;
      partner[base + 2] = base + 1;
    }
  }

  std::vector<int> new_id(V, -1);
  int kept = 0;
  for (int v = 0; v < V; ++v)
    if (!removed[v]) new_id[v] = kept++;

  auto is_removed_socket = [&](int s) {
    return removed[FramedFourGraph::vertex_of(s)];
  };
  auto renumber = [&](int s) {
    return FramedFourGraph::socket_of(new_id[FramedFourGraph::vertex_of(s)],
                                      FramedFourGraph::slot_of(s));
  };

  std::vector<std::pair<int, int>> edges;
  std::vector<char> done(g.socket_count(), 0);
  for (int a = 0; a < g.socket_count(); ++a) {
    if (is_removed_socket(a) || done[a]) continue;
    int b = g.mate(a);
    while (is_removed_socket(b)) {
      done[b] = 1;
      b = partner[b];
      done[b] = 1;
      b = g.mate(b);
    }
    done[a] = 1;
    done[b] = 1;
    edges.emplace_back(renumber(a), renumber(b));
  }

  int circles = g.circle_count();
  for (int s = 0; s < g.socket_count(); ++s) {
    if (!is_removed_socket(s) || done[s]) continue;
    int b = s;
    do {
      done[b] = 1;
      b = partner[b];
      done[b] = 1;
      b = g.mate(b);
    } while (b != s);
    ++circles;
  }

  return FramedFourGraph::from_edges(kept, edges, circles);
}

ChordDiagram reduce_r2(const ChordDiagram& cd) {
  ChordDiagram cur = cd;
  bool changed = true;
  while (changed) {
    changed = false;
    const int m = cur.length();
    for (int p = 0; p < m && !changed; ++p) {
      int a = cur.chord_at(p);
      int b = cur.chord_at((p + 1) % m);
      if (a != b && r2_pair(cur, a, b)) {
        std::vector<int> word;
        for (int q = 0; q < m; ++q) {
          int c = cur.chord_at(q);
          if (c != a && c != b) word.push_back(c);
        }
        cur = ChordDiagram::from_id_word(word, cur.chord_names());
        changed = true;
      }
    }
  }
  return canonical_word(cur);
}

}  // namespace freeknot
