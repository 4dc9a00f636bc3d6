#include "freeknot/io.hpp"

#include <istream>
#include <sstream>

#include "freeknot/errors.hpp"

namespace freeknot {

namespace {

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

std::vector<std::string> tokens_of(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

[[noreturn]] void fail(const std::string& origin, int lineno,
                       const std::string& message) {
  throw ValidationError(origin + ":" + std::to_string(lineno) + ": " +
                        message);
}

int parse_int(const std::string& tok, const std::string& origin, int lineno) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(tok, &used);
  } catch (const std::exception&) {
    fail(origin, lineno, "expected an integer, got '" + tok + "'");
  }
  if (used != tok.size())
    fail(origin, lineno, "trailing characters in integer '" + tok + "'");
  return value;
}

int parse_socket(const std::string& tok, int vertices,
                 const std::string& origin, int lineno) {
  auto dot = tok.find('.');
  if (dot == std::string::npos || dot == 0 || dot + 1 == tok.size())
    fail(origin, lineno, "expected '<vertex>.<slot>', got '" + tok + "'");
  int v = parse_int(tok.substr(0, dot), origin, lineno);
  int slot = parse_int(tok.substr(dot + 1), origin, lineno);
  if (v < 0 || v >= vertices)
    fail(origin, lineno, "vertex " + std::to_string(v) + " out of range");
  if (slot < 0 || slot > 3)
    fail(origin, lineno, "slot " + std::to_string(slot) + " out of range");
  return FramedFourGraph::socket_of(v, slot);
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::vector<ChordDiagram> read_dow(std::istream& in,
                                   const std::string& origin) {
  std::vector<ChordDiagram> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokens_of(strip_comment(line));
    if (toks.empty()) continue;
    try {
      out.push_back(ChordDiagram::from_tokens(toks));
    } catch (const ValidationError& e) {
      fail(origin, lineno, e.what());
    }
  }
  return out;
}

FramedFourGraph read_fg(std::istream& in, const std::string& origin) {
  std::string line;
  int lineno = 0;
  bool saw_header = false;
  int vertices = 0;
  int circles = 0;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokens_of(strip_comment(line));
    if (toks.empty()) continue;
    if (!saw_header) {
      if (toks.size() != 3 || toks[0] != "fg")
        fail(origin, lineno, "expected header 'fg <vertices> <circles>'");
      vertices = parse_int(toks[1], origin, lineno);
      circles = parse_int(toks[2], origin, lineno);
      saw_header = true;
      continue;
    }
    if (toks.size() != 3 || toks[0] != "e")
      fail(origin, lineno, "expected edge line 'e <v>.<slot> <v>.<slot>'");
    edges.emplace_back(parse_socket(toks[1], vertices, origin, lineno),
                       parse_socket(toks[2], vertices, origin, lineno));
  }
  if (!saw_header) fail(origin, 1, "expected header 'fg <vertices> <circles>'");
  try {
    return FramedFourGraph::from_edges(vertices, edges, circles);
  } catch (const ValidationError& e) {
    throw ValidationError(origin + ": " + e.what());
  }
}

std::string write_fg(const FramedFourGraph& g) {
  std::ostringstream out;
  out << "fg " << g.vertex_count() << ' ' << g.circle_count() << '\n';
  for (auto [a, b] : g.edges())
    out << "e " << FramedFourGraph::vertex_of(a) << '.'
        << FramedFourGraph::slot_of(a) << ' ' << FramedFourGraph::vertex_of(b)
        << '.' << FramedFourGraph::slot_of(b) << '\n';
  return out.str();
}

MultiGraph read_graph(std::istream& in, const std::string& origin) {
  std::string line;
  int lineno = 0;
  bool saw_header = false;
  MultiGraph g;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokens_of(strip_comment(line));
    if (toks.empty()) continue;
    if (!saw_header) {
      if (toks.size() != 2 || toks[0] != "tg")
        fail(origin, lineno, "expected header 'tg <vertices>'");
      g.vertex_count = parse_int(toks[1], origin, lineno);
      if (g.vertex_count < 0) fail(origin, lineno, "negative vertex count");
      saw_header = true;
      continue;
    }
    if (toks.size() != 3 || toks[0] != "e")
      fail(origin, lineno, "expected edge line 'e <u> <v>'");
    int u = parse_int(toks[1], origin, lineno);
    int v = parse_int(toks[2], origin, lineno);
    if (u < 0 || u >= g.vertex_count || v < 0 || v >= g.vertex_count)
      fail(origin, lineno, "edge endpoint out of range");
    g.edges.emplace_back(u, v);
  }
  if (!saw_header) fail(origin, 1, "expected header 'tg <vertices>'");
  return g;
}

TrivalentGraph read_tg(std::istream& in, const std::string& origin) {
  MultiGraph g = read_graph(in, origin);
  try {
    return make_trivalent(g.vertex_count, std::move(g.edges));
  } catch (const ValidationError& e) {
    throw ValidationError(origin + ": " + e.what());
  }
}

std::string write_tg(const TrivalentGraph& g) {
  std::ostringstream out;
  out << "tg " << g.vertex_count() << '\n';
  for (auto [u, v] : g.graph.edges) out << "e " << u << ' ' << v << '\n';
  return out.str();
}

std::string export_dot(const ChordDiagram& cd) {
  std::ostringstream out;
  out << "graph diagram {\n";
  if (cd.empty()) {
    out << "  // bare circle: a single core node stands for the chordless "
           "cycle\n";
    out << "  core [shape=circle label=\"\"];\n";
    out << "}\n";
    return out.str();
  }
  out << "  layout=circo;\n";
  const int m = cd.length();
  for (int p = 0; p < m; ++p)
    out << "  p" << p << " [label=" << quoted(cd.chord_name(cd.chord_at(p)))
        << "];\n";
  for (int p = 0; p < m; ++p)
    out << "  p" << p << " -- p" << (p + 1) % m << ";\n";
  for (int c = 0; c < cd.chord_count(); ++c) {
    auto [i, j] = cd.chord_ends(c);
    out << "  p" << i << " -- p" << j << " [style=dashed];\n";
  }
  out << "}\n";
  return out.str();
}

std::string export_dot(const FramedFourGraph& g) {
  std::ostringstream out;
  out << "graph framed {\n";
  for (int v = 0; v < g.vertex_count(); ++v)
    out << "  v" << v << " [shape=box label=\"" << v << "\"];\n";
  for (auto [a, b] : g.edges())
    out << "  v" << FramedFourGraph::vertex_of(a) << " -- v"
        << FramedFourGraph::vertex_of(b) << " [taillabel=\""
        << FramedFourGraph::slot_of(a) << "\" headlabel=\""
        << FramedFourGraph::slot_of(b) << "\"];\n";
  for (int c = 0; c < g.circle_count(); ++c)
    out << "  circle" << c << " [shape=circle label=\"\"];\n";
  out << "}\n";
  return out.str();
}

std::string export_dot(const InterlacementGraph& ig) {
  std::ostringstream out;
  out << "graph interlacement {\n";
  for (std::size_t i = 0; i < ig.labels.size(); ++i)
    out << "  c" << i << " [label=" << quoted(ig.labels[i]) << "];\n";
  for (auto [a, b] : ig.edges) out << "  c" << a << " -- c" << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace freeknot
