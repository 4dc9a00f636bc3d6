#include "freeknot/parity.hpp"

#include <string>

#include "freeknot/errors.hpp"

namespace freeknot {

namespace {

void check_chord(const ChordDiagram& cd, int chord) {
  if (chord < 0 || chord >= cd.chord_count())
    throw ValidationError("chord id " + std::to_string(chord) +
                          " out of range");
}

// Whether position q lies strictly inside the arc from p1 forward to p2.
bool inside(int q, int p1, int p2, int m) {
  int span = (p2 - p1 + m) % m;
  int off = (q - p1 + m) % m;
  return off > 0 && off < span;
}

bool adjacent(int p, int q, int m) {
  return (p + 1) % m == q || (q + 1) % m == p;
}

}  // namespace

bool linked(const ChordDiagram& cd, int a, int b) {
  check_chord(cd, a);
  check_chord(cd, b);
  if (a == b) return false;
  auto [a1, a2] = cd.chord_ends(a);
  auto [b1, b2] = cd.chord_ends(b);
  const int m = cd.length();
  return inside(b1, a1, a2, m) != inside(b2, a1, a2, m);
}

int interlacement_degree(const ChordDiagram& cd, int chord) {
  check_chord(cd, chord);
  int deg = 0;
  for (int c = 0; c < cd.chord_count(); ++c)
    if (linked(cd, chord, c)) ++deg;
  return deg;
}

Parity chord_parity(const ChordDiagram& cd, int chord) {
  return interlacement_degree(cd, chord) % 2 == 1 ? Parity::odd
                                                  : Parity::even;
}

bool is_odd(const ChordDiagram& cd) {
  for (int c = 0; c < cd.chord_count(); ++c)
    if (chord_parity(cd, c) == Parity::even) return false;
  return true;
}

bool r2_pair(const ChordDiagram& cd, int a, int b) {
  check_chord(cd, a);
  check_chord(cd, b);
  if (a == b) return false;
  auto [a1, a2] = cd.chord_ends(a);
  auto [b1, b2] = cd.chord_ends(b);
  const int m = cd.length();
  return (adjacent(a1, b1, m) && adjacent(a2, b2, m)) ||
         (adjacent(a1, b2, m) && adjacent(a2, b1, m));
}

bool is_irreducibly_odd(const ChordDiagram& cd) {
  if (!is_odd(cd)) return false;
  for (int a = 0; a < cd.chord_count(); ++a)
    for (int b = a + 1; b < cd.chord_count(); ++b)
      if (r2_pair(cd, a, b)) return false;
  return true;
}

InterlacementGraph interlacement(const ChordDiagram& cd) {
  InterlacementGraph g;
  g.labels = cd.chord_names();
  for (int a = 0; a < cd.chord_count(); ++a)
    for (int b = a + 1; b < cd.chord_count(); ++b)
      if (linked(cd, a, b)) g.edges.emplace_back(a, b);
  return g;
}

}  // namespace freeknot
