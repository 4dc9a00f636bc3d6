#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace freeknot {

// A chord diagram stored as a double occurrence word: 2n positions on a
// circle, read cyclically, with each of the n chord ids appearing exactly
// twice. Ids are dense in 0..n-1 and assigned in order of first occurrence;
// the original token spelling of each chord is kept for display. Values are
// immutable once constructed.
class ChordDiagram {
 public:
  // The empty diagram: no chords, the core circle alone.
  ChordDiagram() = default;

  // Builds a diagram from label tokens. Throws ValidationError unless every
  // label occurs exactly twice.
  static ChordDiagram from_tokens(const std::vector<std::string>& tokens);

  // Builds a diagram from a word over arbitrary ids indexing into names.
  // Ids are renumbered by first occurrence; names follow their ids.
  static ChordDiagram from_id_word(const std::vector<int>& word,
                                   const std::vector<std::string>& names);

  int chord_count() const { return static_cast<int>(names_.size()); }
  int length() const { return static_cast<int>(word_.size()); }
  bool empty() const { return word_.empty(); }

  int chord_at(int pos) const { return word_[pos]; }
  const std::vector<int>& word() const { return word_; }
  const std::string& chord_name(int id) const { return names_[id]; }
  const std::vector<std::string>& chord_names() const { return names_; }

  // The two positions of a chord, in increasing order.
  std::pair<int, int> chord_ends(int id) const { return ends_[id]; }

  std::optional<int> find_chord(std::string_view name) const;

  // Tokens joined by single spaces; empty string for the empty diagram.
  std::string to_string() const;

 private:
  std::vector<int> word_;
  std::vector<std::string> names_;
  std::vector<std::pair<int, int>> ends_;
};

// Parses one whitespace-separated double occurrence word.
ChordDiagram parse_dow(std::string_view text);

// The canonical representative of a diagram under rotation, reflection and
// relabelling: the lexicographically least relabelled word over all 2*2n
// reading frames, with chords renamed "1", "2", ... by first occurrence.
// Idempotent; equal canonical words characterise isomorphic diagrams.
ChordDiagram canonical_word(const ChordDiagram& cd);

}  // namespace freeknot
