#include "freeknot/chord_diagram.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "freeknot/errors.hpp"

namespace freeknot {

ChordDiagram ChordDiagram::from_tokens(const std::vector<std::string>& tokens) {
  std::map<std::string, int> ids;
  std::vector<int> word;
  std::vector<std::string> names;
  word.reserve(tokens.size());
  for (const auto& tok : tokens) {
    auto it = ids.find(tok);
    if (it == ids.end()) {
      it = ids.emplace(tok, static_cast<int>(names.size())).first;
      names.push_back(tok);
    }
    word.push_back(it->second);
  }
  return from_id_word(word, names);
}

ChordDiagram ChordDiagram::from_id_word(const std::vector<int>& word,
                                        const std::vector<std::string>& names) {
  std::vector<int> counts(names.size(), 0);
  for (int id : word) {
    if (id < 0 || id >= static_cast<int>(names.size()))
      throw InternalError("chord id out of range");
    ++counts[id];
  }
  for (std::size_t id = 0; id < counts.size(); ++id) {
    if (counts[id] != 0 && counts[id] != 2)
      throw ValidationError("label " + names[id] + " occurs " +
                            std::to_string(counts[id]) +
                            " times, expected exactly 2");
  }
  if (word.size() % 2 != 0)
    throw ValidationError("odd number of tokens in double occurrence word");

  ChordDiagram cd;
  std::vector<int> renumber(names.size(), -1);
  cd.word_.reserve(word.size());
  for (int id : word) {
    if (renumber[id] < 0) {
      renumber[id] = static_cast<int>(cd.names_.size());
      cd.names_.push_back(names[id]);
      cd.ends_.emplace_back(-1, -1);
    }
    int nid = renumber[id];
    int pos = static_cast<int>(cd.word_.size());
    if (cd.ends_[nid].first < 0)
      cd.ends_[nid].first = pos;
    else
      cd.ends_[nid].second = pos;
    cd.word_.push_back(nid);
  }
  return cd;
}

std::optional<int> ChordDiagram::find_chord(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return std::nullopt;
}

std::string ChordDiagram::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (i) out += ' ';
    out += names_[word_[i]];
  }
  return out;
}

ChordDiagram parse_dow(std::string_view text) {
  std::vector<std::string> tokens;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return ChordDiagram::from_tokens(tokens);
}

namespace {

// Reads the word from `start` in direction `dir`, relabelling chords
// 1, 2, ... by first occurrence.
std::vector<int> relabelled_reading(const std::vector<int>& word, int start,
                                    int dir) {
  const int m = static_cast<int>(word.size());
  std::vector<int> out(m);
  std::vector<int> seen(m, 0);
  int next = 1;
  for (int i = 0; i < m; ++i) {
    int p = ((start + dir * i) % m + m) % m;
    int c = word[p];
    if (seen[c] == 0) seen[c] = next++;
    out[i] = seen[c];
  }
  return out;
}

}  // namespace

ChordDiagram canonical_word(const ChordDiagram& cd) {
  if (cd.empty()) return ChordDiagram();
  const int m = cd.length();
  std::vector<int> best;
  for (int dir : {1, -1}) {
    for (int start = 0; start < m; ++start) {
      std::vector<int> cand = relabelled_reading(cd.word(), start, dir);
      if (best.empty() || cand < best) best = std::move(cand);
    }
  }
  std::vector<int> word(m);
  std::vector<std::string> names(cd.chord_count());
  for (int i = 0; i < m; ++i) word[i] = best[i] - 1;
  for (int id = 0; id < cd.chord_count(); ++id)
    names[id] = std::to_string(id + 1);
  return ChordDiagram::from_id_word(word, names);
}

}  // namespace freeknot
