#pragma once

#include <functional>
#include <string>
#include <vector>

#include "freeknot/chord_diagram.hpp"

namespace testutil {

// Every double occurrence word with exactly n chords, ids dense by first
// occurrence; there are (2n-1)!! of them.
inline std::vector<std::vector<int>> all_dows(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> word;
  std::vector<int> open;
  int fresh = 0;
  std::function<void()> rec = [&] {
    if (static_cast<int>(word.size()) == 2 * n) {
      out.push_back(word);
      return;
    }
    if (fresh < n) {
      word.push_back(fresh);
      open.push_back(fresh);
      ++fresh;
      rec();
      --fresh;
      open.pop_back();
      word.pop_back();
    }
    for (std::size_t i = 0; i < open.size(); ++i) {
      int id = open[i];
      word.push_back(id);
      open.erase(open.begin() + i);
      rec();
      open.insert(open.begin() + i, id);
      word.pop_back();
    }
  };
  rec();
  return out;
}

inline freeknot::ChordDiagram cd_of(const std::vector<int>& word) {
  int n = static_cast<int>(word.size()) / 2;
  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 0; i < n; ++i) names.push_back(std::to_string(i + 1));
  return freeknot::ChordDiagram::from_id_word(word, names);
}

}  // namespace testutil
