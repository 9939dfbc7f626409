// Test-only brute-force oracle for the closed surface group: breadth-first
// search over relator insertions.  Independent of the Dehn-reduction path
// in src/surface.cpp on purpose; keep it that way.
#pragma once

#include <deque>
#include <unordered_set>

#include "twistlab/surface.hpp"
#include "twistlab/word.hpp"

namespace twistlab::oracle {

using WordSet = std::unordered_set<Word, WordHash>;

// All freely reduced words of length <= cap equal to w in the closed
// surface group, found by inserting relator cycles anywhere and freely
// reducing.
inline WordSet word_class(const Word& w, std::size_t cap,
                          std::size_t max_states = 2000000) {
  WordSet seen{w};
  std::deque<Word> queue{w};
  while (!queue.empty()) {
    Word cur = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i <= cur.size(); ++i) {
      std::vector<Letter> head(cur.letters().begin(), cur.letters().begin() + i);
      for (const Word& cycle : surface::relator_cycles()) {
        WordBuilder b{Word(std::span<const Letter>(head))};
        b.push(cycle);
        for (std::size_t j = i; j < cur.size(); ++j) b.push(cur[j]);
        Word next = b.take();
        if (next.size() > cap) continue;
        if (seen.size() >= max_states)
          throw std::runtime_error("oracle ball exceeded state cap");
        if (seen.insert(next).second) queue.push_back(next);
      }
    }
  }
  return seen;
}

inline bool equal(const Word& u, const Word& v, std::size_t cap = 16) {
  if (u == v) return true;
  return word_class(u, cap).count(v) > 0;
}

// Shortlex-least member of the class (the brute-force normal form).
inline Word normal_form(const Word& w, std::size_t cap = 16) {
  Word best = w;
  for (const Word& x : word_class(w, cap))
    if (x < best) best = x;
  return best;
}

}  // namespace twistlab::oracle
