#include "twistlab/surface.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

namespace twistlab::surface {

namespace {

std::vector<Word> make_cycles() {
  Word r = Word::commutator(Word::gen(Gen::a1), Word::gen(Gen::b1)) *
           Word::commutator(Word::gen(Gen::a2), Word::gen(Gen::b2));
  std::vector<Word> cycles;
  for (Word base : {r, r.inverse()}) {
    std::vector<Letter> ls(base.letters().begin(), base.letters().end());
    for (std::size_t k = 0; k < ls.size(); ++k) {
      std::vector<Letter> rot(ls.begin() + k, ls.end());
      rot.insert(rot.end(), ls.begin(), ls.begin() + k);
      cycles.push_back(Word(std::span<const Letter>(rot)));
    }
  }
  return cycles;
}

// prefix (length 4..8 of some relator cycle) -> inverted complement
using PrefixMap = std::unordered_map<Word, Word, WordHash>;

PrefixMap make_prefix_map(std::size_t min_len) {
  PrefixMap m;
  for (const Word& c : relator_cycles()) {
    for (std::size_t l = min_len; l <= c.size(); ++l) {
      std::vector<Letter> p(c.letters().begin(), c.letters().begin() + l);
      std::vector<Letter> q(c.letters().begin() + l, c.letters().end());
      Word prefix{std::span<const Letter>(p)};
      Word complement{std::span<const Letter>(q)};
      // p q = 1 in the group, hence p = q^-1
      m.emplace(prefix, complement.inverse());
    }
  }
  return m;
}

const PrefixMap& long_prefixes() {  // length >= 5: shrinking replacements
  static const PrefixMap m = make_prefix_map(5);
  return m;
}

const PrefixMap& half_prefixes() {  // length exactly 4: length-preserving
  static const PrefixMap m = [] {
    PrefixMap all = make_prefix_map(4);
    PrefixMap halves;
    for (auto& [p, q] : all)
      if (p.size() == 4) halves.emplace(p, q);
    return halves;
  }();
  return m;
}

Word subword(const Word& w, std::size_t i, std::size_t l) {
  std::vector<Letter> ls(w.letters().begin() + i, w.letters().begin() + i + l);
  return Word(std::span<const Letter>(ls));
}

// One left-to-right pass; returns true if a replacement was made.
bool dehn_step(Word& w) {
  const std::size_t n = w.size();
  for (std::size_t i = 0; i + 5 <= n; ++i) {
    std::size_t lmax = std::min<std::size_t>(8, n - i);
    for (std::size_t l = lmax; l >= 5; --l) {
      auto it = long_prefixes().find(subword(w, i, l));
      if (it == long_prefixes().end()) continue;
      WordBuilder b(subword(w, 0, i));
      b.push(it->second);
      for (std::size_t j = i + l; j < n; ++j) b.push(w[j]);
      w = b.take();
      return true;
    }
  }
  return false;
}

}  // namespace

const Word& delta() {
  static const Word d = Word::commutator(Word::gen(Gen::a1), Word::gen(Gen::b1)) *
                        Word::commutator(Word::gen(Gen::a2), Word::gen(Gen::b2));
  return d;
}

std::span<const Word> relator_cycles() {
  static const std::vector<Word> cycles = make_cycles();
  return cycles;
}

Word dehn_reduce(Word w) {
  while (dehn_step(w)) {
  }
  return w;
}

bool trivial(const Word& w) { return dehn_reduce(w).empty(); }

bool equal(const Word& u, const Word& v) { return trivial(u * v.inverse()); }

std::pair<Word, Word> cyclic_dehn_reduce(const Word& w) {
  Word core = dehn_reduce(w);
  Word conj;  // w = conj * core * conj^-1
  for (;;) {
    auto [c, pre] = core.cyclic_reduce();
    core = c;
    conj = conj * pre;
    if (core.empty()) break;
    // look for a shrinking step in some rotation
    bool changed = false;
    const std::size_t n = core.size();
    for (std::size_t k = 0; k < n && !changed; ++k) {
      std::vector<Letter> rot(core.letters().begin() + k, core.letters().end());
      rot.insert(rot.end(), core.letters().begin(), core.letters().begin() + k);
      Word rotated{std::span<const Letter>(rot)};
      Word reduced = dehn_reduce(rotated);
      if (reduced.size() < rotated.size()) {
        // core = prefix * rotated * prefix^-1 with prefix = core[0..k)
        conj = conj * subword(core, 0, k);
        core = reduced;
        changed = true;
      }
    }
    if (!changed) break;
  }
  return {core, conj};
}

namespace {

// Rotations and half-relator exchanges of a geodesic cyclic word, with the
// conjugator of each state relative to the start tracked.
struct OrbitWalker {
  std::deque<std::pair<Word, Word>> queue;  // (state, h): start = h state h^-1
  std::unordered_set<Word, WordHash> seen;
  std::size_t max_states;

  explicit OrbitWalker(const Word& start, std::size_t cap) : max_states(cap) {
    queue.emplace_back(start, Word());
    seen.insert(start);
  }

  void expand(const Word& s, const Word& h,
              std::vector<std::pair<Word, Word>>& out) const {
    const std::size_t n = s.size();
    if (n == 0) return;
    // rotate by one: s = p s' p^-1 with p the first letter
    {
      std::vector<Letter> rot(s.letters().begin() + 1, s.letters().end());
      rot.push_back(s[0]);
      out.emplace_back(Word(std::span<const Letter>(rot)),
                       h * Word({s[0]}));
    }
    // half-relator exchanges on the doubled word (wrap-around included)
    for (std::size_t i = 0; i < n; ++i) {
      if (n < 4) break;
      std::vector<Letter> win;
      for (std::size_t j = 0; j < 4; ++j) win.push_back(s[(i + j) % n]);
      auto it = half_prefixes().find(Word(std::span<const Letter>(win)));
      if (it == half_prefixes().end()) continue;
      // rotate so the window starts at 0, then substitute
      std::vector<Letter> rot;
      for (std::size_t j = 0; j < n; ++j) rot.push_back(s[(i + j) % n]);
      WordBuilder b(it->second);
      for (std::size_t j = 4; j < n; ++j) b.push(rot[j]);
      Word h2 = h * subword(s, 0, i);
      auto [core, pre] = cyclic_dehn_reduce(b.take());
      out.emplace_back(core, h2 * pre);
    }
  }

  // Walks the orbit; returns the conjugator h with start = h target h^-1
  // if the target is reached.
  std::optional<Word> find(const Word& target) {
    std::vector<std::pair<Word, Word>> next;
    while (!queue.empty()) {
      auto [s, h] = queue.front();
      queue.pop_front();
      if (s == target) return h;
      if (seen.size() > max_states) return std::nullopt;
      next.clear();
      expand(s, h, next);
      for (auto& [s2, h2] : next)
        if (seen.insert(s2).second) queue.emplace_back(s2, h2);
    }
    return std::nullopt;
  }

  // Fully enumerates the orbit (for canonical forms of short curves).
  std::vector<Word> all(std::size_t cap) {
    std::vector<Word> states;
    std::vector<std::pair<Word, Word>> next;
    while (!queue.empty()) {
      if (states.size() >= cap)
        throw std::runtime_error("curve class orbit exceeds enumeration cap");
      auto [s, h] = queue.front();
      queue.pop_front();
      states.push_back(s);
      next.clear();
      expand(s, h, next);
      for (auto& [s2, h2] : next)
        if (seen.insert(s2).second) queue.emplace_back(s2, h2);
    }
    return states;
  }
};

}  // namespace

std::optional<Word> conjugator(const Word& u, const Word& v, int bound) {
  if (equal(u, v)) return Word();  // the empty witness when u = v exactly
  auto [ucore, gu] = cyclic_dehn_reduce(u);
  auto [vcore, gv] = cyclic_dehn_reduce(v);
  if (ucore.size() != vcore.size()) return std::nullopt;

  const std::size_t cap = 2000 + 600 * static_cast<std::size_t>(std::max(bound, 0));
  OrbitWalker walker(ucore, cap);
  if (auto h = walker.find(vcore)) {
    // u = (gu h) vcore (gu h)^-1 and v = gv vcore gv^-1
    Word witness = gv * h->inverse() * gu.inverse();
    if (equal(witness * u * witness.inverse(), v)) return witness;
  }
  // small brute-force fallback; keeps short witnesses findable even if the
  // orbit walk is capped out
  std::deque<Word> ball{Word()};
  std::unordered_set<Word, WordHash> seen{Word()};
  int brute = std::min(bound, 3);
  while (!ball.empty()) {
    Word g = ball.front();
    ball.pop_front();
    if (equal(g * u * g.inverse(), v)) return g;
    if (static_cast<int>(g.size()) >= brute) continue;
    for (int c = 0; c < kNumLetters; ++c) {
      Word g2 = g * Word({Letter::from_code(static_cast<std::uint8_t>(c))});
      if (g2.size() > g.size() && seen.insert(g2).second) ball.push_back(g2);
    }
  }
  return std::nullopt;
}

Word closed_class_form(const Word& w) {
  auto [core, conj] = cyclic_dehn_reduce(w);
  if (core.empty()) return core;
  Word best;
  bool have = false;
  for (const Word& seed : {core, core.inverse()}) {
    auto [c, p] = cyclic_dehn_reduce(seed);
    OrbitWalker walker(c, 200000);
    for (const Word& s : walker.all(200000)) {
      if (!have || s < best) {
        best = s;
        have = true;
      }
    }
  }
  return best;
}

}  // namespace twistlab::surface
