#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace twistlab {

// The four generators of F4 = <a1, b1, a2, b2>, in the fixed order
// a1 < b1 < a2 < b2 used for all canonical forms.
enum class Gen : std::uint8_t { a1 = 0, b1 = 1, a2 = 2, b2 = 3 };

inline constexpr int kNumGens = 4;

const char* gen_name(Gen g);

// A signed generator, packed as gen*2 + (sign < 0).
class Letter {
 public:
  constexpr Letter(Gen g, int sign)
      : code_(static_cast<std::uint8_t>(static_cast<std::uint8_t>(g) * 2 +
                                        (sign < 0 ? 1 : 0))) {}

  constexpr Gen gen() const { return static_cast<Gen>(code_ / 2); }
  constexpr int sign() const { return (code_ & 1) ? -1 : +1; }
  constexpr Letter inverse() const { return Letter(code_ ^ 1); }
  constexpr std::uint8_t code() const { return code_; }

  static constexpr Letter from_code(std::uint8_t c) { return Letter(c); }

  friend constexpr bool operator==(Letter, Letter) = default;
  friend constexpr auto operator<=>(Letter a, Letter b) {
    return a.code_ <=> b.code_;
  }

 private:
  explicit constexpr Letter(std::uint8_t code) : code_(code) {}
  std::uint8_t code_;
};

inline constexpr int kNumLetters = 2 * kNumGens;

// A freely reduced word in F4.  The empty word is the identity.
// Words are immutable values; all operations return new words.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> ls) : Word(std::span(ls.begin(), ls.size())) {}
  explicit Word(std::span<const Letter> ls);

  static Word one() { return Word(); }
  static Word gen(Gen g, int sign = +1) { return Word({Letter(g, sign)}); }

  // Parses the shared word-literal syntax: generators `a1 b1 a2 b2`,
  // inverse suffix `'`, juxtaposition, `[u,v]` commutators, parentheses
  // and integer powers `(u v)^3`, `a1^-2`.  Throws ParseError.
  static Word parse(std::string_view text);

  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Letter> letters() const { return letters_; }

  Word operator*(const Word& rhs) const;
  Word inverse() const;
  Word pow(int n) const;
  // g * w * g^-1
  Word conjugated_by(const Word& g) const { return g * *this * g.inverse(); }
  static Word commutator(const Word& u, const Word& v);

  // Least rotation-or-inverse representative of the cyclic reduction,
  // shortlex over the fixed letter order.  Canonical form of the free
  // conjugacy class up to inversion (unoriented curve identity in F4).
  Word cyclic_normal_form() const;

  // Strips u ... u^-1 pairs; returns the core and the stripped prefix u,
  // so that *this == u * core * u^-1.
  std::pair<Word, Word> cyclic_reduce() const;

  std::string str() const;

  friend bool operator==(const Word&, const Word&) = default;
  // shortlex over the fixed letter order
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(
        a.letters_.begin(), a.letters_.end(), b.letters_.begin(),
        b.letters_.end());
  }

  std::size_t hash() const;

 private:
  friend class WordBuilder;
  std::vector<Letter> letters_;
};

// Incremental free reduction: push letters, adjacent inverses cancel.
class WordBuilder {
 public:
  WordBuilder() = default;
  explicit WordBuilder(const Word& w) : letters_(w.letters().begin(), w.letters().end()) {}

  void push(Letter l) {
    if (!letters_.empty() && letters_.back() == l.inverse())
      letters_.pop_back();
    else
      letters_.push_back(l);
  }
  void push(const Word& w) {
    for (Letter l : w.letters()) push(l);
  }
  void push_inverse(const Word& w) {
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
      push(it->inverse());
  }

  Word take();

 private:
  std::vector<Letter> letters_;
};

struct ParseError : std::runtime_error {
  ParseError(std::string msg, int line, int column);
  int line;
  int column;
};

struct WordHash {
  std::size_t operator()(const Word& w) const { return w.hash(); }
};

}  // namespace twistlab
