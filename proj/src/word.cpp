#include "twistlab/word.hpp"

#include <cctype>
#include <stdexcept>

namespace twistlab {

const char* gen_name(Gen g) {
  static const char* names[kNumGens] = {"a1", "b1", "a2", "b2"};
  return names[static_cast<int>(g)];
}

ParseError::ParseError(std::string msg, int line_, int column_)
    : std::runtime_error(std::move(msg)), line(line_), column(column_) {}

Word::Word(std::span<const Letter> ls) {
  WordBuilder b;
  for (Letter l : ls) b.push(l);
  *this = b.take();
}

Word WordBuilder::take() {
  Word w;
  w.letters_ = std::move(letters_);
  letters_.clear();
  return w;
}

Word Word::operator*(const Word& rhs) const {
  WordBuilder b(*this);
  b.push(rhs);
  return b.take();
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.letters_.push_back(it->inverse());
  return w;
}

Word Word::pow(int n) const {
  Word base = n < 0 ? inverse() : *this;
  int k = n < 0 ? -n : n;
  WordBuilder b;
  for (int i = 0; i < k; ++i) b.push(base);
  return b.take();
}

Word Word::commutator(const Word& u, const Word& v) {
  WordBuilder b;
  b.push(u);
  b.push(v);
  b.push_inverse(u);
  b.push_inverse(v);
  return b.take();
}

std::pair<Word, Word> Word::cyclic_reduce() const {
  std::size_t i = 0, j = letters_.size();
  while (j >= i + 2 && letters_[i] == letters_[j - 1].inverse()) {
    ++i;
    --j;
  }
  Word core, prefix;
  core.letters_.assign(letters_.begin() + i, letters_.begin() + j);
  prefix.letters_.assign(letters_.begin(), letters_.begin() + i);
  return {core, prefix};
}

Word Word::cyclic_normal_form() const {
  Word core = cyclic_reduce().first;
  if (core.empty()) return core;
  auto least_rotation = [](const Word& w) {
    Word best = w;
    Word cur = w;
    for (std::size_t k = 1; k < w.size(); ++k) {
      cur.letters_.push_back(cur.letters_.front());
      cur.letters_.erase(cur.letters_.begin());
      if (cur < best) best = cur;
    }
    return best;
  };
  Word u = least_rotation(core);
  Word v = least_rotation(core.inverse());
  return u <= v ? u : v;
}

std::size_t Word::hash() const {
  std::size_t h = 0xcbf29ce484222325ull;
  for (Letter l : letters_) {
    h ^= l.code();
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string Word::str() const {
  if (empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < letters_.size();) {
    Letter l = letters_[i];
    std::size_t j = i;
    while (j < letters_.size() && letters_[j] == l) ++j;
    if (!out.empty()) out += ' ';
    out += gen_name(l.gen());
    if (l.sign() < 0) out += '\'';
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

namespace {

// Recursive-descent parser for the shared word-literal grammar.
class WordParser {
 public:
  explicit WordParser(std::string_view text) : text_(text) {}

  Word parse() {
    Word w = word();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return w;
  }

 private:
  Word word() {
    WordBuilder b;
    for (;;) {
      skip_ws();
      if (at_end() || peek() == ')' || peek() == ',' || peek() == ']') break;
      b.push(factor());
    }
    return b.take();
  }

  Word factor() {
    Word atom = parse_atom();
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      return atom.pow(integer());
    }
    return atom;
  }

  Word parse_atom() {
    skip_ws();
    if (at_end()) fail("expected word");
    char c = peek();
    if (c == '(') {
      ++pos_;
      Word w = word();
      expect(')');
      return maybe_prime(w);
    }
    if (c == '[') {
      ++pos_;
      Word u = word();
      expect(',');
      Word v = word();
      expect(']');
      return maybe_prime(Word::commutator(u, v));
    }
    if (c == 'a' || c == 'b') {
      ++pos_;
      if (at_end() || (peek() != '1' && peek() != '2'))
        fail("expected generator index 1 or 2");
      int idx = peek() - '1';
      ++pos_;
      Gen g = c == 'a' ? (idx == 0 ? Gen::a1 : Gen::a2)
                       : (idx == 0 ? Gen::b1 : Gen::b2);
      return maybe_prime(Word::gen(g));
    }
    if (c == '1') {  // the identity
      ++pos_;
      return maybe_prime(Word());
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  Word maybe_prime(Word w) {
    while (!at_end() && peek() == '\'') {
      ++pos_;
      w = w.inverse();
    }
    return w;
  }

  int integer() {
    skip_ws();
    bool neg = false;
    if (!at_end() && (peek() == '-' || peek() == '+')) {
      neg = peek() == '-';
      ++pos_;
    }
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected integer exponent");
    long v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > 1000000) fail("exponent too large");
      ++pos_;
    }
    return static_cast<int>(neg ? -v : v);
  }

  void expect(char c) {
    skip_ws();
    if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_ws() {
    while (!at_end() && (peek() == ' ' || peek() == '\t' || peek() == '\n' ||
                         peek() == '\r'))
      ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg + " in word literal at offset " + std::to_string(pos_),
                     1, static_cast<int>(pos_) + 1);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Word Word::parse(std::string_view text) { return WordParser(text).parse(); }

}  // namespace twistlab
