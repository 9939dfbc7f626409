#include "twistlab/word.hpp"

#include <random>

#include "doctest.h"
#include "twistlab/homology.hpp"

using namespace twistlab;

namespace {

Word W(const char* s) { return Word::parse(s); }

Word random_word(std::mt19937& rng, int len) {
  std::uniform_int_distribution<int> d(0, kNumLetters - 1);
  WordBuilder b;
  for (int i = 0; i < len; ++i)
    b.push(Letter::from_code(static_cast<std::uint8_t>(d(rng))));
  return b.take();
}

}  // namespace

TEST_CASE("free reduction") {
  CHECK(W("a1 a1'").empty());
  CHECK(W("b1 b2 a2 b2") == W("b1 b2 a2 b2"));
  CHECK(W("b1 b2 a2 b2").size() == 4);
  CHECK(W("a2 b2 a2' a2 b2'") == W("a2"));
  CHECK(W("a2 b2 a2' a2 b2'").str() == "a2");
}

TEST_CASE("parser handles powers, commutators and inverses") {
  CHECK(W("(a1 b1)^3") == W("a1 b1 a1 b1 a1 b1"));
  CHECK(W("(a1 b1)^-2") == W("b1' a1' b1' a1'"));
  CHECK(W("[a1,b1]") == W("a1 b1 a1' b1'"));
  CHECK(W("a1^-2") == W("a1' a1'"));
  CHECK(W("[a1,b1]'") == W("b1 a1 b1' a1'"));
  CHECK(W("(b1 b2 a2 b2)^0").empty());
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(Word::parse("a3"), ParseError);
  CHECK_THROWS_AS(Word::parse("a1 ^"), ParseError);
  CHECK_THROWS_AS(Word::parse("[a1 b1]"), ParseError);
  CHECK_THROWS_AS(Word::parse("(a1"), ParseError);
}

TEST_CASE("printing round-trips") {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    Word w = random_word(rng, i % 23);
    CHECK(Word::parse(w.str()) == w);
  }
}

TEST_CASE("abelianize on the paper curves") {
  CHECK(abelianize(W("b1 b2")) == HomologyVector{0, 1, 0, 1});
  CHECK(is_zero(abelianize(W("[a1,b1]"))));
  CHECK(abelianize(W("b1 b2 a2 a2")) == HomologyVector{0, 1, 2, 1});
}

TEST_CASE("abelianize is a conjugation-invariant homomorphism") {
  std::mt19937 rng(11);
  for (int i = 0; i < 1000; ++i) {
    Word u = random_word(rng, 1 + i % 17);
    Word v = random_word(rng, 1 + (i * 7) % 17);
    CHECK(abelianize(u * v) == abelianize(u) + abelianize(v));
    CHECK(abelianize(u.conjugated_by(v)) == abelianize(u));
  }
}

TEST_CASE("products reduce and invert") {
  std::mt19937 rng(3);
  for (int i = 0; i < 500; ++i) {
    Word u = random_word(rng, i % 19);
    CHECK((u * u.inverse()).empty());
    CHECK(u.pow(3) == u * u * u);
    CHECK(u.pow(-2) == (u * u).inverse());
  }
}

TEST_CASE("cyclic normal form is rotation and inversion invariant") {
  std::mt19937 rng(5);
  for (int i = 0; i < 300; ++i) {
    Word u = random_word(rng, 2 + i % 11);
    Word g = random_word(rng, i % 5);
    CHECK(u.cyclic_normal_form() == u.inverse().cyclic_normal_form());
    Word c = u.conjugated_by(g);
    CHECK(u.cyclic_normal_form() == c.cyclic_normal_form());
  }
}

TEST_CASE("cyclic reduce returns core and stripped prefix") {
  Word w = W("b1 a1 b2 a1' b1'");
  auto [core, pre] = w.cyclic_reduce();
  CHECK(core == W("b2"));
  CHECK(pre == W("b1 a1"));
  CHECK(pre * core * pre.inverse() == w);
}

TEST_CASE("transvection matrices are symplectic") {
  for (auto g : {HomologyVector{1, 0, 0, 0}, HomologyVector{0, 1, 0, 1},
                 HomologyVector{1, 0, -1, 0}, HomologyVector{1, 1, 1, 1}}) {
    SymplecticMatrix t = transvection(g);
    CHECK(t.preserves_pairing());
    CHECK(t.det() == 1);
  }
}
