#include "twistlab/surface.hpp"

#include <random>

#include "doctest.h"
#include "oracle.hpp"

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

TEST_CASE("the defining relation and all its cycles reduce to nothing") {
  CHECK(surface::dehn_reduce(W("[a1,b1][a2,b2]")).empty());
  CHECK(surface::dehn_reduce(Word()).empty());
  for (const Word& c : surface::relator_cycles())
    CHECK(surface::dehn_reduce(c).empty());
}

TEST_CASE("dehn reduction agrees with the insertion oracle on a short word") {
  Word w = W("[a2,b2]' a1 [a1,b1]");
  Word r = surface::dehn_reduce(w);
  CHECK(oracle::equal(r, w, w.size() + 8));
  // frozen from the insertion oracle: the word is geodesic of length 9
  // (it is NOT equal to a1; conjugating a1 by the full relator is, below)
  CHECK(r == w);
  Word nf = oracle::normal_form(w, w.size() + 8);
  CHECK(nf == W("[a1,b1] a1^2 b1 a1' b1'"));
  CHECK(nf.size() == r.size());

  Word d = W("([a1,b1][a2,b2])' a1 [a1,b1][a2,b2]");
  CHECK(surface::dehn_reduce(d) == W("a1"));
}

TEST_CASE("dehn reduction is idempotent, length-nonincreasing, sound") {
  std::mt19937 rng(17);
  for (int i = 0; i < 1000; ++i) {
    Word w = random_word(rng, 1 + i % 40);
    Word r = surface::dehn_reduce(w);
    CHECK(r.size() <= w.size());
    CHECK(surface::dehn_reduce(r) == r);
    CHECK(surface::equal(r, w));
  }
}

TEST_CASE("surface_equal basics") {
  CHECK(surface::equal(W("a2"), W("a2")));
  CHECK_FALSE(surface::equal(W("a1"), W("a2")));
  Word u = W("b1 b2 ([a2,b2]' [a1,b1]') b2' b1' b1 b2");
  CHECK(oracle::equal(u, W("b1 b2"), 18));  // oracle first
  CHECK(surface::equal(u, W("b1 b2")));
}

TEST_CASE("surface_equal matches the oracle on random short pairs") {
  std::mt19937 rng(23);
  for (int i = 0; i < 60; ++i) {
    Word u = random_word(rng, 1 + i % 7);
    Word v = random_word(rng, 1 + (i * 5) % 7);
    CHECK(surface::equal(u, v) == oracle::equal(u, v, 16));
  }
}

TEST_CASE("equivalence relation sanity") {
  std::mt19937 rng(29);
  for (int i = 0; i < 200; ++i) {
    Word u = random_word(rng, 1 + i % 12);
    Word v = u;
    // pad v with inserted relator cycles: still the same element
    auto cycles = surface::relator_cycles();
    v = v * cycles[i % cycles.size()];
    CHECK(surface::equal(u, u));
    CHECK(surface::equal(u, v));
    CHECK(surface::equal(v, u));
  }
}

TEST_CASE("conjugator finds and certifies witnesses") {
  auto g = surface::conjugator(W("a1"), W("b1 a1 b1'"));
  REQUIRE(g.has_value());
  CHECK(surface::equal(*g * W("a1") * g->inverse(), W("b1 a1 b1'")));

  auto e = surface::conjugator(W("a1"), W("a1"));
  REQUIRE(e.has_value());
  CHECK(e->empty());

  // [a1,b1] equals [a2,b2]^-1 in pi1(Sigma_2), so the witness is empty
  auto c = surface::conjugator(W("[a1,b1]"), W("[a2,b2]'"));
  REQUIRE(c.has_value());
  CHECK(c->empty());

  CHECK_FALSE(surface::conjugator(W("a1"), W("a2"), 6).has_value());
}

TEST_CASE("random conjugates are recognized with verified witnesses") {
  std::mt19937 rng(31);
  for (int i = 0; i < 120; ++i) {
    Word u = random_word(rng, 1 + i % 8);
    if (surface::trivial(u)) continue;
    Word g = random_word(rng, i % 5);
    Word v = surface::dehn_reduce(u.conjugated_by(g));
    auto w = surface::conjugator(u, v);
    REQUIRE_MESSAGE(w.has_value(), "u=", u.str(), " g=", g.str());
    CHECK(surface::equal(*w * u * w->inverse(), v));
  }
}

TEST_CASE("closed class form is a conjugacy-and-inversion invariant") {
  std::mt19937 rng(37);
  for (int i = 0; i < 150; ++i) {
    Word u = random_word(rng, 1 + i % 9);
    Word g = random_word(rng, i % 4);
    CHECK(surface::closed_class_form(u) ==
          surface::closed_class_form(u.conjugated_by(g)));
    CHECK(surface::closed_class_form(u) ==
          surface::closed_class_form(u.inverse()));
  }
  // distinct short curves stay distinct
  CHECK(surface::closed_class_form(W("a1")) != surface::closed_class_form(W("a2")));
  CHECK(surface::closed_class_form(W("[a1,b1]")) ==
        surface::closed_class_form(W("[a2,b2]")));
}

TEST_CASE("identity ball: every trivial word of length <= 10 dehn-reduces") {
  auto ball = oracle::word_class(Word(), 10);
  CHECK(ball.size() > 16);  // empty word, 16 cycles, and longer products
  for (const Word& w : ball) CHECK(surface::dehn_reduce(w).empty());
}
