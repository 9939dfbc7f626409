#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "twistlab/word.hpp"

namespace twistlab::surface {

// The genus-2 surface relation delta = [a1,b1][a2,b2].  pi1 of the closed
// surface is F4 / <<delta>>; the one-boundary surface keeps F4 exact and
// delta is the boundary word.
const Word& delta();

// All 16 cyclic permutations of delta and its inverse, each length 8.
std::span<const Word> relator_cycles();

// Dehn's algorithm step loop: scan left to right, replace the first
// subword of maximal length >= 5 that matches a prefix of a relator cycle
// by the inverted complement, freely reduce, repeat to a fixpoint.
// The genus-2 relator is C'(1/8), so the result is empty iff w = 1 in
// the closed surface group, and is geodesic in general.
Word dehn_reduce(Word w);

bool trivial(const Word& w);

// u = v in the closed surface group.
bool equal(const Word& u, const Word& v);

// Cyclic Dehn reduction: returns (core, g) with w = g * core * g^-1 in the
// surface group and no rotation of core admitting a length-reducing step.
std::pair<Word, Word> cyclic_dehn_reduce(const Word& w);

// Searches for g with g u g^-1 = v in the closed surface group.  The two
// words are cyclically Dehn-reduced and the geodesic conjugacy class of u
// is walked by rotations and half-relator exchanges; a found witness is
// re-verified with equal() before being returned.  Absence within the
// bound is inconclusive.
std::optional<Word> conjugator(const Word& u, const Word& v, int bound = 8);

// Canonical representative of the conjugacy class of w up to inversion in
// the closed surface group: the shortlex-least geodesic cyclic word.
// This is the identity used for unoriented curves in the closed model.
Word closed_class_form(const Word& w);

// Same identity in the one-boundary model (plain free group): least
// rotation-or-inverse of the cyclic reduction.
inline Word free_class_form(const Word& w) { return w.cyclic_normal_form(); }

}  // namespace twistlab::surface
