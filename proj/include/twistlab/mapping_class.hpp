#pragma once

#include <optional>
#include <span>
#include <vector>

#include "twistlab/twist_table.hpp"

namespace twistlab {

// OneBoundary acts on F4 exactly; Closed interprets words modulo the
// surface relation and automorphisms modulo inner automorphisms.
enum class Model { Closed, OneBoundary };

std::string_view model_name(Model m);

struct TwistPower {
  TwistId id;
  int exp;
  friend bool operator==(const TwistPower&, const TwistPower&) = default;
};

struct ModelMismatch : std::runtime_error {
  ModelMismatch() : std::runtime_error("mapping classes live in different models") {}
};

// A mapping class: a word in the table twists with its composed action
// cached.  Immutable value; the word composes right-to-left, so
// from_word({f, g}) acts as f after g.
class MappingClass {
 public:
  static MappingClass identity(Model m);
  static MappingClass twist(Model m, TwistId id, int exp = 1);
  static MappingClass from_word(Model m, std::span<const TwistPower> word);

  Model model() const { return model_; }
  const std::vector<TwistPower>& word() const { return word_; }
  const EndoRep& rep() const { return rep_; }

  MappingClass inverse() const;
  bool is_identity_word() const { return word_.empty(); }

  // Substitutes generator images and reduces (surface-reduces in the
  // closed model).
  Word apply(const Word& w) const;

 private:
  MappingClass(Model m, std::vector<TwistPower> word, EndoRep rep)
      : model_(m), word_(std::move(word)), rep_(std::move(rep)) {}

  Model model_;
  std::vector<TwistPower> word_;
  EndoRep rep_;
};

// f after g.  Throws ModelMismatch.
MappingClass compose(const MappingClass& f, const MappingClass& g);

// Generator-wise equality of the actions as free-group words
// (one-boundary model only).
bool equal_exact(const MappingClass& f, const MappingClass& g);

struct ClosedEquality {
  bool verified = false;
  Word witness;  // f(x) = witness g(x) witness^-1 for all generators
};

// Bounded search for a common conjugator in the closed model.  Verified
// results are re-checked; NotVerified (verified == false) is inconclusive.
ClosedEquality equal_closed(const MappingClass& f, const MappingClass& g,
                            int bound = 8);

SymplecticMatrix homology_action(const MappingClass& f);

}  // namespace twistlab
