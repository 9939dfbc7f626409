#pragma once

#include <array>

#include "twistlab/homology.hpp"
#include "twistlab/word.hpp"

namespace twistlab {

// Endomorphism of F4 given by the images of the four generators.
struct EndoRep {
  std::array<Word, 4> images;

  static EndoRep identity();

  const Word& image(Gen g) const { return images[static_cast<int>(g)]; }

  // Substitutes each generator by its image and freely reduces.
  Word apply(const Word& w) const;

  // (*this o g): apply g first.
  EndoRep compose(const EndoRep& g) const;

  bool is_identity() const { return *this == identity(); }

  // Surface-reduces all images (closed-model representative).
  EndoRep dehn_reduced() const;

  SymplecticMatrix homology_matrix() const;

  friend bool operator==(const EndoRep&, const EndoRep&) = default;
};

}  // namespace twistlab
