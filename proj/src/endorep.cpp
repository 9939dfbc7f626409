#include "twistlab/endorep.hpp"

#include "twistlab/surface.hpp"

namespace twistlab {

EndoRep EndoRep::identity() {
  return EndoRep{{Word::gen(Gen::a1), Word::gen(Gen::b1), Word::gen(Gen::a2),
                  Word::gen(Gen::b2)}};
}

Word EndoRep::apply(const Word& w) const {
  WordBuilder b;
  for (Letter l : w.letters()) {
    if (l.sign() > 0)
      b.push(images[static_cast<int>(l.gen())]);
    else
      b.push_inverse(images[static_cast<int>(l.gen())]);
  }
  return b.take();
}

EndoRep EndoRep::compose(const EndoRep& g) const {
  EndoRep out;
  for (int i = 0; i < 4; ++i) out.images[i] = apply(g.images[i]);
  return out;
}

EndoRep EndoRep::dehn_reduced() const {
  EndoRep out;
  for (int i = 0; i < 4; ++i) out.images[i] = surface::dehn_reduce(images[i]);
  return out;
}

SymplecticMatrix EndoRep::homology_matrix() const {
  SymplecticMatrix s;
  for (int j = 0; j < 4; ++j) {
    HomologyVector v = abelianize(images[j]);
    for (int i = 0; i < 4; ++i) s.m[i][j] = v[i];
  }
  return s;
}

}  // namespace twistlab
