#include "twistlab/mapping_class.hpp"

#include "twistlab/surface.hpp"

namespace twistlab {

std::string_view model_name(Model m) {
  return m == Model::Closed ? "closed" : "one-boundary";
}

namespace {

EndoRep reduce_for(Model m, EndoRep rep) {
  return m == Model::Closed ? rep.dehn_reduced() : rep;
}

EndoRep word_rep(Model m, std::span<const TwistPower> word) {
  EndoRep acc = EndoRep::identity();
  // rightmost factor acts first
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const TwistGenerator& t = TwistTable::instance().get(it->id);
    const EndoRep& step = it->exp >= 0 ? t.action : t.inverse;
    int k = it->exp >= 0 ? it->exp : -it->exp;
    for (int i = 0; i < k; ++i) acc = reduce_for(m, step.compose(acc));
  }
  return acc;
}

std::vector<TwistPower> normalized(std::span<const TwistPower> word) {
  std::vector<TwistPower> out;
  for (const TwistPower& p : word) {
    if (p.exp == 0) continue;
    if (!out.empty() && out.back().id == p.id) {
      out.back().exp += p.exp;
      if (out.back().exp == 0) out.pop_back();
    } else {
      out.push_back(p);
    }
  }
  return out;
}

}  // namespace

MappingClass MappingClass::identity(Model m) {
  return MappingClass(m, {}, EndoRep::identity());
}

MappingClass MappingClass::twist(Model m, TwistId id, int exp) {
  return from_word(m, std::vector<TwistPower>{{id, exp}});
}

MappingClass MappingClass::from_word(Model m, std::span<const TwistPower> word) {
  auto w = normalized(word);
  return MappingClass(m, w, word_rep(m, w));
}

MappingClass MappingClass::inverse() const {
  std::vector<TwistPower> rev;
  rev.reserve(word_.size());
  for (auto it = word_.rbegin(); it != word_.rend(); ++it)
    rev.push_back({it->id, -it->exp});
  return from_word(model_, rev);
}

Word MappingClass::apply(const Word& w) const {
  Word out = rep_.apply(w);
  return model_ == Model::Closed ? surface::dehn_reduce(out) : out;
}

MappingClass compose(const MappingClass& f, const MappingClass& g) {
  if (f.model() != g.model()) throw ModelMismatch();
  std::vector<TwistPower> word = f.word();
  word.insert(word.end(), g.word().begin(), g.word().end());
  return MappingClass::from_word(f.model(), word);
}

bool equal_exact(const MappingClass& f, const MappingClass& g) {
  if (f.model() != Model::OneBoundary || g.model() != Model::OneBoundary)
    throw ModelMismatch();
  return f.rep() == g.rep();
}

ClosedEquality equal_closed(const MappingClass& f, const MappingClass& g,
                            int bound) {
  if (f.model() != Model::Closed || g.model() != Model::Closed)
    throw ModelMismatch();
  auto check = [&](const Word& h) {
    for (int i = 0; i < 4; ++i) {
      Word lhs = f.rep().images[i];
      Word rhs = h * g.rep().images[i] * h.inverse();
      if (!surface::equal(lhs, rhs)) return false;
    }
    return true;
  };
  if (check(Word())) return {true, Word()};
  // Any common conjugator h satisfies h g(a1) h^-1 = f(a1), so h lies in
  // w * C(g(a1)) for one witness w; the centralizer is the cyclic group
  // generated by g(a1) itself.
  Word ga1 = g.rep().images[0];
  auto w = surface::conjugator(ga1, f.rep().images[0], bound);
  if (!w) return {};
  for (int k = 0; k <= bound; ++k) {
    for (int s : {1, -1}) {
      if (k == 0 && s == -1) continue;
      Word h = *w * ga1.pow(s * k);
      if (check(h)) return {true, surface::dehn_reduce(h)};
    }
  }
  return {};
}

SymplecticMatrix homology_action(const MappingClass& f) {
  return f.rep().homology_matrix();
}

}  // namespace twistlab
