#include "fihom/random.hpp"

#include <algorithm>

namespace fihom {

namespace {

std::string random_coefficient(Rng& rng, const FieldSpec& field) {
  if (field.kind == FieldSpec::Kind::prime) return std::to_string(rng.between(1, static_cast<int>(field.characteristic) - 1));
  int c = rng.between(-3, 2);
  if (c >= 0) ++c;  // skip zero
  return std::to_string(c);
}

}  // namespace

Presentation random_presentation(Rng& rng, const RandomProfile& profile) {
  Presentation p;
  p.field = profile.field;
  p.group = FiniteGroup::cyclic(rng.between(1, profile.max_group_order));
  const int q = p.group.order();
  const int ngen = rng.between(1, profile.genmax);
  for (int i = 0; i < ngen; ++i) p.generators.push_back(rng.between(0, profile.gmax));
  const int mingen = *std::min_element(p.generators.begin(), p.generators.end());
  const int nrel = rng.between(0, profile.relmax);
  for (int k = 0; k < nrel; ++k) {
    // a relation below every generator would be empty, so start at mingen
    Relation rel{rng.between(mingen, std::max(mingen, profile.rmax)), {}};
    std::vector<int> usable;
    for (int i = 0; i < ngen; ++i)
      if (p.generators[i] <= rel.degree) usable.push_back(i);
    const int nterms = rng.between(1, profile.max_terms);
    for (int t = 0; t < nterms; ++t) {
      const int gen = usable[rng.below(usable.size())];
      const auto size = hom_set_size(p.generators[gen], rel.degree, q);
      const auto alpha = hom_unrank(static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(size))),
                                    p.generators[gen], rel.degree, q);
      rel.terms.push_back({gen, alpha, random_coefficient(rng, p.field)});
    }
    p.relations.push_back(std::move(rel));
  }
  return p;
}

}  // namespace fihom
