#include "fihom/presentation.hpp"

#include <algorithm>

namespace fihom {

int Presentation::max_generator_degree() const {
  int g = kNegInf;
  for (int d : generators) g = std::max(g, d);
  return g;
}

int Presentation::max_relation_degree() const {
  int r = kNegInf;
  for (const auto& rel : relations) r = std::max(r, rel.degree);
  return r;
}

PresentationBounds Presentation::bounds() const {
  return {max_generator_degree(), generators.empty() ? kNegInf : max_relation_degree()};
}

void Presentation::check() const {
  if (window < 0) throw ContractViolation("presentation: negative window");
  for (int d : generators)
    if (d < 0) throw ContractViolation("presentation: negative generator degree");
  const int mingen = generators.empty() ? 0 : *std::min_element(generators.begin(), generators.end());
  for (std::size_t k = 0; k < relations.size(); ++k) {
    const auto& rel = relations[k];
    const std::string where = "relation " + std::to_string(k);
    if (rel.degree < mingen) throw ContractViolation(where + ": degree below every generator");
    for (const auto& t : rel.terms) {
      if (t.gen < 0 || t.gen >= static_cast<int>(generators.size()))
        throw ContractViolation(where + ": unknown generator " + std::to_string(t.gen));
      if (t.alpha.source != generators[t.gen] || t.alpha.target != rel.degree)
        throw ContractViolation(where + ": term morphism has wrong degrees");
      check_morphism(t.alpha, group);
      with_field(field, [&](const auto& f) { (void)f.parse(t.coeff); });
    }
  }
}

}  // namespace fihom
