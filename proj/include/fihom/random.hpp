#pragma once

// Random presentations for the property battery. The draw order is fixed:
// group order, generator count and degrees, relation count, then for each
// relation its degree, term count and terms.

#include "fihom/presentation.hpp"
#include "fihom/rng.hpp"

namespace fihom {

struct RandomProfile {
  FieldSpec field = FieldSpec::prime(101);
  /// |G| is drawn from 1..max_group_order; G is cyclic.
  int max_group_order = 2;
  int gmax = 2;
  int genmax = 2;
  int rmax = 3;
  int relmax = 3;
  int max_terms = 4;
};

/// Window is left at 0; callers choose it from the bounds.
Presentation random_presentation(Rng& rng, const RandomProfile& profile);

}  // namespace fihom
