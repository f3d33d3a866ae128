#pragma once

#include "mc/core.hpp"

namespace mc {

/// R-maximal elements of `menu`.
Menu max_set(Menu menu, const WeakOrder& order);

/// The L-worst element of `menu`.
Alternative min_of(Menu menu, const LinearOrder& order);

/// Shortlist by R, then veto the L-worst member of the shortlist when it has
/// more than one element.
Menu mc_choice(Menu menu, const WeakOrder& shortlist, const LinearOrder& veto);

ChoiceCorrespondence generate(const WeakOrder& shortlist, const LinearOrder& veto);
ChoiceCorrespondence generate_rational(const WeakOrder& order);

/// Members of `menu` whose removal changes c(menu). A singleton menu maps to itself.
Menu removal_impact(const ChoiceCorrespondence& c, Menu menu);

/// removal_impact evaluated on every menu. The result is itself a choice
/// correspondence since c(A) is always inside it.
ChoiceCorrespondence removal_impact_table(const ChoiceCorrespondence& c);

inline bool is_decisive(const ChoiceCorrespondence& c, Menu menu) { return c(menu).is_singleton(); }

}  // namespace mc
