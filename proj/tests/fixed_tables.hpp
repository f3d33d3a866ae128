#pragma once

#include "mc/core.hpp"

namespace mc::testing {

inline constexpr Alternative X = 0, Y = 1, Z = 2;

inline Menu m(std::initializer_list<Alternative> alts) { return Menu::of(alts); }

/// A correspondence on {x, y, z} given its four nonsingleton rows.
inline ChoiceCorrespondence table3(Menu xy, Menu xz, Menu yz, Menu xyz) {
    return ChoiceCorrespondence::tabulate(3, [&](Menu a) {
        if (a == m({X, Y})) return xy;
        if (a == m({X, Z})) return xz;
        if (a == m({Y, Z})) return yz;
        if (a == m({X, Y, Z})) return xyz;
        return a;
    });
}

// R total indifference, xLyLz.
inline ChoiceCorrespondence indifferent_veto_table() { return table3(m({X}), m({X}), m({Y}), m({X, Y})); }
// Decisive everywhere; rationalized by yPxPz.
inline ChoiceCorrespondence strict_chain_table() { return table3(m({Y}), m({X}), m({Y}), m({Y})); }
// r = c, yet alpha fails.
inline ChoiceCorrespondence fixed_point_table() { return table3(m({X, Y}), m({Z}), m({Y}), m({X, Y})); }
// beta holds vacuously, Condition 1 fails.
inline ChoiceCorrespondence beta_only_table() { return table3(m({X}), m({X}), m({Y}), m({Y})); }

}  // namespace mc::testing
