#include "mc/engine.hpp"

#include <stdexcept>

namespace mc {

Menu max_set(Menu menu, const WeakOrder& order) {
    for (Menu cls : order.classes()) {
        const Menu best = menu & cls;
        if (!best.empty()) return best;
    }
    return Menu();
}

Alternative min_of(Menu menu, const LinearOrder& order) {
    Alternative worst = menu.first();
    for (Alternative a : menu.members())
        if (order.position(a) > order.position(worst)) worst = a;
    return worst;
}

Menu mc_choice(Menu menu, const WeakOrder& shortlist, const LinearOrder& veto) {
    const Menu best = max_set(menu, shortlist);
    if (best.is_singleton()) return best;
    return best.without(min_of(best, veto));
}

ChoiceCorrespondence generate(const WeakOrder& shortlist, const LinearOrder& veto) {
    if (shortlist.size() != veto.size()) throw std::invalid_argument("orders are defined on different universes");
    return ChoiceCorrespondence::tabulate(shortlist.size(),
                                          [&](Menu a) { return mc_choice(a, shortlist, veto); });
}

ChoiceCorrespondence generate_rational(const WeakOrder& order) {
    return ChoiceCorrespondence::tabulate(order.size(), [&](Menu a) { return max_set(a, order); });
}

Menu removal_impact(const ChoiceCorrespondence& c, Menu menu) {
    if (menu.is_singleton()) return menu;
    const Menu chosen = c(menu);
    Menu impact;
    for (Alternative x : menu.members())
        if (c(menu.without(x)) != chosen) impact = impact.with(x);
    return impact;
}

ChoiceCorrespondence removal_impact_table(const ChoiceCorrespondence& c) {
    return ChoiceCorrespondence::tabulate(c.size(), [&](Menu a) { return removal_impact(c, a); });
}

}  // namespace mc
