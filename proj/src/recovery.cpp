#include "mc/recovery.hpp"

#include <algorithm>
#include <numeric>

#include "mc/axioms.hpp"
#include "mc/engine.hpp"

namespace mc {

BinaryRelation reveal_shortlist(const ChoiceCorrespondence& c) {
    const int n = c.size();
    const ChoiceCorrespondence impact = removal_impact_table(c);
    BinaryRelation rel(n);
    for (std::uint32_t bits = 1; bits < (1u << n); ++bits) {
        const Menu menu(bits);
        for (Alternative x : impact(menu).members()) rel.set_row(x, rel.row(x) | menu);
    }
    return rel;
}

BinaryRelation reveal_veto(const ChoiceCorrespondence& c) {
    const int n = c.size();
    BinaryRelation rel(n);
    for (Alternative x = 0; x < n; ++x) {
        rel.set(x, x);
        for (Alternative y = 0; y < n; ++y)
            if (x != y && c(Menu::of({x, y})) == Menu::singleton(x)) rel.set(x, y);
    }
    return rel;
}

std::optional<WeakOrder> to_weak_order(const BinaryRelation& rel) {
    if (!rel.is_complete() || !rel.is_transitive()) return std::nullopt;
    const int n = rel.size();
    // Under completeness and transitivity, x sits above y iff its row is a strict superset.
    std::vector<Menu> classes;
    std::uint32_t placed = 0;
    for (Alternative x = 0; x < n; ++x) {
        if ((placed >> x) & 1u) continue;
        Menu cls = Menu::singleton(x);
        for (Alternative y = x + 1; y < n; ++y)
            if (rel.related(x, y) && rel.related(y, x)) cls = cls.with(y);
        placed |= cls.bits();
        classes.push_back(cls);
    }
    std::stable_sort(classes.begin(), classes.end(), [&](Menu a, Menu b) {
        return rel.row(a.first()).size() > rel.row(b.first()).size();
    });
    return WeakOrder(n, std::move(classes));
}

std::optional<LinearOrder> to_linear_order(const BinaryRelation& rel) {
    if (!rel.is_complete() || !rel.is_antisymmetric() || !rel.is_transitive()) return std::nullopt;
    std::vector<Alternative> ranking(static_cast<std::size_t>(rel.size()));
    std::iota(ranking.begin(), ranking.end(), 0);
    std::sort(ranking.begin(), ranking.end(),
              [&](Alternative a, Alternative b) { return rel.row(a).size() > rel.row(b).size(); });
    return LinearOrder(std::move(ranking));
}

RecoveryResult recover(const ChoiceCorrespondence& c) {
    using Status = RecoveryResult::Status;
    if (auto violation = first_failed_condition(c)) return {Status::condition_failed, std::nullopt, violation, {}};

    auto defect = [](std::string what) { return RecoveryResult{Status::internal_defect, std::nullopt, std::nullopt, std::move(what)}; };

    const BinaryRelation revealed_r = reveal_shortlist(c);
    auto shortlist = to_weak_order(revealed_r);
    if (!shortlist) return defect("revealed shortlist relation is not a weak order");

    auto veto = to_linear_order(reveal_veto(c));
    if (!veto) return defect("revealed veto relation is not a linear order");

    if (generate(*shortlist, *veto) != c) return defect("revealed pair does not regenerate the input");
    return {Status::recovered, Representation{std::move(*shortlist), std::move(*veto)}, std::nullopt, {}};
}

}  // namespace mc
