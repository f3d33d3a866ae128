#include "mc/axioms.hpp"

#include "mc/engine.hpp"

namespace mc {
namespace {

Verdict pass() { return {}; }

Verdict fail(Axiom kind, std::vector<Menu> menus, std::vector<Alternative> alternatives) {
    return Verdict{Witness{kind, std::move(menus), std::move(alternatives)}};
}

/// For each menu `small` in canonical order, find the canonically first strict
/// superset `large` for which `violated(small, large)` holds.
template <class Violated>
std::optional<std::pair<Menu, Menu>> first_strict_pair(int n, Violated&& violated) {
    const std::uint32_t universe = Menu::full(n).bits();
    for (Menu small : all_menus(n)) {
        const std::uint32_t outside = universe & ~small.bits();
        std::optional<Menu> best;
        for (std::uint32_t extra = outside; extra != 0; extra = (extra - 1) & outside) {
            const Menu large = small | Menu(extra);
            if ((!best || canonical_less(large, *best)) && violated(small, large)) best = large;
        }
        if (best) return std::pair{small, *best};
    }
    return std::nullopt;
}

// x, y in A strictly inside B, x in c(A), y in c(B), x not in c(B).
Verdict scan_condition1(const ChoiceCorrespondence& c, Axiom kind) {
    auto violated = [&](Menu a, Menu b) { return !(c(b) & a).empty() && !(c(a) - c(b)).empty(); };
    auto hit = first_strict_pair(c.size(), violated);
    if (!hit) return pass();
    const auto [a, b] = *hit;
    return fail(kind, {a, b}, {(c(a) - c(b)).first(), (c(b) & a).first()});
}

}  // namespace

Verdict check_alpha(const ChoiceCorrespondence& c) {
    // x in c(A), x in B strictly inside A, x not in c(B). Scanned by the smaller menu B first.
    auto violated = [&](Menu b, Menu a) { return !((c(a) & b) - c(b)).empty(); };
    auto hit = first_strict_pair(c.size(), violated);
    if (!hit) return pass();
    const auto [b, a] = *hit;
    return fail(Axiom::alpha, {b, a}, {((c(a) & b) - c(b)).first()});
}

Verdict check_beta(const ChoiceCorrespondence& c) {
    auto violated = [&](Menu a, Menu b) { return !(c(a) & c(b)).empty() && !(c(a) - c(b)).empty(); };
    auto hit = first_strict_pair(c.size(), violated);
    if (!hit) return pass();
    const auto [a, b] = *hit;
    return fail(Axiom::beta, {a, b}, {(c(a) - c(b)).first(), (c(a) & c(b)).first()});
}

Verdict check_gamma(const ChoiceCorrespondence& c) {
    const auto menus = all_menus(c.size());
    for (std::size_t i = 0; i < menus.size(); ++i) {
        const Menu a = menus[i];
        for (std::size_t j = i + 1; j < menus.size(); ++j) {
            const Menu b = menus[j];
            const Menu lost = (c(a) & c(b)) - c(a | b);
            if (!lost.empty()) return fail(Axiom::gamma, {a, b}, {lost.first()});
        }
    }
    return pass();
}

Verdict check_nbc(const ChoiceCorrespondence& c) {
    const int n = c.size();
    for (Alternative x = 0; x < n; ++x)
        for (Alternative y = 0; y < n; ++y)
            for (Alternative z = 0; z < n; ++z) {
                if (x == y || y == z || x == z) continue;
                const Menu xy = Menu::of({x, y}), yz = Menu::of({y, z}), xz = Menu::of({x, z});
                if (c(xy).contains(x) && c(yz).contains(y) && !c(xz).contains(x))
                    return fail(Axiom::nbc, {xy, yz, xz}, {x, y, z});
            }
    return pass();
}

Verdict check_warp(const ChoiceCorrespondence& c) {
    const auto menus = all_menus(c.size());
    for (Menu a : menus)
        for (Menu b : menus) {
            const Menu dropped = (c(a) & b) - c(b);
            const Menu kept = c(b) & a;
            if (!dropped.empty() && !kept.empty()) return fail(Axiom::warp, {a, b}, {dropped.first(), kept.first()});
        }
    return pass();
}

Verdict check_condition1(const ChoiceCorrespondence& c) { return scan_condition1(c, Axiom::cond1); }

Verdict check_condition2(const ChoiceCorrespondence& c) { return check_condition2(c, removal_impact_table(c)); }

Verdict check_condition2(const ChoiceCorrespondence&, const ChoiceCorrespondence& impact) {
    return scan_condition1(impact, Axiom::cond2);
}

Verdict check_condition3(const ChoiceCorrespondence& c) {
    for (Menu a : all_menus(c.size()))
        if (!a.is_singleton() && c(a) == a) return fail(Axiom::cond3, {a}, {});
    return pass();
}

Verdict check_condition4(const ChoiceCorrespondence& c) {
    const int n = c.size();
    for (Menu a : all_menus(n)) {
        for (Alternative x : (a - c(a)).members())
            for (Alternative y = 0; y < n; ++y) {
                if (a.contains(y)) continue;
                const Menu grown = c(a.with(y));
                if (grown.contains(x) && grown.contains(y)) return fail(Axiom::cond4, {a}, {x, y});
            }
    }
    return pass();
}

Verdict check_condition5(const ChoiceCorrespondence& c) { return check_condition5(c, removal_impact_table(c)); }

Verdict check_condition5(const ChoiceCorrespondence& c, const ChoiceCorrespondence& impact) {
    for (Menu a : all_menus(c.size())) {
        const std::uint32_t pool = impact(a).bits();
        std::optional<Menu> best;
        for (std::uint32_t sub = pool; sub != 0; sub = (sub - 1) & pool) {
            const Menu b(sub);
            if (b.is_singleton()) continue;
            if ((b - c(b)).size() != 1 && (!best || canonical_less(b, *best))) best = b;
        }
        if (best) return fail(Axiom::cond5, {a, *best}, {});
    }
    return pass();
}

Verdict check(Axiom axiom, const ChoiceCorrespondence& c) {
    switch (axiom) {
        case Axiom::alpha: return check_alpha(c);
        case Axiom::beta: return check_beta(c);
        case Axiom::gamma: return check_gamma(c);
        case Axiom::nbc: return check_nbc(c);
        case Axiom::warp: return check_warp(c);
        case Axiom::cond1: return check_condition1(c);
        case Axiom::cond2: return check_condition2(c);
        case Axiom::cond3: return check_condition3(c);
        case Axiom::cond4: return check_condition4(c);
        case Axiom::cond5: return check_condition5(c);
    }
    return pass();
}

bool AxiomReport::conditions_hold() const {
    for (Axiom a : {Axiom::cond1, Axiom::cond2, Axiom::cond3, Axiom::cond4, Axiom::cond5})
        if (!(*this)[a].passed()) return false;
    return true;
}

AxiomReport check_all(const ChoiceCorrespondence& c) {
    const ChoiceCorrespondence impact = removal_impact_table(c);
    AxiomReport report;
    report[Axiom::alpha] = check_alpha(c);
    report[Axiom::beta] = check_beta(c);
    report[Axiom::gamma] = check_gamma(c);
    report[Axiom::nbc] = check_nbc(c);
    report[Axiom::warp] = check_warp(c);
    report[Axiom::cond1] = check_condition1(c);
    report[Axiom::cond2] = check_condition2(c, impact);
    report[Axiom::cond3] = check_condition3(c);
    report[Axiom::cond4] = check_condition4(c);
    report[Axiom::cond5] = check_condition5(c, impact);
    return report;
}

std::optional<Witness> first_failed_condition(const ChoiceCorrespondence& c) {
    if (auto v = check_condition1(c); !v.passed()) return v.violation;
    const ChoiceCorrespondence impact = removal_impact_table(c);
    if (auto v = check_condition2(c, impact); !v.passed()) return v.violation;
    if (auto v = check_condition3(c); !v.passed()) return v.violation;
    if (auto v = check_condition4(c); !v.passed()) return v.violation;
    if (auto v = check_condition5(c, impact); !v.passed()) return v.violation;
    return std::nullopt;
}

bool replays(const ChoiceCorrespondence& c, const Witness& w) {
    const Menu full = Menu::full(c.size());
    auto in_range = [&](Menu m) { return !m.empty() && m.subset_of(full); };
    auto alt_ok = [&](Alternative a) { return a >= 0 && a < c.size(); };
    for (Menu m : w.menus)
        if (!in_range(m)) return false;
    for (Alternative a : w.alternatives)
        if (!alt_ok(a)) return false;
    auto shape = [&](std::size_t menus, std::size_t alts) {
        return w.menus.size() == menus && w.alternatives.size() == alts;
    };

    // Conditions 1 and 2 share one shape; cond2 reads the removal-impact map.
    auto condition1_shape = [&](const ChoiceCorrespondence& k) {
        if (!shape(2, 2)) return false;
        const Menu a = w.menus[0], b = w.menus[1];
        const Alternative x = w.alternatives[0], y = w.alternatives[1];
        return a.strict_subset_of(b) && a.contains(x) && a.contains(y) && k(a).contains(x) && k(b).contains(y) &&
               !k(b).contains(x);
    };

    switch (w.kind) {
        case Axiom::alpha: {
            if (!shape(2, 1)) return false;
            const Menu b = w.menus[0], a = w.menus[1];
            const Alternative x = w.alternatives[0];
            return b.strict_subset_of(a) && b.contains(x) && c(a).contains(x) && !c(b).contains(x);
        }
        case Axiom::beta: {
            if (!shape(2, 2)) return false;
            const Menu a = w.menus[0], b = w.menus[1];
            const Alternative x = w.alternatives[0], y = w.alternatives[1];
            return a.strict_subset_of(b) && c(a).contains(x) && c(a).contains(y) && c(b).contains(y) &&
                   !c(b).contains(x);
        }
        case Axiom::gamma: {
            if (!shape(2, 1)) return false;
            const Menu a = w.menus[0], b = w.menus[1];
            const Alternative x = w.alternatives[0];
            return c(a).contains(x) && c(b).contains(x) && !c(a | b).contains(x);
        }
        case Axiom::nbc: {
            if (!shape(3, 3)) return false;
            const Alternative x = w.alternatives[0], y = w.alternatives[1], z = w.alternatives[2];
            if (x == y || y == z || x == z) return false;
            const Menu xy = Menu::of({x, y}), yz = Menu::of({y, z}), xz = Menu::of({x, z});
            return w.menus[0] == xy && w.menus[1] == yz && w.menus[2] == xz && c(xy).contains(x) &&
                   c(yz).contains(y) && !c(xz).contains(x);
        }
        case Axiom::warp: {
            if (!shape(2, 2)) return false;
            const Menu a = w.menus[0], b = w.menus[1];
            const Alternative x = w.alternatives[0], y = w.alternatives[1];
            const Menu both = a & b;
            return both.contains(x) && both.contains(y) && c(a).contains(x) && c(b).contains(y) && !c(b).contains(x);
        }
        case Axiom::cond1: return condition1_shape(c);
        case Axiom::cond2: return condition1_shape(removal_impact_table(c));
        case Axiom::cond3: {
            if (!shape(1, 0)) return false;
            const Menu a = w.menus[0];
            return !a.is_singleton() && c(a) == a;
        }
        case Axiom::cond4: {
            if (!shape(1, 2)) return false;
            const Menu a = w.menus[0];
            const Alternative x = w.alternatives[0], y = w.alternatives[1];
            if (a.contains(y) || !a.contains(x) || c(a).contains(x)) return false;
            const Menu grown = c(a.with(y));
            return grown.contains(x) && grown.contains(y);
        }
        case Axiom::cond5: {
            if (!shape(2, 0)) return false;
            const Menu a = w.menus[0], b = w.menus[1];
            return !b.is_singleton() && b.subset_of(removal_impact(c, a)) && (b - c(b)).size() != 1;
        }
    }
    return false;
}

}  // namespace mc
