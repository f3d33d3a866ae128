#include <doctest.h>

#include "generators.hpp"
#include "mc/axioms.hpp"
#include "mc/engine.hpp"
#include "mc/oracle.hpp"
#include "fixed_tables.hpp"

using namespace mc;
using namespace mc::testing;

namespace {

const Menu kXYZ = Menu::of({X, Y, Z});

// Literal quantifier readings over every alternative and menu, for cross-checking verdicts.
struct Naive {
    const ChoiceCorrespondence& c;
    int n = c.size();
    std::vector<Menu> menus = all_menus(n);

    bool in(Alternative x, Menu a) const { return a.contains(x); }

    bool alpha() const {
        for (Menu a : menus)
            for (Menu b : menus)
                for (Alternative x = 0; x < n; ++x)
                    if (in(x, c(a)) && in(x, b) && b.strict_subset_of(a) && !in(x, c(b))) return false;
        return true;
    }
    bool beta() const {
        for (Menu a : menus)
            for (Menu b : menus)
                for (Alternative x = 0; x < n; ++x)
                    for (Alternative y = 0; y < n; ++y)
                        if (a.strict_subset_of(b) && in(x, c(a)) && in(y, c(a)) && in(y, c(b)) && !in(x, c(b)))
                            return false;
        return true;
    }
    bool gamma() const {
        for (Menu a : menus)
            for (Menu b : menus)
                for (Alternative x = 0; x < n; ++x)
                    if (in(x, c(a)) && in(x, c(b)) && !in(x, c(a | b))) return false;
        return true;
    }
    bool nbc() const {
        for (Alternative x = 0; x < n; ++x)
            for (Alternative y = 0; y < n; ++y)
                for (Alternative z = 0; z < n; ++z)
                    if (in(x, c(Menu::of({x, y}))) && in(y, c(Menu::of({y, z}))) && !in(x, c(Menu::of({x, z}))))
                        return false;
        return true;
    }
    bool warp() const {
        for (Menu a : menus)
            for (Menu b : menus)
                for (Alternative x = 0; x < n; ++x)
                    for (Alternative y = 0; y < n; ++y)
                        if (in(x, a & b) && in(y, a & b) && in(x, c(a)) && in(y, c(b)) && !in(x, c(b))) return false;
        return true;
    }
    static bool condition1(const ChoiceCorrespondence& k) {
        const auto menus = all_menus(k.size());
        for (Menu a : menus)
            for (Menu b : menus)
                for (Alternative x = 0; x < k.size(); ++x)
                    for (Alternative y = 0; y < k.size(); ++y)
                        if (a.contains(x) && a.contains(y) && a.strict_subset_of(b) && k(a).contains(x) &&
                            k(b).contains(y) && !k(b).contains(x))
                            return false;
        return true;
    }
    bool cond1() const { return condition1(c); }
    bool cond2() const {
        // r computed from scratch, not through the engine.
        const auto r = ChoiceCorrespondence::tabulate(n, [&](Menu a) {
            if (a.is_singleton()) return a;
            Menu out;
            for (Alternative x = 0; x < n; ++x)
                if (in(x, a) && c(Menu(a.bits() & ~(1u << x))) != c(a)) out = out.with(x);
            return out;
        });
        return condition1(r);
    }
    bool cond3() const {
        for (Menu a : menus)
            if (a.size() > 1 && c(a) == a) return false;
        return true;
    }
    bool cond4() const {
        for (Menu a : menus)
            for (Alternative x = 0; x < n; ++x)
                for (Alternative y = 0; y < n; ++y) {
                    const Menu u = a.with(y);
                    if (in(x, a) && !in(x, c(a)) && in(x, c(u)) && in(y, c(u))) return false;
                }
        return true;
    }
    bool cond5() const {
        for (Menu a : menus) {
            Menu r;
            if (a.is_singleton()) {
                r = a;
            } else {
                for (Alternative x = 0; x < n; ++x)
                    if (in(x, a) && c(Menu(a.bits() & ~(1u << x))) != c(a)) r = r.with(x);
            }
            for (Menu b : menus) {
                if (!b.subset_of(r) || b.size() < 2) continue;
                bool found = false;
                for (Alternative x = 0; x < n; ++x)
                    if (!in(x, c(b)) && b == c(b).with(x)) found = true;
                if (!found) return false;
            }
        }
        return true;
    }

    bool verdict(Axiom a) const {
        switch (a) {
            case Axiom::alpha: return alpha();
            case Axiom::beta: return beta();
            case Axiom::gamma: return gamma();
            case Axiom::nbc: return nbc();
            case Axiom::warp: return warp();
            case Axiom::cond1: return cond1();
            case Axiom::cond2: return cond2();
            case Axiom::cond3: return cond3();
            case Axiom::cond4: return cond4();
            case Axiom::cond5: return cond5();
        }
        return false;
    }
};

void expect_witness(const Verdict& v, std::vector<Alternative> alts, std::vector<Menu> menus) {
    REQUIRE_FALSE(v.passed());
    CHECK(v.violation->alternatives == alts);
    CHECK(v.violation->menus == menus);
}

}  // namespace

TEST_CASE("alpha") {
    expect_witness(check_alpha(indifferent_veto_table()), {Y}, {m({X, Y}), kXYZ});
    expect_witness(check_alpha(fixed_point_table()), {X}, {m({X, Z}), kXYZ});
    for (const WeakOrder& r : enumerate_weak_orders(3)) CHECK(check_alpha(generate_rational(r)).passed());
}

TEST_CASE("beta") {
    CHECK(check_beta(indifferent_veto_table()).passed());
    CHECK(check_beta(beta_only_table()).passed());
    const auto c = table3(m({X, Y}), m({X}), m({Y}), m({Y}));
    expect_witness(check_beta(c), {X, Y}, {m({X, Y}), kXYZ});
}

TEST_CASE("gamma") {
    expect_witness(check_gamma(beta_only_table()), {X}, {m({X, Y}), m({X, Z})});
    for (const WeakOrder& r : enumerate_weak_orders(3)) {
        CHECK(check_gamma(generate_rational(r)).passed());
        for (const LinearOrder& l : enumerate_linear_orders(3)) CHECK(check_gamma(generate(r, l)).passed());
    }
}

TEST_CASE("nbc") {
    const auto cycle = table3(m({X}), m({Z}), m({Y}), m({X}));
    expect_witness(check_nbc(cycle), {X, Y, Z}, {m({X, Y}), m({Y, Z}), m({X, Z})});
    CHECK(check_nbc(strict_chain_table()).passed());
    for (const WeakOrder& r : enumerate_weak_orders(3))
        for (const LinearOrder& l : enumerate_linear_orders(3)) CHECK(check_nbc(generate(r, l)).passed());
}

TEST_CASE("warp") {
    CHECK(check_warp(strict_chain_table()).passed());
    CHECK_FALSE(check_warp(indifferent_veto_table()).passed());
    CHECK_FALSE(check_warp(fixed_point_table()).passed());
}

TEST_CASE("condition 1") {
    expect_witness(check_condition1(beta_only_table()), {X, Y}, {m({X, Y}), kXYZ});
    CHECK(check_condition1(indifferent_veto_table()).passed());
}

TEST_CASE("condition 2") {
    // r = c on the fixed-point table, so the verdict matches Condition 1 on the table itself.
    const auto c = fixed_point_table();
    CHECK(check_condition2(c).passed() == check_condition1(c).passed());
    for (const WeakOrder& r : enumerate_weak_orders(3)) CHECK(check_condition2(generate_rational(r)).passed());
}

TEST_CASE("condition 3") {
    expect_witness(check_condition3(fixed_point_table()), {}, {m({X, Y})});
    const auto single = ChoiceCorrespondence::tabulate(1, [](Menu a) { return a; });
    CHECK(check_condition3(single).passed());
}

TEST_CASE("condition 4") {
    const auto c = table3(m({X}), m({Z}), m({Y}), m({X, Y}));
    expect_witness(check_condition4(c), {X, Y}, {m({X, Z})});
    for (const WeakOrder& r : enumerate_weak_orders(3)) {
        const auto rational = generate_rational(r);
        bool decisive = true;
        for (Menu a : all_menus(3)) decisive = decisive && rational(a).is_singleton();
        if (decisive) CHECK(check_condition4(rational).passed());
    }
}

TEST_CASE("condition 5") {
    // First violation in canonical order sits at A = {x,y}; {x,y} inside r({x,y,z}) fails too.
    expect_witness(check_condition5(fixed_point_table()), {}, {m({X, Y}), m({X, Y})});
    CHECK(replays(fixed_point_table(), Witness{Axiom::cond5, {kXYZ, m({X, Y})}, {}}));
    CHECK(check_condition5(indifferent_veto_table()).passed());
}

TEST_CASE("check_all runs every axiom") {
    const auto report = check_all(indifferent_veto_table());
    CHECK_FALSE(report[Axiom::alpha].passed());
    CHECK(report[Axiom::beta].passed());
    CHECK(report.conditions_hold());
    CHECK_FALSE(check_all(beta_only_table()).conditions_hold());
    CHECK(first_failed_condition(beta_only_table())->kind == Axiom::cond1);
    CHECK(first_failed_condition(fixed_point_table())->kind == Axiom::cond1);  // z in c({x,z}), x in c({x,y,z})
    CHECK_FALSE(first_failed_condition(indifferent_veto_table()));
}

TEST_CASE("generated tables satisfy beta, gamma, NBC and Conditions 1-5") {
    for (int n = 1; n <= 3; ++n)
        for (const WeakOrder& r : enumerate_weak_orders(n))
            for (const LinearOrder& l : enumerate_linear_orders(n)) {
                const auto report = check_all(generate(r, l));
                for (Axiom a : {Axiom::beta, Axiom::gamma, Axiom::nbc}) CHECK(report[a].passed());
                CHECK(report.conditions_hold());
            }
}

TEST_CASE("verdicts agree with literal quantifier readings") {
    auto compare = [](const ChoiceCorrespondence& c) {
        const Naive naive{c};
        const auto report = check_all(c);
        for (Axiom a : kAllAxioms) {
            INFO(axiom_name(a));
            CHECK(report[a].passed() == naive.verdict(a));
            if (!report[a].passed()) CHECK(replays(c, *report[a].violation));
        }
    };
    Census(3).for_each([&](std::uint64_t, const ChoiceCorrespondence& c) { compare(c); });
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 150; ++trial) compare(random_correspondence(4, rng));
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 4 + static_cast<int>(trial % 2);
        compare(generate(random_weak_order(n, rng), random_linear_order(n, rng)));
    }
}

TEST_CASE("replay rejects tampered witnesses") {
    const auto c = indifferent_veto_table();
    Witness w = *check_alpha(c).violation;
    CHECK(replays(c, w));
    w.alternatives = {X};
    CHECK_FALSE(replays(c, w));
    CHECK_FALSE(replays(c, Witness{Axiom::cond3, {m({X, Y})}, {}}));
    CHECK_FALSE(replays(c, Witness{Axiom::beta, {}, {}}));
}

TEST_CASE("census relationships between axioms") {
    int cond1_fail_beta_pass = 0;
    Census(3).for_each([&](std::uint64_t, const ChoiceCorrespondence& c) {
        const auto r = check_all(c);
        const bool alpha = r[Axiom::alpha].passed(), beta = r[Axiom::beta].passed(), gamma = r[Axiom::gamma].passed(),
                   nbc = r[Axiom::nbc].passed(), warp = r[Axiom::warp].passed();
        CHECK(warp == (alpha && beta));
        CHECK(warp == (alpha && gamma && nbc));
        if (r[Axiom::cond1].passed() && r[Axiom::cond3].passed()) CHECK(nbc);
        if (r[Axiom::cond1].passed()) CHECK(beta);
        if (beta && !r[Axiom::cond1].passed()) ++cond1_fail_beta_pass;
        if (r[Axiom::cond3].passed())
            for (Menu a : all_menus(3))
                if (a.size() == 2) CHECK(c(a).is_singleton());
    });
    CHECK(cond1_fail_beta_pass >= 1);
}
