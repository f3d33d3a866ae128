#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace mc {

/// Index of an alternative in its universe, 0 <= a < n.
using Alternative = int;

inline constexpr int kMaxAlternatives = 16;

/// Nonempty subset of the universe, encoded as a bit vector (bit i <=> alternative i).
class Menu {
  public:
    constexpr Menu() = default;
    constexpr explicit Menu(std::uint32_t bits) : bits_(bits) {}

    static constexpr Menu singleton(Alternative a) { return Menu(1u << a); }
    static constexpr Menu full(int n) { return Menu((1u << n) - 1u); }
    static Menu of(std::initializer_list<Alternative> alts);

    constexpr std::uint32_t bits() const { return bits_; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool is_singleton() const { return std::has_single_bit(bits_); }
    constexpr bool contains(Alternative a) const { return (bits_ >> a) & 1u; }
    constexpr bool subset_of(Menu other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool strict_subset_of(Menu other) const { return subset_of(other) && bits_ != other.bits_; }
    /// Lowest-index member. Undefined on the empty set.
    constexpr Alternative first() const { return std::countr_zero(bits_); }

    constexpr Menu with(Alternative a) const { return Menu(bits_ | (1u << a)); }
    constexpr Menu without(Alternative a) const { return Menu(bits_ & ~(1u << a)); }

    std::vector<Alternative> members() const;

    friend constexpr Menu operator|(Menu a, Menu b) { return Menu(a.bits_ | b.bits_); }
    friend constexpr Menu operator&(Menu a, Menu b) { return Menu(a.bits_ & b.bits_); }
    /// Set difference.
    friend constexpr Menu operator-(Menu a, Menu b) { return Menu(a.bits_ & ~b.bits_); }
    friend constexpr bool operator==(Menu, Menu) = default;

  private:
    std::uint32_t bits_ = 0;
};

/// Canonical menu order: ascending cardinality, ties by ascending bit value.
constexpr bool canonical_less(Menu a, Menu b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.bits() < b.bits();
}

class Universe {
  public:
    /// Throws std::invalid_argument unless 1 <= labels.size() <= 16 and labels are distinct.
    explicit Universe(std::vector<std::string> labels);
    /// Labels "x", "y", "z", ... for n <= 3 and "a0", "a1", ... beyond.
    static Universe of_size(int n);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::string& label(Alternative a) const { return labels_.at(a); }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<Alternative> find(const std::string& label) const;
    Menu full() const { return Menu::full(size()); }

    friend bool operator==(const Universe&, const Universe&) = default;

  private:
    std::vector<std::string> labels_;
};

/// All 2^n - 1 nonempty menus in canonical order.
std::vector<Menu> all_menus(int n);
inline std::vector<Menu> all_menus(const Universe& u) { return all_menus(u.size()); }

struct PairViolation {
    Alternative x;
    Alternative y;
};

struct TripleViolation {
    Alternative x;
    Alternative y;
    Alternative z;
};

/// n x n boolean table; related(x, y) reads "x is related to y".
class BinaryRelation {
  public:
    explicit BinaryRelation(int n);

    int size() const { return n_; }
    bool related(Alternative x, Alternative y) const { return (rows_[x] >> y) & 1u; }
    void set(Alternative x, Alternative y, bool value = true);
    /// Every y with related(x, y).
    Menu row(Alternative x) const { return Menu(rows_[x]); }
    void set_row(Alternative x, Menu row) { rows_[x] = row.bits(); }

    /// First pair (x, y) with neither xRy nor yRx, if any.
    std::optional<PairViolation> completeness_violation() const;
    /// First triple with xRy, yRz but not xRz, if any.
    std::optional<TripleViolation> transitivity_violation() const;
    /// First pair of distinct x, y with xRy and yRx, if any.
    std::optional<PairViolation> antisymmetry_violation() const;

    bool is_complete() const { return !completeness_violation(); }
    bool is_transitive() const { return !transitivity_violation(); }
    bool is_antisymmetric() const { return !antisymmetry_violation(); }

    friend bool operator==(const BinaryRelation&, const BinaryRelation&) = default;

  private:
    int n_;
    std::vector<std::uint32_t> rows_;
};

/// xPy iff xRy and not yRx.
BinaryRelation strict_part(const BinaryRelation& rel);
/// xIy iff xRy and yRx.
BinaryRelation symmetric_part(const BinaryRelation& rel);

/// Ordered partition of the universe into indifference classes, best class first.
class WeakOrder {
  public:
    /// Throws std::invalid_argument unless classes are nonempty, disjoint and cover {0..n-1}.
    WeakOrder(int n, std::vector<Menu> classes);
    /// Single class: every alternative indifferent to every other.
    static WeakOrder indifference(int n);

    int size() const { return n_; }
    const std::vector<Menu>& classes() const { return classes_; }
    /// Position of x's class; lower is better.
    int class_index(Alternative x) const { return rank_[x]; }
    bool weakly_prefers(Alternative x, Alternative y) const { return rank_[x] <= rank_[y]; }

    friend bool operator==(const WeakOrder& a, const WeakOrder& b) { return a.classes_ == b.classes_; }

  private:
    int n_;
    std::vector<Menu> classes_;
    std::vector<int> rank_;
};

/// Strict ranking of the universe, best first.
class LinearOrder {
  public:
    /// Throws std::invalid_argument unless ranking is a permutation of {0..n-1}.
    explicit LinearOrder(std::vector<Alternative> ranking);
    static LinearOrder identity(int n);

    int size() const { return static_cast<int>(ranking_.size()); }
    const std::vector<Alternative>& ranking() const { return ranking_; }
    int position(Alternative x) const { return position_[x]; }
    bool prefers(Alternative x, Alternative y) const { return position_[x] <= position_[y]; }

    friend bool operator==(const LinearOrder& a, const LinearOrder& b) { return a.ranking_ == b.ranking_; }

  private:
    std::vector<Alternative> ranking_;
    std::vector<int> position_;
};

BinaryRelation as_relation(const WeakOrder& order);
BinaryRelation as_relation(const LinearOrder& order);

/// Total map from every menu to a nonempty submenu. Stored flat, indexed by bit pattern.
class ChoiceCorrespondence {
  public:
    /// `table` has 2^n entries; entry 0 is ignored. Throws std::invalid_argument
    /// unless every entry is a nonempty subset of its menu.
    ChoiceCorrespondence(int n, std::vector<Menu> table);

    template <class F>
    static ChoiceCorrespondence tabulate(int n, F&& choose) {
        std::vector<Menu> table(std::size_t{1} << n);
        for (std::uint32_t bits = 1; bits < table.size(); ++bits) table[bits] = choose(Menu(bits));
        return ChoiceCorrespondence(n, std::move(table));
    }

    int size() const { return n_; }
    Menu operator()(Menu a) const { return table_[a.bits()]; }
    const std::vector<Menu>& table() const { return table_; }

    friend bool operator==(const ChoiceCorrespondence&, const ChoiceCorrespondence&) = default;

  private:
    int n_;
    std::vector<Menu> table_;
};

enum class Axiom { alpha, beta, gamma, nbc, warp, cond1, cond2, cond3, cond4, cond5 };

inline constexpr Axiom kAllAxioms[] = {Axiom::alpha, Axiom::beta,  Axiom::gamma, Axiom::nbc,   Axiom::warp,
                                       Axiom::cond1, Axiom::cond2, Axiom::cond3, Axiom::cond4, Axiom::cond5};

/// Short identifier: "alpha", ..., "cond5".
const char* axiom_name(Axiom axiom);
std::optional<Axiom> axiom_from_name(const std::string& name);

/// Concrete violating instance of an axiom. The meaning of `menus` and
/// `alternatives` is fixed per axiom:
///
///   alpha        alternatives {x},     menus {B, A}      x in c(A), x in B strictly inside A, x not in c(B)
///   beta         alternatives {x, y},  menus {A, B}      A strictly inside B
///   gamma        alternatives {x},     menus {A, B}      x in c(A) and c(B), not in c(A u B)
///   nbc          alternatives {x,y,z}, menus {xy, yz, xz}
///   warp         alternatives {x, y},  menus {A, B}
///   cond1/cond2  alternatives {x, y},  menus {A, B}      A strictly inside B
///   cond3        alternatives {},      menus {A}         c(A) = A, |A| >= 2
///   cond4        alternatives {x, y},  menus {A}         y not in A
///   cond5        alternatives {},      menus {A, B}      B inside r(A), |B \ c(B)| != 1
struct Witness {
    Axiom kind;
    std::vector<Menu> menus;
    std::vector<Alternative> alternatives;

    friend bool operator==(const Witness&, const Witness&) = default;
};

}  // namespace mc
