#include "mc/core.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace mc {

Menu Menu::of(std::initializer_list<Alternative> alts) {
    std::uint32_t bits = 0;
    for (Alternative a : alts) bits |= 1u << a;
    return Menu(bits);
}

std::vector<Alternative> Menu::members() const {
    std::vector<Alternative> out;
    out.reserve(size());
    for (std::uint32_t rest = bits_; rest != 0; rest &= rest - 1) out.push_back(std::countr_zero(rest));
    return out;
}

Universe::Universe(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty() || labels_.size() > kMaxAlternatives)
        throw std::invalid_argument("universe must have between 1 and 16 alternatives");
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != labels_.size()) throw std::invalid_argument("alternative labels must be distinct");
}

Universe Universe::of_size(int n) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(n <= 3 ? std::string(1, static_cast<char>('x' + i)) : "a" + std::to_string(i));
    return Universe(std::move(labels));
}

std::optional<Alternative> Universe::find(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<Alternative>(it - labels_.begin());
}

std::vector<Menu> all_menus(int n) {
    std::vector<Menu> menus;
    menus.reserve((std::size_t{1} << n) - 1);
    // Gosper's hack walks each cardinality class in ascending numeric order.
    for (int k = 1; k <= n; ++k) {
        std::uint32_t set = (1u << k) - 1u;
        const std::uint32_t limit = 1u << n;
        while (set < limit) {
            menus.emplace_back(set);
            const std::uint32_t low = set & (~set + 1u);
            const std::uint32_t ripple = set + low;
            set = (((ripple ^ set) >> 2) / low) | ripple;
        }
    }
    return menus;
}

BinaryRelation::BinaryRelation(int n) : n_(n), rows_(static_cast<std::size_t>(n), 0u) {
    if (n < 1 || n > kMaxAlternatives) throw std::invalid_argument("relation size out of range");
}

void BinaryRelation::set(Alternative x, Alternative y, bool value) {
    if (value)
        rows_[x] |= 1u << y;
    else
        rows_[x] &= ~(1u << y);
}

std::optional<PairViolation> BinaryRelation::completeness_violation() const {
    for (Alternative x = 0; x < n_; ++x)
        for (Alternative y = x; y < n_; ++y)
            if (!related(x, y) && !related(y, x)) return PairViolation{x, y};
    return std::nullopt;
}

std::optional<TripleViolation> BinaryRelation::transitivity_violation() const {
    for (Alternative x = 0; x < n_; ++x)
        for (Alternative y = 0; y < n_; ++y) {
            if (!related(x, y)) continue;
            const std::uint32_t missing = rows_[y] & ~rows_[x];
            if (missing != 0) return TripleViolation{x, y, std::countr_zero(missing)};
        }
    return std::nullopt;
}

std::optional<PairViolation> BinaryRelation::antisymmetry_violation() const {
    for (Alternative x = 0; x < n_; ++x)
        for (Alternative y = x + 1; y < n_; ++y)
            if (related(x, y) && related(y, x)) return PairViolation{x, y};
    return std::nullopt;
}

BinaryRelation strict_part(const BinaryRelation& rel) {
    BinaryRelation out(rel.size());
    for (Alternative x = 0; x < rel.size(); ++x)
        for (Alternative y = 0; y < rel.size(); ++y) out.set(x, y, rel.related(x, y) && !rel.related(y, x));
    return out;
}

BinaryRelation symmetric_part(const BinaryRelation& rel) {
    BinaryRelation out(rel.size());
    for (Alternative x = 0; x < rel.size(); ++x)
        for (Alternative y = 0; y < rel.size(); ++y) out.set(x, y, rel.related(x, y) && rel.related(y, x));
    return out;
}

WeakOrder::WeakOrder(int n, std::vector<Menu> classes)
    : n_(n), classes_(std::move(classes)), rank_(static_cast<std::size_t>(n), -1) {
    if (n < 1 || n > kMaxAlternatives) throw std::invalid_argument("weak order size out of range");
    std::uint32_t seen = 0;
    for (std::size_t i = 0; i < classes_.size(); ++i) {
        const Menu cls = classes_[i];
        if (cls.empty()) throw std::invalid_argument("weak order has an empty class");
        if (!cls.subset_of(Menu::full(n))) throw std::invalid_argument("weak order class outside the universe");
        if ((cls.bits() & seen) != 0) throw std::invalid_argument("weak order classes overlap");
        seen |= cls.bits();
        for (Alternative a : cls.members()) rank_[a] = static_cast<int>(i);
    }
    if (seen != Menu::full(n).bits()) throw std::invalid_argument("weak order classes do not cover the universe");
}

WeakOrder WeakOrder::indifference(int n) { return WeakOrder(n, {Menu::full(n)}); }

LinearOrder::LinearOrder(std::vector<Alternative> ranking)
    : ranking_(std::move(ranking)), position_(ranking_.size(), -1) {
    const int n = size();
    if (n < 1 || n > kMaxAlternatives) throw std::invalid_argument("linear order size out of range");
    for (int i = 0; i < n; ++i) {
        const Alternative a = ranking_[i];
        if (a < 0 || a >= n || position_[a] != -1) throw std::invalid_argument("linear order is not a permutation");
        position_[a] = i;
    }
}

LinearOrder LinearOrder::identity(int n) {
    std::vector<Alternative> ranking(static_cast<std::size_t>(n));
    std::iota(ranking.begin(), ranking.end(), 0);
    return LinearOrder(std::move(ranking));
}

BinaryRelation as_relation(const WeakOrder& order) {
    BinaryRelation rel(order.size());
    for (Alternative x = 0; x < order.size(); ++x)
        for (Alternative y = 0; y < order.size(); ++y) rel.set(x, y, order.weakly_prefers(x, y));
    return rel;
}

BinaryRelation as_relation(const LinearOrder& order) {
    BinaryRelation rel(order.size());
    for (Alternative x = 0; x < order.size(); ++x)
        for (Alternative y = 0; y < order.size(); ++y) rel.set(x, y, order.prefers(x, y));
    return rel;
}

ChoiceCorrespondence::ChoiceCorrespondence(int n, std::vector<Menu> table) : n_(n), table_(std::move(table)) {
    if (n < 1 || n > kMaxAlternatives) throw std::invalid_argument("correspondence size out of range");
    if (table_.size() != (std::size_t{1} << n)) throw std::invalid_argument("correspondence table has wrong length");
    table_[0] = Menu();
    for (std::uint32_t bits = 1; bits < table_.size(); ++bits) {
        const Menu chosen = table_[bits];
        if (chosen.empty()) throw std::invalid_argument("empty choice at menu " + std::to_string(bits));
        if (!chosen.subset_of(Menu(bits))) throw std::invalid_argument("choice outside menu " + std::to_string(bits));
    }
}

const char* axiom_name(Axiom axiom) {
    switch (axiom) {
        case Axiom::alpha: return "alpha";
        case Axiom::beta: return "beta";
        case Axiom::gamma: return "gamma";
        case Axiom::nbc: return "nbc";
        case Axiom::warp: return "warp";
        case Axiom::cond1: return "cond1";
        case Axiom::cond2: return "cond2";
        case Axiom::cond3: return "cond3";
        case Axiom::cond4: return "cond4";
        case Axiom::cond5: return "cond5";
    }
    return "?";
}

std::optional<Axiom> axiom_from_name(const std::string& name) {
    for (Axiom a : kAllAxioms)
        if (name == axiom_name(a)) return a;
    return std::nullopt;
}

}  // namespace mc
