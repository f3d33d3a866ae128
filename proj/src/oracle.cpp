#include "mc/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

#include "mc/axioms.hpp"
#include "mc/engine.hpp"

namespace mc {

std::size_t CorrespondenceHash::operator()(const ChoiceCorrespondence& c) const noexcept {
    std::size_t h = static_cast<std::size_t>(c.size());
    for (Menu m : c.table()) h = h * 0x100000001b3ull ^ m.bits();
    return h;
}

namespace {

void extend_weak_orders(int n, std::uint32_t remaining, std::vector<Menu>& prefix, std::vector<WeakOrder>& out) {
    if (remaining == 0) {
        out.emplace_back(n, prefix);
        return;
    }
    // Ascending nonempty submasks of `remaining`.
    for (std::uint32_t sub = remaining & (~remaining + 1u);; sub = (sub - remaining) & remaining) {
        prefix.emplace_back(sub);
        extend_weak_orders(n, remaining & ~sub, prefix, out);
        prefix.pop_back();
        if (sub == remaining) break;
    }
}

}  // namespace

std::vector<WeakOrder> enumerate_weak_orders(int n) {
    if (n < 1 || n > kMaxAlternatives) throw std::invalid_argument("n out of range");
    std::vector<WeakOrder> out;
    std::vector<Menu> prefix;
    extend_weak_orders(n, Menu::full(n).bits(), prefix, out);
    return out;
}

std::vector<LinearOrder> enumerate_linear_orders(int n) {
    if (n < 1 || n > kMaxAlternatives) throw std::invalid_argument("n out of range");
    std::vector<Alternative> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<LinearOrder> out;
    do {
        out.emplace_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

unsigned __int128 census_size(int n) {
    if (n < 1 || n > 5) throw std::invalid_argument("census size is only representable for 1 <= n <= 5");
    unsigned __int128 total = 1;
    for (Menu m : all_menus(n)) total *= (1u << m.size()) - 1u;
    return total;
}

Census::Census(int n) : n_(n) {
    if (n < 1 || n > 4) throw std::invalid_argument("census enumeration requires 1 <= n <= 4");
    for (Menu m : all_menus(n)) {
        if (m.is_singleton()) continue;
        menus_.push_back(m);
        std::vector<Menu> opts;
        for (std::uint32_t sub = 1; sub <= m.bits(); ++sub)
            if ((sub & ~m.bits()) == 0) opts.emplace_back(sub);
        size_ *= opts.size();
        options_.push_back(std::move(opts));
    }
}

ChoiceCorrespondence Census::at(std::uint64_t index) const {
    if (index >= size_) throw std::out_of_range("census index out of range");
    std::vector<Menu> table(std::size_t{1} << n_);
    for (Alternative a = 0; a < n_; ++a) table[Menu::singleton(a).bits()] = Menu::singleton(a);
    for (std::size_t i = 0; i < menus_.size(); ++i) {
        const auto radix = options_[i].size();
        table[menus_[i].bits()] = options_[i][index % radix];
        index /= radix;
    }
    return ChoiceCorrespondence(n_, std::move(table));
}

void Census::for_each(std::uint64_t begin, std::uint64_t end,
                      const std::function<void(std::uint64_t, const ChoiceCorrespondence&)>& visit) const {
    end = std::min(end, size_);
    if (begin >= end) return;
    std::vector<std::size_t> digits(menus_.size());
    std::uint64_t rest = begin;
    for (std::size_t i = 0; i < menus_.size(); ++i) {
        digits[i] = rest % options_[i].size();
        rest /= options_[i].size();
    }
    std::vector<Menu> table(std::size_t{1} << n_);
    for (Alternative a = 0; a < n_; ++a) table[Menu::singleton(a).bits()] = Menu::singleton(a);
    for (std::size_t i = 0; i < menus_.size(); ++i) table[menus_[i].bits()] = options_[i][digits[i]];

    for (std::uint64_t index = begin; index < end; ++index) {
        visit(index, ChoiceCorrespondence(n_, table));
        for (std::size_t i = 0; i < digits.size(); ++i) {
            if (++digits[i] < options_[i].size()) {
                table[menus_[i].bits()] = options_[i][digits[i]];
                break;
            }
            digits[i] = 0;
            table[menus_[i].bits()] = options_[i][0];
        }
    }
}

std::vector<Representation> brute_force_representations(const ChoiceCorrespondence& c) {
    std::vector<Representation> found;
    const auto linear = enumerate_linear_orders(c.size());
    for (const WeakOrder& r : enumerate_weak_orders(c.size()))
        for (const LinearOrder& l : linear)
            if (generate(r, l) == c) found.push_back({r, l});
    for (const auto& rep : found)
        if (generate(rep.shortlist, rep.veto) != c) throw std::logic_error("brute-force representation does not regenerate");
    return found;
}

std::vector<WeakOrder> brute_force_rationalize(const ChoiceCorrespondence& c) {
    std::vector<WeakOrder> found;
    for (const WeakOrder& r : enumerate_weak_orders(c.size()))
        if (generate_rational(r) == c) found.push_back(r);
    return found;
}

RepresentationIndex::RepresentationIndex(int n)
    : weak_orders_(enumerate_weak_orders(n)), linear_orders_(enumerate_linear_orders(n)) {
    for (std::size_t i = 0; i < weak_orders_.size(); ++i)
        for (std::size_t j = 0; j < linear_orders_.size(); ++j)
            index_[generate(weak_orders_[i], linear_orders_[j])].emplace_back(i, j);
}

std::vector<Representation> RepresentationIndex::lookup(const ChoiceCorrespondence& c) const {
    std::vector<Representation> out;
    auto it = index_.find(c);
    if (it == index_.end()) return out;
    for (auto [i, j] : it->second) out.push_back({weak_orders_[i], linear_orders_[j]});
    return out;
}

void SweepReport::merge(const SweepReport& other) {
    scanned += other.scanned;
    conditions_passing += other.conditions_passing;
    representable += other.representable;
    recovered += other.recovered;
    discrepancies.insert(discrepancies.end(), other.discrepancies.begin(), other.discrepancies.end());
    std::stable_sort(discrepancies.begin(), discrepancies.end(),
                     [](const Discrepancy& a, const Discrepancy& b) { return a.index < b.index; });
}

namespace {

void examine(std::uint64_t index, const ChoiceCorrespondence& c, const RepresentationIndex& oracle,
             SweepReport& report) {
    using Status = RecoveryResult::Status;
    const RecoveryResult rec = recover(c);
    const bool conditions = rec.status != Status::condition_failed;
    const bool representable = oracle.representable(c);

    ++report.scanned;
    report.conditions_passing += conditions;
    report.representable += representable;
    report.recovered += rec.ok();

    std::string detail;
    if (conditions != representable)
        detail = conditions ? "conditions hold but no representation exists" : "representable but a condition fails";
    else if (rec.status == Status::internal_defect)
        detail = "recovery defect: " + rec.defect;
    else if (rec.ok() && generate(rec.representation->shortlist, rec.representation->veto) != c)
        detail = "recovered pair does not regenerate the table";
    if (!detail.empty()) report.discrepancies.push_back({index, conditions, representable, rec.status, detail});
}

}  // namespace

SweepReport characterization_sweep(const SweepOptions& options) {
    const int n = options.n;
    if (n < 1 || n > 4) throw std::invalid_argument("sweep supports 1 <= n <= 4");
    if (options.shards < 1) throw std::invalid_argument("shard count must be positive");
    if (options.exhaustive && n == 4 && !options.allow_long)
        throw std::invalid_argument("exhaustive sweep at n = 4 requires the long-running flag");

    const Census census(n);
    const RepresentationIndex oracle(n);

    std::vector<std::uint64_t> sample;
    if (!options.exhaustive) {
        std::mt19937_64 rng(options.seed);
        std::uniform_int_distribution<std::uint64_t> pick(0, census.size() - 1);
        sample.resize(options.sample_count);
        for (auto& index : sample) index = pick(rng);
    }
    const std::uint64_t total = options.exhaustive ? census.size() : sample.size();

    const auto shards = static_cast<std::uint64_t>(options.shards);
    std::vector<SweepReport> parts(shards);
    auto run_shard = [&](std::uint64_t shard) {
        const std::uint64_t begin = total * shard / shards;
        const std::uint64_t end = total * (shard + 1) / shards;
        SweepReport& part = parts[shard];
        if (options.exhaustive) {
            census.for_each(begin, end, [&](std::uint64_t index, const ChoiceCorrespondence& c) {
                examine(index, c, oracle, part);
            });
        } else {
            for (std::uint64_t k = begin; k < end; ++k) examine(sample[k], census.at(sample[k]), oracle, part);
        }
    };

    if (shards == 1) {
        run_shard(0);
    } else {
        std::vector<std::jthread> workers;
        for (std::uint64_t s = 0; s < shards; ++s) workers.emplace_back(run_shard, s);
    }

    SweepReport report;
    report.n = n;
    report.exhaustive = options.exhaustive;
    if (!options.exhaustive) report.seed = options.seed;
    report.shards = options.shards;
    for (const auto& part : parts) report.merge(part);
    return report;
}

}  // namespace mc
