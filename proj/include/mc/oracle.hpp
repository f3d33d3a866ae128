#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "mc/core.hpp"
#include "mc/recovery.hpp"

namespace mc {

struct CorrespondenceHash {
    std::size_t operator()(const ChoiceCorrespondence& c) const noexcept;
};

/// Every ordered set partition of {0..n-1}, each exactly once. The first class
/// ranges over nonempty subsets in ascending bit value, then recursively.
std::vector<WeakOrder> enumerate_weak_orders(int n);

/// All n! rankings in lexicographic order.
std::vector<LinearOrder> enumerate_linear_orders(int n);

/// Product of (2^|A| - 1) over nonsingleton menus A. Defined for n <= 5.
unsigned __int128 census_size(int n);

/// Every choice correspondence on n <= 4 alternatives, addressed by a
/// mixed-radix index. Digit i selects the choice at the i-th nonsingleton
/// menu (canonical order, least significant first) among its nonempty
/// subsets in ascending bit value.
class Census {
  public:
    explicit Census(int n);

    int universe_size() const { return n_; }
    std::uint64_t size() const { return size_; }
    ChoiceCorrespondence at(std::uint64_t index) const;

    /// Streams tables [begin, end) in index order.
    void for_each(std::uint64_t begin, std::uint64_t end,
                  const std::function<void(std::uint64_t, const ChoiceCorrespondence&)>& visit) const;
    void for_each(const std::function<void(std::uint64_t, const ChoiceCorrespondence&)>& visit) const {
        for_each(0, size_, visit);
    }

  private:
    int n_;
    std::uint64_t size_ = 1;
    std::vector<Menu> menus_;                 // nonsingleton menus, canonical order
    std::vector<std::vector<Menu>> options_;  // per menu: its nonempty subsets
};

/// Every (R, L) whose MC correspondence equals `c`, by exhaustive search.
std::vector<Representation> brute_force_representations(const ChoiceCorrespondence& c);

/// Every weak order whose maximization equals `c`.
std::vector<WeakOrder> brute_force_rationalize(const ChoiceCorrespondence& c);

/// The exhaustive search over all (R, L) on n alternatives, done once and
/// indexed by the generated table.
class RepresentationIndex {
  public:
    explicit RepresentationIndex(int n);

    std::vector<Representation> lookup(const ChoiceCorrespondence& c) const;
    bool representable(const ChoiceCorrespondence& c) const { return index_.contains(c); }
    /// Number of distinct MC tables.
    std::size_t distinct_tables() const { return index_.size(); }

  private:
    std::vector<WeakOrder> weak_orders_;
    std::vector<LinearOrder> linear_orders_;
    std::unordered_map<ChoiceCorrespondence, std::vector<std::pair<std::size_t, std::size_t>>, CorrespondenceHash>
        index_;
};

struct SweepOptions {
    int n = 3;
    bool exhaustive = true;
    std::uint64_t sample_count = 0;
    std::uint64_t seed = 0;
    int shards = 1;
    /// Required for an exhaustive sweep at n = 4.
    bool allow_long = false;
};

struct Discrepancy {
    std::uint64_t index;  // census index of the table
    bool conditions_hold;
    bool oracle_representable;
    RecoveryResult::Status recovery;
    std::string detail;

    friend bool operator==(const Discrepancy&, const Discrepancy&) = default;
};

struct SweepReport {
    int n = 0;
    bool exhaustive = true;
    std::optional<std::uint64_t> seed;
    int shards = 1;
    std::uint64_t scanned = 0;
    std::uint64_t conditions_passing = 0;
    std::uint64_t representable = 0;
    std::uint64_t recovered = 0;
    std::vector<Discrepancy> discrepancies;

    bool ok() const { return discrepancies.empty(); }
    /// Adds counts and discrepancies from another shard.
    void merge(const SweepReport& other);
};

/// Checks (Conditions 1-5) <=> (oracle finds a representation) <=> (recover
/// succeeds) on every scanned table. Throws std::invalid_argument on options
/// outside the supported range.
SweepReport characterization_sweep(const SweepOptions& options);

}  // namespace mc
