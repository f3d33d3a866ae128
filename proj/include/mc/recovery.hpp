#pragma once

#include <optional>
#include <string>

#include "mc/core.hpp"

namespace mc {

/// xRy iff some menu A has x in r(A) and y in A.
BinaryRelation reveal_shortlist(const ChoiceCorrespondence& c);

/// xLy iff x = y or c({x, y}) = {x}.
BinaryRelation reveal_veto(const ChoiceCorrespondence& c);

/// Indifference classes ordered best first; classes sorted by their
/// lowest-index member when tied. Requires a complete, transitive relation.
std::optional<WeakOrder> to_weak_order(const BinaryRelation& rel);

/// Requires a complete, antisymmetric, transitive relation.
std::optional<LinearOrder> to_linear_order(const BinaryRelation& rel);

struct Representation {
    WeakOrder shortlist;
    LinearOrder veto;
};

struct RecoveryResult {
    enum class Status {
        recovered,
        /// Expected outcome for data outside the model.
        condition_failed,
        /// Conditions passed but the construction broke down. Signals a bug.
        internal_defect,
    };

    Status status;
    std::optional<Representation> representation;
    std::optional<Witness> witness;
    std::string defect;

    bool ok() const { return status == Status::recovered; }
};

/// Checks Conditions 1-5, then builds (R, L) from revealed preference and
/// verifies that it regenerates `c` on every menu.
RecoveryResult recover(const ChoiceCorrespondence& c);

}  // namespace mc
