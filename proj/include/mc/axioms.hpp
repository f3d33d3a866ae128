#pragma once

#include <array>
#include <optional>

#include "mc/core.hpp"

namespace mc {

/// Pass, or fail with the first violation in canonical scan order.
struct Verdict {
    std::optional<Witness> violation;

    bool passed() const { return !violation.has_value(); }
};

Verdict check_alpha(const ChoiceCorrespondence& c);
Verdict check_beta(const ChoiceCorrespondence& c);
Verdict check_gamma(const ChoiceCorrespondence& c);
Verdict check_nbc(const ChoiceCorrespondence& c);
Verdict check_warp(const ChoiceCorrespondence& c);

Verdict check_condition1(const ChoiceCorrespondence& c);
/// Condition 1 applied to the removal-impact map of `c`.
Verdict check_condition2(const ChoiceCorrespondence& c);
Verdict check_condition2(const ChoiceCorrespondence& c, const ChoiceCorrespondence& impact);
Verdict check_condition3(const ChoiceCorrespondence& c);
Verdict check_condition4(const ChoiceCorrespondence& c);
Verdict check_condition5(const ChoiceCorrespondence& c);
Verdict check_condition5(const ChoiceCorrespondence& c, const ChoiceCorrespondence& impact);

Verdict check(Axiom axiom, const ChoiceCorrespondence& c);

class AxiomReport {
  public:
    const Verdict& operator[](Axiom axiom) const { return verdicts_[static_cast<std::size_t>(axiom)]; }
    Verdict& operator[](Axiom axiom) { return verdicts_[static_cast<std::size_t>(axiom)]; }

    /// Conditions 1-5 all pass.
    bool conditions_hold() const;

  private:
    std::array<Verdict, std::size(kAllAxioms)> verdicts_;
};

AxiomReport check_all(const ChoiceCorrespondence& c);

/// First of Conditions 1-5 (in that order) to fail, with its witness.
std::optional<Witness> first_failed_condition(const ChoiceCorrespondence& c);

/// True iff `witness` describes a genuine violation of its axiom by `c`.
bool replays(const ChoiceCorrespondence& c, const Witness& witness);

}  // namespace mc
