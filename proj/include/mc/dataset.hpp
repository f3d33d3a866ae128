#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "mc/axioms.hpp"
#include "mc/core.hpp"
#include "mc/oracle.hpp"
#include "mc/recovery.hpp"

namespace mc {

/// Malformed or incomplete user input.
class InputError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct ChoiceDataset {
    Universe universe;
    ChoiceCorrespondence choices;
};

/// Parses `{"alternatives": [...], "choices": [{"menu": [...], "choice": [...]}, ...]}`.
/// Every nonsingleton menu must appear exactly once; singleton rows are optional.
ChoiceDataset parse_dataset(std::string_view text);

/// Canonical form: nonsingleton rows sorted by size, then by member indices;
/// names inside a row follow the alternatives' order.
std::string serialize_dataset(const ChoiceDataset& dataset);

/// "x,y > z": classes separated by '>', members of a class by ','.
WeakOrder parse_weak_order(std::string_view text, const Universe& universe);
/// "x > y > z", best first.
LinearOrder parse_linear_order(std::string_view text, const Universe& universe);
/// Distinct labels mentioned in an order string, in order of appearance.
std::vector<std::string> order_labels(std::string_view text);

std::string format_menu(const Universe& u, Menu m);
std::string format_weak_order(const Universe& u, const WeakOrder& order);
std::string format_linear_order(const Universe& u, const LinearOrder& order);

/// One-sentence reading of a witness using the universe's labels.
std::string describe_witness(const Universe& u, const Witness& w);

nlohmann::json witness_to_json(const Universe& u, const Witness& w);
nlohmann::json report_to_json(const Universe& u, const AxiomReport& report);
std::string report_to_text(const Universe& u, const AxiomReport& report);

nlohmann::json sweep_to_json(const SweepReport& report);
std::string sweep_to_text(const SweepReport& report);

}  // namespace mc
