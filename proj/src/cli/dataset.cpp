#include "mc/dataset.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace mc {

using nlohmann::json;

namespace {

std::string trim(std::string_view s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string_view::npos) return {};
    const auto end = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(begin, end - begin + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

std::vector<std::string> string_list(const json& value, const std::string& what) {
    if (!value.is_array()) throw InputError(what + " must be an array of strings");
    std::vector<std::string> out;
    for (const auto& item : value) {
        if (!item.is_string()) throw InputError(what + " must be an array of strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

std::string quote_list(const std::vector<std::string>& names) {
    std::string s = "[";
    for (std::size_t i = 0; i < names.size(); ++i) s += (i ? ", " : "") + names[i];
    return s + "]";
}

Menu resolve(const Universe& u, const std::string& name, std::string_view context) {
    auto a = u.find(name);
    if (!a) throw InputError("unknown label '" + name + "' in " + std::string(context));
    return Menu::singleton(*a);
}

json menu_names(const Universe& u, Menu m) {
    json names = json::array();
    for (Alternative a : m.members()) names.push_back(u.label(a));
    return names;
}

}  // namespace

ChoiceDataset parse_dataset(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("alternatives") || !doc.contains("choices"))
        throw InputError("dataset must be an object with \"alternatives\" and \"choices\"");

    std::optional<Universe> parsed;
    try {
        parsed.emplace(string_list(doc["alternatives"], "\"alternatives\""));
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    const Universe& u = *parsed;
    const int n = u.size();

    if (!doc["choices"].is_array()) throw InputError("\"choices\" must be an array");
    std::vector<Menu> table(std::size_t{1} << n);
    for (const auto& row : doc["choices"]) {
        if (!row.is_object() || !row.contains("menu") || !row.contains("choice"))
            throw InputError("each row needs \"menu\" and \"choice\"");
        const auto menu_list = string_list(row["menu"], "\"menu\"");
        const auto choice_list = string_list(row["choice"], "\"choice\"");
        const std::string where = "menu " + quote_list(menu_list);

        if (menu_list.empty()) throw InputError("empty menu");
        if (std::set(menu_list.begin(), menu_list.end()).size() != menu_list.size())
            throw InputError("duplicate name in " + where);
        if (std::set(choice_list.begin(), choice_list.end()).size() != choice_list.size())
            throw InputError("duplicate name in the choice for " + where);

        Menu menu;
        for (const auto& name : menu_list) menu = menu | resolve(u, name, where);
        if (choice_list.empty()) throw InputError("empty choice for " + where);
        Menu choice;
        for (const auto& name : choice_list) {
            if (std::find(menu_list.begin(), menu_list.end(), name) == menu_list.end())
                throw InputError("choice not within menu: '" + name + "' is not in " + where);
            choice = choice | resolve(u, name, where);
        }
        if (!table[menu.bits()].empty()) throw InputError("duplicate " + where);
        table[menu.bits()] = choice;
    }

    for (Menu m : all_menus(n)) {
        if (!table[m.bits()].empty()) continue;
        if (m.is_singleton()) {
            table[m.bits()] = m;
            continue;
        }
        throw InputError("incomplete domain: missing menu " + format_menu(u, m));
    }
    return ChoiceDataset{u, ChoiceCorrespondence(n, std::move(table))};
}

std::string serialize_dataset(const ChoiceDataset& dataset) {
    const Universe& u = dataset.universe;
    std::vector<Menu> rows;
    for (Menu m : all_menus(u.size()))
        if (!m.is_singleton()) rows.push_back(m);
    std::stable_sort(rows.begin(), rows.end(), [](Menu a, Menu b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.members() < b.members();
    });

    // One row per line; key order menu, choice.
    std::ostringstream out;
    out << "{\n  \"alternatives\": " << json(u.labels()).dump() << ",\n  \"choices\": [";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        nlohmann::ordered_json row;
        row["menu"] = menu_names(u, rows[i]);
        row["choice"] = menu_names(u, dataset.choices(rows[i]));
        out << (i ? ",\n    " : "\n    ") << row.dump();
    }
    out << (rows.empty() ? "]\n}\n" : "\n  ]\n}\n");
    return out.str();
}

std::vector<std::string> order_labels(std::string_view text) {
    std::vector<std::string> labels;
    for (const auto& cls : split(text, '>'))
        for (const auto& name : split(cls, ','))
            if (!name.empty() && std::find(labels.begin(), labels.end(), name) == labels.end()) labels.push_back(name);
    return labels;
}

WeakOrder parse_weak_order(std::string_view text, const Universe& universe) {
    std::vector<Menu> classes;
    for (const auto& part : split(text, '>')) {
        Menu cls;
        for (const auto& name : split(part, ',')) {
            if (name.empty()) throw InputError("empty name in weak order '" + std::string(text) + "'");
            const Menu a = resolve(universe, name, "weak order");
            if (!(cls & a).empty()) throw InputError("'" + name + "' repeated in weak order");
            cls = cls | a;
        }
        classes.push_back(cls);
    }
    try {
        return WeakOrder(universe.size(), std::move(classes));
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string("invalid weak order: ") + e.what());
    }
}

LinearOrder parse_linear_order(std::string_view text, const Universe& universe) {
    std::vector<Alternative> ranking;
    for (const auto& name : split(text, '>')) {
        if (name.find(',') != std::string::npos) throw InputError("linear order cannot contain ties: '" + name + "'");
        if (name.empty()) throw InputError("empty name in linear order '" + std::string(text) + "'");
        ranking.push_back(resolve(universe, name, "linear order").first());
    }
    if (static_cast<int>(ranking.size()) != universe.size())
        throw InputError("linear order must rank all " + std::to_string(universe.size()) + " alternatives");
    try {
        return LinearOrder(std::move(ranking));
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string("invalid linear order: ") + e.what());
    }
}

std::string format_menu(const Universe& u, Menu m) {
    std::string s = "{";
    bool first = true;
    for (Alternative a : m.members()) {
        s += (first ? "" : ",") + u.label(a);
        first = false;
    }
    return s + "}";
}

std::string format_weak_order(const Universe& u, const WeakOrder& order) {
    std::string s;
    for (std::size_t i = 0; i < order.classes().size(); ++i) {
        const std::string cls = format_menu(u, order.classes()[i]);
        s += (i ? " > " : "") + cls.substr(1, cls.size() - 2);
    }
    return s;
}

std::string format_linear_order(const Universe& u, const LinearOrder& order) {
    std::string s;
    for (std::size_t i = 0; i < order.ranking().size(); ++i) s += (i ? " > " : "") + u.label(order.ranking()[i]);
    return s;
}

std::string describe_witness(const Universe& u, const Witness& w) {
    auto alt = [&](std::size_t i) { return u.label(w.alternatives.at(i)); };
    auto menu = [&](std::size_t i) { return format_menu(u, w.menus.at(i)); };
    std::ostringstream s;
    switch (w.kind) {
        case Axiom::alpha:
            s << alt(0) << " in c(" << menu(1) << ") and " << menu(0) << " inside it, but " << alt(0)
              << " not in c(" << menu(0) << ")";
            break;
        case Axiom::beta:
            s << alt(0) << "," << alt(1) << " in c(" << menu(0) << "), " << alt(1) << " in c(" << menu(1) << "), but "
              << alt(0) << " not in c(" << menu(1) << ")";
            break;
        case Axiom::gamma:
            s << alt(0) << " in c(" << menu(0) << ") and c(" << menu(1) << "), but not in c("
              << format_menu(u, w.menus.at(0) | w.menus.at(1)) << ")";
            break;
        case Axiom::nbc:
            s << alt(0) << " in c(" << menu(0) << "), " << alt(1) << " in c(" << menu(1) << "), but " << alt(0)
              << " not in c(" << menu(2) << ")";
            break;
        case Axiom::warp:
            s << alt(0) << "," << alt(1) << " in " << menu(0) << " and " << menu(1) << ", " << alt(0) << " in c("
              << menu(0) << "), " << alt(1) << " in c(" << menu(1) << "), but " << alt(0) << " not in c(" << menu(1)
              << ")";
            break;
        case Axiom::cond1:
        case Axiom::cond2: {
            const char* map = w.kind == Axiom::cond1 ? "c" : "r";
            s << alt(0) << "," << alt(1) << " in " << menu(0) << " inside " << menu(1) << ", " << alt(0) << " in "
              << map << "(" << menu(0) << "), " << alt(1) << " in " << map << "(" << menu(1) << "), but " << alt(0)
              << " not in " << map << "(" << menu(1) << ")";
            break;
        }
        case Axiom::cond3: s << "c(" << menu(0) << ") = " << menu(0); break;
        case Axiom::cond4: {
            const std::string grown = format_menu(u, w.menus.at(0).with(w.alternatives.at(1)));
            s << alt(0) << " in " << menu(0) << " but not in c(" << menu(0) << "), and both " << alt(0) << " and "
              << alt(1) << " in c(" << grown << ")";
            break;
        }
        case Axiom::cond5:
            s << menu(1) << " inside r(" << menu(0) << ") but it does not drop exactly one element in c("
              << menu(1) << ")";
            break;
    }
    return s.str();
}

json witness_to_json(const Universe& u, const Witness& w) {
    json menus = json::array();
    for (Menu m : w.menus) menus.push_back(menu_names(u, m));
    json alts = json::array();
    for (Alternative a : w.alternatives) alts.push_back(u.label(a));
    return {{"menus", menus}, {"alternatives", alts}, {"description", describe_witness(u, w)}};
}

json report_to_json(const Universe& u, const AxiomReport& report) {
    json axioms = json::object();
    for (Axiom a : kAllAxioms) {
        const Verdict& v = report[a];
        axioms[axiom_name(a)] = {{"pass", v.passed()},
                                 {"witness", v.passed() ? json(nullptr) : witness_to_json(u, *v.violation)}};
    }
    return {{"axioms", axioms}, {"conditions_hold", report.conditions_hold()}};
}

std::string report_to_text(const Universe& u, const AxiomReport& report) {
    std::ostringstream s;
    for (Axiom a : kAllAxioms) {
        const Verdict& v = report[a];
        s << axiom_name(a) << std::string(7 - std::string(axiom_name(a)).size(), ' ') << (v.passed() ? "pass" : "FAIL");
        if (!v.passed()) s << "  " << describe_witness(u, *v.violation);
        s << "\n";
    }
    return s.str();
}

namespace {

const char* status_name(RecoveryResult::Status status) {
    switch (status) {
        case RecoveryResult::Status::recovered: return "recovered";
        case RecoveryResult::Status::condition_failed: return "condition_failed";
        case RecoveryResult::Status::internal_defect: return "internal_defect";
    }
    return "?";
}

}  // namespace

json sweep_to_json(const SweepReport& r) {
    json discrepancies = json::array();
    for (const auto& d : r.discrepancies)
        discrepancies.push_back({{"index", d.index},
                                 {"conditions_hold", d.conditions_hold},
                                 {"oracle_representable", d.oracle_representable},
                                 {"recovery", status_name(d.recovery)},
                                 {"detail", d.detail}});
    return {{"n", r.n},
            {"mode", r.exhaustive ? "exhaustive" : "sample"},
            {"seed", r.seed ? json(*r.seed) : json(nullptr)},
            {"shards", r.shards},
            {"scanned", r.scanned},
            {"conditions_passing", r.conditions_passing},
            {"representable", r.representable},
            {"recovered", r.recovered},
            {"discrepancies", discrepancies}};
}

std::string sweep_to_text(const SweepReport& r) {
    std::ostringstream s;
    s << "n: " << r.n << "\n"
      << "mode: " << (r.exhaustive ? "exhaustive" : "sample");
    if (r.seed) s << " (seed " << *r.seed << ")";
    s << "\nshards: " << r.shards << "\n"
      << "scanned: " << r.scanned << "\n"
      << "conditions passing: " << r.conditions_passing << "\n"
      << "representable: " << r.representable << "\n"
      << "recovered: " << r.recovered << "\n"
      << "discrepancies: " << r.discrepancies.size() << "\n";
    for (const auto& d : r.discrepancies) s << "  table " << d.index << ": " << d.detail << "\n";
    return s.str();
}

}  // namespace mc
