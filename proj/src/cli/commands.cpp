#include "mc/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mc/dataset.hpp"
#include "mc/engine.hpp"

namespace mc {
namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

ChoiceDataset load(const std::string& path) { return parse_dataset(read_file(path)); }

int cmd_generate(const std::string& weak, const std::string& linear, const std::string& labels,
                 const std::string& out_path, std::ostream& out) {
    std::vector<std::string> names;
    if (!labels.empty()) {
        std::stringstream ss(labels);
        for (std::string item; std::getline(ss, item, ',');) names.push_back(item);
    } else {
        names = order_labels(weak);
        std::sort(names.begin(), names.end());
    }
    Universe u = [&] {
        try {
            return Universe(names);
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
    }();
    const WeakOrder r = parse_weak_order(weak, u);
    const LinearOrder l = parse_linear_order(linear, u);
    const std::string text = serialize_dataset({u, generate(r, l)});
    if (out_path.empty()) {
        out << text;
    } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) throw InputError("cannot write '" + out_path + "'");
        file << text;
    }
    return kExitOk;
}

int cmd_check(const std::string& in_path, const std::string& format, std::ostream& out) {
    const ChoiceDataset data = load(in_path);
    const AxiomReport report = check_all(data.choices);
    if (format == "json")
        out << report_to_json(data.universe, report).dump(2) << "\n";
    else
        out << report_to_text(data.universe, report);
    return report.conditions_hold() ? kExitOk : kExitDataFailure;
}

int cmd_recover(const std::string& in_path, const std::string& format, std::ostream& out) {
    const ChoiceDataset data = load(in_path);
    const Universe& u = data.universe;
    const RecoveryResult result = recover(data.choices);
    const auto menus = (std::size_t{1} << u.size()) - 1;

    json doc;
    std::ostringstream text;
    int status = kExitOk;
    switch (result.status) {
        case RecoveryResult::Status::recovered: {
            const auto& rep = *result.representation;
            doc = {{"recovered", true},
                   {"weak_order", format_weak_order(u, rep.shortlist)},
                   {"linear_order", format_linear_order(u, rep.veto)},
                   {"regeneration_matched", true}};
            text << "recovered: yes\n"
                 << "R: " << format_weak_order(u, rep.shortlist) << "\n"
                 << "L: " << format_linear_order(u, rep.veto) << "\n"
                 << "regeneration matched the input on all " << menus << " menus\n";
            break;
        }
        case RecoveryResult::Status::condition_failed: {
            const Witness& w = *result.witness;
            doc = {{"recovered", false}, {"condition", axiom_name(w.kind)}, {"witness", witness_to_json(u, w)}};
            text << "recovered: no\n"
                 << "violated: " << axiom_name(w.kind) << "\n"
                 << "witness: " << describe_witness(u, w) << "\n";
            status = kExitDataFailure;
            break;
        }
        case RecoveryResult::Status::internal_defect:
            doc = {{"recovered", false}, {"internal_defect", result.defect}};
            text << "recovered: no\n"
                 << "internal defect: " << result.defect << "\n";
            status = kExitInternalDefect;
            break;
    }
    if (format == "json")
        out << doc.dump(2) << "\n";
    else
        out << text.str();
    return status;
}

int cmd_oracle(const std::string& in_path, bool rational, const std::string& format, std::ostream& out) {
    const ChoiceDataset data = load(in_path);
    const Universe& u = data.universe;
    json doc = json::array();
    std::ostringstream text;
    std::size_t count = 0;
    if (rational) {
        for (const WeakOrder& r : brute_force_rationalize(data.choices)) {
            doc.push_back({{"weak_order", format_weak_order(u, r)}});
            text << "R: " << format_weak_order(u, r) << "\n";
            ++count;
        }
        text << count << " rationalizing weak order(s)\n";
    } else {
        for (const Representation& rep : brute_force_representations(data.choices)) {
            doc.push_back({{"weak_order", format_weak_order(u, rep.shortlist)},
                           {"linear_order", format_linear_order(u, rep.veto)}});
            text << "R: " << format_weak_order(u, rep.shortlist) << "  L: " << format_linear_order(u, rep.veto) << "\n";
            ++count;
        }
        text << count << " representing pair(s)\n";
    }
    if (format == "json")
        out << doc.dump(2) << "\n";
    else
        out << text.str();
    return count > 0 ? kExitOk : kExitDataFailure;
}

int cmd_sweep(const SweepOptions& options, const std::string& format, std::ostream& out) {
    SweepReport report;
    try {
        report = characterization_sweep(options);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    if (format == "json")
        out << sweep_to_json(report).dump(2) << "\n";
    else
        out << sweep_to_text(report);
    return report.ok() ? kExitOk : kExitInternalDefect;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Minimal-compromise choice: generate, check, recover, and verify choice data", "mcchoice"};
    app.require_subcommand(1);

    std::string weak, linear, labels, out_path, in_path, format = "text";
    const auto formats = CLI::IsMember({"text", "json"});

    auto* gen = app.add_subcommand("generate", "Emit the MC table of a (weak order, linear order) pair");
    gen->add_option("--weak-order", weak, "Shortlisting weak order, e.g. \"x,y > z\"")->required();
    gen->add_option("--linear-order", linear, "Veto linear order, e.g. \"x > y > z\"")->required();
    gen->add_option("--labels", labels, "Comma-separated alternative names (default: sorted names from the weak order)");
    gen->add_option("--out", out_path, "Output file (default: stdout)");

    auto* chk = app.add_subcommand("check", "Evaluate all axioms and Conditions 1-5 on a dataset");
    chk->add_option("--in", in_path, "Dataset file")->required();
    chk->add_option("--format", format)->transform(formats);

    auto* rec = app.add_subcommand("recover", "Recover a representing (R, L) pair from a dataset");
    rec->add_option("--in", in_path, "Dataset file")->required();
    rec->add_option("--format", format)->transform(formats);

    bool all = false, rational = false;
    auto* orc = app.add_subcommand("oracle", "List every representation by exhaustive search");
    orc->add_option("--in", in_path, "Dataset file")->required();
    auto* all_flag = orc->add_flag("--all", all, "All (R, L) pairs (default)");
    orc->add_flag("--rational", rational, "All rationalizing weak orders instead")->excludes(all_flag);
    orc->add_option("--format", format)->transform(formats);

    SweepOptions sweep;
    bool exhaustive = false;
    std::optional<std::uint64_t> sample;
    auto* swp = app.add_subcommand("sweep", "Verify the characterization on a census of tables");
    swp->add_option("--n", sweep.n, "Universe size")->required()->check(CLI::Range(1, 4));
    auto* ex_flag = swp->add_flag("--exhaustive", exhaustive, "Scan every table");
    swp->add_option("--sample", sample, "Number of seeded random tables")->excludes(ex_flag);
    swp->add_option("--seed", sweep.seed, "Random seed for --sample");
    swp->add_option("--shards", sweep.shards, "Worker threads")->check(CLI::PositiveNumber);
    swp->add_flag("--long", sweep.allow_long, "Allow the exhaustive n = 4 sweep");
    swp->add_option("--format", format)->transform(formats);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (*gen) return cmd_generate(weak, linear, labels, out_path, out);
        if (*chk) return cmd_check(in_path, format, out);
        if (*rec) return cmd_recover(in_path, format, out);
        if (*orc) return cmd_oracle(in_path, rational, format, out);
        if (*swp) {
            if (!exhaustive && !sample) {
                err << "sweep: pass --exhaustive or --sample COUNT\n";
                return kExitInputError;
            }
            sweep.exhaustive = exhaustive;
            sweep.sample_count = sample.value_or(0);
            return cmd_sweep(sweep, format, out);
        }
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}

}  // namespace mc
