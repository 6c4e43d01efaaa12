// Command-line front end: analyze | wp | basin | runs | check over
// structure files (JSON) and guarded-command programs.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ndmech/ndmech.hpp"

namespace {

using nlohmann::json;
using namespace ndmech;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;     // bad flags, unreadable file, parse error
constexpr int kExitSemantic = 2;  // unknown name, space mismatch, wrong file kind
constexpr int kExitInternal = 3;  // violated library invariant

struct Options {
    std::string format = "json";
    bool verbose = false;
    std::uint64_t seed = 0;  // reserved for generator tooling
};

// Either kind of input file, decided by content: JSON structures start
// with '{', anything else is parsed as a program.
struct Input {
    std::optional<Structure> structure;
    std::optional<Program> program;
    std::optional<Quilt> quilt;  // built with the program
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool looks_like_json(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '{';
    }
    return false;
}

Input load_input(const std::string& path, const Options& opt) {
    const std::string text = read_file(path);
    Input in;
    if (looks_like_json(text)) {
        in.structure = parse_structure(text);
        return in;
    }
    std::vector<std::string> warnings;
    in.program = parse_program(text, &warnings);
    for (const auto& w : warnings) std::cerr << path << ": warning: " << w << "\n";
    QuiltBuildInfo info;
    in.quilt = program_to_quilt(*in.program, &info);
    if (opt.verbose) {
        for (size_t i = 0; i < info.range_strengthened.size(); ++i) {
            const StateSet& dropped = info.range_strengthened[i];
            if (dropped.is_empty()) continue;
            std::cerr << path << ": command " << i << ": guard strengthened, " << dropped.count()
                      << " state(s) dropped by the range check:";
            for (int s : dropped) std::cerr << " " << dropped.space()->name_of(s);
            std::cerr << "\n";
        }
    }
    return in;
}

const SpacePtr& space_of(const Input& in) {
    return in.structure ? in.structure->space : in.program->space.space();
}

ChoiceMap delta_of(const Input& in) {
    // programs are analyzed through the total quilt map
    return in.structure ? in.structure->delta : quilt_delta(*in.quilt);
}

json set_to_json(const StateSet& s) {
    json arr = json::array();
    for (int x : s) arr.push_back(s.space()->name_of(x));
    return arr;
}

std::string set_to_text(const StateSet& s) {
    std::string out = "{";
    bool first = true;
    for (int x : s) {
        out += first ? " " : ", ";
        out += s.space()->name_of(x);
        first = false;
    }
    out += first ? "}" : " }";
    return out;
}

void emit_sets(const Options& opt, const std::vector<std::pair<std::string, StateSet>>& sets) {
    if (opt.format == "json") {
        json doc = json::object();
        for (const auto& [key, value] : sets) doc[key] = set_to_json(value);
        std::cout << doc.dump() << "\n";
    } else {
        for (const auto& [key, value] : sets) std::cout << key << " = " << set_to_text(value) << "\n";
    }
}

void emit_set(const Options& opt, const StateSet& s) {
    if (opt.format == "json") {
        std::cout << set_to_json(s).dump() << "\n";
    } else {
        std::cout << set_to_text(s) << "\n";
    }
}

// Postconditions, targets and invariants: a predicate for programs, a
// comma-separated list of state names for structures.
StateSet parse_state_set_arg(const Input& in, const std::string& arg) {
    if (in.program) {
        PredPtr pred = parse_predicate(arg, in.program->space);
        return predicate_set(in.program->space, *pred);
    }
    const SpacePtr& space = in.structure->space;
    StateSet out(space);
    std::string name;
    std::istringstream ss(arg);
    while (std::getline(ss, name, ',')) {
        // trim surrounding blanks
        const auto b = name.find_first_not_of(" \t");
        const auto e = name.find_last_not_of(" \t");
        if (b == std::string::npos) continue;
        name = name.substr(b, e - b + 1);
        const auto idx = space->index_of(name);
        if (!idx) throw LookupError("unknown state name: \"" + name + "\"");
        out.insert(*idx);
    }
    return out;
}

int cmd_analyze(const std::string& path, const Options& opt) {
    Input in = load_input(path, opt);
    const ChoiceMap delta = delta_of(in);
    AnalysisSets sets = analyze(delta);
    std::vector<std::pair<std::string, StateSet>> rows{
        {"dyn", sets.dyn}, {"fix", sets.fix},   {"stab", sets.stab},
        {"con", sets.con}, {"con_w", sets.con_w},
    };
    if (in.quilt) {
        rows.emplace_back("guard_union", in.quilt->guard_union());
        rows.emplace_back("hang_set", in.quilt->hang_set());
    }
    emit_sets(opt, rows);
    return kExitOk;
}

int cmd_wp(const std::string& path, const std::string& post, const Options& opt) {
    Input in = load_input(path, opt);
    if (!in.program) {
        throw SemanticError("wp needs a guarded-command program, not a structure file");
    }
    const StateSet post_set = parse_state_set_arg(in, post);
    const StateSet result = in.program->construct == Construct::alternative
                                ? wp_if(*in.quilt, post_set)
                                : wp_do(*in.quilt, post_set);
    emit_set(opt, result);
    return kExitOk;
}

int cmd_basin(const std::string& path, const std::string& target, const Options& opt) {
    Input in = load_input(path, opt);
    const StateSet target_set = parse_state_set_arg(in, target);
    emit_set(opt, basin(delta_of(in), target_set));
    return kExitOk;
}

int cmd_runs(const std::string& path, const std::string& from, int max_len, const Options& opt) {
    Input in = load_input(path, opt);
    const SpacePtr& space = space_of(in);
    const auto start = space->index_of(from);
    if (!start) throw LookupError("unknown state name: \"" + from + "\"");
    const ChoiceMap delta = delta_of(in);
    const std::vector<Run> runs = enumerate_runs(delta, *start, max_len);
    if (opt.format == "json") {
        json arr = json::array();
        for (const Run& r : runs) {
            json states = json::array();
            for (int x : r.states) states.push_back(space->name_of(x));
            arr.push_back(json{{"states", std::move(states)},
                               {"classification", to_string(r.classification)}});
        }
        std::cout << arr.dump() << "\n";
    } else {
        for (const Run& r : runs) {
            for (size_t i = 0; i < r.states.size(); ++i) {
                std::cout << (i ? " -> " : "") << space->name_of(r.states[i]);
            }
            std::cout << "  [" << to_string(r.classification) << "]\n";
        }
        std::cout << runs.size() << " run(s)\n";
    }
    return kExitOk;
}

int cmd_check(const std::string& path, const std::string& invariant, const Options& opt) {
    Input in = load_input(path, opt);
    if (!in.program) {
        throw SemanticError("check needs a guarded-command program, not a structure file");
    }
    const StateSet v = parse_state_set_arg(in, invariant);
    const CheckResult result = check_invariance(*in.quilt, v);
    if (opt.format == "json") {
        json doc{{"verdict", to_string(result.outcome)}, {"detail", result.detail}};
        if (result.counterexample) {
            doc["counterexample"] = space_of(in)->name_of(*result.counterexample);
        }
        std::cout << doc.dump() << "\n";
    } else {
        std::cout << "verdict: " << to_string(result.outcome) << "\n";
        if (result.counterexample) {
            std::cout << "counterexample: " << space_of(in)->name_of(*result.counterexample)
                      << "\n";
        }
        std::cout << result.detail << "\n";
    }
    if (result.outcome == CheckOutcome::theorem_violation) {
        std::cerr << "internal invariant violation: a proved theorem failed\n";
        return kExitInternal;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite nondeterministic mechanisms: analyses and weakest preconditions"};
    app.require_subcommand(1);
    // let --format/--verbose/--seed appear after the subcommand too
    app.fallthrough();

    Options opt;
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    app.add_flag("--verbose", opt.verbose, "Report guard strengthening and other details");
    app.add_option("--seed", opt.seed, "Seed for generator tooling (reserved)");

    std::string file;
    std::string post;
    std::string target;
    std::string from;
    std::string invariant;
    int max_len = 1;

    CLI::App* analyze = app.add_subcommand("analyze", "Report dyn/fix/stab/con/con_w");
    analyze->add_option("file", file, "Structure file or program")->required();

    CLI::App* wp = app.add_subcommand("wp", "Weakest precondition of a program");
    wp->add_option("file", file, "Program file")->required();
    wp->add_option("--post", post, "Postcondition predicate")->required();

    CLI::App* basin_cmd = app.add_subcommand("basin", "Basin of a target set");
    basin_cmd->add_option("file", file, "Structure file or program")->required();
    basin_cmd->add_option("--target", target,
                          "Target predicate (programs) or comma-separated state names (structures)")
        ->required();

    CLI::App* runs = app.add_subcommand("runs", "Enumerate runs from a state");
    runs->add_option("file", file, "Structure file or program")->required();
    runs->add_option("--from", from, "Start state name")->required();
    runs->add_option("--max-len", max_len, "Maximum run length")
        ->required()
        ->check(CLI::PositiveNumber);

    CLI::App* check = app.add_subcommand("check", "Check a loop invariant candidate");
    check->add_option("file", file, "Program file")->required();
    check->add_option("--invariant", invariant, "Invariant candidate predicate")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(file, opt);
        if (wp->parsed()) return cmd_wp(file, post, opt);
        if (basin_cmd->parsed()) return cmd_basin(file, target, opt);
        if (runs->parsed()) return cmd_runs(file, from, max_len, opt);
        if (check->parsed()) return cmd_check(file, invariant, opt);
        std::cerr << "no subcommand\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const SemanticError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSemantic;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
