#pragma once

#include <string>
#include <vector>

#include "ndmech/ast.hpp"
#include "ndmech/choice_map.hpp"
#include "ndmech/gcl.hpp"

namespace ndmech {

/// A state space plus a choice map loaded from the JSON structure format:
///   {"states": ["a", "b"], "delta": {"a": ["b"], "b": []}}
/// States absent from "delta" get an empty successor set.
struct Structure {
    SpacePtr space;
    ChoiceMap delta;
};

/// Throws ParseError on malformed JSON (with line/column), on duplicate
/// state names, and on successor names not listed in "states".
Structure parse_structure(const std::string& text);

/// Canonical JSON rendering; parse_structure(print_structure(s)) yields
/// an equal structure.
std::string print_structure(const Structure& s);

/// Parses the guarded-command mini-language:
///
///   space { x: 0..7; y: 0..7; }
///   do
///     :: x > y -> x := x - y
///     :: y > x -> y := y - x
///   od
///
/// "#" starts a comment running to end of line. A construct may have zero
/// commands. Throws ParseError on syntax errors and LookupError on
/// references to undeclared variables. When `warnings` is given, appends
/// notes about literals compared against a variable but lying outside its
/// range.
Program parse_program(const std::string& text, std::vector<std::string>* warnings = nullptr);

/// Parses a bare predicate (the --post/--target/--invariant argument
/// syntax). Variable references are checked against `space`.
PredPtr parse_predicate(const std::string& text, const VarSpace& space);

struct QuiltBuildInfo {
    /// Per command: guard states dropped because some assignment result
    /// left the declared variable range (guard strengthening).
    std::vector<StateSet> range_strengthened;
};

/// Each command becomes a patch: domain = guard states whose assignment
/// results all stay in range, transition = simultaneous assignment.
Quilt program_to_quilt(const Program& p, QuiltBuildInfo* info = nullptr);

}  // namespace ndmech
