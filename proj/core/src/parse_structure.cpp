#include <string>

#include <json.hpp>

#include "ndmech/errors.hpp"
#include "ndmech/parse.hpp"

namespace ndmech {

namespace {

using nlohmann::json;

// nlohmann reports byte offsets; turn one into line:column for the
// diagnostics contract.
std::pair<int, int> line_col_of(const std::string& text, size_t byte) {
    int line = 1, col = 1;
    for (size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

}  // namespace

Structure parse_structure(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        auto [line, col] = line_col_of(text, e.byte > 0 ? e.byte - 1 : 0);
        throw ParseError(std::string("malformed JSON: ") + e.what(), line, col);
    }

    if (!doc.is_object()) throw ParseError("structure file must be a JSON object");
    if (!doc.contains("states") || !doc["states"].is_array()) {
        throw ParseError("structure file needs a \"states\" array");
    }

    std::vector<std::string> names;
    for (const auto& s : doc["states"]) {
        if (!s.is_string()) throw ParseError("\"states\" entries must be strings");
        names.push_back(s.get<std::string>());
    }
    SpacePtr space;
    try {
        space = StateSpace::make(std::move(names));
    } catch (const Error& e) {
        throw ParseError(std::string("in \"states\": ") + e.what());
    }

    ChoiceMap delta(space);
    if (doc.contains("delta")) {
        if (!doc["delta"].is_object()) throw ParseError("\"delta\" must be an object");
        for (const auto& [from, successors] : doc["delta"].items()) {
            const auto x = space->index_of(from);
            if (!x) {
                throw ParseError("in \"delta\": unknown state name \"" + from + "\"");
            }
            if (!successors.is_array()) {
                throw ParseError("in \"delta\": successors of \"" + from + "\" must be an array");
            }
            StateSet succ(space);
            for (size_t i = 0; i < successors.size(); ++i) {
                if (!successors[i].is_string()) {
                    throw ParseError("in \"delta\" at \"" + from + "\"[" + std::to_string(i) +
                                     "]: successor names must be strings");
                }
                const std::string name = successors[i].get<std::string>();
                const auto y = space->index_of(name);
                if (!y) {
                    throw ParseError("in \"delta\" at \"" + from + "\"[" + std::to_string(i) +
                                     "]: unknown state name \"" + name + "\"");
                }
                succ.insert(*y);
            }
            delta.set(*x, std::move(succ));
        }
    }
    return Structure{space, std::move(delta)};
}

std::string print_structure(const Structure& s) {
    json doc;
    doc["states"] = json::array();
    for (const std::string& name : s.space->names()) doc["states"].push_back(name);
    json delta = json::object();
    for (int x = 0; x < s.space->size(); ++x) {
        json succ = json::array();
        for (int y : s.delta.at(x)) succ.push_back(s.space->name_of(y));
        delta[s.space->name_of(x)] = std::move(succ);
    }
    doc["delta"] = std::move(delta);
    return doc.dump(2) + "\n";
}

}  // namespace ndmech
