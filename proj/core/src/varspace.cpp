#include "ndmech/varspace.hpp"

#include "ndmech/errors.hpp"

#include <unordered_set>

namespace ndmech {

namespace {

std::string state_name(const std::vector<VarDecl>& vars, const std::vector<std::int64_t>& values) {
    std::string out = "(";
    for (size_t i = 0; i < vars.size(); ++i) {
        if (i) out += ", ";
        out += vars[i].name + "=" + std::to_string(values[i]);
    }
    out += ")";
    return out;
}

}  // namespace

VarSpace VarSpace::make(std::vector<VarDecl> vars, std::size_t max_states) {
    if (vars.empty()) throw Error("a variable space needs at least one variable");
    std::unordered_set<std::string> seen;
    std::size_t product = 1;
    for (const VarDecl& v : vars) {
        if (!seen.insert(v.name).second) throw Error("duplicate variable name: " + v.name);
        if (v.lo > v.hi) {
            throw Error("variable " + v.name + " has an empty range " + std::to_string(v.lo) +
                        ".." + std::to_string(v.hi));
        }
        const auto width = static_cast<std::size_t>(v.hi - v.lo + 1);
        if (product > max_states / width) {
            throw Error("variable space exceeds the cap of " + std::to_string(max_states) +
                        " states");
        }
        product *= width;
    }

    std::vector<std::string> names;
    names.reserve(product);
    std::vector<std::int64_t> values;
    values.reserve(vars.size());
    for (const VarDecl& v : vars) values.push_back(v.lo);
    for (;;) {
        names.push_back(state_name(vars, values));
        // increment the mixed-radix counter, last variable fastest
        int i = static_cast<int>(vars.size()) - 1;
        for (; i >= 0; --i) {
            if (values[static_cast<size_t>(i)] < vars[static_cast<size_t>(i)].hi) {
                ++values[static_cast<size_t>(i)];
                break;
            }
            values[static_cast<size_t>(i)] = vars[static_cast<size_t>(i)].lo;
        }
        if (i < 0) break;
    }
    return VarSpace(std::move(vars), StateSpace::make(std::move(names)));
}

VarSpace::VarSpace(std::vector<VarDecl> vars, SpacePtr space)
    : vars_(std::move(vars)), space_(std::move(space)) {}

std::optional<int> VarSpace::var_index(std::string_view name) const {
    for (size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i].name == name) return static_cast<int>(i);
    }
    return std::nullopt;
}

int VarSpace::encode(const std::vector<std::int64_t>& values) const {
    if (values.size() != vars_.size()) throw Error("value tuple has wrong arity");
    std::int64_t index = 0;
    for (size_t i = 0; i < vars_.size(); ++i) {
        const VarDecl& v = vars_[i];
        if (values[i] < v.lo || values[i] > v.hi) {
            throw Error("value " + std::to_string(values[i]) + " outside range of " + v.name);
        }
        index = index * (v.hi - v.lo + 1) + (values[i] - v.lo);
    }
    return static_cast<int>(index);
}

std::vector<std::int64_t> VarSpace::decode(int state) const {
    if (state < 0 || state >= space_->size()) throw Error("state index outside the space");
    std::vector<std::int64_t> values(vars_.size());
    std::int64_t rest = state;
    for (int i = static_cast<int>(vars_.size()) - 1; i >= 0; --i) {
        const VarDecl& v = vars_[static_cast<size_t>(i)];
        const std::int64_t width = v.hi - v.lo + 1;
        values[static_cast<size_t>(i)] = v.lo + rest % width;
        rest /= width;
    }
    return values;
}

std::int64_t VarSpace::value_of(int state, int var) const {
    return decode(state).at(static_cast<size_t>(var));
}

bool VarSpace::operator==(const VarSpace& other) const {
    if (vars_.size() != other.vars_.size()) return false;
    for (size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i].name != other.vars_[i].name || vars_[i].lo != other.vars_[i].lo ||
            vars_[i].hi != other.vars_[i].hi) {
            return false;
        }
    }
    return true;
}

}  // namespace ndmech
