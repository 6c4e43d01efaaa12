#include "ndmech/state_space.hpp"

#include "ndmech/errors.hpp"

namespace ndmech {

StateSpace::StateSpace(std::vector<std::string> names) : names_(std::move(names)) {
    index_.reserve(names_.size());
    for (size_t i = 0; i < names_.size(); ++i) {
        auto [it, inserted] = index_.emplace(names_[i], static_cast<int>(i));
        if (!inserted) throw Error("duplicate state name: \"" + names_[i] + "\"");
    }
}

SpacePtr StateSpace::make(std::vector<std::string> names) {
    if (names.empty()) throw Error("a state space must contain at least one state");
    return SpacePtr(new StateSpace(std::move(names)));
}

std::optional<int> StateSpace::index_of(std::string_view name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool same_space(const SpacePtr& a, const SpacePtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->names() == b->names();
}

void require_same_space(const SpacePtr& a, const SpacePtr& b) {
    if (!same_space(a, b)) {
        throw SpaceMismatchError("operands belong to different state spaces");
    }
}

}  // namespace ndmech
