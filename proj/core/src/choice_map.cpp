#include "ndmech/choice_map.hpp"

#include "ndmech/errors.hpp"

namespace ndmech {

ChoiceMap::ChoiceMap(SpacePtr space) : space_(std::move(space)) {
    if (!space_) throw Error("ChoiceMap requires a state space");
    successors_.assign(static_cast<size_t>(space_->size()), StateSet(space_));
}

ChoiceMap ChoiceMap::skip_map(SpacePtr space) {
    ChoiceMap m(std::move(space));
    for (int x = 0; x < m.size(); ++x) m.successors_[static_cast<size_t>(x)].insert(x);
    return m;
}

ChoiceMap ChoiceMap::chaos_map(SpacePtr space) {
    ChoiceMap m(space);
    StateSet all = StateSet::full(space);
    for (auto& s : m.successors_) s = all;
    return m;
}

ChoiceMap ChoiceMap::deterministic(SpacePtr space, const std::vector<int>& f) {
    ChoiceMap m(std::move(space));
    if (f.size() != static_cast<size_t>(m.size())) {
        throw Error("deterministic map table has wrong size");
    }
    for (int x = 0; x < m.size(); ++x) m.successors_[static_cast<size_t>(x)].insert(f[static_cast<size_t>(x)]);
    return m;
}

const StateSet& ChoiceMap::at(int state) const {
    if (state < 0 || state >= size()) {
        throw Error("state index " + std::to_string(state) + " outside space of size " +
                    std::to_string(size()));
    }
    return successors_[static_cast<size_t>(state)];
}

void ChoiceMap::set(int state, StateSet successors) {
    require_same_space(space_, successors.space());
    if (state < 0 || state >= size()) {
        throw Error("state index " + std::to_string(state) + " outside space of size " +
                    std::to_string(size()));
    }
    successors_[static_cast<size_t>(state)] = std::move(successors);
}

bool ChoiceMap::operator==(const ChoiceMap& other) const {
    if (!same_space(space_, other.space_)) return false;
    return successors_ == other.successors_;
}

StateSet dynamic_set(const ChoiceMap& delta) {
    StateSet out(delta.space());
    for (int x = 0; x < delta.size(); ++x) {
        if (!delta.at(x).is_empty()) out.insert(x);
    }
    return out;
}

StateSet apply(const ChoiceMap& delta, const StateSet& a) {
    require_same_space(delta.space(), a.space());
    StateSet out(delta.space());
    for (int x : a) out |= delta.at(x);
    return out;
}

StateSet inverse_image(const ChoiceMap& delta, const StateSet& a) {
    require_same_space(delta.space(), a.space());
    StateSet out(delta.space());
    for (int x = 0; x < delta.size(); ++x) {
        const StateSet& succ = delta.at(x);
        if (!succ.is_empty() && succ.subset_of(a)) out.insert(x);
    }
    return out;
}

StateSet weak_inverse_image(const ChoiceMap& delta, const StateSet& a) {
    require_same_space(delta.space(), a.space());
    StateSet out(delta.space());
    for (int x = 0; x < delta.size(); ++x) {
        if (delta.at(x).intersects(a)) out.insert(x);
    }
    return out;
}

ChoiceMap compose(const ChoiceMap& outer, const ChoiceMap& inner) {
    require_same_space(outer.space(), inner.space());
    ChoiceMap out(outer.space());
    for (int x = 0; x < out.size(); ++x) out.set(x, apply(outer, inner.at(x)));
    return out;
}

ChoiceMap power(const ChoiceMap& delta, int k) {
    if (k < 0) throw Error("power requires a non-negative exponent");
    ChoiceMap out = ChoiceMap::skip_map(delta.space());
    for (int i = 0; i < k; ++i) out = compose(delta, out);
    return out;
}

}  // namespace ndmech
