#pragma once

#include <vector>

#include "ndmech/state_set.hpp"

namespace ndmech {

/// Assigns to each state the set of its possible successors. A state with
/// an empty successor set is a static element; all others are dynamic.
/// Equality is pointwise equality of all successor sets.
class ChoiceMap {
public:
    /// All successor sets empty.
    explicit ChoiceMap(SpacePtr space);

    static ChoiceMap abort_map(SpacePtr space) { return ChoiceMap(std::move(space)); }
    /// Every state maps to exactly itself.
    static ChoiceMap skip_map(SpacePtr space);
    /// Every state maps to the whole space.
    static ChoiceMap chaos_map(SpacePtr space);
    /// Singleton successors taken from a total function given as a table.
    static ChoiceMap deterministic(SpacePtr space, const std::vector<int>& f);

    const SpacePtr& space() const { return space_; }
    int size() const { return space_->size(); }

    const StateSet& at(int state) const;
    void set(int state, StateSet successors);

    bool operator==(const ChoiceMap& other) const;

private:
    SpacePtr space_;
    std::vector<StateSet> successors_;
};

/// {x | delta(x) != {}} — the dynamic elements.
StateSet dynamic_set(const ChoiceMap& delta);

/// Union of delta(x) over x in a; empty input yields the empty set.
StateSet apply(const ChoiceMap& delta, const StateSet& a);

/// {x | {} != delta(x) and delta(x) subset of a}: the states from which
/// every possible outcome lands in a (and some outcome exists).
StateSet inverse_image(const ChoiceMap& delta, const StateSet& a);

/// {x | delta(x) meets a}: the states from which at least one possible
/// outcome lands in a.
StateSet weak_inverse_image(const ChoiceMap& delta, const StateSet& a);

/// x -> outer(inner(x)), with empty sets propagating through apply.
ChoiceMap compose(const ChoiceMap& outer, const ChoiceMap& inner);

/// k-fold self-composition; power(delta, 0) is the skip map.
ChoiceMap power(const ChoiceMap& delta, int k);

}  // namespace ndmech
