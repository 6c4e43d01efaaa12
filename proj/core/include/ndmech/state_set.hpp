#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "ndmech/state_space.hpp"

namespace ndmech {

/// A subset of a StateSpace with bit-vector semantics. Value type; all
/// operations are pure. Iteration, members() and any serialization built
/// on them visit states in ascending index order.
class StateSet {
public:
    /// The empty subset of `space`.
    explicit StateSet(SpacePtr space);

    static StateSet empty(SpacePtr space) { return StateSet(std::move(space)); }
    static StateSet full(SpacePtr space);
    static StateSet of(SpacePtr space, std::initializer_list<int> states);
    static StateSet of(SpacePtr space, const std::vector<int>& states);

    /// Bit i of `mask` selects state i. Requires size() <= 64.
    static StateSet from_mask(SpacePtr space, std::uint64_t mask);
    /// Inverse of from_mask. Requires size() <= 64.
    std::uint64_t to_mask() const;

    const SpacePtr& space() const { return space_; }
    int universe_size() const { return space_->size(); }

    bool contains(int state) const;
    void insert(int state);
    void erase(int state);

    bool is_empty() const;
    int count() const;

    bool operator==(const StateSet& other) const;
    bool subset_of(const StateSet& other) const;
    bool intersects(const StateSet& other) const;

    StateSet& operator|=(const StateSet& other);
    StateSet& operator&=(const StateSet& other);
    StateSet& operator-=(const StateSet& other);
    StateSet complement() const;

    /// Members in ascending index order.
    std::vector<int> members() const;

    class const_iterator {
    public:
        using value_type = int;
        int operator*() const { return state_; }
        const_iterator& operator++();
        bool operator!=(const const_iterator& other) const { return state_ != other.state_; }
        bool operator==(const const_iterator& other) const { return state_ == other.state_; }

    private:
        friend class StateSet;
        const_iterator(const StateSet* set, int state) : set_(set), state_(state) {}
        const StateSet* set_;
        int state_;
    };

    const_iterator begin() const;
    const_iterator end() const;

private:
    friend class const_iterator;

    int next_member(int from) const;  // first member >= from, or universe_size()
    void check_state(int state) const;

    SpacePtr space_;
    std::vector<std::uint64_t> bits_;
};

StateSet operator|(StateSet a, const StateSet& b);
StateSet operator&(StateSet a, const StateSet& b);
StateSet operator-(StateSet a, const StateSet& b);

}  // namespace ndmech
