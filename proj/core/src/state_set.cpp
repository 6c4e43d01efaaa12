#include "ndmech/state_set.hpp"

#include <bit>

#include "ndmech/errors.hpp"

namespace ndmech {

namespace {
constexpr int kWordBits = 64;

size_t word_count(int n) { return (static_cast<size_t>(n) + kWordBits - 1) / kWordBits; }
}  // namespace

StateSet::StateSet(SpacePtr space) : space_(std::move(space)) {
    if (!space_) throw Error("StateSet requires a state space");
    bits_.assign(word_count(space_->size()), 0);
}

StateSet StateSet::full(SpacePtr space) {
    StateSet s(std::move(space));
    return s.complement();
}

StateSet StateSet::of(SpacePtr space, std::initializer_list<int> states) {
    StateSet s(std::move(space));
    for (int x : states) s.insert(x);
    return s;
}

StateSet StateSet::of(SpacePtr space, const std::vector<int>& states) {
    StateSet s(std::move(space));
    for (int x : states) s.insert(x);
    return s;
}

StateSet StateSet::from_mask(SpacePtr space, std::uint64_t mask) {
    StateSet s(std::move(space));
    const int n = s.universe_size();
    if (n > kWordBits) throw Error("from_mask requires a space with at most 64 states");
    if (n < kWordBits && (mask >> n) != 0) throw Error("mask has bits outside the space");
    if (!s.bits_.empty()) s.bits_[0] = mask;
    return s;
}

std::uint64_t StateSet::to_mask() const {
    if (universe_size() > kWordBits) throw Error("to_mask requires a space with at most 64 states");
    return bits_.empty() ? 0 : bits_[0];
}

void StateSet::check_state(int state) const {
    if (state < 0 || state >= universe_size()) {
        throw Error("state index " + std::to_string(state) + " outside space of size " +
                    std::to_string(universe_size()));
    }
}

bool StateSet::contains(int state) const {
    check_state(state);
    return (bits_[static_cast<size_t>(state) / kWordBits] >> (state % kWordBits)) & 1u;
}

void StateSet::insert(int state) {
    check_state(state);
    bits_[static_cast<size_t>(state) / kWordBits] |= std::uint64_t{1} << (state % kWordBits);
}

void StateSet::erase(int state) {
    check_state(state);
    bits_[static_cast<size_t>(state) / kWordBits] &= ~(std::uint64_t{1} << (state % kWordBits));
}

bool StateSet::is_empty() const {
    for (auto w : bits_)
        if (w) return false;
    return true;
}

int StateSet::count() const {
    int c = 0;
    for (auto w : bits_) c += std::popcount(w);
    return c;
}

bool StateSet::operator==(const StateSet& other) const {
    return same_space(space_, other.space_) && bits_ == other.bits_;
}

bool StateSet::subset_of(const StateSet& other) const {
    require_same_space(space_, other.space_);
    for (size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i] & ~other.bits_[i]) return false;
    return true;
}

bool StateSet::intersects(const StateSet& other) const {
    require_same_space(space_, other.space_);
    for (size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i] & other.bits_[i]) return true;
    return false;
}

StateSet& StateSet::operator|=(const StateSet& other) {
    require_same_space(space_, other.space_);
    for (size_t i = 0; i < bits_.size(); ++i) bits_[i] |= other.bits_[i];
    return *this;
}

StateSet& StateSet::operator&=(const StateSet& other) {
    require_same_space(space_, other.space_);
    for (size_t i = 0; i < bits_.size(); ++i) bits_[i] &= other.bits_[i];
    return *this;
}

StateSet& StateSet::operator-=(const StateSet& other) {
    require_same_space(space_, other.space_);
    for (size_t i = 0; i < bits_.size(); ++i) bits_[i] &= ~other.bits_[i];
    return *this;
}

StateSet StateSet::complement() const {
    StateSet out(space_);
    for (size_t i = 0; i < bits_.size(); ++i) out.bits_[i] = ~bits_[i];
    // mask off bits past the last state
    const int n = universe_size();
    if (n % kWordBits != 0 && !out.bits_.empty()) {
        out.bits_.back() &= (std::uint64_t{1} << (n % kWordBits)) - 1;
    }
    return out;
}

std::vector<int> StateSet::members() const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(count()));
    for (int x : *this) out.push_back(x);
    return out;
}

int StateSet::next_member(int from) const {
    const int n = universe_size();
    if (from >= n) return n;
    size_t word = static_cast<size_t>(from) / kWordBits;
    std::uint64_t w = bits_[word] >> (from % kWordBits);
    if (w) return from + std::countr_zero(w);
    for (++word; word < bits_.size(); ++word) {
        if (bits_[word]) {
            return static_cast<int>(word) * kWordBits + std::countr_zero(bits_[word]);
        }
    }
    return n;
}

StateSet::const_iterator& StateSet::const_iterator::operator++() {
    state_ = set_->next_member(state_ + 1);
    return *this;
}

StateSet::const_iterator StateSet::begin() const { return {this, next_member(0)}; }

StateSet::const_iterator StateSet::end() const { return {this, universe_size()}; }

StateSet operator|(StateSet a, const StateSet& b) { return a |= b; }
StateSet operator&(StateSet a, const StateSet& b) { return a &= b; }
StateSet operator-(StateSet a, const StateSet& b) { return a -= b; }

}  // namespace ndmech
