#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ndmech {

class StateSpace;

/// Spaces are immutable and shared; sets and maps over a space keep a
/// handle to it so cross-space operations can be rejected.
using SpacePtr = std::shared_ptr<const StateSpace>;

/// A finite, non-empty, enumerated set of states. Each state has a dense
/// index in 0..size()-1 and a distinct printable name.
///
/// Set operations are linear sweeps over bit vectors, practical up to a
/// few thousand states (~4096); exhaustive powerset checks elsewhere in
/// the library are restricted to much smaller spaces.
class StateSpace {
public:
    /// Builds a space from an ordered list of distinct names.
    /// Throws Error when the list is empty or contains duplicates.
    static SpacePtr make(std::vector<std::string> names);

    int size() const { return static_cast<int>(names_.size()); }

    const std::string& name_of(int state) const { return names_.at(static_cast<size_t>(state)); }

    std::optional<int> index_of(std::string_view name) const;

    const std::vector<std::string>& names() const { return names_; }

private:
    explicit StateSpace(std::vector<std::string> names);

    std::vector<std::string> names_;
    std::unordered_map<std::string_view, int> index_;  // views into names_
};

/// Two handles denote the same space when they point at the same object or
/// carry identical name tables.
bool same_space(const SpacePtr& a, const SpacePtr& b);

/// Throws SpaceMismatchError unless same_space(a, b).
void require_same_space(const SpacePtr& a, const SpacePtr& b);

}  // namespace ndmech
