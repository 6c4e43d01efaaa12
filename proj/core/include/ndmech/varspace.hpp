#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ndmech/state_space.hpp"

namespace ndmech {

/// A bounded integer variable; both bounds inclusive.
struct VarDecl {
    std::string name;
    std::int64_t lo = 0;
    std::int64_t hi = 0;
};

/// The Cartesian product of bounded integer variables rendered as a
/// StateSpace. The state index is the mixed-radix encoding of the value
/// tuple with the first declared variable most significant (the last one
/// varies fastest); the state name is "(x=0, y=3)".
class VarSpace {
public:
    static constexpr std::size_t default_max_states = 4096;

    /// Throws Error on duplicate names, lo > hi, or a product larger than
    /// max_states.
    static VarSpace make(std::vector<VarDecl> vars, std::size_t max_states = default_max_states);

    const std::vector<VarDecl>& vars() const { return vars_; }
    int var_count() const { return static_cast<int>(vars_.size()); }
    const SpacePtr& space() const { return space_; }

    std::optional<int> var_index(std::string_view name) const;

    /// values must list one in-range value per variable, declaration order.
    int encode(const std::vector<std::int64_t>& values) const;
    std::vector<std::int64_t> decode(int state) const;
    std::int64_t value_of(int state, int var) const;

    bool operator==(const VarSpace& other) const;

private:
    VarSpace(std::vector<VarDecl> vars, SpacePtr space);

    std::vector<VarDecl> vars_;
    SpacePtr space_;
};

}  // namespace ndmech
