#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ndmech/dynamics.hpp"

namespace ndmech {

/// A guarded command: a guard set D and a transition function defined
/// exactly on D. Transitions are stored as a dense table with -1 outside
/// the guard.
class Patch {
public:
    /// image must hold a valid state index for every member of domain.
    Patch(StateSet domain, std::vector<std::int32_t> image);

    /// Builds the image table by calling fn on each guard state.
    template <typename Fn>
    static Patch from_function(StateSet domain, Fn&& fn) {
        std::vector<std::int32_t> image(static_cast<size_t>(domain.universe_size()), -1);
        for (int x : domain) image[static_cast<size_t>(x)] = static_cast<std::int32_t>(fn(x));
        return Patch(std::move(domain), std::move(image));
    }

    const SpacePtr& space() const { return domain_.space(); }
    const StateSet& domain() const { return domain_; }

    /// Pre: domain().contains(state).
    int apply_to(int state) const { return image_[static_cast<size_t>(state)]; }

private:
    StateSet domain_;
    std::vector<std::int32_t> image_;
};

/// An ordered collection of patches over one space — the body of an IF or
/// DO construct. Precomputes the guard union D and the hang set E: the
/// guarded states where every enabled command leaves the state unchanged.
class Quilt {
public:
    Quilt(SpacePtr space, std::vector<Patch> patches);

    const SpacePtr& space() const { return space_; }
    const std::vector<Patch>& patches() const { return patches_; }
    const StateSet& guard_union() const { return guard_union_; }  // D
    const StateSet& hang_set() const { return hang_set_; }        // E

private:
    SpacePtr space_;
    std::vector<Patch> patches_;
    StateSet guard_union_;
    StateSet hang_set_;
};

/// x -> {F_i(x) | x in D_i} on D, and {x} outside D. Total: its dynamic
/// set is the whole space, and its fixed points are D^c ∪ E.
ChoiceMap quilt_delta(const Quilt& q);

/// The alternative construct: quilt_delta restricted to D, empty outside.
/// Its dynamic set is D and its fixed points are E.
ChoiceMap if_delta(const Quilt& q);

/// The repetitive construct: the limit map of quilt_delta on the basin of
/// D^c, empty elsewhere. Hang states (E) are excluded from its dynamic
/// set even though they are fixed points of the underlying quilt map.
ChoiceMap do_delta(const Quilt& q);

/// Weakest precondition of IF: inverse_image(if_delta(q), post).
StateSet wp_if(const Quilt& q, const StateSet& post);

/// The same set by the guard-by-guard formula
/// D ∩ {x | x in D_i implies F_i(x) in post}; kept as a second route.
StateSet wp_if_patchwise(const Quilt& q, const StateSet& post);

/// Weakest precondition of DO, by the ascending iteration
///   H_0 = post ∩ D^c,   H_{k+1} = wp_if(q, H_k) ∪ H_0,
/// which stabilizes within |X|+1 steps. Equal to
/// inverse_image(do_delta(q), post) and to
/// basin(quilt_delta(q), post ∩ D^c); those equalities are exercised by
/// the test suite, not asserted here.
StateSet wp_do(const Quilt& q, const StateSet& post);

enum class CheckOutcome {
    pass,                // hypotheses hold and the conclusion was verified
    hypothesis_not_met,  // nothing to conclude
    theorem_violation,   // conclusion failed: indicates a library bug
};

struct CheckResult {
    CheckOutcome outcome;
    std::optional<int> counterexample;  // state witnessing the failure
    std::string detail;
};

/// Alternative-construct check: under the hypotheses a ⊆ D and
/// F_j(a ∩ D_j) ⊆ b for every patch j, verifies apply(if_delta, a) ⊆ b.
CheckResult check_alternative(const Quilt& q, const StateSet& a, const StateSet& b);

/// Loop-invariance check: under the hypothesis apply(if_delta, v ∩ D) ⊆ v,
/// verifies apply(do_delta, v ∩ con(quilt_delta)) ⊆ v ∩ D^c.
CheckResult check_invariance(const Quilt& q, const StateSet& v);

const char* to_string(CheckOutcome o);

}  // namespace ndmech
