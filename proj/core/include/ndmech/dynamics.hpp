#pragma once

#include <vector>

#include "ndmech/choice_map.hpp"

namespace ndmech {

/// {x | delta(x) == {x}}.
StateSet fixed_points(const ChoiceMap& delta);

/// States all of whose iterates stay inside the dynamic set. Greatest
/// fixpoint of S -> {x in S | delta(x) subset of S} starting from the
/// dynamic set; stabilizes within size() sweeps.
StateSet stable_points(const ChoiceMap& delta);

/// States from which every behavior converges into the fixed points.
/// Least fixpoint of C -> C | inverse_image(delta, C) seeded with the
/// fixed points; equals the basin of the whole space.
StateSet convergent_points(const ChoiceMap& delta);

/// States from which some behavior reaches a fixed point: backward
/// reachability of the fixed points along the successor relation.
StateSet weakly_convergent_points(const ChoiceMap& delta);

/// The five distinguished sets of one structure, computed together.
struct AnalysisSets {
    StateSet dyn;
    StateSet fix;
    StateSet stab;
    StateSet con;
    StateSet con_w;
};

AnalysisSets analyze(const ChoiceMap& delta);

/// The limit map: x -> the fixed points reachable from x.
ChoiceMap limit_map(const ChoiceMap& delta);

/// Convergent states whose limit points all lie in a.
StateSet basin(const ChoiceMap& delta, const StateSet& a);

/// The same set computed through iterated inverse images of a ∩ fix;
/// kept as a separate route so the two can be cross-checked.
StateSet basin_via_inverses(const ChoiceMap& delta, const StateSet& a);

/// k-fold application of inverse_image; k == 0 returns a unchanged.
StateSet iterated_inverse(const ChoiceMap& delta, const StateSet& a, int k);

enum class RunClass {
    aborted,     // ends in a static element; no extension exists
    terminal,    // ends in a fixed point
    extendable,  // ends in a dynamic non-fixed state
};

/// A finite path x0 .. xm respecting the successor relation (m >= 1).
struct Run {
    std::vector<int> states;
    RunClass classification;

    int length() const { return static_cast<int>(states.size()) - 1; }
};

/// All runs starting at `start` of length 1..max_len, in depth-first
/// order with successors taken in ascending index order. Distinct paths
/// to the same state are distinct runs; a run is not extended past its
/// first entry into a fixed point (the continuation would only repeat
/// that state).
std::vector<Run> enumerate_runs(const ChoiceMap& delta, int start, int max_len);

const char* to_string(RunClass c);

}  // namespace ndmech
