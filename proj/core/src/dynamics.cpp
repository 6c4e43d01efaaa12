#include "ndmech/dynamics.hpp"

#include "ndmech/errors.hpp"

namespace ndmech {

StateSet fixed_points(const ChoiceMap& delta) {
    StateSet out(delta.space());
    for (int x = 0; x < delta.size(); ++x) {
        const StateSet& succ = delta.at(x);
        if (succ.count() == 1 && succ.contains(x)) out.insert(x);
    }
    return out;
}

StateSet stable_points(const ChoiceMap& delta) {
    StateSet s = dynamic_set(delta);
    for (;;) {
        StateSet next(delta.space());
        for (int x : s) {
            if (delta.at(x).subset_of(s)) next.insert(x);
        }
        if (next == s) return s;
        s = std::move(next);
    }
}

namespace {

// Least fixpoint of C -> C | step(C) seeded with the fixed points.
template <typename Step>
StateSet grow_from_fix(const ChoiceMap& delta, Step&& step) {
    StateSet c = fixed_points(delta);
    for (;;) {
        StateSet next = c | step(c);
        if (next == c) return c;
        c = std::move(next);
    }
}

}  // namespace

StateSet convergent_points(const ChoiceMap& delta) {
    return grow_from_fix(delta, [&](const StateSet& c) { return inverse_image(delta, c); });
}

StateSet weakly_convergent_points(const ChoiceMap& delta) {
    return grow_from_fix(delta, [&](const StateSet& c) { return weak_inverse_image(delta, c); });
}

AnalysisSets analyze(const ChoiceMap& delta) {
    return AnalysisSets{
        dynamic_set(delta),          fixed_points(delta),
        stable_points(delta),        convergent_points(delta),
        weakly_convergent_points(delta),
    };
}

namespace {

// States reachable from x by at least one step.
StateSet forward_reach(const ChoiceMap& delta, int x) {
    StateSet reach = delta.at(x);
    std::vector<int> frontier = reach.members();
    while (!frontier.empty()) {
        int y = frontier.back();
        frontier.pop_back();
        for (int z : delta.at(y)) {
            if (!reach.contains(z)) {
                reach.insert(z);
                frontier.push_back(z);
            }
        }
    }
    return reach;
}

}  // namespace

ChoiceMap limit_map(const ChoiceMap& delta) {
    const StateSet fix = fixed_points(delta);
    ChoiceMap out(delta.space());
    for (int x = 0; x < delta.size(); ++x) {
        out.set(x, forward_reach(delta, x) & fix);
    }
    return out;
}

StateSet basin(const ChoiceMap& delta, const StateSet& a) {
    require_same_space(delta.space(), a.space());
    // Convergent states have a non-empty limit set, so the inverse image
    // of the limit map needs no emptiness carve-out here.
    return convergent_points(delta) & inverse_image(limit_map(delta), a);
}

StateSet basin_via_inverses(const ChoiceMap& delta, const StateSet& a) {
    require_same_space(delta.space(), a.space());
    // Iterated inverse images of a set of fixed points form an ascending
    // chain, so the union of all iterates is the stabilized iterate.
    StateSet t = a & fixed_points(delta);
    StateSet acc = t;
    for (;;) {
        t = inverse_image(delta, t);
        StateSet next = acc | t;
        if (next == acc) return acc;
        acc = std::move(next);
    }
}

StateSet iterated_inverse(const ChoiceMap& delta, const StateSet& a, int k) {
    if (k < 0) throw Error("iterated_inverse requires k >= 0");
    StateSet out = a;
    for (int i = 0; i < k; ++i) out = inverse_image(delta, out);
    return out;
}

namespace {

void extend_runs(const ChoiceMap& delta, const StateSet& dyn, const StateSet& fix,
                 std::vector<int>& path, int max_len, std::vector<Run>& out) {
    const int last = path.back();
    const int depth = static_cast<int>(path.size()) - 1;
    if (depth >= 1) {
        RunClass cls = RunClass::extendable;
        if (!dyn.contains(last)) {
            cls = RunClass::aborted;
        } else if (fix.contains(last)) {
            cls = RunClass::terminal;
        }
        out.push_back(Run{path, cls});
        // Stop at the first entry into a fixed point; the only
        // continuation would repeat that state forever.
        if (cls != RunClass::extendable) return;
    }
    if (depth >= max_len) return;
    for (int y : delta.at(last)) {
        path.push_back(y);
        extend_runs(delta, dyn, fix, path, max_len, out);
        path.pop_back();
    }
}

}  // namespace

std::vector<Run> enumerate_runs(const ChoiceMap& delta, int start, int max_len) {
    if (start < 0 || start >= delta.size()) throw Error("run start state outside the space");
    if (max_len < 1) throw Error("enumerate_runs requires max_len >= 1");
    std::vector<Run> out;
    const StateSet dyn = dynamic_set(delta);
    const StateSet fix = fixed_points(delta);
    std::vector<int> path{start};
    extend_runs(delta, dyn, fix, path, max_len, out);
    return out;
}

const char* to_string(RunClass c) {
    switch (c) {
        case RunClass::aborted: return "aborted";
        case RunClass::terminal: return "terminal";
        case RunClass::extendable: return "extendable";
    }
    return "?";
}

}  // namespace ndmech
