#include "ndmech/gcl.hpp"

#include "ndmech/errors.hpp"

namespace ndmech {

Patch::Patch(StateSet domain, std::vector<std::int32_t> image)
    : domain_(std::move(domain)), image_(std::move(image)) {
    const int n = domain_.universe_size();
    if (image_.size() != static_cast<size_t>(n)) {
        throw Error("patch image table has wrong size");
    }
    for (int x : domain_) {
        const std::int32_t y = image_[static_cast<size_t>(x)];
        if (y < 0 || y >= n) {
            throw Error("patch transition leaves the space at state " + std::to_string(x));
        }
    }
}

Quilt::Quilt(SpacePtr space, std::vector<Patch> patches)
    : space_(std::move(space)),
      patches_(std::move(patches)),
      guard_union_(space_),
      hang_set_(space_) {
    for (const Patch& p : patches_) {
        require_same_space(space_, p.space());
        guard_union_ |= p.domain();
    }
    for (int x : guard_union_) {
        bool all_identity = true;
        for (const Patch& p : patches_) {
            if (p.domain().contains(x) && p.apply_to(x) != x) {
                all_identity = false;
                break;
            }
        }
        if (all_identity) hang_set_.insert(x);
    }
}

ChoiceMap quilt_delta(const Quilt& q) {
    ChoiceMap out(q.space());
    for (int x = 0; x < out.size(); ++x) {
        StateSet succ(q.space());
        if (q.guard_union().contains(x)) {
            for (const Patch& p : q.patches()) {
                if (p.domain().contains(x)) succ.insert(p.apply_to(x));
            }
        } else {
            succ.insert(x);
        }
        out.set(x, std::move(succ));
    }
    return out;
}

ChoiceMap if_delta(const Quilt& q) {
    ChoiceMap out(q.space());
    for (int x : q.guard_union()) {
        StateSet succ(q.space());
        for (const Patch& p : q.patches()) {
            if (p.domain().contains(x)) succ.insert(p.apply_to(x));
        }
        out.set(x, std::move(succ));
    }
    return out;
}

ChoiceMap do_delta(const Quilt& q) {
    const ChoiceMap dq = quilt_delta(q);
    const StateSet domain = basin(dq, q.guard_union().complement());
    const ChoiceMap limits = limit_map(dq);
    ChoiceMap out(q.space());
    for (int x : domain) out.set(x, limits.at(x));
    return out;
}

StateSet wp_if(const Quilt& q, const StateSet& post) {
    return inverse_image(if_delta(q), post);
}

StateSet wp_if_patchwise(const Quilt& q, const StateSet& post) {
    require_same_space(q.space(), post.space());
    StateSet out(q.space());
    for (int x : q.guard_union()) {
        bool ok = true;
        for (const Patch& p : q.patches()) {
            if (p.domain().contains(x) && !post.contains(p.apply_to(x))) {
                ok = false;
                break;
            }
        }
        if (ok) out.insert(x);
    }
    return out;
}

StateSet wp_do(const Quilt& q, const StateSet& post) {
    require_same_space(q.space(), post.space());
    const ChoiceMap dif = if_delta(q);
    const StateSet h0 = post & q.guard_union().complement();
    StateSet h = h0;
    for (;;) {
        StateSet next = inverse_image(dif, h) | h0;
        if (next == h) return h;
        h = std::move(next);
    }
}

CheckResult check_alternative(const Quilt& q, const StateSet& a, const StateSet& b) {
    require_same_space(q.space(), a.space());
    require_same_space(q.space(), b.space());
    if (!a.subset_of(q.guard_union())) {
        const int x = (a - q.guard_union()).members().front();
        return {CheckOutcome::hypothesis_not_met, x,
                "precondition is not contained in the guard union"};
    }
    for (size_t j = 0; j < q.patches().size(); ++j) {
        const Patch& p = q.patches()[j];
        for (int x : a & p.domain()) {
            if (!b.contains(p.apply_to(x))) {
                return {CheckOutcome::hypothesis_not_met, x,
                        "command " + std::to_string(j) + " maps a precondition state outside the postcondition"};
            }
        }
    }
    const ChoiceMap dif = if_delta(q);
    const StateSet image = apply(dif, a);
    if (!image.subset_of(b)) {
        for (int x : a) {
            if (!dif.at(x).subset_of(b)) {
                return {CheckOutcome::theorem_violation, x,
                        "alternative-construct image escaped the postcondition"};
            }
        }
        return {CheckOutcome::theorem_violation, std::nullopt,
                "alternative-construct image escaped the postcondition"};
    }
    return {CheckOutcome::pass, std::nullopt, "image of the precondition stays in the postcondition"};
}

CheckResult check_invariance(const Quilt& q, const StateSet& v) {
    require_same_space(q.space(), v.space());
    const ChoiceMap dif = if_delta(q);
    const StateSet guarded_part = v & q.guard_union();
    if (!apply(dif, guarded_part).subset_of(v)) {
        for (int x : guarded_part) {
            if (!dif.at(x).subset_of(v)) {
                return {CheckOutcome::hypothesis_not_met, x,
                        "candidate set is not preserved by the guarded commands"};
            }
        }
        return {CheckOutcome::hypothesis_not_met, std::nullopt,
                "candidate set is not preserved by the guarded commands"};
    }
    const ChoiceMap ddo = do_delta(q);
    const StateSet start = v & convergent_points(quilt_delta(q));
    const StateSet target = v & q.guard_union().complement();
    if (!apply(ddo, start).subset_of(target)) {
        for (int x : start) {
            if (!ddo.at(x).subset_of(target)) {
                return {CheckOutcome::theorem_violation, x,
                        "loop outcome left the invariant or the guard complement"};
            }
        }
        return {CheckOutcome::theorem_violation, std::nullopt,
                "loop outcome left the invariant or the guard complement"};
    }
    return {CheckOutcome::pass, std::nullopt,
            "invariant is preserved and loop outcomes stay in it"};
}

const char* to_string(CheckOutcome o) {
    switch (o) {
        case CheckOutcome::pass: return "pass";
        case CheckOutcome::hypothesis_not_met: return "hypothesis-not-met";
        case CheckOutcome::theorem_violation: return "theorem-violation";
    }
    return "?";
}

}  // namespace ndmech
