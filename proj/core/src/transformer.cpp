#include "ndmech/transformer.hpp"

#include <random>

#include "ndmech/errors.hpp"

namespace ndmech {

SetTransformer::SetTransformer(SpacePtr space, EvalFn eval, Provenance provenance)
    : space_(std::move(space)), eval_(std::move(eval)), provenance_(provenance) {
    if (!space_) throw Error("SetTransformer requires a state space");
    if (!eval_) throw Error("SetTransformer requires an eval function");
}

StateSet SetTransformer::eval(const StateSet& a) const {
    require_same_space(space_, a.space());
    StateSet out = eval_(a);
    require_same_space(space_, out.space());
    return out;
}

SetTransformer SetTransformer::identity(SpacePtr space) {
    return SetTransformer(space, [](const StateSet& a) { return a; });
}

SetTransformer SetTransformer::from_inverse(ChoiceMap delta) {
    SpacePtr space = delta.space();
    return SetTransformer(
        std::move(space),
        [d = std::move(delta)](const StateSet& a) { return inverse_image(d, a); },
        Provenance::from_inverse);
}

SetTransformer SetTransformer::from_weak_inverse(ChoiceMap delta) {
    SpacePtr space = delta.space();
    return SetTransformer(
        std::move(space),
        [d = std::move(delta)](const StateSet& a) { return weak_inverse_image(d, a); },
        Provenance::from_weak_inverse);
}

namespace {

// meet for the multiplicative law, join for the additive one
StateSet combine(TransformerLaw law, const std::vector<StateSet>& family) {
    StateSet acc = family.front();
    for (size_t i = 1; i < family.size(); ++i) {
        if (law == TransformerLaw::multiplicative) {
            acc &= family[i];
        } else {
            acc |= family[i];
        }
    }
    return acc;
}

bool family_conforms(const SetTransformer& t, TransformerLaw law,
                     const std::vector<StateSet>& family) {
    StateSet expected = t.eval(family.front());
    for (size_t i = 1; i < family.size(); ++i) {
        StateSet img = t.eval(family[i]);
        if (law == TransformerLaw::multiplicative) {
            expected &= img;
        } else {
            expected |= img;
        }
    }
    return t.eval(combine(law, family)) == expected;
}

StateSet random_subset(const SpacePtr& space, std::mt19937_64& rng) {
    StateSet s(space);
    const int n = space->size();
    std::uniform_int_distribution<std::uint64_t> word;
    for (int base = 0; base < n; base += 64) {
        std::uint64_t w = word(rng);
        const int top = std::min(n - base, 64);
        for (int b = 0; b < top; ++b) {
            if ((w >> b) & 1u) s.insert(base + b);
        }
    }
    return s;
}

}  // namespace

bool witness_violates(const SetTransformer& t, TransformerLaw law,
                      const std::vector<StateSet>& witness) {
    if (witness.empty()) return false;
    if (witness.size() == 1) {
        // empty-set preservation witness
        return !witness.front().is_empty() ? false : !t.eval(witness.front()).is_empty();
    }
    return !family_conforms(t, law, witness);
}

AxiomReport verify_axioms(const SetTransformer& t, TransformerLaw law, const AxiomBudget& budget) {
    AxiomReport report{law, false, {}, budget, ""};
    const SpacePtr& space = t.space();
    const int n = space->size();

    // empty-set preservation first
    StateSet empty(space);
    if (!t.eval(empty).is_empty()) {
        report.witness = {empty};
        report.detail = "eval({}) is non-empty";
        return report;
    }

    if (budget.kind == AxiomBudget::Kind::exhaustive) {
        if (n > 12) throw Error("exhaustive axiom verification is limited to 12 states");
        // Tabulate images as masks, then check all pairs with integer ops.
        // Pairwise preservation plus empty-set preservation implies the
        // arbitrary-family law on a finite space.
        const std::uint64_t total = std::uint64_t{1} << n;
        std::vector<std::uint64_t> image(total);
        for (std::uint64_t m = 0; m < total; ++m) {
            image[m] = t.eval(StateSet::from_mask(space, m)).to_mask();
        }
        for (std::uint64_t a = 0; a < total; ++a) {
            for (std::uint64_t b = a; b < total; ++b) {
                const bool ok = (law == TransformerLaw::multiplicative)
                                    ? image[a & b] == (image[a] & image[b])
                                    : image[a | b] == (image[a] | image[b]);
                if (!ok) {
                    report.witness = {StateSet::from_mask(space, a), StateSet::from_mask(space, b)};
                    report.detail = "pairwise law violated";
                    return report;
                }
            }
        }
        report.passed = true;
        return report;
    }

    std::mt19937_64 rng(budget.seed);
    std::uniform_int_distribution<int> family_size(2, 4);
    for (std::uint64_t i = 0; i < budget.count; ++i) {
        std::vector<StateSet> family;
        const int k = family_size(rng);
        family.reserve(static_cast<size_t>(k));
        for (int j = 0; j < k; ++j) family.push_back(random_subset(space, rng));
        if (!family_conforms(t, law, family)) {
            report.witness = std::move(family);
            report.detail = "sampled family violated the law (seed " +
                            std::to_string(budget.seed) + ", draw " + std::to_string(i) + ")";
            return report;
        }
    }
    report.passed = true;
    return report;
}

ChoiceMap delta_from_multiplicative(const SetTransformer& mu) {
    const SpacePtr& space = mu.space();
    const int n = space->size();
    // x gets successor y exactly when x is in mu(X) but drops out of
    // mu(X \ {y}); this agrees with the defining intersection over all
    // sets containing x whenever mu is multiplicative, at n+1 calls
    // instead of 2^n.
    const StateSet b = mu.eval(StateSet::full(space));
    ChoiceMap delta(space);
    std::vector<StateSet> succ(static_cast<size_t>(n), StateSet(space));
    for (int y = 0; y < n; ++y) {
        StateSet without = StateSet::full(space);
        without.erase(y);
        const StateSet keeps = mu.eval(without);
        for (int x : b) {
            if (!keeps.contains(x)) succ[static_cast<size_t>(x)].insert(y);
        }
    }
    for (int x = 0; x < n; ++x) delta.set(x, std::move(succ[static_cast<size_t>(x)]));
    return delta;
}

ChoiceMap delta_from_additive(const SetTransformer& alpha) {
    const SpacePtr& space = alpha.space();
    const int n = space->size();
    const StateSet c = alpha.eval(StateSet::full(space));
    ChoiceMap delta(space);
    std::vector<StateSet> succ(static_cast<size_t>(n), StateSet(space));
    for (int y = 0; y < n; ++y) {
        StateSet singleton(space);
        singleton.insert(y);
        for (int x : alpha.eval(singleton) & c) {
            succ[static_cast<size_t>(x)].insert(y);
        }
    }
    for (int x = 0; x < n; ++x) delta.set(x, std::move(succ[static_cast<size_t>(x)]));
    return delta;
}

SetTransformer dualize(const SetTransformer& t, DualDirection) {
    // Both directions share the formula A -> eval(X) \ eval(A^c); the
    // direction only records intent.
    const SpacePtr& space = t.space();
    StateSet range_on_full = t.eval(StateSet::full(space));
    return SetTransformer(
        space,
        [inner = t, top = std::move(range_on_full)](const StateSet& a) {
            return top - inner.eval(a.complement());
        },
        Provenance::dual);
}

MonotoneChain::MonotoneChain(std::vector<StateSet> sets, Direction direction)
    : sets_(std::move(sets)), direction_(direction) {
    if (sets_.empty()) throw Error("a monotone chain needs at least one set");
    for (size_t i = 1; i < sets_.size(); ++i) {
        require_same_space(sets_[0].space(), sets_[i].space());
        const bool ok = direction_ == Direction::ascending ? sets_[i - 1].subset_of(sets_[i])
                                                           : sets_[i].subset_of(sets_[i - 1]);
        if (!ok) throw Error("chain is not monotone in the declared direction");
    }
}

bool check_continuity(const SetTransformer& t, const MonotoneChain& chain) {
    require_same_space(t.space(), chain.limit().space());
    StateSet image_limit = t.eval(chain.sets().front());
    for (size_t i = 1; i < chain.sets().size(); ++i) {
        StateSet img = t.eval(chain.sets()[i]);
        if (chain.direction() == MonotoneChain::Direction::ascending) {
            image_limit |= img;
        } else {
            image_limit &= img;
        }
    }
    return t.eval(chain.limit()) == image_limit;
}

}  // namespace ndmech
