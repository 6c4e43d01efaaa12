#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ndmech/choice_map.hpp"

namespace ndmech {

enum class Provenance {
    user_supplied,
    from_inverse,       // wraps inverse_image of some choice map
    from_weak_inverse,  // wraps weak_inverse_image of some choice map
    dual,               // produced by dualize()
};

/// A total map from subsets of X to subsets of X, kept opaque: tabulating
/// 2^n entries is infeasible beyond tiny spaces. eval must be pure and
/// must return sets over the same space.
class SetTransformer {
public:
    using EvalFn = std::function<StateSet(const StateSet&)>;

    SetTransformer(SpacePtr space, EvalFn eval, Provenance provenance = Provenance::user_supplied);

    static SetTransformer identity(SpacePtr space);
    static SetTransformer from_inverse(ChoiceMap delta);
    static SetTransformer from_weak_inverse(ChoiceMap delta);

    StateSet eval(const StateSet& a) const;
    const SpacePtr& space() const { return space_; }
    Provenance provenance() const { return provenance_; }

private:
    SpacePtr space_;
    EvalFn eval_;
    Provenance provenance_;
};

enum class TransformerLaw {
    multiplicative,  // preserves {} and intersections
    additive,        // preserves {} and unions
};

/// How hard verify_axioms looks for a violation. Exhaustive coverage
/// enumerates the full powerset and is limited to spaces with <= 12
/// states; sampled coverage draws seeded random families.
struct AxiomBudget {
    enum class Kind { exhaustive, sampled };
    Kind kind = Kind::exhaustive;
    std::uint64_t count = 0;
    std::uint64_t seed = 0;

    static AxiomBudget exhaustive() { return {}; }
    static AxiomBudget sampled(std::uint64_t count, std::uint64_t seed) {
        return {Kind::sampled, count, seed};
    }
};

/// Outcome of an axiom check. On failure `witness` holds a family of sets
/// on which the law fails, re-checkable against eval: a single-element
/// family {A} means eval({}) != {} was observed (A is the empty set);
/// otherwise eval(meet/join of the family) differs from the meet/join of
/// the evaluated members.
struct AxiomReport {
    TransformerLaw law;
    bool passed = false;
    std::vector<StateSet> witness;
    AxiomBudget coverage;
    std::string detail;
};

AxiomReport verify_axioms(const SetTransformer& t, TransformerLaw law, const AxiomBudget& budget);

/// Re-evaluates a failure witness; true when it indeed violates the law.
bool witness_violates(const SetTransformer& t, TransformerLaw law,
                      const std::vector<StateSet>& witness);

/// The unique choice map whose inverse image is `mu`, assuming mu is
/// multiplicative. Total for any input: the construction is evaluated
/// regardless, and callers probing non-multiplicative maps get whatever
/// it yields. Costs size()+1 evaluations.
ChoiceMap delta_from_multiplicative(const SetTransformer& mu);

/// The unique choice map whose weak inverse image is `alpha`, assuming
/// alpha is additive. Same totality contract; costs size()+1 evaluations
/// (one per singleton plus the full space).
ChoiceMap delta_from_additive(const SetTransformer& alpha);

enum class DualDirection { mu_to_alpha, alpha_to_mu };

/// The dual transformer A -> eval(X) \ eval(complement(A)). The constant
/// eval(X) is computed once, at construction.
SetTransformer dualize(const SetTransformer& t, DualDirection direction);

/// A finite monotone sequence of sets; on a finite space its limit is the
/// final element once the chain stabilizes.
class MonotoneChain {
public:
    enum class Direction { ascending, descending };

    /// Validates direction; throws Error on a non-monotone sequence.
    MonotoneChain(std::vector<StateSet> sets, Direction direction);

    static MonotoneChain ascending(std::vector<StateSet> sets) {
        return MonotoneChain(std::move(sets), Direction::ascending);
    }
    static MonotoneChain descending(std::vector<StateSet> sets) {
        return MonotoneChain(std::move(sets), Direction::descending);
    }

    const std::vector<StateSet>& sets() const { return sets_; }
    Direction direction() const { return direction_; }
    const StateSet& limit() const { return sets_.back(); }

private:
    std::vector<StateSet> sets_;
    Direction direction_;
};

/// Whether eval commutes with the chain's limit: for an ascending chain,
/// eval(limit) must equal the union of the images; for a descending one,
/// the intersection. Transformers generated from any choice map over a
/// finite space always satisfy this.
bool check_continuity(const SetTransformer& t, const MonotoneChain& chain);

}  // namespace ndmech
