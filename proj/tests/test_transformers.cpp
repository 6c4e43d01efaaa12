#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "test_util.hpp"

using namespace ndmech;
using testutil::make_space;

namespace {

// all subsets of a small space
std::vector<StateSet> powerset(const SpacePtr& space) {
    const std::uint64_t total = std::uint64_t{1} << space->size();
    std::vector<StateSet> out;
    out.reserve(total);
    for (std::uint64_t m = 0; m < total; ++m) out.push_back(StateSet::from_mask(space, m));
    return out;
}

bool pointwise_equal(const SetTransformer& a, const SetTransformer& b) {
    for (const StateSet& s : powerset(a.space())) {
        if (!(a.eval(s) == b.eval(s))) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("generated transformers evaluate through the underlying map") {
    auto [space, t3] = testutil::t3();
    SetTransformer mu = SetTransformer::from_inverse(t3);
    SetTransformer alpha = SetTransformer::from_weak_inverse(t3);
    CHECK(mu.provenance() == Provenance::from_inverse);
    CHECK(alpha.provenance() == Provenance::from_weak_inverse);
    CHECK(mu.eval(StateSet::of(space, {1, 2})) == StateSet::of(space, {0, 2}));  // {b,c} -> {a,c}

    SpacePtr s4 = make_space(4);
    SetTransformer skip_mu = SetTransformer::from_inverse(ChoiceMap::skip_map(s4));
    SetTransformer abort_alpha = SetTransformer::from_weak_inverse(ChoiceMap::abort_map(s4));
    for (const StateSet& a : powerset(s4)) {
        CHECK(skip_mu.eval(a) == a);
        CHECK(abort_alpha.eval(a).is_empty());
    }
}

TEST_CASE("axiom verification accepts the generated transformers") {
    auto [space, t3] = testutil::t3();
    AxiomReport r = verify_axioms(SetTransformer::from_inverse(t3),
                                  TransformerLaw::multiplicative, AxiomBudget::exhaustive());
    CHECK(r.passed);

    AxiomReport r2 = verify_axioms(SetTransformer::from_weak_inverse(t3),
                                   TransformerLaw::additive, AxiomBudget::exhaustive());
    CHECK(r2.passed);

    SetTransformer id = SetTransformer::identity(make_space(5));
    CHECK(verify_axioms(id, TransformerLaw::multiplicative, AxiomBudget::exhaustive()).passed);
    CHECK(verify_axioms(id, TransformerLaw::additive, AxiomBudget::exhaustive()).passed);
}

TEST_CASE("axiom verification rejects mismatched laws with a sound witness") {
    auto [space, pm] = testutil::plus_minus();
    auto idx = [](int v) { return v + 4; };

    SetTransformer alpha = SetTransformer::from_weak_inverse(pm);
    AxiomReport r = verify_axioms(alpha, TransformerLaw::multiplicative, AxiomBudget::exhaustive());
    CHECK(!r.passed);
    CHECK(witness_violates(alpha, TransformerLaw::multiplicative, r.witness));

    // the classic witness pair: the nonnegative and nonpositive halves
    StateSet nonneg(space), nonpos(space);
    for (int v = 0; v <= 4; ++v) nonneg.insert(idx(v));
    for (int v = -4; v <= 0; ++v) nonpos.insert(idx(v));
    CHECK(witness_violates(alpha, TransformerLaw::multiplicative, {nonneg, nonpos}));

    SetTransformer mu = SetTransformer::from_inverse(pm);
    AxiomReport r2 = verify_axioms(mu, TransformerLaw::additive, AxiomBudget::exhaustive());
    CHECK(!r2.passed);
    CHECK(witness_violates(mu, TransformerLaw::additive, r2.witness));
    CHECK(witness_violates(mu, TransformerLaw::additive, {nonneg, nonpos}));
}

TEST_CASE("the truncated plus-minus structure shows both strictness gaps") {
    auto [space, pm] = testutil::plus_minus();
    auto idx = [](int v) { return v + 4; };
    StateSet nonneg(space), nonpos(space), zero(space);
    for (int v = 0; v <= 4; ++v) nonneg.insert(idx(v));
    for (int v = -4; v <= 0; ++v) nonpos.insert(idx(v));
    zero.insert(idx(0));

    // union preservation fails for the inverse image
    CHECK(inverse_image(pm, nonneg) == zero);
    CHECK(inverse_image(pm, nonpos) == zero);
    CHECK(inverse_image(pm, StateSet::full(space)) == StateSet::full(space));

    // intersection preservation fails for the weak inverse image
    CHECK(weak_inverse_image(pm, nonneg) == StateSet::full(space));
    CHECK(weak_inverse_image(pm, nonpos) == StateSet::full(space));
    CHECK(weak_inverse_image(pm, zero) == zero);
}

TEST_CASE("axiom verification flags empty-set violations") {
    SpacePtr space = make_space(4);
    // constant non-empty transformer
    StateSet one(space);
    one.insert(0);
    SetTransformer bad(space, [one](const StateSet&) { return one; });
    AxiomReport r = verify_axioms(bad, TransformerLaw::multiplicative, AxiomBudget::exhaustive());
    CHECK(!r.passed);
    REQUIRE(r.witness.size() == 1);
    CHECK(r.witness.front().is_empty());
    CHECK(witness_violates(bad, TransformerLaw::multiplicative, r.witness));
}

TEST_CASE("sampled axiom verification works beyond the exhaustive cap") {
    const std::uint64_t seed = 20240611;
    std::mt19937_64 rng(seed);
    CAPTURE(seed);
    SpacePtr space = make_space(20);
    ChoiceMap d = testutil::random_choice_map(space, rng);
    AxiomReport r = verify_axioms(SetTransformer::from_inverse(d),
                                  TransformerLaw::multiplicative, AxiomBudget::sampled(500, seed));
    CHECK(r.passed);
    CHECK(r.coverage.kind == AxiomBudget::Kind::sampled);

    CHECK_THROWS_AS(verify_axioms(SetTransformer::from_inverse(d),
                                  TransformerLaw::multiplicative, AxiomBudget::exhaustive()),
                    Error);  // 20 states is past the exhaustive cap
}

TEST_CASE("reconstruction from the identity transformer yields the skip map") {
    SpacePtr space = make_space(6);
    CHECK(delta_from_multiplicative(SetTransformer::identity(space)) ==
          ChoiceMap::skip_map(space));
    CHECK(delta_from_additive(SetTransformer::identity(space)) == ChoiceMap::skip_map(space));
}

TEST_CASE("reconstruction recovers the chaos map from its transformers") {
    SpacePtr space = make_space(5);
    const StateSet full = StateSet::full(space);
    SetTransformer mu(space, [full](const StateSet& a) {
        return a == full ? full : StateSet(a.space());
    });
    CHECK(delta_from_multiplicative(mu) == ChoiceMap::chaos_map(space));

    SetTransformer alpha(space, [full](const StateSet& a) {
        return a.is_empty() ? StateSet(a.space()) : full;
    });
    CHECK(delta_from_additive(alpha) == ChoiceMap::chaos_map(space));
}

TEST_CASE("reconstruction round-trips on random structures") {
    const std::uint64_t seed = 20240612;
    std::mt19937_64 rng(seed);
    CAPTURE(seed);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 8);
        SpacePtr space = make_space(n);
        ChoiceMap d = testutil::random_choice_map(space, rng);
        CHECK(delta_from_multiplicative(SetTransformer::from_inverse(d)) == d);
        CHECK(delta_from_additive(SetTransformer::from_weak_inverse(d)) == d);
    }
}

TEST_CASE("the fast reconstruction matches the defining intersection") {
    const std::uint64_t seed = 20240613;
    std::mt19937_64 rng(seed);
    CAPTURE(seed);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        SpacePtr space = make_space(n);
        ChoiceMap d = testutil::random_choice_map(space, rng);
        SetTransformer mu = SetTransformer::from_inverse(d);
        CHECK(delta_from_multiplicative(mu) ==
              testutil::delta_from_multiplicative_definitional(mu));
    }
}

TEST_CASE("reconstruction is total on non-conforming input") {
    auto [space, pm] = testutil::plus_minus();
    // weak inverse images are not multiplicative here; the construction
    // must still produce some choice map without validating
    SetTransformer alpha = SetTransformer::from_weak_inverse(pm);
    CHECK_NOTHROW((void)delta_from_multiplicative(alpha));
}

TEST_CASE("duality swaps inverse and weak inverse images") {
    auto [space, t3] = testutil::t3();
    SetTransformer dual = dualize(SetTransformer::from_inverse(t3), DualDirection::mu_to_alpha);
    SetTransformer weak = SetTransformer::from_weak_inverse(t3);
    CHECK(pointwise_equal(dual, weak));

    SetTransformer dual_back = dualize(weak, DualDirection::alpha_to_mu);
    CHECK(pointwise_equal(dual_back, SetTransformer::from_inverse(t3)));
    CHECK(dual.provenance() == Provenance::dual);
}

TEST_CASE("dualize is an involution and fixes the identity") {
    SpacePtr s4 = make_space(4);
    SetTransformer id = SetTransformer::identity(s4);
    CHECK(pointwise_equal(dualize(id, DualDirection::mu_to_alpha), id));

    const std::uint64_t seed = 20240614;
    std::mt19937_64 rng(seed);
    CAPTURE(seed);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 5);
        SpacePtr space = make_space(n);
        ChoiceMap d = testutil::random_choice_map(space, rng);
        SetTransformer mu = SetTransformer::from_inverse(d);
        CHECK(pointwise_equal(
            dualize(dualize(mu, DualDirection::mu_to_alpha), DualDirection::alpha_to_mu), mu));
        SetTransformer alpha = SetTransformer::from_weak_inverse(d);
        CHECK(pointwise_equal(
            dualize(dualize(alpha, DualDirection::alpha_to_mu), DualDirection::mu_to_alpha),
            alpha));
    }
}

TEST_CASE("multiplicative transformers are monotone with sub-additive joins") {
    const std::uint64_t seed = 20240615;
    std::mt19937_64 rng(seed);
    CAPTURE(seed);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 5);
        SpacePtr space = make_space(n);
        ChoiceMap d = testutil::random_choice_map(space, rng);
        SetTransformer mu = SetTransformer::from_inverse(d);
        REQUIRE(verify_axioms(mu, TransformerLaw::multiplicative, AxiomBudget::exhaustive())
                    .passed);
        SetTransformer alpha = SetTransformer::from_weak_inverse(d);
        REQUIRE(verify_axioms(alpha, TransformerLaw::additive, AxiomBudget::exhaustive()).passed);
        const auto all = powerset(space);
        for (const StateSet& a : all) {
            for (const StateSet& b : all) {
                if (a.subset_of(b)) {
                    CHECK(mu.eval(a).subset_of(mu.eval(b)));
                    CHECK(alpha.eval(a).subset_of(alpha.eval(b)));
                }
                CHECK((mu.eval(a) | mu.eval(b)).subset_of(mu.eval(a | b)));
                CHECK(alpha.eval(a & b).subset_of(alpha.eval(a) & alpha.eval(b)));
            }
        }
    }
}

TEST_CASE("monotone chains validate their direction") {
    SpacePtr space = make_space(4);
    StateSet a(space), b(space), c(space);
    b.insert(0);
    c.insert(0);
    c.insert(1);
    CHECK_NOTHROW(MonotoneChain::ascending({a, b, c}));
    CHECK_NOTHROW(MonotoneChain::descending({c, b, a}));
    CHECK_THROWS_AS(MonotoneChain::ascending({c, a}), Error);
    CHECK_THROWS_AS(MonotoneChain::descending({a, c}), Error);
    CHECK_THROWS_AS(MonotoneChain::ascending({}), Error);
}

TEST_CASE("generated transformers are continuous on every monotone chain") {
    auto [space, t3] = testutil::t3();
    SetTransformer mu = SetTransformer::from_inverse(t3);
    MonotoneChain up = MonotoneChain::ascending(
        {StateSet(space), StateSet::of(space, {2}), StateSet::of(space, {1, 2}),
         StateSet::full(space)});
    CHECK(check_continuity(mu, up));
    CHECK(check_continuity(SetTransformer::identity(space), up));

    const std::uint64_t seed = 20240616;
    std::mt19937_64 rng(seed);
    CAPTURE(seed);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 8);
        SpacePtr s = make_space(n);
        ChoiceMap d = testutil::random_choice_map(s, rng);
        // random descending chain: start full, keep intersecting
        std::vector<StateSet> sets{StateSet::full(s)};
        for (int i = 0; i < 4; ++i) {
            sets.push_back(sets.back() & testutil::random_subset(s, rng, 0.7));
        }
        MonotoneChain down = MonotoneChain::descending(sets);
        CHECK(check_continuity(SetTransformer::from_weak_inverse(d), down));
        CHECK(check_continuity(SetTransformer::from_inverse(d), down));
    }
}

TEST_CASE("a non-monotone transformer fails the continuity check") {
    SpacePtr space = make_space(3);
    // keeps singletons, collapses anything larger
    SetTransformer spiky(space, [](const StateSet& a) {
        return a.count() <= 1 ? a : StateSet(a.space());
    });
    StateSet s0(space);
    StateSet s1 = StateSet::of(space, {0});
    StateSet s2 = StateSet::of(space, {0, 1});
    CHECK(!check_continuity(spiky, MonotoneChain::ascending({s0, s1, s2})));
}
