#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "test_util.hpp"

using namespace ndmech;
using testutil::make_space;

TEST_CASE("state spaces reject empty and duplicate name lists") {
    CHECK_THROWS_AS(StateSpace::make({}), Error);
    CHECK_THROWS_AS(StateSpace::make({"a", "b", "a"}), Error);
    SpacePtr s = StateSpace::make({"a", "b"});
    CHECK(s->size() == 2);
    CHECK(s->index_of("b") == 1);
    CHECK(!s->index_of("zz").has_value());
}

TEST_CASE("state sets iterate in ascending index order") {
    SpacePtr space = make_space(130);  // crosses word boundaries
    StateSet s(space);
    s.insert(129);
    s.insert(0);
    s.insert(64);
    s.insert(63);
    CHECK(s.members() == std::vector<int>{0, 63, 64, 129});
    CHECK(s.count() == 4);
    s.erase(64);
    CHECK(s.members() == std::vector<int>{0, 63, 129});
}

TEST_CASE("state sets obey boolean-algebra laws") {
    const std::uint64_t seed = 20240601;
    std::mt19937_64 rng(seed);
    CAPTURE(seed);
    SpacePtr space = make_space(100);
    for (int i = 0; i < 50; ++i) {
        StateSet a = testutil::random_subset(space, rng);
        StateSet b = testutil::random_subset(space, rng);
        StateSet c = testutil::random_subset(space, rng);
        CHECK((a | b) == (b | a));
        CHECK((a & (b | c)) == ((a & b) | (a & c)));
        CHECK((a - b) == (a & b.complement()));
        CHECK((a | b).complement() == (a.complement() & b.complement()));
        CHECK(a.complement().complement() == a);
        CHECK(a.subset_of(a | b));
        CHECK((a & b).subset_of(a));
    }
}

TEST_CASE("cross-space operations are rejected") {
    SpacePtr s1 = make_space(4, "p");
    SpacePtr s2 = make_space(4, "q");
    StateSet a(s1), b(s2);
    CHECK_THROWS_AS(a |= b, SpaceMismatchError);
    CHECK_THROWS_AS((void)a.subset_of(b), SpaceMismatchError);
    ChoiceMap d(s1);
    CHECK_THROWS_AS((void)apply(d, b), SpaceMismatchError);
    CHECK_THROWS_AS((void)inverse_image(d, b), SpaceMismatchError);
    CHECK_THROWS_AS((void)compose(d, ChoiceMap(s2)), SpaceMismatchError);
    // same names means same space, even for distinct handles
    SpacePtr s3 = make_space(4, "p");
    StateSet c(s3);
    CHECK_NOTHROW(a |= c);
}

TEST_CASE("dynamic set on the standard maps") {
    SpacePtr space = make_space(5);
    CHECK(dynamic_set(ChoiceMap::abort_map(space)).is_empty());
    CHECK(dynamic_set(ChoiceMap::skip_map(space)) == StateSet::full(space));

    auto [s3, t3] = testutil::t3();
    CHECK(dynamic_set(t3) == StateSet::of(s3, {0, 2}));  // {a, c}
}

TEST_CASE("apply unions successor sets") {
    auto [space, t3] = testutil::t3();
    CHECK(apply(t3, StateSet::of(space, {0})) == StateSet::of(space, {1, 2}));
    CHECK(apply(t3, StateSet(space)).is_empty());

    const std::uint64_t seed = 7;
    std::mt19937_64 rng(seed);
    CAPTURE(seed);
    SpacePtr s8 = make_space(8);
    ChoiceMap skip = ChoiceMap::skip_map(s8);
    for (int i = 0; i < 20; ++i) {
        StateSet a = testutil::random_subset(s8, rng);
        CHECK(apply(skip, a) == a);
    }
}

TEST_CASE("inverse image on the standard maps") {
    auto [space, t3] = testutil::t3();
    CHECK(inverse_image(t3, StateSet::of(space, {2})) == StateSet::of(space, {2}));

    SpacePtr s6 = make_space(6);
    ChoiceMap skip = ChoiceMap::skip_map(s6);
    ChoiceMap chaos = ChoiceMap::chaos_map(s6);
    const std::uint64_t seed = 11;
    std::mt19937_64 rng(seed);
    CAPTURE(seed);
    for (int i = 0; i < 20; ++i) {
        StateSet a = testutil::random_subset(s6, rng);
        CHECK(inverse_image(skip, a) == a);
        CHECK(weak_inverse_image(skip, a) == a);
        if (!(a == StateSet::full(s6))) {
            CHECK(inverse_image(chaos, a).is_empty());
        }
        if (!a.is_empty()) {
            CHECK(weak_inverse_image(chaos, a) == StateSet::full(s6));
        }
    }
    CHECK(inverse_image(chaos, StateSet::full(s6)) == StateSet::full(s6));
}

TEST_CASE("weak inverse image on the standard maps") {
    auto [space, t3] = testutil::t3();
    CHECK(weak_inverse_image(t3, StateSet::of(space, {2})) == StateSet::of(space, {0, 2}));

    SpacePtr s5 = make_space(5);
    ChoiceMap abort = ChoiceMap::abort_map(s5);
    const std::uint64_t seed = 13;
    std::mt19937_64 rng(seed);
    CAPTURE(seed);
    for (int i = 0; i < 10; ++i) {
        StateSet a = testutil::random_subset(s5, rng);
        CHECK(weak_inverse_image(abort, a).is_empty());
        CHECK(inverse_image(abort, a).is_empty());
    }
}

TEST_CASE("composition and powers") {
    auto [space, t3] = testutil::t3();
    ChoiceMap sq = power(t3, 2);
    CHECK(sq.at(0) == StateSet::of(space, {2}));  // a -> {c}
    CHECK(sq.at(1).is_empty());                   // b dies immediately

    CHECK(power(t3, 0) == ChoiceMap::skip_map(space));

    const std::uint64_t seed = 17;
    std::mt19937_64 rng(seed);
    CAPTURE(seed);
    for (int i = 0; i < 25; ++i) {
        SpacePtr s = make_space(2 + static_cast<int>(rng() % 5));
        ChoiceMap d = testutil::random_choice_map(s, rng);
        const int j = static_cast<int>(rng() % 3);
        const int k = static_cast<int>(rng() % 3);
        CHECK(power(d, j + k) == compose(power(d, j), power(d, k)));
    }
}

namespace {

void check_remark_identities(const ChoiceMap& d, const StateSet& a, const StateSet& b) {
    const StateSet dyn = dynamic_set(d);
    const StateSet inv_a = inverse_image(d, a);
    const StateSet winv_a = weak_inverse_image(d, a);

    // the two images of the empty set
    CHECK(inverse_image(d, StateSet(d.space())).is_empty());
    CHECK(weak_inverse_image(d, StateSet(d.space())).is_empty());
    // sandwich between inverse, weak inverse and the dynamic set
    CHECK(inv_a.subset_of(winv_a));
    CHECK(winv_a.subset_of(dyn));
    // meet/join preservation on the pair
    CHECK(inverse_image(d, a & b) == (inv_a & inverse_image(d, b)));
    CHECK(weak_inverse_image(d, a | b) == (winv_a | weak_inverse_image(d, b)));
    // each operator determines the other through the dynamic set
    CHECK(winv_a == (dyn - inverse_image(d, a.complement())));
    CHECK(inv_a == (dyn - weak_inverse_image(d, a.complement())));
    // monotonicity
    CHECK(inverse_image(d, a & b).subset_of(inv_a));
    CHECK(weak_inverse_image(d, a & b).subset_of(winv_a));
}

}  // namespace

TEST_CASE("inverse/weak-inverse identities hold exhaustively on small spaces") {
    const std::uint64_t seed = 20240602;
    std::mt19937_64 rng(seed);
    CAPTURE(seed);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 5);
        SpacePtr space = make_space(n);
        ChoiceMap d = testutil::random_choice_map(space, rng);
        const std::uint64_t total = std::uint64_t{1} << n;
        for (std::uint64_t ma = 0; ma < total; ++ma) {
            for (std::uint64_t mb = 0; mb < total; ++mb) {
                check_remark_identities(d, StateSet::from_mask(space, ma),
                                        StateSet::from_mask(space, mb));
            }
        }
    }
}

TEST_CASE("inverse/weak-inverse identities hold on sampled larger spaces") {
    const std::uint64_t seed = 20240603;
    std::mt19937_64 rng(seed);
    CAPTURE(seed);
    SpacePtr space = make_space(12);
    for (int trial = 0; trial < 40; ++trial) {
        ChoiceMap d = testutil::random_choice_map(space, rng);
        for (int i = 0; i < 25; ++i) {
            check_remark_identities(d, testutil::random_subset(space, rng),
                                    testutil::random_subset(space, rng));
        }
        // arbitrary finite families, not just pairs
        std::vector<StateSet> family;
        const int k = 2 + static_cast<int>(rng() % 3);
        for (int i = 0; i < k; ++i) family.push_back(testutil::random_subset(space, rng));
        StateSet meet = family[0], join = family[0];
        StateSet inv_meet = inverse_image(d, family[0]);
        StateSet winv_join = weak_inverse_image(d, family[0]);
        for (int i = 1; i < k; ++i) {
            meet &= family[static_cast<size_t>(i)];
            join |= family[static_cast<size_t>(i)];
            inv_meet &= inverse_image(d, family[static_cast<size_t>(i)]);
            winv_join |= weak_inverse_image(d, family[static_cast<size_t>(i)]);
        }
        CHECK(inverse_image(d, meet) == inv_meet);
        CHECK(weak_inverse_image(d, join) == winv_join);
    }
}

TEST_CASE("apply distributes over unions") {
    const std::uint64_t seed = 20240604;
    std::mt19937_64 rng(seed);
    CAPTURE(seed);
    SpacePtr space = make_space(9);
    for (int trial = 0; trial < 30; ++trial) {
        ChoiceMap d = testutil::random_choice_map(space, rng);
        StateSet a = testutil::random_subset(space, rng);
        StateSet b = testutil::random_subset(space, rng);
        CHECK(apply(d, a | b) == (apply(d, a) | apply(d, b)));
    }
}
