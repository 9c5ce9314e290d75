#include "doctest.h"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "pskew/generator.hpp"
#include "pskew/paction.hpp"

using namespace pskew;

namespace {

bool has_violation(const ValidationReport& r, const std::string& axiom)
{
    return std::any_of(r.violations.begin(), r.violations.end(),
                       [&](const AxiomViolation& v) { return v.axiom == axiom; });
}

IndexSet from_mask(std::uint32_t m, std::size_t n)
{
    IndexSet s;
    for (std::size_t x = 0; x < n; ++x)
        if (m >> x & 1u)
            s.push_back(x);
    return s;
}

bool subset_of(const IndexSet& a, const IndexSet& b)
{
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

} // namespace

TEST_CASE("validate_axioms examples")
{
    CHECK(validate_axioms(fixture::c4_example()).ok());
    CHECK(validate_axioms(fixture::identity_only(3)).ok());

    auto broken = validate_axioms(fixture::c4_broken());
    REQUIRE_FALSE(broken.ok());
    CHECK(broken.structural.empty());
    REQUIRE(has_violation(broken, "composition"));
    for (const auto& v : broken.violations) {
        CHECK(v.s.has_value());
        CHECK(v.t.has_value());
        CHECK(v.witness.has_value());
        CHECK_FALSE(v.detail.empty());
    }
}

TEST_CASE("C4 example structure")
{
    auto a = fixture::c4_example();
    REQUIRE(a.components().size() == 4);
    CHECK(a.components().front().element == GroupElement(std::size_t{0}));
    CHECK(a.domain(std::size_t{1}) == IndexSet{0, 1});
    CHECK(a.domain(std::size_t{3}) == IndexSet{1, 2});
    CHECK(a.domain(std::size_t{2}) == IndexSet{0, 2});
    CHECK(a.apply(std::size_t{1}, 1) == 0);
    CHECK(a.apply(std::size_t{1}, 0) == npos);
    CHECK(a.apply(std::size_t{3}, 0) == 1);
    CHECK(a.in_domain(std::size_t{0}, 2));

    // Round trip through specs.
    auto again = SetPartialAction::create(a.group(), a.carrier(), a.specs());
    REQUIRE(again.components().size() == a.components().size());
    for (std::size_t i = 0; i < a.components().size(); ++i)
        CHECK(again.components()[i].forward == a.components()[i].forward);
}

TEST_CASE("malformed maps are reported as structural issues")
{
    auto g = Group::finite(FiniteGroup::cyclic(2));
    auto non_function = SetPartialAction::create(g, {"a", "b"}, {{std::size_t{1}, {{0, 1}, {0, 0}}}});
    auto non_injective = SetPartialAction::create(g, {"a", "b"}, {{std::size_t{1}, {{0, 1}, {1, 1}}}});
    auto identity_listed = SetPartialAction::create(g, {"a", "b"}, {{std::size_t{0}, {{0, 0}}}});
    auto duplicated = SetPartialAction::create(g, {"a", "b"}, {{std::size_t{1}, {{0, 1}}}, {std::size_t{1}, {{1, 0}}}});
    for (const auto* a : {&non_function, &non_injective, &identity_listed, &duplicated}) {
        auto r = validate_axioms(*a);
        CHECK_FALSE(r.ok());
        CHECK_FALSE(r.structural.empty());
    }
    CHECK_THROWS_AS(SetPartialAction::create(g, {"a"}, {{std::size_t{1}, {{0, 3}}}}), std::invalid_argument);
    CHECK_THROWS_AS(SetPartialAction::create(g, {"a"}, {{std::size_t{5}, {{0, 0}}}}), std::invalid_argument);
}

TEST_CASE("missing inverse components are filled in")
{
    auto a = SetPartialAction::create(Group::finite(FiniteGroup::cyclic(3)), {"a", "b", "c"},
                                      {{std::size_t{1}, {{0, 1}}}});
    CHECK(a.apply(std::size_t{2}, 1) == 0);
    CHECK(a.domain(std::size_t{2}) == IndexSet{0});
    CHECK(validate_axioms(a).ok());
}

TEST_CASE("inconsistent inverse pairs violate the inverse axiom")
{
    auto a = SetPartialAction::create(Group::finite(FiniteGroup::cyclic(3)), {"a", "b"},
                                      {{std::size_t{1}, {{0, 1}}}, {std::size_t{2}, {{0, 1}}}});
    CHECK(has_violation(validate_axioms(a), "inverse"));
}

TEST_CASE("restrict_global examples")
{
    std::vector<std::size_t> rot{1, 2, 3, 0};
    auto a = restrict_global(rot, {0, 1}, 4);
    CHECK(a.domain(std::size_t{1}) == IndexSet{1});
    CHECK(a.apply(std::size_t{1}, 0) == 1);
    CHECK(validate_axioms(a).ok());

    auto global = restrict_global(rot, {0, 1, 2, 3}, 4);
    for (const auto& c : global.components())
        CHECK(c.size == 4);

    std::vector<std::size_t> fix{0, 2, 1};
    auto single = restrict_global(fix, {0}, 2);
    CHECK(single.carrier_size() == 1);
    CHECK(single.components().size() == 2);
    CHECK(single.apply(std::size_t{1}, 0) == 0);

    CHECK_THROWS_AS(restrict_global(rot, {0}, 2), std::invalid_argument);
    CHECK_THROWS_AS(restrict_global(rot, {}, 4), std::invalid_argument);
    CHECK_THROWS_AS(restrict_global(rot, {7}, 4), std::invalid_argument);
}

TEST_CASE("restriction of a table-group action")
{
    // Klein four-group acting on 4 points by the regular action.
    auto v4 = FiniteGroup::from_table({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
    auto a = restrict_global(v4, v4.table(), {0, 1, 2});
    CHECK(validate_axioms(a).ok());
    CHECK(oracle::g_simple_by_subsets(a) == is_G_simple(a));
    std::vector<std::vector<std::size_t>> bad{{0, 1}, {1, 0}, {1, 0}, {1, 0}};
    CHECK_THROWS_AS(restrict_global(v4, bad, {0}), std::invalid_argument);
}

TEST_CASE("restrictions always satisfy the axioms")
{
    InstanceGenerator gen(1234);
    for (int i = 0; i < 300; ++i) {
        auto inst = gen.next(1 + gen.below(6), 5);
        auto r = validate_axioms(inst.action);
        CHECK(r.ok());
        CHECK(inst.action.carrier_size() == inst.subset.size());
    }
}

TEST_CASE("generator is deterministic and respects its bounds")
{
    InstanceGenerator g1(99), g2(99);
    for (int i = 0; i < 50; ++i) {
        auto a = g1.next(4, 4, 14);
        auto b = g2.next(4, 4, 14);
        CHECK(a.perm == b.perm);
        CHECK(a.subset == b.subset);
        CHECK(a.ring_dimension() <= 14);
        CHECK(a.action.carrier_size() <= 4);
        CHECK(a.perm.size() <= a.subset.size() + 2);
        for (std::size_t x = 0; x < a.perm.size(); ++x) {
            std::size_t y = x;
            for (std::size_t k = 0; k < 4; ++k)
                y = a.perm[y];
            CHECK(y == x);
        }
    }
}

TEST_CASE("invariant_closure examples")
{
    auto c4 = fixture::c4_example();
    CHECK(invariant_closure(c4, {}).empty());
    CHECK(invariant_closure(c4, {0}) == IndexSet{0, 1, 2});
    CHECK(invariant_closure(fixture::identity_only(3), {1}) == IndexSet{1});
}

TEST_CASE("invariant_closure is extensive, idempotent, monotone, and least")
{
    InstanceGenerator gen(77);
    for (int i = 0; i < 100; ++i) {
        auto a = gen.next(1 + gen.below(4), 5).action;
        const std::size_t n = a.carrier_size();
        auto invariant = oracle::invariant_subsets(a);
        for (std::uint32_t m = 0; m < (1u << n); ++m) {
            auto s = from_mask(m, n);
            auto c = invariant_closure(a, s);
            CHECK(subset_of(s, c));
            CHECK(invariant_closure(a, c) == c);
            std::uint32_t cm = 0;
            for (auto x : c)
                cm |= 1u << x;
            CHECK(std::find(invariant.begin(), invariant.end(), cm) != invariant.end());
            // least: contained in every invariant superset of s
            for (auto inv : invariant)
                if ((inv & m) == m)
                    CHECK((cm & inv) == cm);
            // monotone against one extra point
            for (std::size_t x = 0; x < n; ++x)
                CHECK(subset_of(c, invariant_closure(a, from_mask(m | (1u << x), n))));
        }
    }
}

TEST_CASE("is_G_simple examples")
{
    CHECK(is_G_simple(fixture::c4_example()));
    CHECK_FALSE(is_G_simple(fixture::c2_trivial(2)));
    std::vector<std::size_t> rot{1, 2, 3, 4, 0};
    CHECK(is_G_simple(restrict_global(rot, {0, 1, 2, 3, 4}, 5)));
    CHECK(oracle::g_simple_by_subsets(restrict_global(rot, {0, 1, 2, 3, 4}, 5)));

    auto witness = proper_invariant_subset(fixture::c2_trivial(2));
    REQUIRE(witness.has_value());
    CHECK(witness->size() == 1);
    CHECK_FALSE(proper_invariant_subset(fixture::c4_example()).has_value());
}

TEST_CASE("is_G_simple agrees with subset enumeration")
{
    InstanceGenerator gen(2024);
    int simple = 0;
    for (int i = 0; i < 300; ++i) {
        auto a = gen.next(1 + gen.below(6), 6).action;
        bool expected = oracle::g_simple_by_subsets(a);
        CHECK(is_G_simple(a) == expected);
        auto w = proper_invariant_subset(a);
        CHECK(w.has_value() == !expected);
        if (w) {
            CHECK_FALSE(w->empty());
            CHECK(w->size() < a.carrier_size());
            CHECK(invariant_closure(a, *w) == *w);
        }
        simple += expected;
    }
    CHECK(simple > 0);
    CHECK(simple < 300);
}

TEST_CASE("induced algebra action is multiplicative and invertible")
{
    InstanceGenerator gen(55);
    for (int i = 0; i < 60; ++i) {
        auto base = gen.next(1 + gen.below(4), 4).action;
        AlgebraPartialAction alg(base, PrimeField(3));
        const std::size_t n = alg.carrier_size();
        const Group& G = base.group();
        for (const auto& c : base.components()) {
            const GroupElement& t = c.element;
            const GroupElement ti = G.inverse(t);
            CHECK(alg.unit(t) == fixture::indicator(n, base.domain(t)));
            auto dom = base.domain(ti);
            for (auto x : dom)
                for (auto y : dom) {
                    auto fx = Vector::unit(n, x);
                    auto fy = Vector::unit(n, y);
                    CHECK(alg.apply(t, pointwise_product(alg.field(), fx, fy)) ==
                          pointwise_product(alg.field(), alg.apply(t, fx), alg.apply(t, fy)));
                }
            for (auto x : base.domain(t)) {
                auto f = Vector::unit(n, x);
                CHECK(alg.apply(t, alg.apply(ti, f)) == f);
                CHECK(alg.in_ideal(t, f));
            }
            // alpha_t(1_x) = 1_{h_t(x)}
            for (auto x : dom)
                CHECK(alg.apply(t, Vector::unit(n, x)) == Vector::unit(n, base.apply(t, x)));
        }
    }
}

TEST_CASE("alpha_t rejects functions outside its domain ideal")
{
    AlgebraPartialAction alg(fixture::c4_example(), PrimeField(2));
    CHECK_THROWS_AS(alg.apply(std::size_t{1}, Vector{1, 0, 0}), std::invalid_argument);
    CHECK(alg.apply(std::size_t{1}, Vector{0, 1, 1}) == Vector{1, 1, 0});
    CHECK_FALSE(alg.in_ideal(std::size_t{1}, Vector{0, 0, 1}));
    CHECK(alg.in_ideal(std::size_t{1}, Vector{1, 1, 0}));
}
