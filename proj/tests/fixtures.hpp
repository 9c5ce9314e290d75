#pragma once

// Small hand-built instances shared by the unit tests.

#include <string>
#include <vector>

#include "pskew/exactalg.hpp"
#include "pskew/groups.hpp"
#include "pskew/leavitt.hpp"
#include "pskew/paction.hpp"
#include "pskew/skewring.hpp"

namespace fixture {

using namespace pskew;

/// C4 on {e1, e2, e3}: h_g: e2->e1, e3->e2; h_{g^2}: e1<->e3; h_{g^3}: e1->e2, e2->e3.
inline SetPartialAction c4_example()
{
    return SetPartialAction::create(Group::finite(FiniteGroup::cyclic(4)), {"e1", "e2", "e3"},
                                    {{std::size_t{1}, {{1, 0}, {2, 1}}},
                                     {std::size_t{2}, {{0, 2}, {2, 0}}},
                                     {std::size_t{3}, {{0, 1}, {1, 2}}}});
}

/// The C4 example with h_g(e3) redirected to e2's image slot: h_g: e2->e2, e3->e1.
inline SetPartialAction c4_broken()
{
    return SetPartialAction::create(Group::finite(FiniteGroup::cyclic(4)), {"e1", "e2", "e3"},
                                    {{std::size_t{1}, {{1, 1}, {2, 0}}},
                                     {std::size_t{2}, {{0, 2}, {2, 0}}}});
}

/// C2 acting trivially (globally) on n points.
inline SetPartialAction c2_trivial(std::size_t n)
{
    std::vector<std::string> names;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i) {
        names.push_back("x" + std::to_string(i + 1));
        pairs.emplace_back(i, i);
    }
    return SetPartialAction::create(Group::finite(FiniteGroup::cyclic(2)), names, {{std::size_t{1}, pairs}});
}

inline SetPartialAction c2_swap()
{
    return SetPartialAction::create(Group::finite(FiniteGroup::cyclic(2)), {"x1", "x2"},
                                    {{std::size_t{1}, {{0, 1}, {1, 0}}}});
}

/// Only the identity component, on n points, for the cyclic group of order m.
inline SetPartialAction identity_only(std::size_t n, std::size_t m = 2)
{
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i)
        names.push_back("x" + std::to_string(i + 1));
    return SetPartialAction::create(Group::finite(FiniteGroup::cyclic(m)), names, {});
}

inline SkewRing ring(SetPartialAction a, std::uint32_t p = 2)
{
    return SkewRing(AlgebraPartialAction(std::move(a), PrimeField(p)));
}

inline Graph a2()
{
    return Graph::create({"v1", "v2"}, {{"e", 0, 1}});
}

/// v1 -> v2 <- v3
inline Graph star()
{
    return Graph::create({"v1", "v2", "v3"}, {{"e", 0, 1}, {"f", 2, 1}});
}

inline Graph loop()
{
    return Graph::create({"v"}, {{"l", 0, 0}});
}

inline Graph loop_with_exit()
{
    return Graph::create({"v", "w"}, {{"l", 0, 0}, {"x", 0, 1}});
}

inline Graph isolated_pair()
{
    return Graph::create({"v1", "v2"}, {});
}

inline Vector indicator(std::size_t n, const std::vector<std::size_t>& points)
{
    Vector v(n);
    for (auto x : points)
        v[x] = 1;
    return v;
}

} // namespace fixture
