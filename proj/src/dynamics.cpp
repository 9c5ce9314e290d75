#include "pskew/dynamics.hpp"

#include <vector>

namespace pskew {

std::optional<FixedPoint> fixed_point_witness(const SetPartialAction& a)
{
    for (const auto& c : a.components()) {
        if (a.group().is_identity(c.element))
            continue;
        for (std::size_t x = 0; x < c.forward.size(); ++x)
            if (c.forward[x] == x)
                return FixedPoint{c.element, x};
    }
    return std::nullopt;
}

bool is_topologically_free(const SetPartialAction& a) { return !fixed_point_witness(a).has_value(); }

namespace {

// Orbit-graph connectivity: X is minimal iff every point reaches point 0 and
// point 0 reaches every point along the maps h_t.
std::optional<IndexSet> open_invariant_subset(const SetPartialAction& a)
{
    const std::size_t n = a.carrier_size();
    if (n == 0)
        return std::nullopt;
    std::vector<std::vector<std::size_t>> fwd(n), rev(n);
    for (const auto& c : a.components())
        for (std::size_t x = 0; x < n; ++x)
            if (c.forward[x] != npos) {
                fwd[x].push_back(c.forward[x]);
                rev[c.forward[x]].push_back(x);
            }
    auto reach = [&](const std::vector<std::vector<std::size_t>>& adj) {
        std::vector<bool> seen(n, false);
        std::vector<std::size_t> stack{0};
        seen[0] = true;
        while (!stack.empty()) {
            std::size_t x = stack.back();
            stack.pop_back();
            for (auto y : adj[x])
                if (!seen[y]) {
                    seen[y] = true;
                    stack.push_back(y);
                }
        }
        return seen;
    };
    auto forward = reach(fwd);
    IndexSet out;
    for (std::size_t x = 0; x < n; ++x)
        if (forward[x])
            out.push_back(x);
    if (out.size() < n)
        return out;
    // points that cannot reach 0 form an invariant set avoiding 0
    auto backward = reach(rev);
    out.clear();
    for (std::size_t x = 0; x < n; ++x)
        if (!backward[x])
            out.push_back(x);
    if (!out.empty())
        return out;
    return std::nullopt;
}

} // namespace

bool is_minimal(const SetPartialAction& a) { return !open_invariant_subset(a).has_value(); }

DynamicsCheck check_dynamical_simplicity(const SkewRing& ring, const OracleOutcome& simple)
{
    const SetPartialAction& a = ring.base();
    DynamicsCheck out;
    out.fixed_point = fixed_point_witness(a);
    out.topologically_free = !out.fixed_point.has_value();
    out.invariant_subset = open_invariant_subset(a);
    out.minimal = !out.invariant_subset.has_value();
    out.g_simple = is_G_simple(a);
    out.maximal_commutative = is_maximal_commutative(ring);
    out.simple = simple.verdict;
    out.reason = simple.reason;
    return out;
}

DynamicsCheck check_dynamical_simplicity(const SetPartialAction& a, const PrimeField& field, const OracleOptions& opts)
{
    SkewRing ring{AlgebraPartialAction(a, field)};
    return check_dynamical_simplicity(ring, is_simple_oracle(ring, opts));
}

} // namespace pskew
