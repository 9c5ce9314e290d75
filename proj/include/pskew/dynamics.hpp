#pragma once

// Partial dynamics on finite discrete spaces, where every subset is clopen:
// topological freeness, minimality, and the simplicity equivalence.

#include <cstddef>
#include <optional>
#include <string>

#include "pskew/paction.hpp"
#include "pskew/skewring.hpp"

namespace pskew {

struct FixedPoint {
    GroupElement t;
    std::size_t point;
};

/// A point x in X_{t^-1} with h_t(x) = x for some t != 0. In a discrete space
/// a fixed-point set has empty interior only when it is empty.
std::optional<FixedPoint> fixed_point_witness(const SetPartialAction& a);
bool is_topologically_free(const SetPartialAction& a);

/// No proper nonempty invariant subset (all subsets are open).
bool is_minimal(const SetPartialAction& a);

struct DynamicsCheck {
    bool topologically_free = false;
    bool minimal = false;
    bool maximal_commutative = false;
    bool g_simple = false;
    Verdict simple = Verdict::skipped; // exhaustive oracle
    std::string reason;                // set when the oracle is skipped
    std::optional<FixedPoint> fixed_point;
    std::optional<IndexSet> invariant_subset;

    /// simple <=> topologically free and minimal
    bool simplicity_agrees() const noexcept
    {
        return simple == Verdict::skipped || (simple == Verdict::yes) == (topologically_free && minimal);
    }
    /// topologically free => R_0 delta_0 maximal commutative
    bool freeness_gives_commutativity() const noexcept { return !topologically_free || maximal_commutative; }
    /// minimal <=> R_0 is G-simple
    bool minimality_matches() const noexcept { return minimal == g_simple; }
    bool all_agree() const noexcept
    {
        return simplicity_agrees() && freeness_gives_commutativity() && minimality_matches();
    }
};

DynamicsCheck check_dynamical_simplicity(const SetPartialAction& a, const PrimeField& field,
                                         const OracleOptions& opts = {});
/// Same check reusing a ring and a simplicity oracle outcome computed elsewhere.
DynamicsCheck check_dynamical_simplicity(const SkewRing& ring, const OracleOutcome& simple);

} // namespace pskew
