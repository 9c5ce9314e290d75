#pragma once

// Seeded random partial actions obtained by restricting global cyclic actions.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "pskew/paction.hpp"

namespace pskew {

struct RestrictionInstance {
    std::size_t group_order = 1;
    std::vector<std::size_t> perm; // generator of the global action on Y
    IndexSet subset;               // X ⊆ Y
    SetPartialAction action;

    /// N = sum_t |X_t|, the dimension of the skew ring.
    std::size_t ring_dimension() const;
};

/// Draws use only raw mt19937_64 output (no std distributions), so a seed
/// yields the same instances on every platform.
class InstanceGenerator {
public:
    explicit InstanceGenerator(std::uint64_t seed) : rng_(seed) {}

    /// Y has between |X| and |X| + 2 points; the permutation is a random
    /// product of disjoint cycles whose lengths divide group_order; X is a
    /// random subset of size 1..max_carrier. Instances whose ring dimension
    /// exceeds max_dimension (0 = unlimited) are redrawn.
    RestrictionInstance next(std::size_t group_order, std::size_t max_carrier, std::size_t max_dimension = 0);

    /// Uniform in [0, n).
    std::size_t below(std::size_t n);

private:
    std::mt19937_64 rng_;
};

} // namespace pskew
