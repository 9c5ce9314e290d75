#include "pskew/generator.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace pskew {

std::size_t RestrictionInstance::ring_dimension() const
{
    std::size_t n = 0;
    for (const auto& c : action.components())
        n += c.size;
    return n;
}

std::size_t InstanceGenerator::below(std::size_t n)
{
    if (n == 0)
        throw std::invalid_argument("empty range");
    const std::uint64_t bound = static_cast<std::uint64_t>(n);
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t r;
    do
        r = rng_();
    while (r >= limit);
    return static_cast<std::size_t>(r % bound);
}

RestrictionInstance InstanceGenerator::next(std::size_t group_order, std::size_t max_carrier, std::size_t max_dimension)
{
    if (group_order == 0 || max_carrier == 0)
        throw std::invalid_argument("group order and carrier bound must be positive");
    std::vector<std::size_t> divisors;
    for (std::size_t d = 1; d <= group_order; ++d)
        if (group_order % d == 0)
            divisors.push_back(d);

    for (;;) {
        RestrictionInstance inst;
        inst.group_order = group_order;
        const std::size_t x_size = 1 + below(max_carrier);
        const std::size_t y_size = x_size + below(3);

        // random arrangement of Y cut into cycles with lengths dividing the order
        std::vector<std::size_t> order(y_size);
        std::iota(order.begin(), order.end(), 0);
        for (std::size_t i = y_size; i > 1; --i)
            std::swap(order[i - 1], order[below(i)]);
        inst.perm.resize(y_size);
        std::size_t pos = 0;
        while (pos < y_size) {
            std::vector<std::size_t> fits;
            for (auto d : divisors)
                if (pos + d <= y_size)
                    fits.push_back(d);
            std::size_t len = fits[below(fits.size())];
            for (std::size_t k = 0; k < len; ++k)
                inst.perm[order[pos + k]] = order[pos + (k + 1) % len];
            pos += len;
        }

        std::vector<std::size_t> pick(y_size);
        std::iota(pick.begin(), pick.end(), 0);
        for (std::size_t i = y_size; i > 1; --i)
            std::swap(pick[i - 1], pick[below(i)]);
        inst.subset.assign(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(x_size));
        std::sort(inst.subset.begin(), inst.subset.end());

        inst.action = restrict_global(inst.perm, inst.subset, group_order);
        if (max_dimension == 0 || inst.ring_dimension() <= max_dimension)
            return inst;
    }
}

} // namespace pskew
