#pragma once

// Exhaustive small-graph corpus shared by unit and acceptance tests.

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pskew/leavitt.hpp"

namespace corpus {

using EdgeList = std::vector<std::pair<std::size_t, std::size_t>>;

inline EdgeList canonical(std::size_t n, const EdgeList& edges)
{
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    EdgeList best;
    bool first = true;
    do {
        EdgeList mapped;
        for (auto [s, r] : edges)
            mapped.emplace_back(perm[s], perm[r]);
        std::sort(mapped.begin(), mapped.end());
        if (first || mapped < best)
            best = mapped;
        first = false;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline pskew::Graph make_graph(std::size_t n, const EdgeList& edges)
{
    std::vector<std::string> vertices;
    for (std::size_t v = 0; v < n; ++v)
        vertices.push_back("v" + std::to_string(v + 1));
    std::vector<pskew::Graph::Edge> es;
    for (std::size_t i = 0; i < edges.size(); ++i)
        es.push_back({"e" + std::to_string(i + 1), edges[i].first, edges[i].second});
    return pskew::Graph::create(vertices, es);
}

/// Every graph with 1..max_vertices vertices and 0..max_edges edges (parallel
/// edges and loops allowed), one per isomorphism class.
inline std::vector<pskew::Graph> all_graphs(std::size_t max_vertices, std::size_t max_edges, bool acyclic_only)
{
    std::vector<pskew::Graph> out;
    for (std::size_t n = 1; n <= max_vertices; ++n) {
        EdgeList slots;
        for (std::size_t s = 0; s < n; ++s)
            for (std::size_t r = 0; r < n; ++r)
                if (!acyclic_only || s != r)
                    slots.emplace_back(s, r);
        std::set<EdgeList> seen;
        // multisets of slots of size k, as nondecreasing index sequences
        for (std::size_t k = 0; k <= max_edges && (k == 0 || !slots.empty()); ++k) {
            std::vector<std::size_t> idx(k, 0);
            for (;;) {
                EdgeList edges;
                for (auto i : idx)
                    edges.push_back(slots[i]);
                auto c = canonical(n, edges);
                if (seen.insert(c).second) {
                    auto g = make_graph(n, c);
                    if (!acyclic_only || g.is_acyclic())
                        out.push_back(std::move(g));
                }
                std::size_t pos = k;
                while (pos > 0 && idx[pos - 1] + 1 == slots.size())
                    --pos;
                if (pos == 0)
                    break;
                ++idx[pos - 1];
                for (std::size_t j = pos; j < k; ++j)
                    idx[j] = idx[pos - 1];
            }
        }
    }
    return out;
}

} // namespace corpus

#include "pskew/paction.hpp"

namespace corpus {

/// Distinct partial actions of C2 obtained by restricting an involution of Y
/// (|Y| <= max_carrier + 3) to a subset X with |X| <= max_carrier. Every
/// restriction of a C2 action to such an X arises this way.
inline std::vector<pskew::SetPartialAction> c2_restrictions(std::size_t max_carrier)
{
    std::vector<pskew::SetPartialAction> out;
    std::set<std::pair<std::size_t, std::vector<std::size_t>>> seen;
    for (std::size_t ny = 1; ny <= max_carrier + 3; ++ny) {
        // all involutions of {0..ny-1}
        std::vector<std::vector<std::size_t>> involutions;
        std::vector<std::size_t> perm(ny, ny);
        auto extend = [&](auto&& self, std::size_t i) -> void {
            while (i < ny && perm[i] != ny)
                ++i;
            if (i == ny) {
                involutions.push_back(perm);
                return;
            }
            perm[i] = i;
            self(self, i + 1);
            for (std::size_t j = i + 1; j < ny; ++j)
                if (perm[j] == ny) {
                    perm[i] = j;
                    perm[j] = i;
                    self(self, i + 1);
                    perm[j] = ny;
                }
            perm[i] = ny;
        };
        extend(extend, 0);
        for (const auto& inv : involutions)
            for (std::uint32_t m = 1; m < (1u << ny); ++m) {
                pskew::IndexSet subset;
                for (std::size_t y = 0; y < ny; ++y)
                    if (m >> y & 1u)
                        subset.push_back(y);
                if (subset.size() > max_carrier)
                    continue;
                auto a = pskew::restrict_global(inv, subset, 2);
                std::vector<std::size_t> key;
                if (a.components().size() > 1)
                    key = a.components()[1].forward;
                if (seen.emplace(a.carrier_size(), key).second)
                    out.push_back(std::move(a));
            }
    }
    return out;
}

} // namespace corpus
