#pragma once

// Independent ground-truth routines for tests. Nothing here calls the closure
// or decision procedures it is used to check.

#include <cstdint>
#include <set>
#include <vector>

#include "pskew/exactalg.hpp"
#include "pskew/leavitt.hpp"
#include "pskew/paction.hpp"
#include "pskew/skewring.hpp"

namespace oracle {

using namespace pskew;

/// Every vector of F_p^dim, in odometer order.
inline std::vector<Vector> all_vectors(const PrimeField& f, std::size_t dim)
{
    std::vector<Vector> out;
    Vector v(dim);
    for (;;) {
        out.push_back(v);
        std::size_t k = 0;
        while (k < dim && ++v[k] == f.modulus()) {
            v[k] = 0;
            ++k;
        }
        if (k == dim)
            break;
    }
    return out;
}

/// All elements of span(gens), by enumerating coefficient tuples.
inline std::set<Vector> span_elements(const PrimeField& f, std::size_t dim, const std::vector<Vector>& gens)
{
    std::set<Vector> out;
    for (const auto& coeffs : all_vectors(f, gens.size())) {
        Vector v(dim);
        for (std::size_t i = 0; i < gens.size(); ++i)
            axpy(f, v, coeffs[i], gens[i]);
        out.insert(v);
    }
    return out;
}

inline bool subset_invariant(const SetPartialAction& a, std::uint32_t mask)
{
    for (const auto& c : a.components())
        for (std::size_t x = 0; x < a.carrier_size(); ++x)
            if ((mask >> x & 1u) && c.forward[x] != npos && !(mask >> c.forward[x] & 1u))
                return false;
    return true;
}

/// All invariant subsets of X as bitmasks (|X| <= 20).
inline std::vector<std::uint32_t> invariant_subsets(const SetPartialAction& a)
{
    std::vector<std::uint32_t> out;
    for (std::uint32_t m = 0; m < (1u << a.carrier_size()); ++m)
        if (subset_invariant(a, m))
            out.push_back(m);
    return out;
}

inline bool g_simple_by_subsets(const SetPartialAction& a)
{
    const std::uint32_t full = (1u << a.carrier_size()) - 1;
    for (auto m : invariant_subsets(a))
        if (m != 0 && m != full)
            return false;
    return true;
}

/// |X| + sum_{t != 0} #{x in X_t ∩ X_{t^-1} : h_{t^-1}(x) = x}
inline std::size_t centralizer_dimension_formula(const SetPartialAction& a)
{
    std::size_t dim = a.carrier_size();
    const Group& G = a.group();
    for (const auto& c : a.components()) {
        if (G.is_identity(c.element))
            continue;
        for (std::size_t x = 0; x < a.carrier_size(); ++x)
            if (c.in_range[x] && a.in_domain(G.inverse(c.element), x) && a.apply(G.inverse(c.element), x) == x)
                ++dim;
    }
    return dim;
}

/// (1_x d_t)(1_y d_s) evaluated by hand from the set maps: alpha_{t^-1}(1_x) =
/// 1_{h_{t^-1}(x)}, so the product is 1_x d_{ts} when y = h_{t^-1}(x), else 0.
inline std::size_t hand_basis_product(const SkewRing& r, std::size_t i, std::size_t j)
{
    const auto& a = r.base();
    const Group& G = a.group();
    auto ci = r.coordinates()[i];
    auto cj = r.coordinates()[j];
    const GroupElement& t = a.components()[ci.component].element;
    const GroupElement& s = a.components()[cj.component].element;
    if (a.apply(G.inverse(t), ci.point) != cj.point)
        return npos;
    return r.coordinate_of(G.multiply(t, s), ci.point);
}

/// Ideal closure under every basis element on both sides, through the
/// formula-level multiply and RREF insertion.
inline Subspace naive_ideal(const SkewRing& r, const SkewElement& a)
{
    Subspace span(r.field(), r.dimension());
    std::vector<Vector> work;
    if (span.insert(a.coeffs()))
        work.push_back(a.coeffs());
    while (!work.empty()) {
        Vector v = work.back();
        work.pop_back();
        for (std::size_t i = 0; i < r.dimension(); ++i) {
            for (const auto& w : {r.multiply(r.basis(i), SkewElement(v)), r.multiply(SkewElement(v), r.basis(i))})
                if (span.insert(w.coeffs()))
                    work.push_back(w.coeffs());
        }
    }
    return span;
}

/// Simplicity by naive closure of every nonzero element (no normalization).
inline bool simple_by_brute_force(const SkewRing& r)
{
    for (const auto& v : all_vectors(r.field(), r.dimension()))
        if (!v.is_zero() && !naive_ideal(r, SkewElement(v)).is_whole())
            return false;
    return true;
}

/// All ideals of K^X, found by spanning every 1-, 2- and 3-element set of
/// vectors and keeping the subspaces closed under the coordinate idempotents.
/// Complete for |X| <= 3.
inline std::vector<Subspace> ideals_of_function_algebra(const PrimeField& f, std::size_t n)
{
    auto vecs = all_vectors(f, n);
    std::vector<Subspace> out;
    auto consider = [&](const std::vector<Vector>& gens) {
        Subspace s = Subspace::span(f, n, gens);
        for (const auto& b : s.basis())
            for (std::size_t x = 0; x < n; ++x) {
                Vector prod(n);
                prod[x] = b[x];
                if (!s.contains(prod))
                    return;
            }
        for (const auto& seen : out)
            if (seen == s)
                return;
        out.push_back(s);
    };
    for (std::size_t i = 0; i < vecs.size(); ++i)
        for (std::size_t j = i; j < vecs.size(); ++j)
            for (std::size_t k = j; k < vecs.size(); ++k)
                consider({vecs[i], vecs[j], vecs[k]});
    return out;
}

/// Hereditary saturated vertex sets by enumeration of all 2^|E^0| subsets.
inline std::vector<std::uint32_t> hereditary_saturated_subsets(const Graph& g)
{
    std::vector<std::uint32_t> out;
    for (std::uint32_t m = 0; m < (1u << g.vertex_count()); ++m) {
        IndexSet h;
        for (std::size_t v = 0; v < g.vertex_count(); ++v)
            if (m >> v & 1u)
                h.push_back(v);
        bool hereditary = true;
        for (const auto& e : g.edges())
            if ((m >> e.source & 1u) && !(m >> e.range & 1u))
                hereditary = false;
        bool saturated = true;
        for (std::size_t v = 0; v < g.vertex_count(); ++v) {
            if ((m >> v & 1u) || g.is_sink(v))
                continue;
            bool all = true;
            for (auto e : g.out_edges(v))
                all = all && (m >> g.edges()[e].range & 1u);
            if (all)
                saturated = false;
        }
        if (hereditary && saturated)
            out.push_back(m);
    }
    return out;
}

} // namespace oracle
