#include "pskew/paction.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace pskew {

namespace {

IndexSet range_of(const SetPartialAction::Component& c)
{
    IndexSet out;
    for (std::size_t x = 0; x < c.in_range.size(); ++x)
        if (c.in_range[x])
            out.push_back(x);
    return out;
}

} // namespace

SetPartialAction SetPartialAction::create(Group group, std::vector<std::string> carrier, std::vector<ComponentSpec> maps)
{
    SetPartialAction a;
    a.group_ = std::move(group);
    a.carrier_ = std::move(carrier);
    const std::size_t n = a.carrier_.size();
    const GroupElement e = a.group_.identity();

    std::map<GroupElement, std::vector<std::size_t>> forward;
    for (const auto& spec : maps) {
        if (!a.group_.contains(spec.element))
            throw std::invalid_argument("group element outside the group");
        const std::string name = a.group_.format(spec.element);
        if (spec.element == e) {
            a.structural_.push_back("identity element " + name + " must not be listed; h_0 is implicit");
            continue;
        }
        if (forward.count(spec.element)) {
            a.structural_.push_back("element " + name + " listed more than once");
            continue;
        }
        std::vector<std::size_t> fwd(n, npos);
        std::vector<std::size_t> preimage(n, npos);
        for (auto [x, y] : spec.pairs) {
            if (x >= n || y >= n)
                throw std::invalid_argument("map for " + name + " references a point outside the carrier");
            if (fwd[x] != npos) {
                if (fwd[x] != y)
                    a.structural_.push_back("map for " + name + " is not a function at " + a.carrier_[x]);
                continue;
            }
            if (preimage[y] != npos) {
                a.structural_.push_back("map for " + name + " is not injective: " + a.carrier_[preimage[y]] + " and " +
                                        a.carrier_[x] + " both map to " + a.carrier_[y]);
                continue;
            }
            fwd[x] = y;
            preimage[y] = x;
        }
        if (std::any_of(fwd.begin(), fwd.end(), [](std::size_t v) { return v != npos; }))
            forward.emplace(spec.element, std::move(fwd));
    }

    // Fill in inverses that were not listed.
    std::vector<std::pair<GroupElement, std::vector<std::size_t>>> added;
    for (const auto& [t, fwd] : forward) {
        GroupElement ti = a.group_.inverse(t);
        if (forward.count(ti))
            continue;
        std::vector<std::size_t> inv(n, npos);
        for (std::size_t x = 0; x < n; ++x)
            if (fwd[x] != npos)
                inv[fwd[x]] = x;
        added.emplace_back(std::move(ti), std::move(inv));
    }
    for (auto& [t, fwd] : added)
        forward.emplace(std::move(t), std::move(fwd));

    std::vector<std::size_t> id(n);
    for (std::size_t x = 0; x < n; ++x)
        id[x] = x;
    forward.emplace(e, std::move(id));

    // std::map order puts the identity first for both group kinds.
    for (auto& [t, fwd] : forward) {
        Component c;
        c.element = t;
        c.in_range.assign(n, false);
        for (auto y : fwd)
            if (y != npos) {
                c.in_range[y] = true;
                ++c.size;
            }
        c.forward = std::move(fwd);
        a.index_.emplace(t, a.components_.size());
        a.components_.push_back(std::move(c));
    }
    return a;
}

std::optional<std::size_t> SetPartialAction::component_index(const GroupElement& t) const
{
    auto it = index_.find(t);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

const SetPartialAction::Component* SetPartialAction::find(const GroupElement& t) const
{
    auto it = index_.find(t);
    return it == index_.end() ? nullptr : &components_[it->second];
}

IndexSet SetPartialAction::domain(const GroupElement& t) const
{
    const Component* c = find(t);
    return c ? range_of(*c) : IndexSet{};
}

bool SetPartialAction::in_domain(const GroupElement& t, std::size_t x) const
{
    const Component* c = find(t);
    return c && x < c->in_range.size() && c->in_range[x];
}

std::size_t SetPartialAction::apply(const GroupElement& t, std::size_t x) const
{
    const Component* c = find(t);
    if (!c || x >= c->forward.size())
        return npos;
    return c->forward[x];
}

std::vector<ComponentSpec> SetPartialAction::specs() const
{
    std::vector<ComponentSpec> out;
    for (const auto& c : components_) {
        if (group_.is_identity(c.element))
            continue;
        ComponentSpec spec{c.element, {}};
        for (std::size_t x = 0; x < c.forward.size(); ++x)
            if (c.forward[x] != npos)
                spec.pairs.emplace_back(x, c.forward[x]);
        out.push_back(std::move(spec));
    }
    return out;
}

// ---------------------------------------------------------------------------

ValidationReport validate_axioms(const SetPartialAction& a)
{
    ValidationReport report;
    report.structural = a.structural_issues();
    if (!report.structural.empty())
        return report;

    const Group& G = a.group();
    const std::size_t n = a.carrier_size();
    const auto& comps = a.components();
    auto name = [&](std::size_t x) { return a.carrier()[x]; };

    const auto& id = comps.front();
    for (std::size_t x = 0; x < n; ++x)
        if (id.forward[x] != x) {
            report.violations.push_back({"identity", std::nullopt, id.element, x, "h_0 must be the identity on X"});
            break;
        }

    for (const auto& c : comps) {
        const GroupElement ti = G.inverse(c.element);
        const auto* inv = a.find(ti);
        if (!inv) {
            report.violations.push_back({"inverse", std::nullopt, c.element, std::nullopt,
                                         "no component for the inverse " + G.format(ti)});
            continue;
        }
        for (std::size_t x = 0; x < n; ++x) {
            std::size_t y = c.forward[x];
            bool ok = (y == npos) ? true : inv->forward[y] == x;
            // the inverse must not be defined outside X_t
            if (ok && !c.in_range[x] && inv->forward[x] != npos)
                ok = false;
            if (!ok) {
                report.violations.push_back({"inverse", std::nullopt, c.element, x,
                                             "h_" + G.format(ti) + " is not the inverse of h_" +
                                                 G.format(c.element) + " at " + name(x)});
                break;
            }
        }
    }

    for (const auto& cs : comps) {
        for (const auto& ct : comps) {
            const GroupElement& s = cs.element;
            const GroupElement& t = ct.element;
            const GroupElement ts = G.multiply(t, s);
            const auto* cts = a.find(ts);

            // h_t(X_{t^-1} ∩ X_s) = X_t ∩ X_{ts}
            std::vector<bool> lhs(n, false), rhs(n, false);
            for (std::size_t x = 0; x < n; ++x) {
                if (ct.forward[x] != npos && cs.in_range[x])
                    lhs[ct.forward[x]] = true;
                rhs[x] = ct.in_range[x] && cts && cts->in_range[x];
            }
            for (std::size_t x = 0; x < n; ++x)
                if (lhs[x] != rhs[x]) {
                    report.violations.push_back(
                        {"compatibility", s, t, x,
                         name(x) + (lhs[x] ? " lies in h_t(X_{t^-1} ∩ X_s) but not in X_t ∩ X_ts"
                                           : " lies in X_t ∩ X_ts but not in h_t(X_{t^-1} ∩ X_s)")});
                    break;
                }

            // h_t(h_s(x)) = h_ts(x) for x in X_{s^-1} ∩ X_{(ts)^-1}
            for (std::size_t x = 0; x < n; ++x) {
                if (cs.forward[x] == npos || !cts || cts->forward[x] == npos)
                    continue;
                std::size_t y = ct.forward[cs.forward[x]];
                if (y != cts->forward[x]) {
                    report.violations.push_back(
                        {"composition", s, t, x,
                         "h_t(h_s(" + name(x) + ")) = " + (y == npos ? std::string("undefined") : name(y)) +
                             " but h_ts(" + name(x) + ") = " + name(cts->forward[x])});
                    break;
                }
            }
        }
    }
    return report;
}

// ---------------------------------------------------------------------------

SetPartialAction restrict_global(const FiniteGroup& group, const std::vector<std::vector<std::size_t>>& perms,
                                 const IndexSet& subset)
{
    const std::size_t order = group.order();
    if (perms.size() != order)
        throw std::invalid_argument("need one permutation per group element");
    const std::size_t m = perms.front().size();
    for (const auto& p : perms) {
        if (p.size() != m)
            throw std::invalid_argument("permutations act on sets of different sizes");
        std::vector<bool> seen(m, false);
        for (auto y : p) {
            if (y >= m || seen[y])
                throw std::invalid_argument("not a permutation");
            seen[y] = true;
        }
    }
    for (std::size_t y = 0; y < m; ++y)
        if (perms[0][y] != y)
            throw std::invalid_argument("identity element must act trivially");
    for (std::size_t s = 0; s < order; ++s)
        for (std::size_t t = 0; t < order; ++t)
            for (std::size_t y = 0; y < m; ++y)
                if (perms[group.multiply(s, t)][y] != perms[s][perms[t][y]])
                    throw std::invalid_argument("permutations do not form a group action");
    if (subset.empty())
        throw std::invalid_argument("restriction subset must be nonempty");

    std::vector<std::size_t> local(m, npos);
    std::vector<std::string> names;
    for (auto y : subset) {
        if (y >= m || local[y] != npos)
            throw std::invalid_argument("restriction subset must be distinct points of Y");
        local[y] = names.size();
        names.push_back(std::to_string(y));
    }
    std::vector<ComponentSpec> specs;
    for (std::size_t g = 1; g < order; ++g) {
        ComponentSpec spec{GroupElement(g), {}};
        for (auto y : subset)
            if (local[perms[g][y]] != npos)
                spec.pairs.emplace_back(local[y], local[perms[g][y]]);
        specs.push_back(std::move(spec));
    }
    FiniteGroup copy = group;
    return SetPartialAction::create(Group::finite(std::move(copy)), std::move(names), std::move(specs));
}

SetPartialAction restrict_global(std::span<const std::size_t> perm, const IndexSet& subset, std::size_t n)
{
    FiniteGroup group = FiniteGroup::cyclic(n);
    const std::size_t m = perm.size();
    std::vector<std::vector<std::size_t>> powers(n, std::vector<std::size_t>(m));
    for (std::size_t y = 0; y < m; ++y)
        powers[0][y] = y;
    for (std::size_t k = 1; k < n; ++k)
        for (std::size_t y = 0; y < m; ++y) {
            if (perm[y] >= m)
                throw std::invalid_argument("not a permutation");
            powers[k][y] = perm[powers[k - 1][y]];
        }
    for (std::size_t y = 0; y < m; ++y)
        if (perm[powers[n - 1][y]] != y)
            throw std::invalid_argument("permutation order does not divide " + std::to_string(n));
    return restrict_global(group, powers, subset);
}

// ---------------------------------------------------------------------------

IndexSet invariant_closure(const SetPartialAction& a, const IndexSet& s)
{
    const std::size_t n = a.carrier_size();
    std::vector<bool> in(n, false);
    std::deque<std::size_t> work;
    for (auto x : s) {
        if (x >= n)
            throw std::invalid_argument("subset point outside the carrier");
        if (!in[x]) {
            in[x] = true;
            work.push_back(x);
        }
    }
    while (!work.empty()) {
        std::size_t x = work.front();
        work.pop_front();
        for (const auto& c : a.components()) {
            std::size_t y = c.forward[x];
            if (y != npos && !in[y]) {
                in[y] = true;
                work.push_back(y);
            }
        }
    }
    IndexSet out;
    for (std::size_t x = 0; x < n; ++x)
        if (in[x])
            out.push_back(x);
    return out;
}

std::optional<IndexSet> proper_invariant_subset(const SetPartialAction& a)
{
    std::optional<IndexSet> best;
    for (std::size_t x = 0; x < a.carrier_size(); ++x) {
        IndexSet c = invariant_closure(a, {x});
        if (c.size() < a.carrier_size() && (!best || c.size() < best->size()))
            best = std::move(c);
    }
    return best;
}

bool is_G_simple(const SetPartialAction& a) { return !proper_invariant_subset(a).has_value(); }

// ---------------------------------------------------------------------------

AlgebraPartialAction::AlgebraPartialAction(SetPartialAction base, PrimeField field)
    : base_(std::move(base)), field_(field)
{
}

Vector AlgebraPartialAction::unit(const GroupElement& t) const
{
    Vector u(base_.carrier_size());
    if (const auto* c = base_.find(t))
        for (std::size_t x = 0; x < u.dim(); ++x)
            if (c->in_range[x])
                u[x] = 1;
    return u;
}

bool AlgebraPartialAction::in_ideal(const GroupElement& t, const Vector& f) const
{
    if (f.dim() != base_.carrier_size())
        return false;
    const auto* c = base_.find(t);
    for (std::size_t x = 0; x < f.dim(); ++x)
        if (f[x] != 0 && (!c || !c->in_range[x]))
            return false;
    return true;
}

Vector AlgebraPartialAction::apply(const GroupElement& t, const Vector& f) const
{
    const GroupElement ti = base_.group().inverse(t);
    if (!in_ideal(ti, f))
        throw std::invalid_argument("alpha_" + base_.group().format(t) + " applied outside its domain ideal");
    Vector out(f.dim());
    const auto* c = base_.find(t);
    const auto* back = base_.find(ti);
    if (!c || !back)
        return out;
    for (std::size_t y = 0; y < f.dim(); ++y)
        if (c->in_range[y])
            out[y] = f[back->forward[y]];
    return out;
}

Vector pointwise_product(const PrimeField& field, const Vector& f, const Vector& g)
{
    if (f.dim() != g.dim())
        throw std::invalid_argument("dimension mismatch in pointwise product");
    Vector out(f.dim());
    for (std::size_t x = 0; x < f.dim(); ++x)
        out[x] = field.mul(f[x], g[x]);
    return out;
}

} // namespace pskew
