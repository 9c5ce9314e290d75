#include "pskew/leavitt.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace pskew {

Graph Graph::create(std::vector<std::string> vertices, std::vector<Edge> edges)
{
    std::set<std::string> names;
    for (const auto& v : vertices)
        if (!names.insert(v).second)
            throw std::invalid_argument("duplicate graph name '" + v + "'");
    for (const auto& e : edges) {
        if (!names.insert(e.name).second)
            throw std::invalid_argument("duplicate graph name '" + e.name + "'");
        if (e.source >= vertices.size() || e.range >= vertices.size())
            throw std::invalid_argument("edge '" + e.name + "' references an unknown vertex");
    }
    Graph g;
    g.vertices_ = std::move(vertices);
    g.edges_ = std::move(edges);
    g.out_.resize(g.vertices_.size());
    for (std::size_t i = 0; i < g.edges_.size(); ++i)
        g.out_[g.edges_[i].source].push_back(i);
    return g;
}

std::optional<std::size_t> Graph::find_vertex(const std::string& name) const
{
    auto it = std::find(vertices_.begin(), vertices_.end(), name);
    if (it == vertices_.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - vertices_.begin());
}

bool Graph::is_acyclic() const
{
    // Kahn's algorithm
    std::vector<std::size_t> indeg(vertex_count(), 0);
    for (const auto& e : edges_)
        ++indeg[e.range];
    std::vector<std::size_t> ready;
    for (std::size_t v = 0; v < vertex_count(); ++v)
        if (indeg[v] == 0)
            ready.push_back(v);
    std::size_t seen = 0;
    while (!ready.empty()) {
        std::size_t v = ready.back();
        ready.pop_back();
        ++seen;
        for (auto e : out_[v])
            if (--indeg[edges_[e].range] == 0)
                ready.push_back(edges_[e].range);
    }
    return seen == vertex_count();
}

// ---------------------------------------------------------------------------

// An exitless closed path visits only vertices of out-degree one, so it is a
// cycle of the functional graph v -> r(unique edge out of v).
ConditionL satisfies_condition_L(const Graph& g)
{
    const std::size_t n = g.vertex_count();
    std::vector<int> state(n, 0); // 0 unvisited, 1 on current walk, 2 done
    for (std::size_t start = 0; start < n; ++start) {
        if (state[start] != 0)
            continue;
        std::vector<std::size_t> walk;
        std::size_t v = start;
        while (state[v] == 0 && g.out_edges(v).size() == 1) {
            state[v] = 1;
            walk.push_back(v);
            v = g.edges()[g.out_edges(v).front()].range;
        }
        if (state[v] == 1) {
            ConditionL out;
            out.holds = false;
            auto it = std::find(walk.begin(), walk.end(), v);
            for (; it != walk.end(); ++it)
                out.exitless_cycle.push_back(g.out_edges(*it).front());
            return out;
        }
        for (auto w : walk)
            state[w] = 2;
        state[v] = 2;
    }
    return {};
}

bool is_hereditary(const Graph& g, const IndexSet& h)
{
    std::vector<bool> in(g.vertex_count(), false);
    for (auto v : h)
        in.at(v) = true;
    return std::all_of(g.edges().begin(), g.edges().end(),
                       [&](const Graph::Edge& e) { return !in[e.source] || in[e.range]; });
}

bool is_saturated(const Graph& g, const IndexSet& h)
{
    std::vector<bool> in(g.vertex_count(), false);
    for (auto v : h)
        in.at(v) = true;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (in[v] || g.is_sink(v))
            continue;
        bool all = std::all_of(g.out_edges(v).begin(), g.out_edges(v).end(),
                               [&](std::size_t e) { return in[g.edges()[e].range]; });
        if (all)
            return false;
    }
    return true;
}

IndexSet hereditary_saturated_closure(const Graph& g, const IndexSet& s)
{
    std::vector<bool> in(g.vertex_count(), false);
    for (auto v : s)
        in.at(v) = true;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& e : g.edges())
            if (in[e.source] && !in[e.range]) {
                in[e.range] = true;
                changed = true;
            }
        for (std::size_t v = 0; v < g.vertex_count(); ++v) {
            if (in[v] || g.is_sink(v))
                continue;
            if (std::all_of(g.out_edges(v).begin(), g.out_edges(v).end(),
                            [&](std::size_t e) { return in[g.edges()[e].range]; })) {
                in[v] = true;
                changed = true;
            }
        }
    }
    IndexSet out;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (in[v])
            out.push_back(v);
    return out;
}

HereditarySaturated only_trivial_hereditary_saturated(const Graph& g)
{
    HereditarySaturated out;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        IndexSet c = hereditary_saturated_closure(g, {v});
        if (c.size() < g.vertex_count() && (out.trivial_only || c.size() < out.witness.size())) {
            out.trivial_only = false;
            out.witness = std::move(c);
        }
    }
    return out;
}

bool leavitt_is_simple(const Graph& g)
{
    return satisfies_condition_L(g).holds && only_trivial_hereditary_saturated(g).trivial_only;
}

// ---------------------------------------------------------------------------

std::optional<std::size_t> BoundaryAction::point_of(const BoundaryPath& p) const
{
    auto it = std::lower_bound(paths.begin(), paths.end(), p);
    if (it == paths.end() || !(*it == p))
        return std::nullopt;
    return static_cast<std::size_t>(it - paths.begin());
}

IndexSet BoundaryAction::vertex_set(std::size_t v) const
{
    IndexSet out;
    for (std::size_t i = 0; i < paths.size(); ++i)
        if (paths[i].source(graph) == v)
            out.push_back(i);
    return out;
}

namespace {

std::size_t range_of_path(const Graph& g, const std::vector<std::size_t>& path)
{
    return g.edges()[path.back()].range;
}

bool starts_with(const std::vector<std::size_t>& xs, const std::vector<std::size_t>& prefix)
{
    return xs.size() >= prefix.size() && std::equal(prefix.begin(), prefix.end(), xs.begin());
}

// prefix + xi with the first `drop` edges of xi removed; a lone sink when empty.
BoundaryPath splice(const Graph& g, const std::vector<std::size_t>& prefix, const BoundaryPath& xi, std::size_t drop)
{
    BoundaryPath out;
    out.edges = prefix;
    out.edges.insert(out.edges.end(), xi.edges.begin() + static_cast<std::ptrdiff_t>(drop), xi.edges.end());
    if (out.edges.empty())
        out.vertex = xi.edges.empty() ? xi.vertex : g.edges()[xi.edges.back()].range;
    else
        out.vertex = g.edges()[out.edges.front()].source;
    return out;
}

} // namespace

BoundaryAction build_boundary_action(const Graph& g)
{
    if (!g.is_acyclic())
        throw std::invalid_argument("boundary-path construction needs an acyclic graph");

    // W: every path of length >= 1 (finite because the graph is acyclic).
    std::vector<std::vector<std::size_t>> W;
    std::function<void(std::vector<std::size_t>&)> extend = [&](std::vector<std::size_t>& path) {
        W.push_back(path);
        for (auto e : g.out_edges(range_of_path(g, path))) {
            path.push_back(e);
            extend(path);
            path.pop_back();
        }
    };
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        std::vector<std::size_t> path{e};
        extend(path);
    }
    std::sort(W.begin(), W.end());

    std::vector<BoundaryPath> X;
    for (const auto& w : W)
        if (g.is_sink(range_of_path(g, w)))
            X.push_back({w, g.edges()[w.front()].source});
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (g.is_sink(v))
            X.push_back({{}, v});
    std::sort(X.begin(), X.end());

    BoundaryAction out{g, X, W, SetPartialAction{}};
    std::vector<std::string> names;
    for (const auto& xi : X) {
        if (xi.edges.empty()) {
            names.push_back(g.vertices()[xi.vertex]);
            continue;
        }
        std::string s;
        for (auto e : xi.edges)
            s += (s.empty() ? "" : ".") + g.edges()[e].name;
        names.push_back(s);
    }
    auto index = [&](const BoundaryPath& p) {
        auto i = out.point_of(p);
        if (!i)
            throw std::logic_error("boundary path construction produced a point outside X");
        return *i;
    };

    std::vector<ComponentSpec> specs;
    for (const auto& b : W) {
        const std::size_t rb = range_of_path(g, b);
        // theta_b : X_{b^-1} = {xi : s(xi) = r(b)} -> X_b,  xi -> b xi
        ComponentSpec fwd{GroupElement(FreeWord::positive(b)), {}};
        // theta_{b^-1} : X_b -> X_{b^-1},  eta -> eta_{|b|+1}...,  b -> r(b) when r(b) is a sink
        ComponentSpec back{GroupElement(FreeWord::positive(b).inverse()), {}};
        for (std::size_t i = 0; i < X.size(); ++i) {
            if (X[i].source(g) == rb)
                fwd.pairs.emplace_back(i, index(splice(g, b, X[i], 0)));
            if (starts_with(X[i].edges, b))
                back.pairs.emplace_back(i, index(splice(g, {}, X[i], b.size())));
        }
        specs.push_back(std::move(fwd));
        specs.push_back(std::move(back));
    }
    for (const auto& a : W)
        for (const auto& b : W) {
            if (range_of_path(g, a) != range_of_path(g, b) || a.back() == b.back())
                continue; // needs r(a) = r(b) and a b^-1 reduced
            // theta_{ab^-1} : X_{ba^-1} = X_b -> X_{ab^-1} = X_a,  xi -> a xi_{|b|+1}...
            ComponentSpec spec{GroupElement(FreeWord::positive(a) * FreeWord::positive(b).inverse()), {}};
            for (std::size_t i = 0; i < X.size(); ++i)
                if (starts_with(X[i].edges, b))
                    spec.pairs.emplace_back(i, index(splice(g, a, X[i], b.size())));
            specs.push_back(std::move(spec));
        }

    std::vector<std::string> alphabet;
    for (const auto& e : g.edges())
        alphabet.push_back(e.name);
    out.action = SetPartialAction::create(Group::free(std::move(alphabet)), std::move(names), std::move(specs));
    return out;
}

// ---------------------------------------------------------------------------

Vector LeavittRing::vertex_indicator(std::size_t v) const
{
    Vector f(boundary.paths.size());
    for (auto x : boundary.vertex_set(v))
        f[x] = 1;
    return f;
}

LeavittRing build_leavitt_ring(const Graph& g, const PrimeField& field)
{
    BoundaryAction boundary = build_boundary_action(g);
    AlgebraPartialAction alg(boundary.action, field);
    const auto& act = alg.base();
    const Group& G = act.group();
    const std::size_t n = act.carrier_size();

    // D_0 = span{1_p : p != 0} ∪ {1_v} must be all of K^X.
    Subspace d0(field, n);
    for (const auto& c : act.components())
        if (!G.is_identity(c.element))
            d0.insert(alg.unit(c.element));
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        Vector f(n);
        for (auto x : boundary.vertex_set(v))
            f[x] = 1;
        d0.insert(f);
    }
    if (!d0.is_whole())
        throw std::logic_error("indicator functions do not span K^X");

    // alpha_p(1_{p^-1} 1_q) = 1_p 1_{pq}
    for (const auto& cp : act.components()) {
        const GroupElement& p = cp.element;
        const GroupElement pi = G.inverse(p);
        for (const auto& cq : act.components()) {
            const GroupElement& q = cq.element;
            Vector lhs = alg.apply(p, pointwise_product(field, alg.unit(pi), alg.unit(q)));
            Vector rhs = pointwise_product(field, alg.unit(p), alg.unit(G.multiply(p, q)));
            if (!(lhs == rhs))
                throw std::logic_error("alpha_p(1_{p^-1} 1_q) != 1_p 1_{pq} for p=" + G.format(p) +
                                       ", q=" + G.format(q));
        }
    }
    SkewRing ring(std::move(alg));
    return LeavittRing{std::move(boundary), std::move(ring)};
}

// ---------------------------------------------------------------------------

VertexWitness vertex_witness(const LeavittRing& lr, const Vector& x0)
{
    const auto& R = lr.ring;
    const auto& g = lr.boundary.graph;
    const auto& X = lr.boundary.paths;
    const auto& f = R.field();
    const GroupElement zero = R.group().identity();
    if (x0.dim() != X.size())
        throw std::invalid_argument("x0 has wrong dimension");
    if (x0.is_zero())
        throw std::invalid_argument("vertex witness needs a nonzero element of D_0");

    std::size_t v = 0;
    while (pointwise_product(f, lr.vertex_indicator(v), x0).is_zero())
        ++v;

    const SkewElement x0d0 = R.homogeneous(zero, x0);
    VertexWitness out;

    // Returns lambda != 0 with 1_S x0 = lambda 1_S, if x0 is a nonzero constant on S.
    auto constant_on = [&](const IndexSet& S) -> std::optional<Scalar> {
        if (S.empty() || x0[S.front()] == 0)
            return std::nullopt;
        for (auto x : S)
            if (x0[x] != x0[S.front()])
                return std::nullopt;
        return x0[S.front()];
    };

    if (g.is_sink(v)) {
        // 1_v x0 = beta 1_v with beta != 0
        Vector one_v = lr.vertex_indicator(v);
        IndexSet S = lr.boundary.vertex_set(v);
        Scalar beta = *constant_on(S);
        SkewElement prod = R.multiply(R.homogeneous(zero, one_v), x0d0);
        out.vertex = v;
        out.certificate = R.scale(f.inv(beta), prod);
    } else {
        // Longest path from v bounds the search: at that length every X_c is a single point.
        std::size_t longest = 0;
        for (const auto& w : lr.boundary.finite_paths)
            if (g.edges()[w.front()].source == v)
                longest = std::max(longest, w.size());
        bool found = false;
        for (std::size_t m = 1; m <= longest && !found; ++m) {
            // X_v is the disjoint union of X_c over paths c from v with |c| = m,
            // or |c| < m and r(c) a sink.
            for (const auto& c : lr.boundary.finite_paths) {
                if (g.edges()[c.front()].source != v)
                    continue;
                const std::size_t rc = g.edges()[c.back()].range;
                if (!(c.size() == m || (c.size() < m && g.is_sink(rc))))
                    continue;
                IndexSet Xc;
                for (std::size_t x = 0; x < X.size(); ++x)
                    if (X[x].edges.size() >= c.size() && std::equal(c.begin(), c.end(), X[x].edges.begin()))
                        Xc.push_back(x);
                auto lambda = constant_on(Xc);
                if (!lambda)
                    continue;
                const GroupElement cw(FreeWord::positive(c));
                const GroupElement ci(FreeWord::positive(c).inverse());
                Vector one_c(X.size());
                for (auto x : Xc)
                    one_c[x] = 1;
                // 1_c d_0 = lambda^-1 (1_c d_0)(x0 d_0)
                SkewElement onec_d0 = R.scale(f.inv(*lambda), R.multiply(R.homogeneous(zero, one_c), x0d0));
                // 1_{r(c)} d_0 = 1_{c^-1} d_{c^-1} . 1_c d_0 . 1_c d_c
                SkewElement left = R.homogeneous(ci, R.action().unit(ci));
                SkewElement right = R.homogeneous(cw, one_c);
                out.vertex = rc;
                out.path = c;
                out.certificate = R.multiply(R.multiply(left, onec_d0), right);
                found = true;
                break;
            }
        }
        if (!found)
            throw std::logic_error("vertex witness search exhausted all path lengths");
    }

    const SkewElement target = R.homogeneous(zero, lr.vertex_indicator(out.vertex));
    if (!(out.certificate == target))
        throw std::logic_error("constructed certificate differs from 1_v d_0");
    out.confirmed = ideal_generated(R, x0d0).contains(target.coeffs());
    return out;
}

OracleOutcome ck_uniqueness_check(const LeavittRing& lr, const OracleOptions& opts)
{
    const auto& R = lr.ring;
    OracleOutcome out;
    if (!oracle_feasible(R, opts)) {
        out.reason = "p^N = " + std::to_string(R.field().modulus()) + "^" + std::to_string(R.dimension()) +
                     " exceeds the enumeration budget 2^" + std::to_string(opts.budget_log2);
        return out;
    }
    const std::size_t N = R.dimension();
    const std::uint32_t p = R.field().modulus();
    std::vector<Vector> vertex_elems;
    for (std::size_t v = 0; v < lr.boundary.graph.vertex_count(); ++v)
        vertex_elems.push_back(R.homogeneous(R.group().identity(), lr.vertex_indicator(v)).coeffs());

    out.verdict = Verdict::yes;
    for (std::size_t lead = 0; lead < N; ++lead) {
        Vector a(N);
        a[lead] = 1;
        while (true) {
            ++out.generators;
            Subspace ideal = ideal_generated(R, SkewElement(a));
            bool hit = std::any_of(vertex_elems.begin(), vertex_elems.end(),
                                   [&](const Vector& w) { return ideal.contains(w); });
            if (!hit) {
                out.verdict = Verdict::no;
                out.witness = SkewElement(a);
                return out;
            }
            std::size_t k = N;
            bool more = false;
            while (k-- > lead + 1) {
                if (++a[k] < p) {
                    more = true;
                    break;
                }
                a[k] = 0;
            }
            if (!more)
                break;
        }
    }
    return out;
}

} // namespace pskew
