#pragma once

// Leavitt path algebras as partial skew group rings of the free group on the
// edges: graph criteria for simplicity, and for finite acyclic graphs the
// concrete boundary-path partial action and its ring.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pskew/paction.hpp"
#include "pskew/skewring.hpp"

namespace pskew {

class Graph {
public:
    struct Edge {
        std::string name;
        std::size_t source;
        std::size_t range;
    };

    /// Vertex and edge names must be distinct (across both kinds).
    static Graph create(std::vector<std::string> vertices, std::vector<Edge> edges);

    const std::vector<std::string>& vertices() const noexcept { return vertices_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<std::size_t>& out_edges(std::size_t v) const { return out_.at(v); }
    bool is_sink(std::size_t v) const { return out_.at(v).empty(); }
    std::optional<std::size_t> find_vertex(const std::string& name) const;
    bool is_acyclic() const;

private:
    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> out_;
};

struct ConditionL {
    bool holds = true;
    std::vector<std::size_t> exitless_cycle; // edge indices, in path order
};

/// Every closed path has an exit.
ConditionL satisfies_condition_L(const Graph& g);

bool is_hereditary(const Graph& g, const IndexSet& h);
bool is_saturated(const Graph& g, const IndexSet& h);
IndexSet hereditary_saturated_closure(const Graph& g, const IndexSet& s);

struct HereditarySaturated {
    bool trivial_only = true;
    IndexSet witness; // a proper nonempty hereditary saturated set when !trivial_only
};

HereditarySaturated only_trivial_hereditary_saturated(const Graph& g);

/// Condition (L) and no nontrivial hereditary saturated subsets.
bool leavitt_is_simple(const Graph& g);

/// A finite path ending at a sink, or (with no edges) a lone sink vertex.
struct BoundaryPath {
    std::vector<std::size_t> edges;
    std::size_t vertex = 0; // the sink itself when edges is empty

    std::size_t source(const Graph& g) const { return edges.empty() ? vertex : g.edges()[edges.front()].source; }
    friend bool operator==(const BoundaryPath&, const BoundaryPath&) = default;
    friend auto operator<=>(const BoundaryPath&, const BoundaryPath&) = default;
};

struct BoundaryAction {
    Graph graph;
    std::vector<BoundaryPath> paths;         // the carrier X, indexed as in action
    std::vector<std::vector<std::size_t>> finite_paths; // W: all paths of length >= 1
    SetPartialAction action;

    std::optional<std::size_t> point_of(const BoundaryPath& p) const;
    /// 1_v: indicator of {xi : s(xi) = v}.
    IndexSet vertex_set(std::size_t v) const;
    /// The free-group element of a path.
    FreeWord word(const std::vector<std::size_t>& path) const { return FreeWord::positive(path); }
};

/// Throws std::invalid_argument for graphs with a cycle.
BoundaryAction build_boundary_action(const Graph& g);

struct LeavittRing {
    BoundaryAction boundary;
    SkewRing ring;

    Vector vertex_indicator(std::size_t v) const;
};

/// Builds the skew ring after checking that {1_p} ∪ {1_v} spans K^X and that
/// alpha_p(1_{p^-1} 1_q) = 1_p 1_{pq} for all stored p, q. Failures throw
/// std::logic_error.
LeavittRing build_leavitt_ring(const Graph& g, const PrimeField& field);

struct VertexWitness {
    std::size_t vertex = 0;
    std::vector<std::size_t> path; // c with 1_{r(c)} d_0 = 1_{c^-1} d_{c^-1} . 1_c d_0 . 1_c d_c; empty for sinks
    SkewElement certificate;       // the element 1_vertex d_0 obtained from x0 d_0 by ring operations
    bool confirmed = false;        // independent membership check in the principal ideal
};

/// For nonzero x0 in D_0, finds a vertex v with 1_v d_0 in the ideal generated
/// by x0 d_0. Throws std::invalid_argument when x0 = 0.
VertexWitness vertex_witness(const LeavittRing& lr, const Vector& x0);

/// Every nonzero principal ideal contains some 1_v d_0 (exhaustive).
OracleOutcome ck_uniqueness_check(const LeavittRing& lr, const OracleOptions& opts = {});

} // namespace pskew
