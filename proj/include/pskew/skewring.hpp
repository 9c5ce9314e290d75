#pragma once

// The partial skew group ring R_0 ⋊_alpha G for R_0 = K^X, with arithmetic,
// projections, centralizers, ideal closure, and exhaustive ideal oracles.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pskew/exactalg.hpp"
#include "pskew/paction.hpp"

namespace pskew {

/// An element sum_t a_t delta_t, stored as coefficients over the ring's
/// coordinate index (t, x) with x in X_t.
class SkewElement {
public:
    SkewElement() = default;
    explicit SkewElement(Vector coeffs) : coeffs_(std::move(coeffs)) {}

    const Vector& coeffs() const noexcept { return coeffs_; }
    Vector& coeffs() noexcept { return coeffs_; }
    std::size_t dim() const noexcept { return coeffs_.dim(); }
    bool is_zero() const noexcept { return coeffs_.is_zero(); }

    friend bool operator==(const SkewElement&, const SkewElement&) = default;

private:
    Vector coeffs_;
};

class SkewRing {
public:
    /// One coordinate of the flattened basis: the function 1_x in D_t at delta_t.
    struct Coordinate {
        std::size_t component; // index into action().base().components()
        std::size_t point;
    };

    /// Validates the partial-action axioms and builds the structure constants
    /// from the multiplication rule. Throws std::invalid_argument on invalid
    /// actions and std::logic_error if a product leaves the coordinate span.
    explicit SkewRing(AlgebraPartialAction action);

    const AlgebraPartialAction& action() const noexcept { return action_; }
    const SetPartialAction& base() const noexcept { return action_.base(); }
    const PrimeField& field() const noexcept { return action_.field(); }
    const Group& group() const noexcept { return action_.base().group(); }

    /// N = sum_t |X_t|
    std::size_t dimension() const noexcept { return coords_.size(); }
    const std::vector<Coordinate>& coordinates() const noexcept { return coords_; }
    /// Coordinate of 1_x delta_t, or npos.
    std::size_t coordinate_of(const GroupElement& t, std::size_t x) const;
    /// Coordinates of the R_0 delta_0 component.
    std::vector<std::size_t> identity_coordinates() const;

    SkewElement zero() const { return SkewElement(Vector(dimension())); }
    SkewElement one() const;
    SkewElement basis(std::size_t i) const { return SkewElement(Vector::unit(dimension(), i)); }
    /// f delta_t. Throws if f is not in D_t.
    SkewElement homogeneous(const GroupElement& t, const Vector& f) const;

    SkewElement add(const SkewElement& a, const SkewElement& b) const;
    SkewElement sub(const SkewElement& a, const SkewElement& b) const;
    SkewElement scale(Scalar c, const SkewElement& a) const;

    /// (a_t delta_t)(b_s delta_s) = alpha_t(alpha_{t^-1}(a_t) b_s) delta_{ts}, extended bilinearly.
    SkewElement multiply(const SkewElement& a, const SkewElement& b) const;
    /// Same product through the precomputed structure constants.
    SkewElement multiply_fast(const SkewElement& a, const SkewElement& b) const;
    /// Product of basis elements i and j: a coordinate index, or npos for zero.
    std::size_t basis_product(std::size_t i, std::size_t j) const { return table_[i * coords_.size() + j]; }

    /// P_g: the g-component as a function on X (zero outside X_g).
    Vector project(const SkewElement& a, const GroupElement& g) const;
    /// epsilon: the sum of all components, as a function on X.
    Vector augment(const SkewElement& a) const;
    /// {t : a_t != 0}
    std::vector<GroupElement> support(const SkewElement& a) const;

    Subspace r0_subspace() const;
    Subspace whole() const { return Subspace::whole(field(), dimension()); }

    /// Sparse images of basis vectors under left/right multiplication by a
    /// generating set ({1_x delta_0} and {1_{X_t} delta_t}) of the ring.
    struct SparseMap {
        std::vector<std::vector<std::pair<std::size_t, Scalar>>> images;
    };
    const std::vector<SparseMap>& left_generator_maps() const noexcept { return left_maps_; }
    const std::vector<SparseMap>& right_generator_maps() const noexcept { return right_maps_; }

    std::string format(const SkewElement& a) const;

private:
    Vector combine(const Vector& a_t, const GroupElement& t, const Vector& b_s) const;
    void build_generator_maps();

    AlgebraPartialAction action_;
    std::vector<Coordinate> coords_;
    std::vector<std::size_t> offsets_;
    std::vector<std::vector<std::size_t>> coord_index_; // [component][x]
    std::vector<std::size_t> table_;
    std::vector<SparseMap> left_maps_;
    std::vector<SparseMap> right_maps_;
};

bool verify_associativity(const SkewRing& r);

/// C_R(R_0 delta_0) as a subspace of the coordinate space.
Subspace centralizer_of_r0(const SkewRing& r);
bool is_maximal_commutative(const SkewRing& r);

/// When R_0 delta_0 is not maximal commutative: the element
/// a_g delta_0 - a_g delta_g for a centralizing a_g delta_g with g != 0.
/// Its ideal is nonzero and meets R_0 delta_0 trivially.
std::optional<SkewElement> intersection_failure_generator(const SkewRing& r);

/// Least subspace containing a that is closed under multiplication by the ring
/// on both sides.
Subspace ideal_generated(const SkewRing& r, const SkewElement& a);

enum class Verdict { yes, no, skipped };

std::string to_string(Verdict v);
inline Verdict verdict_of(bool b) { return b ? Verdict::yes : Verdict::no; }

struct OracleOptions {
    /// Enumeration is allowed while p^N <= 2^budget_log2.
    unsigned budget_log2 = 16;
};

struct OracleOutcome {
    Verdict verdict = Verdict::skipped;
    std::optional<SkewElement> witness; // generator of an offending principal ideal
    std::string reason;                 // set when skipped
    std::uint64_t generators = 0;       // principal ideals examined
};

bool oracle_feasible(const SkewRing& r, const OracleOptions& opts);

/// Exhaustive: every nonzero element generates the whole ring.
OracleOutcome is_simple_oracle(const SkewRing& r, const OracleOptions& opts = {});
/// Exhaustive: every nonzero principal ideal meets R_0 delta_0 nontrivially.
OracleOutcome has_ideal_intersection_property_oracle(const SkewRing& r, const OracleOptions& opts = {});

struct PrincipalIdealSurvey {
    OracleOutcome simple;
    OracleOutcome intersection_property;
};
/// Both oracles in a single enumeration pass.
PrincipalIdealSurvey survey_principal_ideals(const SkewRing& r, const OracleOptions& opts = {});

/// Agreement between a structural criterion and an exhaustive oracle.
struct CriterionCheck {
    std::string name;
    Verdict criterion = Verdict::skipped;
    Verdict oracle = Verdict::skipped;
    std::string reason;
    std::optional<SkewElement> witness;

    bool skipped() const noexcept { return oracle == Verdict::skipped || criterion == Verdict::skipped; }
    bool agree() const noexcept { return skipped() || criterion == oracle; }
};

/// R_0 delta_0 maximal commutative  <=>  ideal intersection property.
CriterionCheck check_commutativity_intersection(const SkewRing& r, const OracleOptions& opts = {});
/// Simple  <=>  R_0 is G-simple and R_0 delta_0 is maximal commutative.
CriterionCheck check_simplicity_criterion(const SkewRing& r, const OracleOptions& opts = {});
/// Both checks sharing one enumeration pass.
std::pair<CriterionCheck, CriterionCheck> check_both_criteria(const SkewRing& r, const OracleOptions& opts = {});

} // namespace pskew
