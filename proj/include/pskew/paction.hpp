#pragma once

// Set-level partial actions on a finite carrier, their validation, invariant
// subsets, restriction of global actions, and the induced action on K^X.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pskew/exactalg.hpp"
#include "pskew/groups.hpp"

namespace pskew {

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

/// Sorted, duplicate-free list of carrier (or vertex) indices.
using IndexSet = std::vector<std::size_t>;

/// Raw description of one partial bijection: pairs (x, h_t(x)).
struct ComponentSpec {
    GroupElement element;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

/// A partial action of a group on a finite set X. Each stored component t
/// carries the bijection h_t : X_{t^-1} -> X_t; elements without a component
/// have empty domain. The identity component is always present and first.
class SetPartialAction {
public:
    struct Component {
        GroupElement element;
        std::vector<std::size_t> forward; // h_t(x) for x in X_{t^-1}, npos elsewhere
        std::vector<bool> in_range;       // indicator of X_t
        std::size_t size = 0;             // |X_t|
    };

    /// Builds an action from explicit maps. The identity must not be listed;
    /// missing inverse components are filled in from injective maps.
    /// Malformed maps (non-functional, non-injective, duplicated elements) are
    /// recorded as structural issues and surface in validate_axioms.
    /// Throws std::invalid_argument for indices outside the carrier or group.
    static SetPartialAction create(Group group, std::vector<std::string> carrier, std::vector<ComponentSpec> maps);

    const Group& group() const noexcept { return group_; }
    std::size_t carrier_size() const noexcept { return carrier_.size(); }
    const std::vector<std::string>& carrier() const noexcept { return carrier_; }
    const std::vector<Component>& components() const noexcept { return components_; }
    const std::vector<std::string>& structural_issues() const noexcept { return structural_; }

    std::optional<std::size_t> component_index(const GroupElement& t) const;
    const Component* find(const GroupElement& t) const;

    /// X_t (empty when t has no component).
    IndexSet domain(const GroupElement& t) const;
    bool in_domain(const GroupElement& t, std::size_t x) const;
    /// h_t(x), or npos when x is not in X_{t^-1}.
    std::size_t apply(const GroupElement& t, std::size_t x) const;

    /// The maps as ComponentSpecs, identity omitted (round-trips through create).
    std::vector<ComponentSpec> specs() const;

private:
    Group group_;
    std::vector<std::string> carrier_;
    std::vector<Component> components_;
    std::unordered_map<GroupElement, std::size_t> index_;
    std::vector<std::string> structural_;
};

struct AxiomViolation {
    std::string axiom; // "identity", "inverse", "compatibility" or "composition"
    std::optional<GroupElement> s;
    std::optional<GroupElement> t;
    std::optional<std::size_t> witness;
    std::string detail;
};

struct ValidationReport {
    std::vector<std::string> structural;
    std::vector<AxiomViolation> violations;

    bool ok() const noexcept { return structural.empty() && violations.empty(); }
};

ValidationReport validate_axioms(const SetPartialAction& a);

/// Restriction of a global action of a finite group to a subset X of Y.
/// perms[g][y] is the image of y under g. Throws if perms is not an action.
SetPartialAction restrict_global(const FiniteGroup& group, const std::vector<std::vector<std::size_t>>& perms,
                                 const IndexSet& subset);

/// Restriction of the action of Z/nZ generated by perm. Throws unless perm^n = id.
SetPartialAction restrict_global(std::span<const std::size_t> perm, const IndexSet& subset, std::size_t n);

/// Smallest superset S' of S with h_t(S' ∩ X_{t^-1}) ⊆ S' for all t.
IndexSet invariant_closure(const SetPartialAction& a, const IndexSet& s);

/// A proper nonempty invariant subset, if one exists.
std::optional<IndexSet> proper_invariant_subset(const SetPartialAction& a);

/// True iff only ∅ and X are invariant (equivalently K^X is G-simple).
bool is_G_simple(const SetPartialAction& a);

/// The induced action on K^X: D_t = K^{X_t}, alpha_t(f) = f ∘ h_{t^-1}.
class AlgebraPartialAction {
public:
    AlgebraPartialAction(SetPartialAction base, PrimeField field);

    const SetPartialAction& base() const noexcept { return base_; }
    const PrimeField& field() const noexcept { return field_; }
    std::size_t carrier_size() const noexcept { return base_.carrier_size(); }

    /// 1_{X_t}, the unit of D_t.
    Vector unit(const GroupElement& t) const;
    bool in_ideal(const GroupElement& t, const Vector& f) const;
    /// alpha_t : D_{t^-1} -> D_t. Throws if f is not supported in X_{t^-1}.
    Vector apply(const GroupElement& t, const Vector& f) const;

private:
    SetPartialAction base_;
    PrimeField field_;
};

Vector pointwise_product(const PrimeField& field, const Vector& f, const Vector& g);

} // namespace pskew
