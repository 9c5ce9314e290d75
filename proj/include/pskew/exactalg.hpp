#pragma once

// Exact linear algebra over prime fields.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace pskew {

using Scalar = std::uint32_t;

/// The prime field F_p, 2 <= p < 2^16. Elements are canonical residues in [0, p).
class PrimeField {
public:
    explicit PrimeField(std::uint32_t p);

    std::uint32_t modulus() const noexcept { return p_; }

    Scalar add(Scalar a, Scalar b) const noexcept { Scalar s = a + b; return s >= p_ ? s - p_ : s; }
    Scalar sub(Scalar a, Scalar b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    Scalar neg(Scalar a) const noexcept { return a == 0 ? 0 : p_ - a; }
    Scalar mul(Scalar a, Scalar b) const noexcept { return static_cast<Scalar>((std::uint64_t{a} * b) % p_); }
    Scalar inv(Scalar a) const;
    Scalar reduce(long long value) const noexcept;

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    std::uint32_t p_;
};

bool is_prime(std::uint32_t n) noexcept;

class Vector {
public:
    Vector() = default;
    explicit Vector(std::size_t dim) : coords_(dim, 0) {}
    explicit Vector(std::vector<Scalar> coords) : coords_(std::move(coords)) {}
    Vector(std::initializer_list<Scalar> coords) : coords_(coords) {}

    static Vector unit(std::size_t dim, std::size_t i) { Vector v(dim); v.coords_[i] = 1; return v; }

    std::size_t dim() const noexcept { return coords_.size(); }
    Scalar operator[](std::size_t i) const { return coords_[i]; }
    Scalar& operator[](std::size_t i) { return coords_[i]; }
    std::span<const Scalar> coords() const noexcept { return coords_; }
    bool is_zero() const noexcept;
    /// Index of the first nonzero coordinate, or dim() for the zero vector.
    std::size_t leading_index() const noexcept;

    friend bool operator==(const Vector&, const Vector&) = default;
    friend auto operator<=>(const Vector&, const Vector&) = default;

private:
    std::vector<Scalar> coords_;
};

Vector add(const PrimeField& f, const Vector& a, const Vector& b);
Vector sub(const PrimeField& f, const Vector& a, const Vector& b);
Vector scale(const PrimeField& f, Scalar c, const Vector& a);
/// a += c * b
void axpy(const PrimeField& f, Vector& a, Scalar c, const Vector& b);

/// A subspace of F_p^n stored by its reduced row-echelon basis, so equal
/// subspaces have identical representations.
class Subspace {
public:
    Subspace(const PrimeField& field, std::size_t ambient_dim);

    static Subspace span(const PrimeField& field, std::size_t ambient_dim, std::span<const Vector> vectors);
    static Subspace whole(const PrimeField& field, std::size_t ambient_dim);
    /// span{e_i : i in indices}
    static Subspace coordinate(const PrimeField& field, std::size_t ambient_dim, std::span<const std::size_t> indices);

    const PrimeField& field() const noexcept { return field_; }
    std::size_t ambient_dim() const noexcept { return dim_; }
    std::size_t rank() const noexcept { return basis_.size(); }
    bool is_zero() const noexcept { return basis_.empty(); }
    bool is_whole() const noexcept { return basis_.size() == dim_; }
    const std::vector<Vector>& basis() const noexcept { return basis_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    bool contains(const Vector& v) const;
    /// Adds v to the span in place; returns true iff the rank grew.
    bool insert(const Vector& v);

    friend bool operator==(const Subspace& a, const Subspace& b)
    {
        return a.field_ == b.field_ && a.dim_ == b.dim_ && a.basis_ == b.basis_;
    }

private:
    Vector reduced(const Vector& v) const;
    void check_dim(const Vector& v) const;

    PrimeField field_;
    std::size_t dim_;
    std::vector<Vector> basis_;
    std::vector<std::size_t> pivots_;
};

struct SpanInsertResult {
    Subspace space;
    bool grew;
};

SpanInsertResult span_insert(const Subspace& s, const Vector& v);
Subspace intersect(const Subspace& s, const Subspace& t);
Subspace subspace_sum(const Subspace& s, const Subspace& t);
bool contains(const Subspace& s, const Vector& v);

/// Null space {x : rows * x = 0} of the matrix whose rows are given.
Subspace kernel(const PrimeField& field, std::size_t ncols, std::span<const Vector> rows);

/// Incremental echelon basis (not reduced) used in hot loops such as ideal
/// closure. Rows are indexed by pivot column for O(rank * n) reduction.
class EchelonBuilder {
public:
    EchelonBuilder(const PrimeField& field, std::size_t ambient_dim);

    std::size_t rank() const noexcept { return rank_; }
    bool full() const noexcept { return rank_ == dim_; }
    /// Reduces v against the basis in place; v is zero afterwards iff it was in the span.
    void reduce(Vector& v) const;
    /// Returns true iff v was independent of the current basis.
    bool insert(Vector v);
    Subspace to_subspace() const;

private:
    PrimeField field_;
    std::size_t dim_;
    std::size_t rank_ = 0;
    std::vector<Vector> by_pivot_;
    std::vector<bool> has_pivot_;
};

} // namespace pskew
