#include "pskew/exactalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace pskew {

bool is_prime(std::uint32_t n) noexcept
{
    if (n < 2)
        return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p)
{
    if (p < 2 || p >= (1u << 16))
        throw std::invalid_argument("field modulus " + std::to_string(p) + " outside [2, 65536)");
    if (!is_prime(p))
        throw std::invalid_argument("field modulus " + std::to_string(p) + " is not prime");
}

Scalar PrimeField::inv(Scalar a) const
{
    if (a % p_ == 0)
        throw std::domain_error("inverse of zero in F_" + std::to_string(p_));
    // extended Euclid on (a, p)
    long long r0 = p_, r1 = a, t0 = 0, t1 = 1;
    while (r1 != 0) {
        long long q = r0 / r1;
        long long r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        long long t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    return reduce(t0);
}

Scalar PrimeField::reduce(long long value) const noexcept
{
    long long m = value % static_cast<long long>(p_);
    if (m < 0)
        m += p_;
    return static_cast<Scalar>(m);
}

bool Vector::is_zero() const noexcept
{
    return std::all_of(coords_.begin(), coords_.end(), [](Scalar c) { return c == 0; });
}

std::size_t Vector::leading_index() const noexcept
{
    for (std::size_t i = 0; i < coords_.size(); ++i)
        if (coords_[i] != 0)
            return i;
    return coords_.size();
}

namespace {

void require_same_dim(std::size_t a, std::size_t b)
{
    if (a != b)
        throw std::invalid_argument("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

} // namespace

Vector add(const PrimeField& f, const Vector& a, const Vector& b)
{
    require_same_dim(a.dim(), b.dim());
    Vector out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        out[i] = f.add(a[i], b[i]);
    return out;
}

Vector sub(const PrimeField& f, const Vector& a, const Vector& b)
{
    require_same_dim(a.dim(), b.dim());
    Vector out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        out[i] = f.sub(a[i], b[i]);
    return out;
}

Vector scale(const PrimeField& f, Scalar c, const Vector& a)
{
    Vector out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        out[i] = f.mul(c, a[i]);
    return out;
}

void axpy(const PrimeField& f, Vector& a, Scalar c, const Vector& b)
{
    require_same_dim(a.dim(), b.dim());
    if (c == 0)
        return;
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (b[i] != 0)
            a[i] = f.add(a[i], f.mul(c, b[i]));
}

// ---------------------------------------------------------------------------

Subspace::Subspace(const PrimeField& field, std::size_t ambient_dim) : field_(field), dim_(ambient_dim) {}

Subspace Subspace::span(const PrimeField& field, std::size_t ambient_dim, std::span<const Vector> vectors)
{
    Subspace s(field, ambient_dim);
    for (const auto& v : vectors)
        s.insert(v);
    return s;
}

Subspace Subspace::whole(const PrimeField& field, std::size_t ambient_dim)
{
    Subspace s(field, ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i) {
        s.basis_.push_back(Vector::unit(ambient_dim, i));
        s.pivots_.push_back(i);
    }
    return s;
}

Subspace Subspace::coordinate(const PrimeField& field, std::size_t ambient_dim, std::span<const std::size_t> indices)
{
    Subspace s(field, ambient_dim);
    for (auto i : indices) {
        if (i >= ambient_dim)
            throw std::invalid_argument("coordinate index out of range");
        s.insert(Vector::unit(ambient_dim, i));
    }
    return s;
}

void Subspace::check_dim(const Vector& v) const { require_same_dim(v.dim(), dim_); }

Vector Subspace::reduced(const Vector& v) const
{
    Vector r = v;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
        Scalar c = r[pivots_[k]];
        if (c != 0)
            axpy(field_, r, field_.neg(c), basis_[k]);
    }
    return r;
}

bool Subspace::contains(const Vector& v) const
{
    check_dim(v);
    return reduced(v).is_zero();
}

bool Subspace::insert(const Vector& v)
{
    check_dim(v);
    Vector r = reduced(v);
    std::size_t pivot = r.leading_index();
    if (pivot == dim_)
        return false;
    r = scale(field_, field_.inv(r[pivot]), r);
    // clear the new pivot column from existing rows
    for (auto& row : basis_) {
        Scalar c = row[pivot];
        if (c != 0)
            axpy(field_, row, field_.neg(c), r);
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, pivot);
    basis_.insert(basis_.begin() + pos, std::move(r));
    return true;
}

SpanInsertResult span_insert(const Subspace& s, const Vector& v)
{
    Subspace out = s;
    bool grew = out.insert(v);
    return {std::move(out), grew};
}

bool contains(const Subspace& s, const Vector& v) { return s.contains(v); }

Subspace subspace_sum(const Subspace& s, const Subspace& t)
{
    require_same_dim(s.ambient_dim(), t.ambient_dim());
    if (!(s.field() == t.field()))
        throw std::invalid_argument("subspaces over different fields");
    Subspace out = s;
    for (const auto& v : t.basis())
        out.insert(v);
    return out;
}

// Zassenhaus: echelonize rows (s | s) and (t | 0); rows with a zero left half
// carry a basis of the intersection in their right half.
Subspace intersect(const Subspace& s, const Subspace& t)
{
    require_same_dim(s.ambient_dim(), t.ambient_dim());
    if (!(s.field() == t.field()))
        throw std::invalid_argument("subspaces over different fields");
    const auto& f = s.field();
    const std::size_t n = s.ambient_dim();
    Subspace joint(f, 2 * n);
    for (const auto& v : s.basis()) {
        Vector row(2 * n);
        for (std::size_t i = 0; i < n; ++i)
            row[i] = row[n + i] = v[i];
        joint.insert(row);
    }
    for (const auto& v : t.basis()) {
        Vector row(2 * n);
        for (std::size_t i = 0; i < n; ++i)
            row[i] = v[i];
        joint.insert(row);
    }
    Subspace out(f, n);
    for (std::size_t k = 0; k < joint.rank(); ++k) {
        if (joint.pivots()[k] < n)
            continue;
        const auto& row = joint.basis()[k];
        Vector w(n);
        for (std::size_t i = 0; i < n; ++i)
            w[i] = row[n + i];
        out.insert(w);
    }
    return out;
}

Subspace kernel(const PrimeField& field, std::size_t ncols, std::span<const Vector> rows)
{
    Subspace rowspace(field, ncols);
    for (const auto& r : rows)
        rowspace.insert(r);
    // Free columns parametrize the null space of the RREF.
    std::vector<bool> is_pivot(ncols, false);
    for (auto p : rowspace.pivots())
        is_pivot[p] = true;
    Subspace out(field, ncols);
    for (std::size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free])
            continue;
        Vector x(ncols);
        x[free] = 1;
        for (std::size_t k = 0; k < rowspace.rank(); ++k)
            x[rowspace.pivots()[k]] = field.neg(rowspace.basis()[k][free]);
        out.insert(x);
    }
    return out;
}

// ---------------------------------------------------------------------------

EchelonBuilder::EchelonBuilder(const PrimeField& field, std::size_t ambient_dim)
    : field_(field), dim_(ambient_dim), by_pivot_(ambient_dim), has_pivot_(ambient_dim, false)
{
}

void EchelonBuilder::reduce(Vector& v) const
{
    require_same_dim(v.dim(), dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        Scalar c = v[i];
        if (c == 0 || !has_pivot_[i])
            continue;
        const Vector& row = by_pivot_[i];
        Scalar m = field_.neg(c);
        for (std::size_t j = i; j < dim_; ++j)
            if (row[j] != 0)
                v[j] = field_.add(v[j], field_.mul(m, row[j]));
    }
}

bool EchelonBuilder::insert(Vector v)
{
    reduce(v);
    std::size_t pivot = v.leading_index();
    if (pivot == dim_)
        return false;
    Scalar s = field_.inv(v[pivot]);
    for (std::size_t j = pivot; j < dim_; ++j)
        v[j] = field_.mul(s, v[j]);
    by_pivot_[pivot] = std::move(v);
    has_pivot_[pivot] = true;
    ++rank_;
    return true;
}

Subspace EchelonBuilder::to_subspace() const
{
    Subspace s(field_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        if (has_pivot_[i])
            s.insert(by_pivot_[i]);
    return s;
}

} // namespace pskew
