#pragma once

// Finite table groups, free groups on a finite alphabet, and a common
// element/group facade used by partial actions and skew rings.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace pskew {

/// A finite group given by its multiplication table. The identity is index 0.
class FiniteGroup {
public:
    /// Validates the table (closure, identity 0, inverses, associativity).
    static FiniteGroup from_table(std::vector<std::vector<std::size_t>> mul);
    /// Z/nZ with generator 1.
    static FiniteGroup cyclic(std::size_t n);

    std::size_t order() const noexcept { return mul_.size(); }
    std::size_t identity() const noexcept { return 0; }
    std::size_t multiply(std::size_t a, std::size_t b) const { return mul_.at(a).at(b); }
    std::size_t inverse(std::size_t a) const { return inv_.at(a); }
    const std::vector<std::vector<std::size_t>>& table() const noexcept { return mul_; }

    /// Cyclic groups report their order here, 0 for other tables.
    std::size_t cyclic_order() const noexcept { return cyclic_ ? mul_.size() : 0; }

private:
    FiniteGroup() = default;

    std::vector<std::vector<std::size_t>> mul_;
    std::vector<std::size_t> inv_;
    bool cyclic_ = false;
};

struct Letter {
    std::uint32_t symbol;
    int sign; // +1 or -1

    friend bool operator==(const Letter&, const Letter&) = default;
    friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// Reduced word in a free group. Always stored freely reduced.
class FreeWord {
public:
    FreeWord() = default;
    /// Reduces the given letter sequence.
    explicit FreeWord(std::vector<Letter> letters);

    static FreeWord generator(std::uint32_t symbol) { return FreeWord({Letter{symbol, +1}}); }
    /// Positive word a_1 a_2 ... a_k.
    static FreeWord positive(const std::vector<std::size_t>& symbols);

    const std::vector<Letter>& letters() const noexcept { return letters_; }
    std::size_t length() const noexcept { return letters_.size(); }
    bool is_identity() const noexcept { return letters_.empty(); }

    FreeWord inverse() const;
    friend FreeWord operator*(const FreeWord& u, const FreeWord& v);

    friend bool operator==(const FreeWord&, const FreeWord&) = default;
    friend auto operator<=>(const FreeWord& a, const FreeWord& b)
    {
        // shortlex
        if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0)
            return c;
        return a.letters_ <=> b.letters_;
    }

private:
    std::vector<Letter> letters_;
};

FreeWord word_multiply(const FreeWord& u, const FreeWord& v);

/// An element of either group kind: a table index or a reduced word.
class GroupElement {
public:
    GroupElement() : value_(std::size_t{0}) {}
    GroupElement(std::size_t index) : value_(index) {}
    GroupElement(FreeWord word) : value_(std::move(word)) {}

    bool is_index() const noexcept { return std::holds_alternative<std::size_t>(value_); }
    std::size_t index() const { return std::get<std::size_t>(value_); }
    const FreeWord& word() const { return std::get<FreeWord>(value_); }

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
    friend std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b);

    std::size_t hash() const noexcept;

private:
    std::variant<std::size_t, FreeWord> value_;
};

/// Group facade: identity, multiply, invert, and printing for either a finite
/// table group or the free group on a named alphabet.
class Group {
public:
    static Group finite(FiniteGroup g);
    static Group free(std::vector<std::string> alphabet);

    bool is_finite() const noexcept { return static_cast<bool>(finite_); }
    const FiniteGroup& finite_group() const { return *finite_; }
    const std::vector<std::string>& alphabet() const { return *alphabet_; }

    GroupElement identity() const;
    GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
    GroupElement inverse(const GroupElement& a) const;
    bool is_identity(const GroupElement& a) const { return a == identity(); }
    bool contains(const GroupElement& a) const;
    std::string format(const GroupElement& a) const;

private:
    std::shared_ptr<const FiniteGroup> finite_;
    std::shared_ptr<const std::vector<std::string>> alphabet_;
};

} // namespace pskew

template <>
struct std::hash<pskew::GroupElement> {
    std::size_t operator()(const pskew::GroupElement& g) const noexcept { return g.hash(); }
};
