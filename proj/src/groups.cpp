#include "pskew/groups.hpp"

#include <stdexcept>

namespace pskew {

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<std::size_t>> mul)
{
    const std::size_t n = mul.size();
    if (n == 0)
        throw std::invalid_argument("group table is empty");
    for (const auto& row : mul) {
        if (row.size() != n)
            throw std::invalid_argument("group table is not square");
        for (auto v : row)
            if (v >= n)
                throw std::invalid_argument("group table entry out of range");
    }
    for (std::size_t a = 0; a < n; ++a)
        if (mul[0][a] != a || mul[a][0] != a)
            throw std::invalid_argument("index 0 is not a two-sided identity");
    std::vector<std::size_t> inv(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b)
            if (mul[a][b] == 0 && mul[b][a] == 0) {
                inv[a] = b;
                break;
            }
        if (inv[a] == n)
            throw std::invalid_argument("element " + std::to_string(a) + " has no two-sided inverse");
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
                    throw std::invalid_argument("group table is not associative at (" + std::to_string(a) + "," +
                                                std::to_string(b) + "," + std::to_string(c) + ")");
    FiniteGroup g;
    g.mul_ = std::move(mul);
    g.inv_ = std::move(inv);
    return g;
}

FiniteGroup FiniteGroup::cyclic(std::size_t n)
{
    if (n == 0)
        throw std::invalid_argument("cyclic group order must be positive");
    FiniteGroup g;
    g.mul_.assign(n, std::vector<std::size_t>(n));
    g.inv_.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b)
            g.mul_[a][b] = (a + b) % n;
        g.inv_[a] = (n - a) % n;
    }
    g.cyclic_ = true;
    return g;
}

// ---------------------------------------------------------------------------

FreeWord::FreeWord(std::vector<Letter> letters)
{
    letters_.reserve(letters.size());
    for (const auto& l : letters) {
        if (l.sign != 1 && l.sign != -1)
            throw std::invalid_argument("letter sign must be +1 or -1");
        if (!letters_.empty() && letters_.back().symbol == l.symbol && letters_.back().sign == -l.sign)
            letters_.pop_back();
        else
            letters_.push_back(l);
    }
}

FreeWord FreeWord::positive(const std::vector<std::size_t>& symbols)
{
    std::vector<Letter> letters;
    letters.reserve(symbols.size());
    for (auto s : symbols)
        letters.push_back({static_cast<std::uint32_t>(s), +1});
    return FreeWord(std::move(letters));
}

FreeWord FreeWord::inverse() const
{
    FreeWord out;
    out.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        out.letters_.push_back({it->symbol, -it->sign});
    return out;
}

FreeWord operator*(const FreeWord& u, const FreeWord& v)
{
    // Only the junction can cancel because both factors are reduced.
    std::size_t cancel = 0;
    const auto& a = u.letters_;
    const auto& b = v.letters_;
    while (cancel < a.size() && cancel < b.size()) {
        const Letter& x = a[a.size() - 1 - cancel];
        const Letter& y = b[cancel];
        if (x.symbol != y.symbol || x.sign != -y.sign)
            break;
        ++cancel;
    }
    FreeWord out;
    out.letters_.reserve(a.size() + b.size() - 2 * cancel);
    out.letters_.insert(out.letters_.end(), a.begin(), a.end() - static_cast<std::ptrdiff_t>(cancel));
    out.letters_.insert(out.letters_.end(), b.begin() + static_cast<std::ptrdiff_t>(cancel), b.end());
    return out;
}

FreeWord word_multiply(const FreeWord& u, const FreeWord& v) { return u * v; }

// ---------------------------------------------------------------------------

std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b)
{
    if (auto c = a.value_.index() <=> b.value_.index(); c != 0)
        return c;
    if (a.is_index())
        return a.index() <=> b.index();
    return a.word() <=> b.word();
}

std::size_t GroupElement::hash() const noexcept
{
    if (is_index())
        return std::hash<std::size_t>{}(index());
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (const auto& l : word().letters())
        h = (h ^ (l.symbol * 2u + (l.sign > 0 ? 1u : 0u))) * 0x100000001b3ull;
    return h;
}

Group Group::finite(FiniteGroup g)
{
    Group out;
    out.finite_ = std::make_shared<const FiniteGroup>(std::move(g));
    return out;
}

Group Group::free(std::vector<std::string> alphabet)
{
    Group out;
    out.alphabet_ = std::make_shared<const std::vector<std::string>>(std::move(alphabet));
    return out;
}

GroupElement Group::identity() const
{
    if (finite_)
        return GroupElement(std::size_t{0});
    return GroupElement(FreeWord{});
}

GroupElement Group::multiply(const GroupElement& a, const GroupElement& b) const
{
    if (finite_)
        return GroupElement(finite_->multiply(a.index(), b.index()));
    return GroupElement(a.word() * b.word());
}

GroupElement Group::inverse(const GroupElement& a) const
{
    if (finite_)
        return GroupElement(finite_->inverse(a.index()));
    return GroupElement(a.word().inverse());
}

bool Group::contains(const GroupElement& a) const
{
    if (finite_)
        return a.is_index() && a.index() < finite_->order();
    if (a.is_index())
        return false;
    for (const auto& l : a.word().letters())
        if (l.symbol >= alphabet_->size())
            return false;
    return true;
}

std::string Group::format(const GroupElement& a) const
{
    if (finite_)
        return std::to_string(a.index());
    if (a.word().is_identity())
        return "1";
    std::string out;
    for (const auto& l : a.word().letters()) {
        if (!out.empty())
            out += '*';
        out += (*alphabet_)[l.symbol];
        if (l.sign < 0)
            out += "^-1";
    }
    return out;
}

} // namespace pskew
