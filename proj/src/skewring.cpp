#include "pskew/skewring.hpp"

#include <deque>
#include <sstream>
#include <stdexcept>

namespace pskew {

namespace {

std::string summarize(const ValidationReport& report, const SetPartialAction& a)
{
    if (!report.structural.empty())
        return report.structural.front();
    const auto& v = report.violations.front();
    std::string out = v.axiom + " axiom fails";
    if (v.s)
        out += " for s=" + a.group().format(*v.s);
    if (v.t)
        out += " t=" + a.group().format(*v.t);
    return out + ": " + v.detail;
}

} // namespace

SkewRing::SkewRing(AlgebraPartialAction action) : action_(std::move(action))
{
    const auto& a = action_.base();
    if (auto report = validate_axioms(a); !report.ok())
        throw std::invalid_argument("invalid partial action: " + summarize(report, a));

    const std::size_t n = a.carrier_size();
    const auto& comps = a.components();
    coord_index_.assign(comps.size(), std::vector<std::size_t>(n, npos));
    for (std::size_t c = 0; c < comps.size(); ++c) {
        offsets_.push_back(coords_.size());
        for (std::size_t x = 0; x < n; ++x)
            if (comps[c].in_range[x]) {
                coord_index_[c][x] = coords_.size();
                coords_.push_back({c, x});
            }
    }

    const std::size_t N = coords_.size();
    table_.assign(N * N, npos);
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) {
            SkewElement prod = multiply(basis(i), basis(j));
            std::size_t found = npos;
            for (std::size_t k = 0; k < N; ++k) {
                if (prod.coeffs()[k] == 0)
                    continue;
                if (found != npos || prod.coeffs()[k] != 1)
                    throw std::logic_error("product of basis elements is not a basis element");
                found = k;
            }
            table_[i * N + j] = found;
        }
    }
    build_generator_maps();
}

std::size_t SkewRing::coordinate_of(const GroupElement& t, std::size_t x) const
{
    auto c = base().component_index(t);
    if (!c || x >= base().carrier_size())
        return npos;
    return coord_index_[*c][x];
}

std::vector<std::size_t> SkewRing::identity_coordinates() const
{
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < base().carrier_size(); ++x)
        out.push_back(coord_index_[0][x]);
    return out;
}

SkewElement SkewRing::one() const { return homogeneous(group().identity(), action_.unit(group().identity())); }

SkewElement SkewRing::homogeneous(const GroupElement& t, const Vector& f) const
{
    if (!action_.in_ideal(t, f))
        throw std::invalid_argument("coefficient is not in D_" + group().format(t));
    Vector out(dimension());
    for (std::size_t x = 0; x < f.dim(); ++x)
        if (f[x] != 0)
            out[coordinate_of(t, x)] = f[x];
    return SkewElement(std::move(out));
}

SkewElement SkewRing::add(const SkewElement& a, const SkewElement& b) const
{
    return SkewElement(pskew::add(field(), a.coeffs(), b.coeffs()));
}

SkewElement SkewRing::sub(const SkewElement& a, const SkewElement& b) const
{
    return SkewElement(pskew::sub(field(), a.coeffs(), b.coeffs()));
}

SkewElement SkewRing::scale(Scalar c, const SkewElement& a) const
{
    return SkewElement(pskew::scale(field(), c, a.coeffs()));
}

Vector SkewRing::combine(const Vector& a_t, const GroupElement& t, const Vector& b_s) const
{
    const GroupElement ti = group().inverse(t);
    Vector pulled = action_.apply(ti, a_t);
    return action_.apply(t, pointwise_product(field(), pulled, b_s));
}

SkewElement SkewRing::multiply(const SkewElement& a, const SkewElement& b) const
{
    const auto& comps = base().components();
    const std::size_t n = base().carrier_size();
    std::vector<Vector> blocks_a, blocks_b;
    for (std::size_t c = 0; c < comps.size(); ++c) {
        blocks_a.push_back(project(a, comps[c].element));
        blocks_b.push_back(project(b, comps[c].element));
    }
    Vector out(dimension());
    for (std::size_t ct = 0; ct < comps.size(); ++ct) {
        if (blocks_a[ct].is_zero())
            continue;
        for (std::size_t cs = 0; cs < comps.size(); ++cs) {
            if (blocks_b[cs].is_zero())
                continue;
            Vector f = combine(blocks_a[ct], comps[ct].element, blocks_b[cs]);
            if (f.is_zero())
                continue;
            GroupElement ts = group().multiply(comps[ct].element, comps[cs].element);
            if (!action_.in_ideal(ts, f))
                throw std::logic_error("product coefficient escapes D_" + group().format(ts));
            for (std::size_t x = 0; x < n; ++x)
                if (f[x] != 0) {
                    std::size_t k = coordinate_of(ts, x);
                    out[k] = field().add(out[k], f[x]);
                }
        }
    }
    return SkewElement(std::move(out));
}

SkewElement SkewRing::multiply_fast(const SkewElement& a, const SkewElement& b) const
{
    const std::size_t N = dimension();
    Vector out(N);
    for (std::size_t i = 0; i < N; ++i) {
        Scalar ai = a.coeffs()[i];
        if (ai == 0)
            continue;
        for (std::size_t j = 0; j < N; ++j) {
            Scalar bj = b.coeffs()[j];
            std::size_t k = table_[i * N + j];
            if (bj == 0 || k == npos)
                continue;
            out[k] = field().add(out[k], field().mul(ai, bj));
        }
    }
    return SkewElement(std::move(out));
}

Vector SkewRing::project(const SkewElement& a, const GroupElement& g) const
{
    if (a.dim() != dimension())
        throw std::invalid_argument("element has wrong dimension for this ring");
    Vector out(base().carrier_size());
    auto c = base().component_index(g);
    if (!c)
        return out;
    for (std::size_t x = 0; x < out.dim(); ++x)
        if (coord_index_[*c][x] != npos)
            out[x] = a.coeffs()[coord_index_[*c][x]];
    return out;
}

Vector SkewRing::augment(const SkewElement& a) const
{
    if (a.dim() != dimension())
        throw std::invalid_argument("element has wrong dimension for this ring");
    Vector out(base().carrier_size());
    for (std::size_t k = 0; k < coords_.size(); ++k)
        out[coords_[k].point] = field().add(out[coords_[k].point], a.coeffs()[k]);
    return out;
}

std::vector<GroupElement> SkewRing::support(const SkewElement& a) const
{
    std::vector<GroupElement> out;
    for (const auto& c : base().components())
        if (!project(a, c.element).is_zero())
            out.push_back(c.element);
    return out;
}

Subspace SkewRing::r0_subspace() const
{
    auto idx = identity_coordinates();
    return Subspace::coordinate(field(), dimension(), idx);
}

void SkewRing::build_generator_maps()
{
    const std::size_t N = dimension();
    std::vector<SkewElement> generators;
    for (std::size_t x = 0; x < base().carrier_size(); ++x)
        generators.push_back(basis(coord_index_[0][x]));
    for (const auto& c : base().components())
        if (!group().is_identity(c.element))
            generators.push_back(homogeneous(c.element, action_.unit(c.element)));

    for (const auto& g : generators) {
        SparseMap left, right;
        left.images.resize(N);
        right.images.resize(N);
        for (std::size_t i = 0; i < N; ++i) {
            SkewElement l = multiply_fast(g, basis(i));
            SkewElement r = multiply_fast(basis(i), g);
            for (std::size_t k = 0; k < N; ++k) {
                if (l.coeffs()[k] != 0)
                    left.images[i].emplace_back(k, l.coeffs()[k]);
                if (r.coeffs()[k] != 0)
                    right.images[i].emplace_back(k, r.coeffs()[k]);
            }
        }
        left_maps_.push_back(std::move(left));
        right_maps_.push_back(std::move(right));
    }
}

std::string SkewRing::format(const SkewElement& a) const
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coords_.size(); ++k) {
        Scalar c = a.coeffs()[k];
        if (c == 0)
            continue;
        if (!first)
            os << " + ";
        first = false;
        if (c != 1)
            os << c << "*";
        const auto& comp = base().components()[coords_[k].component];
        os << "1_" << base().carrier()[coords_[k].point] << " d_" << group().format(comp.element);
    }
    if (first)
        os << "0";
    return os.str();
}

// ---------------------------------------------------------------------------

bool verify_associativity(const SkewRing& r)
{
    const std::size_t N = r.dimension();
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            std::size_t ij = r.basis_product(i, j);
            for (std::size_t k = 0; k < N; ++k) {
                std::size_t jk = r.basis_product(j, k);
                std::size_t lhs = ij == npos ? npos : r.basis_product(ij, k);
                std::size_t rhs = jk == npos ? npos : r.basis_product(i, jk);
                if (lhs != rhs)
                    return false;
            }
        }
    return true;
}

Subspace centralizer_of_r0(const SkewRing& r)
{
    const std::size_t N = r.dimension();
    // Rows of the stacked system [a (f d_0) - (f d_0) a = 0] over basis functions f = 1_x.
    std::vector<Vector> rows;
    for (std::size_t e : r.identity_coordinates()) {
        std::vector<Vector> block(N, Vector(N));
        for (std::size_t i = 0; i < N; ++i) {
            std::size_t right = r.basis_product(i, e);
            std::size_t left = r.basis_product(e, i);
            if (right != npos)
                block[right][i] = r.field().add(block[right][i], 1);
            if (left != npos)
                block[left][i] = r.field().sub(block[left][i], 1);
        }
        for (auto& row : block)
            if (!row.is_zero())
                rows.push_back(std::move(row));
    }
    return kernel(r.field(), N, rows);
}

bool is_maximal_commutative(const SkewRing& r) { return centralizer_of_r0(r) == r.r0_subspace(); }

std::optional<SkewElement> intersection_failure_generator(const SkewRing& r)
{
    Subspace c = centralizer_of_r0(r);
    const auto& comps = r.base().components();
    for (const auto& v : c.basis()) {
        SkewElement a(v);
        for (std::size_t ci = 1; ci < comps.size(); ++ci) {
            Vector ag = r.project(a, comps[ci].element);
            if (ag.is_zero())
                continue;
            return r.sub(r.homogeneous(r.group().identity(), ag), r.homogeneous(comps[ci].element, ag));
        }
    }
    return std::nullopt;
}

namespace {

// Worklist closure of span{a} under the generator maps. Stops early once the
// span is the whole space.
EchelonBuilder close_ideal(const SkewRing& r, const Vector& a)
{
    const auto& f = r.field();
    const std::size_t N = r.dimension();
    EchelonBuilder span(f, N);
    std::deque<Vector> work;
    if (span.insert(a))
        work.push_back(a);
    auto apply = [&](const SkewRing::SparseMap& m, const Vector& v) {
        Vector out(N);
        for (std::size_t i = 0; i < N; ++i) {
            Scalar c = v[i];
            if (c == 0)
                continue;
            for (auto [k, w] : m.images[i])
                out[k] = f.add(out[k], f.mul(c, w));
        }
        return out;
    };
    while (!work.empty() && !span.full()) {
        Vector v = std::move(work.front());
        work.pop_front();
        for (int side = 0; side < 2 && !span.full(); ++side) {
            const auto& maps = side == 0 ? r.left_generator_maps() : r.right_generator_maps();
            for (const auto& m : maps) {
                Vector w = apply(m, v);
                if (span.insert(w))
                    work.push_back(std::move(w));
                if (span.full())
                    break;
            }
        }
    }
    return span;
}

} // namespace

Subspace ideal_generated(const SkewRing& r, const SkewElement& a)
{
    if (a.dim() != r.dimension())
        throw std::invalid_argument("element has wrong dimension for this ring");
    return close_ideal(r, a.coeffs()).to_subspace();
}

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::yes:
        return "true";
    case Verdict::no:
        return "false";
    case Verdict::skipped:
        return "skipped";
    }
    return "skipped";
}

bool oracle_feasible(const SkewRing& r, const OracleOptions& opts)
{
    if (opts.budget_log2 >= 63)
        return true;
    const unsigned __int128 limit = static_cast<unsigned __int128>(1) << opts.budget_log2;
    unsigned __int128 count = 1;
    for (std::size_t i = 0; i < r.dimension(); ++i) {
        count *= r.field().modulus();
        if (count > limit)
            return false;
    }
    return true;
}

namespace {

std::string budget_reason(const SkewRing& r, const OracleOptions& opts)
{
    return "p^N = " + std::to_string(r.field().modulus()) + "^" + std::to_string(r.dimension()) +
           " exceeds the enumeration budget 2^" + std::to_string(opts.budget_log2);
}

} // namespace

PrincipalIdealSurvey survey_principal_ideals(const SkewRing& r, const OracleOptions& opts)
{
    PrincipalIdealSurvey out;
    if (!oracle_feasible(r, opts)) {
        out.simple.reason = out.intersection_property.reason = budget_reason(r, opts);
        return out;
    }
    const auto& f = r.field();
    const std::size_t N = r.dimension();
    const std::uint32_t p = f.modulus();
    const Subspace r0 = r.r0_subspace();

    // odometer over the coordinates after the leading one
    auto advance = [&](Vector& a, std::size_t lead) {
        for (std::size_t k = N; k-- > lead + 1;) {
            if (++a[k] < p)
                return true;
            a[k] = 0;
        }
        return false;
    };

    bool simple_open = true, iip_open = true;
    std::uint64_t examined = 0;
    // Enumerate nonzero vectors whose leading nonzero coordinate is 1: every
    // principal ideal is generated by exactly one such normalized vector's
    // scalar class.
    for (std::size_t lead = 0; lead < N && (simple_open || iip_open); ++lead) {
        Vector a(N);
        a[lead] = 1;
        while (simple_open || iip_open) {
            ++examined;
            EchelonBuilder ideal = close_ideal(r, a);
            if (!ideal.full()) {
                if (simple_open) {
                    out.simple.verdict = Verdict::no;
                    out.simple.witness = SkewElement(a);
                    simple_open = false;
                }
                if (iip_open && intersect(ideal.to_subspace(), r0).is_zero()) {
                    out.intersection_property.verdict = Verdict::no;
                    out.intersection_property.witness = SkewElement(a);
                    iip_open = false;
                }
            }
            if (!advance(a, lead))
                break;
        }
    }
    if (simple_open)
        out.simple.verdict = Verdict::yes;
    if (iip_open)
        out.intersection_property.verdict = Verdict::yes;
    out.simple.generators = out.intersection_property.generators = examined;
    return out;
}

OracleOutcome is_simple_oracle(const SkewRing& r, const OracleOptions& opts)
{
    return survey_principal_ideals(r, opts).simple;
}

OracleOutcome has_ideal_intersection_property_oracle(const SkewRing& r, const OracleOptions& opts)
{
    return survey_principal_ideals(r, opts).intersection_property;
}

std::pair<CriterionCheck, CriterionCheck> check_both_criteria(const SkewRing& r, const OracleOptions& opts)
{
    const bool max_comm = is_maximal_commutative(r);
    const bool g_simple = is_G_simple(r.base());
    auto survey = survey_principal_ideals(r, opts);

    CriterionCheck iip;
    iip.name = "maximal_commutative_iff_intersection_property";
    iip.criterion = verdict_of(max_comm);
    iip.oracle = survey.intersection_property.verdict;
    iip.reason = survey.intersection_property.reason;
    iip.witness = survey.intersection_property.witness;

    CriterionCheck simple;
    simple.name = "simple_iff_g_simple_and_maximal_commutative";
    simple.criterion = verdict_of(max_comm && g_simple);
    simple.oracle = survey.simple.verdict;
    simple.reason = survey.simple.reason;
    simple.witness = survey.simple.witness;
    return {std::move(iip), std::move(simple)};
}

CriterionCheck check_commutativity_intersection(const SkewRing& r, const OracleOptions& opts)
{
    return check_both_criteria(r, opts).first;
}

CriterionCheck check_simplicity_criterion(const SkewRing& r, const OracleOptions& opts)
{
    return check_both_criteria(r, opts).second;
}

} // namespace pskew
