#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "pskew/dynamics.hpp"
#include "pskew/generator.hpp"
#include "pskew/io.hpp"
#include "pskew/leavitt.hpp"
#include "pskew/paction.hpp"
#include "pskew/skewring.hpp"

namespace pskew::cli {

namespace {

using nlohmann::ordered_json;
using json = ordered_json;

struct Options {
    std::uint32_t field = 2;
    bool field_given = false;
    unsigned budget = 16;
    bool as_json = false;
    std::uint64_t seed = 0;
    bool timings = false;

    std::string path;
    bool construct = false;
    std::size_t count = 100;
    std::string group = "mixed";
    std::size_t max_carrier = 4;

    OracleOptions oracle() const { return OracleOptions{budget}; }
};

/// Thrown for input the commands cannot work with; maps to exit code 2.
struct InvalidInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json verdict_json(Verdict v)
{
    switch (v) {
    case Verdict::yes: return true;
    case Verdict::no: return false;
    case Verdict::skipped: break;
    }
    return "skipped";
}

json check(bool value)
{
    return json{{"verdict", value}};
}

json check(Verdict v, const std::string& reason)
{
    json j{{"verdict", verdict_json(v)}};
    if (v == Verdict::skipped)
        j["reason"] = reason;
    return j;
}

json names(const std::vector<std::string>& carrier, const IndexSet& s)
{
    json out = json::array();
    for (auto x : s)
        out.push_back(carrier[x]);
    return out;
}

json element_json(const SkewRing& r, const SkewElement& a)
{
    json coeffs = json::array();
    for (auto c : a.coeffs().coords())
        coeffs.push_back(c);
    return json{{"element", r.format(a)}, {"coefficients", coeffs}};
}

json criterion_json(const SkewRing& r, const CriterionCheck& c)
{
    json j{{"criterion", verdict_json(c.criterion)}, {"oracle", verdict_json(c.oracle)}};
    if (c.skipped()) {
        j["agree"] = "skipped";
        j["reason"] = c.reason.empty() ? std::string("criterion not evaluated") : c.reason;
    } else {
        j["agree"] = c.agree();
    }
    if (c.witness)
        j["witness"] = element_json(r, *c.witness);
    return j;
}

json violation_json(const SetPartialAction& a, const AxiomViolation& v)
{
    json j{{"axiom", v.axiom}};
    if (v.s)
        j["s"] = a.group().format(*v.s);
    if (v.t)
        j["t"] = a.group().format(*v.t);
    if (v.witness)
        j["witness"] = a.carrier()[*v.witness];
    j["detail"] = v.detail;
    return j;
}

json validation_json(const SetPartialAction& a, const ValidationReport& r)
{
    json j{{"valid", r.ok()}};
    if (!r.structural.empty())
        j["structural"] = r.structural;
    if (!r.violations.empty()) {
        json vs = json::array();
        for (const auto& v : r.violations)
            vs.push_back(violation_json(a, v));
        j["violations"] = vs;
    }
    return j;
}

/// Human-readable rendering: one "key: value" line per scalar, nested
/// objects indented, arrays of scalars inline.
void render(const json& j, std::ostream& out, int depth)
{
    const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
    auto scalar = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    auto inline_array = [&](const json& arr) {
        std::string s = "[";
        for (std::size_t i = 0; i < arr.size(); ++i)
            s += (i ? ", " : "") + scalar(arr[i]);
        return s + "]";
    };
    for (const auto& [key, value] : j.items()) {
        if (value.is_object()) {
            out << pad << key << ":\n";
            render(value, out, depth + 1);
        } else if (value.is_array() && std::any_of(value.begin(), value.end(), [](const json& v) {
                       return v.is_object();
                   })) {
            out << pad << key << ":\n";
            for (const auto& item : value) {
                out << pad << "  -\n";
                render(item, out, depth + 2);
            }
        } else if (value.is_array()) {
            out << pad << key << ": " << inline_array(value) << "\n";
        } else {
            out << pad << key << ": " << scalar(value) << "\n";
        }
    }
}

void emit(const Options& o, const json& report, std::ostream& out)
{
    if (o.as_json)
        out << report.dump(2) << "\n";
    else
        render(report, out, 0);
}

class Timer {
public:
    explicit Timer(bool enabled) : enabled_(enabled) {}

    template <class F>
    auto operator()(const std::string& name, F&& f)
    {
        auto start = std::chrono::steady_clock::now();
        auto result = f();
        if (enabled_)
            ms_[name] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        return result;
    }

    void attach(json& report) const
    {
        if (enabled_)
            report["timings_ms"] = ms_;
    }

private:
    bool enabled_;
    json ms_ = json::object();
};

PrimeField resolve_field(const Options& o, const std::optional<PrimeField>& from_file)
{
    if (o.field_given || !from_file)
        return PrimeField(o.field);
    return *from_file;
}

Instance load_instance(const Options& o)
{
    return parse_instance_text(read_file(o.path));
}

// ---------------------------------------------------------------------------

int cmd_validate(const Options& o, std::ostream& out)
{
    Instance inst = load_instance(o);
    auto report = validate_axioms(inst.action);
    json j{{"command", "validate"}, {"instance", o.path}, {"carrier_size", inst.action.carrier_size()}};
    j["axioms"] = validation_json(inst.action, report);
    emit(o, j, out);
    return report.ok() ? agree : invalid_input;
}

int cmd_analyze(const Options& o, std::ostream& out)
{
    Instance inst = load_instance(o);
    const PrimeField field = resolve_field(o, inst.field);
    const SetPartialAction& a = inst.action;
    json j{{"command", "analyze"}, {"instance", o.path}, {"field", field.modulus()}, {"budget", o.budget}};

    auto validation = validate_axioms(a);
    j["axioms"] = validation_json(a, validation);
    if (!validation.ok()) {
        emit(o, j, out);
        return invalid_input;
    }

    Timer timed(o.timings);
    SkewRing r{AlgebraPartialAction(a, field)};
    j["carrier_size"] = a.carrier_size();
    j["dimension"] = r.dimension();

    json checks;
    const bool assoc = timed("associative", [&] { return verify_associativity(r); });
    checks["associative"] = check(assoc);

    auto invariant = timed("g_simple", [&] { return proper_invariant_subset(a); });
    checks["g_simple"] = check(!invariant.has_value());
    if (invariant)
        checks["g_simple"]["witness"] = names(a.carrier(), *invariant);

    auto centralizer = timed("maximal_commutative", [&] { return centralizer_of_r0(r); });
    const bool max_comm = centralizer.rank() == a.carrier_size();
    checks["maximal_commutative"] = check(max_comm);
    checks["maximal_commutative"]["centralizer_dimension"] = centralizer.rank();
    if (auto gen = intersection_failure_generator(r))
        checks["maximal_commutative"]["witness"] = element_json(r, *gen);

    auto survey = timed("oracles", [&] { return survey_principal_ideals(r, o.oracle()); });
    checks["simple_oracle"] = check(survey.simple.verdict, survey.simple.reason);
    checks["simple_oracle"]["generators"] = survey.simple.generators;
    if (survey.simple.witness)
        checks["simple_oracle"]["witness"] = element_json(r, *survey.simple.witness);
    checks["iip_oracle"] = check(survey.intersection_property.verdict, survey.intersection_property.reason);
    if (survey.intersection_property.witness)
        checks["iip_oracle"]["witness"] = element_json(r, *survey.intersection_property.witness);
    j["checks"] = checks;

    // The criteria reuse the survey above rather than enumerating again.
    CriterionCheck iip, simple;
    iip.name = "maximal_commutative_iff_intersection_property";
    iip.criterion = verdict_of(max_comm);
    iip.oracle = survey.intersection_property.verdict;
    iip.reason = survey.intersection_property.reason;
    iip.witness = survey.intersection_property.witness;
    simple.name = "simple_iff_g_simple_and_maximal_commutative";
    simple.criterion = verdict_of(max_comm && !invariant);
    simple.oracle = survey.simple.verdict;
    simple.reason = survey.simple.reason;
    simple.witness = survey.simple.witness;
    j["criteria"] = json{{iip.name, criterion_json(r, iip)}, {simple.name, criterion_json(r, simple)}};

    timed.attach(j);
    emit(o, j, out);
    return assoc && iip.agree() && simple.agree() ? agree : disagree;
}

std::string path_name(const Graph& g, const std::vector<std::size_t>& edges)
{
    std::string s;
    for (auto e : edges)
        s += (s.empty() ? "" : ".") + g.edges()[e].name;
    return s;
}

int cmd_leavitt(const Options& o, std::ostream& out)
{
    Graph g = parse_graph(read_file(o.path));
    if (o.construct && !g.is_acyclic())
        throw InvalidInput("--construct needs an acyclic graph: the boundary path space of a graph with a "
                           "cycle is infinite");
    json j{{"command", "leavitt"}, {"graph", o.path}, {"vertices", g.vertex_count()}, {"edges", g.edge_count()}};

    auto L = satisfies_condition_L(g);
    json cl = check(L.holds);
    if (!L.holds)
        cl["exitless_cycle"] = path_name(g, L.exitless_cycle);
    auto hs = only_trivial_hereditary_saturated(g);
    json hj = check(hs.trivial_only);
    if (!hs.trivial_only)
        hj["witness"] = names(g.vertices(), hs.witness);
    const bool criterion = L.holds && hs.trivial_only;
    j["condition_L"] = cl;
    j["only_trivial_hereditary_saturated"] = hj;
    j["criterion_simple"] = criterion;

    bool ok = true;
    if (o.construct) {
        Timer timed(o.timings);
        const PrimeField field(o.field);
        LeavittRing lr = timed("construct", [&] { return build_leavitt_ring(g, field); });
        const SkewRing& r = lr.ring;
        json c{{"field", field.modulus()}, {"budget", o.budget}, {"carrier_size", r.base().carrier_size()},
               {"dimension", r.dimension()}};

        const bool max_comm = timed("maximal_commutative", [&] { return is_maximal_commutative(r); });
        const bool g_simple = timed("g_simple", [&] { return is_G_simple(r.base()); });
        c["maximal_commutative"] = check(max_comm);
        c["commutativity_matches_condition_L"] = max_comm == L.holds;
        c["g_simple"] = check(g_simple);
        c["g_simple_matches_hereditary_saturated"] = g_simple == hs.trivial_only;

        auto simple = timed("simple_oracle", [&] { return is_simple_oracle(r, o.oracle()); });
        c["simple_oracle"] = check(simple.verdict, simple.reason);
        if (simple.witness)
            c["simple_oracle"]["witness"] = element_json(r, *simple.witness);
        const bool agrees = simple.verdict == Verdict::skipped || (simple.verdict == Verdict::yes) == criterion;
        c["criterion_matches_oracle"] = simple.verdict == Verdict::skipped ? json("skipped") : json(agrees);

        auto ck = timed("vertex_ideals", [&] { return ck_uniqueness_check(lr, o.oracle()); });
        c["every_ideal_contains_a_vertex"] = check(ck.verdict, ck.reason);
        if (ck.witness)
            c["every_ideal_contains_a_vertex"]["witness"] = element_json(r, *ck.witness);

        // vertex witnesses for every nonzero x0 in D_0, when enumerable
        const std::size_t n = r.base().carrier_size();
        json vw;
        OracleOptions opts = o.oracle();
        long double total = 1;
        for (std::size_t i = 0; i < n; ++i)
            total *= field.modulus();
        if (total > static_cast<long double>(std::uint64_t{1} << std::min(opts.budget_log2, 63u))) {
            vw = check(Verdict::skipped, "p^|X| = " + std::to_string(field.modulus()) + "^" + std::to_string(n) +
                                             " exceeds the enumeration budget 2^" + std::to_string(opts.budget_log2));
        } else {
            std::uint64_t tested = 0, confirmed = 0;
            timed("vertex_witness", [&] {
                Vector x0(n);
                for (;;) {
                    std::size_t k = 0;
                    while (k < n && ++x0[k] == field.modulus())
                        x0[k++] = 0;
                    if (k == n)
                        break;
                    ++tested;
                    confirmed += vertex_witness(lr, x0).confirmed;
                }
                return 0;
            });
            vw = check(tested == confirmed);
            vw["tested"] = tested;
            vw["confirmed"] = confirmed;
        }
        c["vertex_witness"] = vw;

        ok = max_comm == L.holds && g_simple == hs.trivial_only && agrees && ck.verdict != Verdict::no &&
             vw["verdict"] != json(false);
        timed.attach(c);
        j["construction"] = c;
    }
    emit(o, j, out);
    return ok ? agree : disagree;
}

json dynamics_json(const SetPartialAction& a, const DynamicsCheck& d)
{
    json j;
    j["topologically_free"] = check(d.topologically_free);
    if (d.fixed_point)
        j["topologically_free"]["witness"] =
            json{{"t", a.group().format(d.fixed_point->t)}, {"point", a.carrier()[d.fixed_point->point]}};
    j["minimal"] = check(d.minimal);
    if (d.invariant_subset)
        j["minimal"]["witness"] = names(a.carrier(), *d.invariant_subset);
    j["maximal_commutative"] = check(d.maximal_commutative);
    j["g_simple"] = check(d.g_simple);
    j["simple_oracle"] = check(d.simple, d.reason);
    j["simple_iff_free_and_minimal"] = d.simple == Verdict::skipped ? json("skipped") : json(d.simplicity_agrees());
    j["free_implies_maximal_commutative"] = d.freeness_gives_commutativity();
    j["minimal_iff_g_simple"] = d.minimality_matches();
    return j;
}

int cmd_dynamics(const Options& o, std::ostream& out)
{
    Instance inst = load_instance(o);
    const PrimeField field = resolve_field(o, inst.field);
    const SetPartialAction& a = inst.action;
    json j{{"command", "dynamics"},
           {"instance", o.path},
           {"model", "finite discrete space; simplicity over F_p"},
           {"field", field.modulus()},
           {"budget", o.budget}};
    auto validation = validate_axioms(a);
    j["axioms"] = validation_json(a, validation);
    if (!validation.ok()) {
        emit(o, j, out);
        return invalid_input;
    }
    Timer timed(o.timings);
    auto d = timed("dynamics", [&] { return check_dynamical_simplicity(a, field, o.oracle()); });
    j["checks"] = dynamics_json(a, d);
    timed.attach(j);
    emit(o, j, out);
    return d.all_agree() ? agree : disagree;
}

int cmd_fuzz(const Options& o, std::ostream& out)
{
    std::size_t fixed_order = 0;
    if (o.group == "c2")
        fixed_order = 2;
    else if (o.group == "c3")
        fixed_order = 3;
    else if (o.group == "c4")
        fixed_order = 4;
    else if (o.group != "mixed")
        throw InvalidInput("--group must be one of c2, c3, c4, mixed");
    if (o.max_carrier == 0)
        throw InvalidInput("--max-carrier must be positive");
    const PrimeField field(o.field);

    InstanceGenerator gen(o.seed);
    std::uint64_t passed = 0, skipped = 0;
    json summary{{"command", "fuzz"},      {"seed", o.seed},   {"count", o.count},
                 {"group", o.group},       {"max_carrier", o.max_carrier},
                 {"field", field.modulus()}, {"budget", o.budget}};

    for (std::size_t i = 0; i < o.count; ++i) {
        const std::size_t order = fixed_order ? fixed_order : 2 + gen.below(3);
        RestrictionInstance inst = gen.next(order, o.max_carrier);
        std::vector<std::string> failures;

        const bool valid = validate_axioms(inst.action).ok();
        if (!valid)
            failures.push_back("axioms");
        json detail;
        bool was_skipped = false;
        if (valid) {
            SkewRing r{AlgebraPartialAction(inst.action, field)};
            if (!verify_associativity(r))
                failures.push_back("associative");
            auto [iip, simple] = check_both_criteria(r, o.oracle());
            auto survey_simple = OracleOutcome{simple.oracle, simple.witness, simple.reason, 0};
            auto d = check_dynamical_simplicity(r, survey_simple);
            if (!iip.agree())
                failures.push_back(iip.name);
            if (!simple.agree())
                failures.push_back(simple.name);
            if (!d.simplicity_agrees())
                failures.push_back("simple_iff_free_and_minimal");
            if (!d.freeness_gives_commutativity())
                failures.push_back("free_implies_maximal_commutative");
            if (!d.minimality_matches())
                failures.push_back("minimal_iff_g_simple");
            was_skipped = iip.skipped();
            detail = json{{iip.name, criterion_json(r, iip)},
                          {simple.name, criterion_json(r, simple)},
                          {"dynamics", dynamics_json(inst.action, d)}};
        }

        if (!failures.empty()) {
            summary["passed"] = passed;
            summary["skipped"] = skipped;
            summary["failed"] = 1;
            json cx{{"index", i}, {"failed_checks", failures}};
            cx["instance"] = instance_to_json(inst.action, field);
            json perm = json::array();
            for (auto y : inst.perm)
                perm.push_back(y);
            cx["global_permutation"] = perm;
            cx["subset"] = inst.subset;
            if (!detail.is_null())
                cx["checks"] = detail;
            summary["counterexample"] = cx;
            if (o.as_json)
                out << summary.dump(2) << "\n";
            else {
                render(summary, out, 0);
                out << "counterexample instance:\n" << cx["instance"].dump(2) << "\n";
            }
            return disagree;
        }
        if (was_skipped)
            ++skipped;
        else
            ++passed;
    }
    summary["passed"] = passed;
    summary["skipped"] = skipped;
    summary["failed"] = 0;
    emit(o, summary, out);
    return agree;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Workbench for partial skew group rings K^X x_a G over prime fields", "pskew"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--field", o.field, "prime p of the coefficient field F_p (default 2)");
    app.add_option("--budget", o.budget, "enumerate only while p^N <= 2^budget (default 16)")
        ->check(CLI::Range(1u, 62u));
    app.add_flag("--json", o.as_json, "machine-readable output");
    app.add_option("--seed", o.seed, "seed for generated instances (default 0)");
    app.add_flag("--timings", o.timings, "include per-check wall-clock timings");

    auto* validate = app.add_subcommand("validate", "check the partial-action axioms of an instance");
    validate->add_option("instance", o.path, "instance JSON file")->required();
    auto* analyze = app.add_subcommand("analyze", "run all ring-level checks on an instance");
    analyze->add_option("instance", o.path, "instance JSON file")->required();
    auto* leavitt = app.add_subcommand("leavitt", "simplicity criteria for the Leavitt path algebra of a graph");
    leavitt->add_option("graph", o.path, "graph file (JSON or 'e: v -> w' lines)")->required();
    leavitt->add_flag("--construct", o.construct, "build the ring of an acyclic graph and cross-check");
    auto* dynamics = app.add_subcommand("dynamics", "freeness and minimality of an instance as a discrete system");
    dynamics->add_option("instance", o.path, "instance JSON file")->required();
    auto* fuzz = app.add_subcommand("fuzz", "cross-check the criteria on seeded random restrictions");
    fuzz->add_option("--count", o.count, "number of instances (default 100)");
    fuzz->add_option("--group", o.group, "c2, c3, c4 or mixed (default mixed)");
    fuzz->add_option("--max-carrier", o.max_carrier, "largest carrier size (default 4)");

    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return invalid_input;
    }
    o.field_given = app.count("--field") > 0;

    try {
        if (*validate)
            return cmd_validate(o, out);
        if (*analyze)
            return cmd_analyze(o, out);
        if (*leavitt)
            return cmd_leavitt(o, out);
        if (*dynamics)
            return cmd_dynamics(o, out);
        return cmd_fuzz(o, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return invalid_input;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return invalid_input;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return invalid_input;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return disagree;
    }
}

} // namespace pskew::cli
