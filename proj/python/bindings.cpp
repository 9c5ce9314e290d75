#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pskew/dynamics.hpp"
#include "pskew/exactalg.hpp"
#include "pskew/generator.hpp"
#include "pskew/groups.hpp"
#include "pskew/io.hpp"
#include "pskew/leavitt.hpp"
#include "pskew/paction.hpp"
#include "pskew/skewring.hpp"

namespace py = pybind11;
using namespace pskew;

namespace {

std::vector<Scalar> to_list(const Vector& v)
{
    return {v.coords().begin(), v.coords().end()};
}

Vector to_vector(const PrimeField& f, const std::vector<long long>& xs)
{
    Vector v(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i)
        v[i] = f.reduce(xs[i]);
    return v;
}

SkewElement element(const SkewRing& r, const std::vector<long long>& xs)
{
    if (xs.size() != r.dimension())
        throw std::invalid_argument("expected " + std::to_string(r.dimension()) + " coefficients");
    return SkewElement(to_vector(r.field(), xs));
}

py::object verdict(Verdict v)
{
    if (v == Verdict::skipped)
        return py::none();
    return py::bool_(v == Verdict::yes);
}

py::dict outcome(const OracleOutcome& o)
{
    py::dict d;
    d["verdict"] = verdict(o.verdict);
    d["generators"] = o.generators;
    d["reason"] = o.reason;
    d["witness"] = o.witness ? py::cast(to_list(o.witness->coeffs())) : py::none();
    return d;
}

py::dict criterion(const CriterionCheck& c)
{
    py::dict d;
    d["name"] = c.name;
    d["criterion"] = verdict(c.criterion);
    d["oracle"] = verdict(c.oracle);
    d["agree"] = c.agree();
    d["skipped"] = c.skipped();
    d["reason"] = c.reason;
    d["witness"] = c.witness ? py::cast(to_list(c.witness->coeffs())) : py::none();
    return d;
}

OracleOptions budget(unsigned log2)
{
    return OracleOptions{log2};
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Partial skew group rings K^X x_a G over prime fields";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<PrimeField>(m, "PrimeField")
        .def(py::init<std::uint32_t>(), py::arg("p"))
        .def_property_readonly("p", &PrimeField::modulus)
        .def("__repr__", [](const PrimeField& f) { return "PrimeField(" + std::to_string(f.modulus()) + ")"; });

    py::class_<Group>(m, "Group")
        .def_static("cyclic", [](std::size_t n) { return Group::finite(FiniteGroup::cyclic(n)); }, py::arg("n"))
        .def_static(
            "from_table", [](std::vector<std::vector<std::size_t>> mul) { return Group::finite(FiniteGroup::from_table(std::move(mul))); },
            py::arg("mul"))
        .def_property_readonly("order", [](const Group& g) { return g.is_finite() ? g.finite_group().order() : 0; })
        .def("multiply", [](const Group& g, std::size_t a, std::size_t b) { return g.finite_group().multiply(a, b); })
        .def("inverse", [](const Group& g, std::size_t a) { return g.finite_group().inverse(a); });

    py::class_<AxiomViolation>(m, "AxiomViolation")
        .def_readonly("axiom", &AxiomViolation::axiom)
        .def_readonly("witness", &AxiomViolation::witness)
        .def_readonly("detail", &AxiomViolation::detail);

    py::class_<ValidationReport>(m, "ValidationReport")
        .def_property_readonly("ok", &ValidationReport::ok)
        .def_readonly("structural", &ValidationReport::structural)
        .def_readonly("violations", &ValidationReport::violations)
        .def("__bool__", &ValidationReport::ok);

    py::class_<SetPartialAction>(m, "PartialAction")
        .def_static(
            "create",
            [](const Group& g, std::vector<std::string> carrier,
               const std::map<std::size_t, std::vector<std::pair<std::size_t, std::size_t>>>& maps) {
                std::vector<ComponentSpec> specs;
                for (const auto& [t, pairs] : maps)
                    specs.push_back({GroupElement(t), pairs});
                return SetPartialAction::create(g, std::move(carrier), std::move(specs));
            },
            py::arg("group"), py::arg("carrier"), py::arg("maps"),
            "maps: {t: [(x, h_t(x)), ...]} with carrier indices; t = 0 is implicit")
        .def_property_readonly("carrier", &SetPartialAction::carrier)
        .def_property_readonly("group", &SetPartialAction::group)
        .def("domain", [](const SetPartialAction& a, std::size_t t) { return a.domain(t); })
        .def("apply", [](const SetPartialAction& a, std::size_t t, std::size_t x) -> std::optional<std::size_t> {
            auto y = a.apply(t, x);
            return y == npos ? std::nullopt : std::optional<std::size_t>(y);
        });

    m.def("validate_axioms", &validate_axioms, py::arg("action"));
    m.def(
        "restrict_global",
        [](const std::vector<std::size_t>& perm, const IndexSet& subset, std::size_t order) {
            return restrict_global(std::span<const std::size_t>(perm), subset, order);
        },
        py::arg("perm"), py::arg("subset"), py::arg("order"),
        "restriction to subset of the C_order action generated by perm");
    m.def("invariant_closure", &invariant_closure, py::arg("action"), py::arg("subset"));
    m.def("proper_invariant_subset", &proper_invariant_subset, py::arg("action"));
    m.def("is_G_simple", &is_G_simple, py::arg("action"));

    m.def(
        "load_instance",
        [](const std::string& path) {
            Instance inst = parse_instance_text(read_file(path));
            std::optional<std::uint32_t> p;
            if (inst.field)
                p = inst.field->modulus();
            return py::make_tuple(inst.action, p);
        },
        py::arg("path"), "returns (action, p or None)");

    py::class_<SkewRing>(m, "SkewRing")
        .def(py::init([](const SetPartialAction& a, std::uint32_t p) { return SkewRing(AlgebraPartialAction(a, PrimeField(p))); }),
             py::arg("action"), py::arg("p") = 2)
        .def_property_readonly("dimension", &SkewRing::dimension)
        .def_property_readonly("field", &SkewRing::field)
        .def_property_readonly("action", &SkewRing::base)
        .def_property_readonly("coordinates",
                               [](const SkewRing& r) {
                                   std::vector<std::pair<std::string, std::string>> out;
                                   for (const auto& c : r.coordinates())
                                       out.emplace_back(r.group().format(r.base().components()[c.component].element),
                                                        r.base().carrier()[c.point]);
                                   return out;
                               })
        .def("zero", [](const SkewRing& r) { return to_list(r.zero().coeffs()); })
        .def("one", [](const SkewRing& r) { return to_list(r.one().coeffs()); })
        .def("basis", [](const SkewRing& r, std::size_t i) { return to_list(r.basis(i).coeffs()); })
        .def("homogeneous",
             [](const SkewRing& r, std::size_t t, const std::vector<long long>& f) {
                 return to_list(r.homogeneous(t, to_vector(r.field(), f)).coeffs());
             })
        .def("multiply",
             [](const SkewRing& r, const std::vector<long long>& a, const std::vector<long long>& b) {
                 return to_list(r.multiply(element(r, a), element(r, b)).coeffs());
             })
        .def("augment", [](const SkewRing& r, const std::vector<long long>& a) { return to_list(r.augment(element(r, a))); })
        .def("project",
             [](const SkewRing& r, const std::vector<long long>& a, std::size_t g) {
                 return to_list(r.project(element(r, a), g));
             })
        .def("format", [](const SkewRing& r, const std::vector<long long>& a) { return r.format(element(r, a)); })
        .def("ideal_generated",
             [](const SkewRing& r, const std::vector<long long>& a) {
                 const Subspace ideal = ideal_generated(r, element(r, a));
                 std::vector<std::vector<Scalar>> rows;
                 for (const auto& v : ideal.basis())
                     rows.push_back(to_list(v));
                 return rows;
             },
             "reduced echelon basis of the two-sided ideal generated by a");

    m.def("verify_associativity", &verify_associativity, py::arg("ring"));
    m.def("centralizer_dimension", [](const SkewRing& r) { return centralizer_of_r0(r).rank(); }, py::arg("ring"));
    m.def("is_maximal_commutative", &is_maximal_commutative, py::arg("ring"));
    m.def(
        "is_simple_oracle", [](const SkewRing& r, unsigned b) { return outcome(is_simple_oracle(r, budget(b))); },
        py::arg("ring"), py::arg("budget") = 16);
    m.def(
        "has_ideal_intersection_property_oracle",
        [](const SkewRing& r, unsigned b) { return outcome(has_ideal_intersection_property_oracle(r, budget(b))); },
        py::arg("ring"), py::arg("budget") = 16);
    m.def(
        "check_both_criteria",
        [](const SkewRing& r, unsigned b) {
            auto [iip, simple] = check_both_criteria(r, budget(b));
            return py::make_tuple(criterion(iip), criterion(simple));
        },
        py::arg("ring"), py::arg("budget") = 16);

    py::class_<Graph>(m, "Graph")
        .def_static("parse", &parse_graph, py::arg("text"), "JSON or 'e: v -> w' lines")
        .def_property_readonly("vertices", &Graph::vertices)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("is_acyclic", &Graph::is_acyclic);

    m.def("satisfies_condition_L", [](const Graph& g) { return satisfies_condition_L(g).holds; }, py::arg("graph"));
    m.def(
        "only_trivial_hereditary_saturated",
        [](const Graph& g) { return only_trivial_hereditary_saturated(g).trivial_only; }, py::arg("graph"));
    m.def("hereditary_saturated_closure", &hereditary_saturated_closure, py::arg("graph"), py::arg("subset"));
    m.def("leavitt_is_simple", &leavitt_is_simple, py::arg("graph"));

    py::class_<LeavittRing>(m, "LeavittRing")
        .def_property_readonly("ring", [](const LeavittRing& lr) { return lr.ring; })
        .def_property_readonly("carrier", [](const LeavittRing& lr) { return lr.boundary.action.carrier(); })
        .def("vertex_witness",
             [](const LeavittRing& lr, const std::vector<long long>& x0) {
                 auto w = vertex_witness(lr, to_vector(lr.ring.field(), x0));
                 py::dict d;
                 d["vertex"] = lr.boundary.graph.vertices()[w.vertex];
                 d["path"] = w.path;
                 d["confirmed"] = w.confirmed;
                 return d;
             },
             py::arg("x0"));
    m.def(
        "build_leavitt_ring", [](const Graph& g, std::uint32_t p) { return build_leavitt_ring(g, PrimeField(p)); },
        py::arg("graph"), py::arg("p") = 2);

    m.def("is_topologically_free", &is_topologically_free, py::arg("action"));
    m.def("is_minimal", &is_minimal, py::arg("action"));
    m.def(
        "check_dynamical_simplicity",
        [](const SetPartialAction& a, std::uint32_t p, unsigned b) {
            auto d = check_dynamical_simplicity(a, PrimeField(p), budget(b));
            py::dict out;
            out["topologically_free"] = d.topologically_free;
            out["minimal"] = d.minimal;
            out["maximal_commutative"] = d.maximal_commutative;
            out["g_simple"] = d.g_simple;
            out["simple"] = verdict(d.simple);
            out["all_agree"] = d.all_agree();
            return out;
        },
        py::arg("action"), py::arg("p") = 2, py::arg("budget") = 16);

    m.def(
        "random_restrictions",
        [](std::uint64_t seed, std::size_t count, std::size_t group_order, std::size_t max_carrier) {
            InstanceGenerator gen(seed);
            std::vector<SetPartialAction> out;
            for (std::size_t i = 0; i < count; ++i)
                out.push_back(gen.next(group_order, max_carrier).action);
            return out;
        },
        py::arg("seed"), py::arg("count"), py::arg("group_order"), py::arg("max_carrier"));
}
