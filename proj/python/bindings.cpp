#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "symbreak/models.hpp"
#include "symbreak/oracle.hpp"
#include "symbreak/strategies.hpp"
#include "symbreak/symbreak.hpp"

namespace py = pybind11;
using namespace symbreak;

namespace {

BranchSpec branch_for(const std::string& varOrder, const std::string& valueOrder, std::uint64_t seed)
{
    BranchSpec b;
    if (varOrder == "fixed")
        b.var = VarHeuristic::FixedOrder;
    else if (varOrder == "min-domain")
        b.var = VarHeuristic::MinDomain;
    else
        throw py::value_error("var_order must be 'fixed' or 'min-domain'");
    if (valueOrder == "lex")
        b.val = ValHeuristic::LexMin;
    else if (valueOrder == "random")
        b.val = ValHeuristic::RandomOrder;
    else
        throw py::value_error("value_order must be 'lex' or 'random'");
    b.seed = seed;
    return b;
}

py::dict solve_model(const ModelBundle& m, const std::string& strategy, const std::string& valueOrder,
               const std::string& varOrder, std::uint64_t seed, std::uint64_t cutoff,
               std::optional<std::uint64_t> budget, std::optional<std::uint64_t> maxRestarts,
               std::optional<double> timeout)
{
    const BranchSpec b = branch_for(varOrder, valueOrder, seed);
    const StrategyLimits lim{budget, timeout};
    StrategyResult r;
    if (strategy == "static") {
        py::gil_scoped_release release;
        r = run_static(m.csp, m.sbc, b, lim);
    } else if (strategy == "model-restarts") {
        const RestartConfig cfg{cutoff, maxRestarts, seed};
        py::gil_scoped_release release;
        r = run_model_restarts(m.csp, m.sbc, m.group, b, cfg, lim);
    } else if (strategy == "sbds") {
        py::gil_scoped_release release;
        r = run_sbds(m.csp, m.group.generators(), b, lim);
    } else {
        throw py::value_error("strategy must be 'static', 'model-restarts' or 'sbds'");
    }

    py::dict d;
    d["outcome"] = to_string(r.outcome);
    d["solution"] = r.solution ? py::cast(m.csp.to_values(*r.solution)) : py::none();
    d["objective"] = r.objective;
    d["proved_optimal"] = r.provedOptimal;
    d["backtracks"] = r.stats.backtracks;
    d["nodes"] = r.stats.nodes;
    d["restarts"] = r.stats.restarts;
    d["seconds"] = r.stats.wallTime;
    py::list log;
    for (const auto& e : r.log)
        log.append(py::make_tuple(e.index, e.symmetry, e.backtracks, to_string(e.outcome)));
    d["log"] = log;
    return d;
}

py::dict verify_model(const ModelBundle& m, std::size_t groupBound)
{
    std::vector<CheckResult> results;
    std::string text;
    {
        py::gil_scoped_release release;
        const auto ctx = make_context(m, groupBound);
        results = check_all(ctx);
        text = report(ctx, results);
    }
    py::dict out;
    py::dict checks;
    bool all = true;
    for (const auto& r : results) {
        checks[to_string(r.proposition)] = r.passed;
        all = all && r.passed;
    }
    out["passed"] = all;
    out["checks"] = checks;
    out["report"] = text;
    return out;
}

MagicGroup magic_group(const std::string& name)
{
    if (name == "geometric")
        return MagicGroup::Geometric8;
    if (name == "rotations")
        return MagicGroup::Rotations4;
    if (name == "full")
        return MagicGroup::Full16;
    throw py::value_error("group must be 'geometric', 'rotations' or 'full'");
}

} // namespace

PYBIND11_MODULE(_symbreak, mod)
{
    mod.doc() = "Symmetry-breaking constraints, search strategies and an exhaustive checker.";

    py::register_exception<GroupTooLarge>(mod, "GroupTooLarge", PyExc_RuntimeError);

    py::class_<Symmetry>(mod, "Symmetry")
        .def(py::init([](std::vector<int> var, std::vector<int> val, std::string label) {
                 return Symmetry{Permutation(std::move(var)), Permutation(std::move(val)), std::move(label)};
             }),
             py::arg("var"), py::arg("val"), py::arg("label") = "")
        .def_property_readonly("var", [](const Symmetry& s) { return s.var.image(); })
        .def_property_readonly("val", [](const Symmetry& s) { return s.val.image(); })
        .def_readonly("label", &Symmetry::label)
        .def("is_identity", &Symmetry::is_identity)
        .def("inverse", [](const Symmetry& s) { return inverse(s); })
        .def("__mul__", [](const Symmetry& g, const Symmetry& h) { return compose(g, h); })
        .def("__eq__", [](const Symmetry& a, const Symmetry& b) { return a == b; })
        .def("apply", [](const Symmetry& g, std::vector<int> a) { return apply_assignment(g, a); },
             "Image of a total assignment of value indices.")
        .def("__repr__", &Symmetry::describe);

    py::class_<ModelBundle>(mod, "Model")
        .def_readonly("name", &ModelBundle::name)
        .def_readonly("params", &ModelBundle::params)
        .def_property_readonly("var_count", [](const ModelBundle& m) { return m.csp.var_count(); })
        .def_property_readonly("value_count", [](const ModelBundle& m) { return m.csp.value_count(); })
        .def_property_readonly("value_offset", [](const ModelBundle& m) { return m.csp.value_offset(); })
        .def_property_readonly("var_names", [](const ModelBundle& m) { return m.csp.var_names(); })
        .def_property_readonly("generators", [](const ModelBundle& m) { return m.group.generators(); })
        .def_property_readonly("symmetry_breaking",
                               [](const ModelBundle& m) { return format_set(m.sbc, m.csp.var_names()); })
        .def("group_elements",
             [](const ModelBundle& m, std::size_t bound) { return enumerate_group(m.group, bound); },
             py::arg("bound") = kDefaultGroupBound)
        .def("render", [](const ModelBundle& m, const std::vector<int>& values) {
            return render(m, m.csp.from_values(values));
        })
        .def("classify",
             [](const ModelBundle& m, const Symmetry& g) { return std::string(to_string(classify(m.csp, m.sbc, g))); },
             "eliminates, breaks-not-eliminates or does-not-break, computed exhaustively.")
        .def("__repr__", [](const ModelBundle& m) { return "<Model " + m.name + ">"; });

    mod.def("most_perfect_magic_square", &most_perfect_magic_square, py::arg("n"));
    mod.def("magic_square",
            [](int n, const std::string& group) { return magic_square(n, magic_group(group)); }, py::arg("n"),
            py::arg("group") = "geometric");
    mod.def("graph_coloring",
            py::overload_cast<int, int, std::uint64_t, int>(&graph_coloring), py::arg("vertices"),
            py::arg("max_block"), py::arg("seed"), py::arg("colors") = 0);
    mod.def("efpa", &efpa, py::arg("v"), py::arg("q"), py::arg("lam"), py::arg("d"));
    mod.def("square_symmetry", &square_symmetry, py::arg("n"), py::arg("value_count"), py::arg("label"));

    mod.def("solve", &solve_model, py::arg("model"), py::arg("strategy") = "static", py::arg("value_order") = "lex",
            py::arg("var_order") = "min-domain", py::arg("seed") = 0, py::arg("cutoff") = 1000,
            py::arg("budget") = py::none(), py::arg("max_restarts") = py::none(), py::arg("timeout") = py::none());
    mod.def("verify", &verify_model, py::arg("model"), py::arg("group_bound") = kDefaultGroupBound);
    mod.def(
        "expected_restart_cost",
        [](const std::vector<std::uint64_t>& counts, std::uint64_t cutoff) {
            return expected_restart_cost(counts, cutoff);
        },
        py::arg("counts"), py::arg("cutoff"));
    mod.def(
        "simulate_restart_cost",
        [](const std::vector<std::uint64_t>& counts, std::uint64_t cutoff, std::size_t trials, std::uint64_t seed) {
            return simulate_restart_cost(counts, cutoff, trials, seed);
        },
        py::arg("counts"), py::arg("cutoff"), py::arg("trials") = 100000, py::arg("seed") = 0);
    mod.def("robustness_ratio", &robustness_ratio);
}
