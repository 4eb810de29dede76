#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "macroatlas/big_picture.hpp"
#include "macroatlas/demand_side.hpp"
#include "macroatlas/econ_core.hpp"
#include "macroatlas/equilibrium.hpp"
#include "macroatlas/error.hpp"
#include "macroatlas/panels.hpp"
#include "macroatlas/params.hpp"
#include "macroatlas/scenario.hpp"
#include "macroatlas/supply_side.hpp"
#include "macroatlas/svg.hpp"

namespace py = pybind11;
using namespace macroatlas;

namespace {

// nlohmann documents cross the boundary as plain Python dicts and lists.
py::object toPython(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

nlohmann::json fromPython(const py::handle& obj) {
    return nlohmann::json::parse(py::module_::import("json").attr("dumps")(obj).cast<std::string>());
}

std::string_view kindName(SolverError::Kind k) {
    switch (k) {
        case SolverError::Kind::NonBracketing: return "NonBracketing";
        case SolverError::Kind::NoConvergence: return "NoConvergence";
        case SolverError::Kind::SingularJacobian: return "SingularJacobian";
        case SolverError::Kind::NoCrossing: return "NoCrossing";
    }
    return "Unknown";
}

Params paramsFromKwargs(const py::kwargs& kw) {
    Params p;
    for (const auto& [key, value] : kw) setParam(p, key.cast<std::string>(), value.cast<double>());
    return p;
}

PanelPayload panelFor(int node, const Params& current, const std::optional<Params>& baseline,
                      const std::string& overlay) {
    const EconState s = shortRunGE(current);
    std::optional<EconState> s0;
    std::optional<PanelInput> base;
    if (baseline) {
        s0 = shortRunGE(*baseline);
        base = PanelInput{&*baseline, &*s0};
    }
    return buildPanel(node, {&current, &s}, base, overlayFromString(overlay));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Macroeconomic diagram engine: solvers, diagram graph, panels and scenarios.";

    static py::exception<Error> baseError(m, "MacroatlasError", PyExc_RuntimeError);
    static py::exception<ValidationError> validationError(m, "ValidationError", baseError.ptr());
    static py::exception<SolverError> solverError(m, "SolverError", baseError.ptr());
    static py::exception<NotFoundError> notFoundError(m, "NotFoundError", baseError.ptr());
    static py::exception<IoError> ioError(m, "IoError", baseError.ptr());

    py::register_exception_translator([](std::exception_ptr ptr) {
        // Raise an instance so callers can read .field and .kind off it.
        auto raise = [](auto& type, const char* what, const char* attr, const std::string& value) {
            py::object exc = py::reinterpret_borrow<py::object>(type.ptr())(what);
            exc.attr(attr) = value;
            PyErr_SetObject(type.ptr(), exc.ptr());
        };
        try {
            if (ptr) std::rethrow_exception(ptr);
        } catch (const ValidationError& e) {
            raise(validationError, e.what(), "field", e.field());
        } catch (const SolverError& e) {
            raise(solverError, e.what(), "kind", std::string(kindName(e.kind())));
        } catch (const NotFoundError& e) {
            notFoundError(e.what());
        } catch (const IoError& e) {
            ioError(e.what());
        } catch (const Error& e) {
            baseError(e.what());
        } catch (const nlohmann::json::exception& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    py::class_<Params> params(m, "Params");
    params.def(py::init(&paramsFromKwargs))
        .def("validate", [](const Params& p) { validate(p); })
        .def("to_dict", [](const Params& p) { return toPython(toJson(p)); })
        .def_static("from_dict", [](const py::dict& d) { return paramsFromJson(fromPython(d)); })
        .def("to_config", [](const Params& p) { return toConfig(p); })
        .def_static("from_config", [](const std::string& text) { return parseConfig(text); })
        .def_static("load", [](const std::string& path) { return loadConfig(path); })
        .def_static("fields", [] {
            std::vector<std::string> out;
            for (const auto& f : paramFields()) out.emplace_back(f.name);
            return out;
        })
        .def("copy", [](const Params& p) { return p; })
        .def(py::self == py::self)
        .def("__repr__", [](const Params& p) { return "Params(" + toJson(p).dump() + ")"; });
    for (const auto& f : paramFields()) {
        const auto member = f.member;
        params.def_property(
            std::string(f.name).c_str(), [member](const Params& p) { return p.*member; },
            [member](Params& p, double v) { p.*member = v; }, std::string(f.description).c_str());
    }

    py::class_<EconState> state(m, "EconState");
    state.def(py::init<>())
        .def("to_dict", [](const EconState& s) { return toPython(toJson(s)); })
        .def(py::self == py::self)
        .def("__repr__", [](const EconState& s) { return "EconState(" + toJson(s).dump() + ")"; });
    for (const auto& f : stateFields()) {
        const auto member = f.member;
        state.def_property_readonly(std::string(f.name).c_str(), [member](const EconState& s) { return s.*member; });
    }

    py::class_<MarketResiduals>(m, "MarketResiduals")
        .def_readonly("goods", &MarketResiduals::goods)
        .def_readonly("money", &MarketResiduals::money)
        .def_readonly("supply", &MarketResiduals::supply)
        .def_readonly("labor", &MarketResiduals::labor);

    py::class_<IslmSolution>(m, "IslmSolution")
        .def_readonly("Y", &IslmSolution::Y)
        .def_readonly("i", &IslmSolution::i)
        .def_readonly("r", &IslmSolution::r);

    py::class_<LaborMarket>(m, "LaborMarket")
        .def_readonly("wage", &LaborMarket::wage)
        .def_readonly("labor", &LaborMarket::labor)
        .def_readonly("residual", &LaborMarket::residual);

    py::class_<SolowSolution>(m, "SolowSolution")
        .def_readonly("k_star", &SolowSolution::kStar)
        .def_readonly("k_gold", &SolowSolution::kGold)
        .def_readonly("c_star", &SolowSolution::cStar);

    py::class_<HouseholdChoice>(m, "HouseholdChoice")
        .def_readonly("leisure", &HouseholdChoice::leisure)
        .def_readonly("labor", &HouseholdChoice::labor)
        .def_readonly("cons", &HouseholdChoice::cons)
        .def_readonly("utility", &HouseholdChoice::utility);

    py::class_<SlutskyDecomposition>(m, "SlutskyDecomposition")
        .def_readonly("total", &SlutskyDecomposition::total)
        .def_readonly("substitution", &SlutskyDecomposition::substitution)
        .def_readonly("income", &SlutskyDecomposition::income);

    // Functional forms
    m.def("production", &production, py::arg("A"), py::arg("K"), py::arg("L"), py::arg("alpha"));
    m.def("mpl", &mpl, py::arg("A"), py::arg("K"), py::arg("L"), py::arg("alpha"));
    m.def("mpk", &mpk, py::arg("A"), py::arg("K"), py::arg("L"), py::arg("alpha"));
    m.def("money_demand", &moneyDemand, py::arg("P"), py::arg("Y"), py::arg("i"), py::arg("kY"), py::arg("b"));
    m.def("consumption", &consumption, py::arg("Y"), py::arg("r"), py::arg("c0"), py::arg("c1"), py::arg("T"),
          py::arg("e"));

    // Supply side
    m.def("leisure_choice", &leisureChoice, py::arg("w"), py::arg("theta"), py::arg("H"), py::arg("m"));
    m.def("slutsky", &slutsky, py::arg("w0"), py::arg("w1"), py::arg("theta"), py::arg("H"), py::arg("m"));
    m.def("labor_supply", &laborSupply, py::arg("w"), py::arg("params"));
    m.def("labor_demand", &laborDemand, py::arg("w"), py::arg("A"), py::arg("K"), py::arg("alpha"));
    m.def("labor_market", [](const Params& p) { return laborMarketEq(p); }, py::arg("params"));
    m.def("full_employment_output", &fullEmploymentOutput, py::arg("params"));
    m.def("solow", py::overload_cast<const Params&>(&solowSolve), py::arg("params"));

    // Demand side
    m.def("is_output", &isOutput, py::arg("r"), py::arg("params"));
    m.def("lm_rate", &lmRate, py::arg("Y"), py::arg("P"), py::arg("params"));
    m.def("islm", &islmSolve, py::arg("P"), py::arg("params"));
    m.def("ad_output", &adOutput, py::arg("P"), py::arg("params"));

    // General equilibrium
    m.def("short_run", &shortRunGE, py::arg("params"));
    m.def("long_run", &longRunGE, py::arg("params"));
    m.def("residuals", &residuals, py::arg("state"), py::arg("params"));

    // Diagram graph
    m.def("graph", [] { return toPython(canonicalGraph().toJson()); });
    m.def("export_dot", [] { return exportDot(canonicalGraph()); });
    m.def(
        "propagate",
        [](const std::vector<std::string>& shocked) { return toPython(toJson(canonicalGraph().propagate(shocked))); },
        py::arg("shocked"));
    m.def(
        "provenance_paths", [](int a, int b) { return canonicalGraph().provenancePaths(a, b); }, py::arg("a"),
        py::arg("b"));
    m.def("topological_order", [] { return canonicalGraph().topologicalOrder(); });

    // Panels
    m.def(
        "panel",
        [](int node, const Params& p, const std::optional<Params>& baseline, const std::string& overlay) {
            return toPython(toJson(panelFor(node, p, baseline, overlay)));
        },
        py::arg("node"), py::arg("params"), py::arg("baseline") = py::none(), py::arg("overlay") = "current");
    m.def(
        "render_svg",
        [](int node, const Params& p, const std::optional<Params>& baseline, const std::string& overlay) {
            return renderSvg(panelFor(node, p, baseline, overlay));
        },
        py::arg("node"), py::arg("params"), py::arg("baseline") = py::none(), py::arg("overlay") = "current");

    // Scenarios
    py::class_<ScenarioStore>(m, "ScenarioStore")
        .def(py::init([](const std::string& dir) { return new ScenarioStore(dir); }), py::arg("dir"))
        .def("create", [](ScenarioStore& st, const Params& p) { return toPython(toJson(st.create(p))); },
             py::arg("params"))
        .def("get", [](const ScenarioStore& st, const std::string& id) { return toPython(toJson(st.get(id))); },
             py::arg("id"))
        .def("list", &ScenarioStore::list)
        .def(
            "apply_shock",
            [](ScenarioStore& st, const std::string& id, const std::string& field, double value) {
                auto [sc, plan] = st.applyShock(id, field, value);
                return toPython({{"scenario", toJson(sc)}, {"plan", toJson(plan)}});
            },
            py::arg("id"), py::arg("field"), py::arg("value"))
        .def(
            "compare",
            [](const ScenarioStore& st, const std::string& a, const std::string& b) {
                return toPython(toJson(st.compare(a, b)));
            },
            py::arg("a"), py::arg("b"));
}
