#include "respdeg/degrees.hpp"
#include "respdeg/model_io.hpp"
#include "respdeg/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <fstream>
#include <sstream>

namespace py = pybind11;
using namespace respdeg;

namespace
{

struct model_handle
{
    loaded_model loaded;
    std::string hash;

    explicit model_handle(std::string_view text)
        : loaded{ load_model(text) }, hash{ content_hash(serialize_model(loaded.model, loaded.affairs)) }
    {
    }

    [[nodiscard]] const cgs& model() const { return loaded.model; }
};

preclusion_semantics to_semantics(const std::string& text)
{
    if (text == "future")
        return preclusion_semantics::future_avoidance;
    if (text == "include-initial")
        return preclusion_semantics::include_initial;
    throw std::invalid_argument("unknown semantics '" + text + "', expected future or include-initial");
}

state_id to_state(const cgs& model, const std::string& name)
{
    if (auto s = model.find_state(name))
        return *s;
    throw std::invalid_argument("unknown state '" + name + "'");
}

std::vector<std::string> names_of(const cgs& model, coalition c)
{
    std::vector<std::string> out;
    for (auto a : c.members())
        out.push_back(model.agent_name(a));
    return out;
}

py::object to_fraction(const std::optional<degree_value>& v)
{
    if (!v)
        return py::none();
    static const auto fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(v->numerator(), v->denominator());
}

std::vector<std::string> state_names(const cgs& model, const state_set& s)
{
    std::vector<std::string> out;
    for (auto q : s.elements())
        out.push_back(model.state_name(q));
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Responsibility degrees in concurrent game structures";

    py::register_exception<model_error>(m, "ModelError", PyExc_ValueError);

    py::class_<model_handle>(m, "Model")
        .def(py::init<std::string_view>(), py::arg("text"), "Parse and validate a model from JSON text.")
        .def_static(
            "load",
            [](const std::string& path) {
                std::ifstream in{ path, std::ios::binary };
                if (!in)
                    throw std::invalid_argument("cannot read '" + path + "'");
                std::ostringstream buf;
                buf << in.rdbuf();
                return model_handle{ buf.str() };
            },
            py::arg("path"))
        .def_property_readonly("agents",
                               [](const model_handle& h) { return h.model().agent_names(); })
        .def_property_readonly("states",
                               [](const model_handle& h) { return h.model().state_names(); })
        .def_property_readonly("affairs",
                               [](const model_handle& h) {
                                   std::map<std::string, std::vector<std::string>> out;
                                   for (const auto& [label, set] : h.loaded.affairs)
                                       out.emplace(label, state_names(h.model(), set));
                                   return out;
                               })
        .def_property_readonly("num_transitions", [](const model_handle& h) { return h.model().num_transitions(); })
        .def_property_readonly("content_hash", [](const model_handle& h) { return h.hash; })
        .def("serialize", [](const model_handle& h) { return serialize_model(h.model(), h.loaded.affairs); })
        .def(
            "can_preclude",
            [](const model_handle& h, const std::string& coalition_text, const std::string& state,
               const std::string& affairs, const std::string& semantics) {
                const auto& model = h.model();
                return can_preclude(model, parse_coalition(coalition_text, model), to_state(model, state),
                                    parse_affairs(affairs, model, h.loaded.affairs), to_semantics(semantics));
            },
            py::arg("coalition"), py::arg("state"), py::arg("affairs"), py::arg("semantics") = "future")
        .def(
            "responsible",
            [](const model_handle& h, const std::string& state, const std::string& affairs,
               const std::string& semantics, bool minimal_only, unsigned threads) {
                const auto& model = h.model();
                const auto w = responsible_coalitions(model, to_state(model, state),
                                                      parse_affairs(affairs, model, h.loaded.affairs),
                                                      to_semantics(semantics), threads);
                const auto list = minimal_only ? minimal_responsible_coalitions(w) : w.coalitions;
                std::vector<std::vector<std::string>> out;
                for (auto c : list)
                    out.push_back(names_of(model, c));
                return out;
            },
            py::arg("state"), py::arg("affairs"), py::arg("semantics") = "future", py::arg("minimal_only") = false,
            py::arg("threads") = 1)
        .def(
            "sdr",
            [](const model_handle& h, const std::string& coalition_text, const std::string& state,
               const std::string& affairs, const std::string& semantics, unsigned threads) {
                const auto& model = h.model();
                const auto r = sdr(model, to_state(model, state), parse_affairs(affairs, model, h.loaded.affairs),
                                   parse_coalition(coalition_text, model), to_semantics(semantics), threads);
                py::object witness = py::none();
                if (r.witness)
                    witness = py::cast(names_of(model, *r.witness));
                return py::make_tuple(to_fraction(r.value), witness);
            },
            py::arg("coalition"), py::arg("state"), py::arg("affairs"), py::arg("semantics") = "future",
            py::arg("threads") = 1)
        .def(
            "fdr",
            [](const model_handle& h, const std::string& coalition_text, const std::string& state,
               const std::string& affairs, const std::string& semantics) {
                const auto& model = h.model();
                const auto r = fdr(model, to_state(model, state), parse_affairs(affairs, model, h.loaded.affairs),
                                   parse_coalition(coalition_text, model), to_semantics(semantics));
                py::object witness = py::none();
                if (r.witness)
                    witness = py::str(format_sequence(model, *r.witness));
                py::object distance = py::none();
                if (r.distance)
                    distance = py::int_(*r.distance);
                return py::make_tuple(to_fraction(r.value), distance, witness);
            },
            py::arg("coalition"), py::arg("state"), py::arg("affairs"), py::arg("semantics") = "future")
        .def(
            "report",
            [](const model_handle& h, const std::string& state, const std::string& affairs,
               const std::string& semantics, const std::string& format, unsigned precision, unsigned threads) {
                const auto& model = h.model();
                const auto fmt = parse_report_format(format);
                if (!fmt)
                    throw std::invalid_argument("unknown format '" + format + "', expected table, json or csv");
                const auto report = build_report(model, to_state(model, state),
                                                 parse_affairs(affairs, model, h.loaded.affairs),
                                                 to_semantics(semantics), threads, {}, h.hash);
                return render_report(model, report, *fmt, precision);
            },
            py::arg("state"), py::arg("affairs"), py::arg("semantics") = "future", py::arg("format") = "json",
            py::arg("precision") = 4, py::arg("threads") = 1);
}
