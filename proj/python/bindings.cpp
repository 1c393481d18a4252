// Python bindings for the opetope kernel.  The module works on textual
// inputs (preopetope documents, derivation scripts, OCMT literals) and
// returns canonical strings or JSON-shaped dicts, mirroring the CLI.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <variant>

#include "opetope/coding.hpp"
#include "opetope/counting.hpp"
#include "opetope/errors.hpp"
#include "opetope/named_set.hpp"
#include "opetope/textio.hpp"
#include "opetope/unnamed.hpp"

namespace py = pybind11;
using namespace opetope;
namespace tio = opetope::textio;

namespace {

py::object json_to_py(const nlohmann::json& j) {
    py::module_ json_mod = py::module_::import("json");
    return json_mod.attr("loads")(j.dump());
}

bool starts_with_token(const std::string& text, const std::string& token) {
    std::size_t i = text.find_first_not_of(" \t\r\n");
    return i != std::string::npos && text.compare(i, token.size(), token) == 0;
}

Preopetope load(const std::string& text) {
    if (!starts_with_token(text, "#dialect")) return tio::parse_preopetope(text);
    tio::ScriptResult r = tio::run_script(text);
    if (const auto* u = std::get_if<UnnamedSequent>(&r.value)) return u->source;
    if (const auto* n = std::get_if<NamedSequent>(&r.value)) return to_preopetope(*n);
    throw ParseError("the script does not produce a single cell");
}

}  // namespace

PYBIND11_MODULE(_opetope, m) {
    m.doc() = "Verification kernel for opetopes and opetopic sets";

    py::register_exception<RuleError>(m, "RuleError");
    py::register_exception<ParseError>(m, "ParseError");

    m.def(
        "parse",
        [](const std::string& text) { return tio::parse_preopetope(text).str(); },
        py::arg("text"),
        "Parse a preopetope document and return its canonical form.");

    m.def(
        "is_opetope",
        [](const std::string& text) -> std::pair<bool, std::string> {
            std::string why;
            bool ok = is_opetope(load(text), &why);
            return {ok, why};
        },
        py::arg("text"),
        "Decide opetope-hood; returns (ok, explanation-on-failure).");

    m.def(
        "count",
        [](const std::string& text, bool oracle) {
            Preopetope p = load(text);
            return oracle ? count_oracle(p) : count(p);
        },
        py::arg("text"), py::arg("oracle") = false,
        "Count the faces of an opetope.");

    m.def(
        "target",
        [](const std::string& text) { return target_of(load(text)).first.str(); },
        py::arg("text"), "The target of an opetope of dimension >= 1.");

    m.def(
        "to_named",
        [](const std::string& text) {
            return json_to_py(tio::to_json(to_named(load(text))));
        },
        py::arg("text"),
        "Translate a preopetope to a named derivation (as a JSON-shaped dict).");

    m.def(
        "to_unnamed",
        [](const std::string& script) {
            tio::ScriptResult r = tio::run_script(script);
            const auto* n = std::get_if<NamedSequent>(&r.value);
            if (!n) throw ParseError("expected a named derivation script");
            return to_preopetope(*n).str();
        },
        py::arg("script"),
        "The preopetope coded by a named derivation script.");

    m.def(
        "run_script",
        [](const std::string& script) {
            return json_to_py(tio::to_json(tio::run_script(script)));
        },
        py::arg("script"),
        "Run a derivation script and return its value as a JSON-shaped dict.");

    m.def(
        "materialize",
        [](const std::string& text) {
            OpetopicSet o;
            if (starts_with_token(text, "ocmt")) {
                o = tio::parse_ocmt(text);
            } else {
                tio::ScriptResult r = tio::run_script(text);
                const auto* os = std::get_if<OpetopicSet>(&r.value);
                if (!os) throw ParseError("expected an opetopic-set script or OCMT literal");
                o = *os;
            }
            return json_to_py(tio::to_json(os_materialize(o)));
        },
        py::arg("text"),
        "Materialize an opetopic set: its cell classes and any identity violations.");

    m.def(
        "random_opetope",
        [](int dim, int size, std::uint64_t seed) {
            return generate_random(dim, size, seed).str();
        },
        py::arg("dim"), py::arg("size"), py::arg("seed") = 0,
        "A deterministic random opetope of the given dimension.");
}
