#pragma once

#include <optional>
#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "opetope/named.hpp"
#include "opetope/named_set.hpp"
#include "opetope/preopetope.hpp"
#include "opetope/unnamed.hpp"
#include "opetope/unnamed_set.hpp"

namespace opetope::textio {

/// Parse a standalone address, e.g. "*", "[*][*]]" or "[[]]:3".  The
/// dimension is inferred from the deepest * when present; otherwise a
/// trailing ":k" annotation is required.
Address parse_address(const std::string& text);

/// Parse a preopetope document: optional `let NAME = EXPR` bindings followed
/// by a final expression.  Expressions are `point`, `arrow`,
/// `degen{ EXPR }`, `{ ADDR <- EXPR ; ... }`, or a bound name.  The Unicode
/// aliases <- for ←, * for ∗ and ~> for ⤳ are accepted on input.
Preopetope parse_preopetope(const std::string& text);

/// The value produced by a script.
using ScriptValue = std::variant<UnnamedSequent, NamedSequent, OpetopicSet, UContext>;

struct ScriptResult {
    std::string dialect;
    ScriptValue value;
};

/// Run a derivation script.  The first non-blank line must be a dialect
/// header `#dialect opt?|opt!|optset!|optset!m|optset?`.  Later lines are
/// `let NAME = EXPR` bindings or bare expressions; the script's value is the
/// value of its final statement.
ScriptResult run_script(const std::string& text);

/// Parse an OCMT literal:
///   ocmt { eq { a = b; ... } ctx { x : 0; f : x ~> 0; t^1:f : 0; ... } }
/// Target-tagged variables are written t^k:base; a variable reference may
/// also use the display form (e.g. tf) when it resolves against the
/// context.
OpetopicSet parse_ocmt(const std::string& text);

nlohmann::json to_json(const Preopetope& p);
nlohmann::json to_json(const UnnamedSequent& s);
nlohmann::json to_json(const NamedSequent& s);
nlohmann::json to_json(const OpetopicSet& o);
nlohmann::json to_json(const Complex& c);
nlohmann::json to_json(const UContext& c);
nlohmann::json to_json(const ScriptResult& r);

}  // namespace opetope::textio
