#pragma once

#include <string>

#include "opetope/named.hpp"
#include "opetope/preopetope.hpp"

namespace opetope {

/// The shape of a cell: the preopetope coded by the variable x (dimension
/// dim x), obtained from its source term.
Preopetope code_cell(const Variable& x, const NamedContext& ctx, const EqTheory& theory);

/// The shape of a pasting diagram: the preopetope coded by the n-term t
/// (dimension n + 1).
Preopetope code_term(const NamedTerm& t, const NamedContext& ctx, const EqTheory& theory);

/// The preopetope coded by the subject of a sequent: code_cell for a
/// variable subject, code_term otherwise.
Preopetope to_preopetope(const NamedSequent& s);

/// A derivation of p in the named calculus, with deterministically generated
/// variable names (prefix + dimension + counter).
NamedSequent to_named(const Preopetope& p, const std::string& prefix = "x");

}  // namespace opetope
