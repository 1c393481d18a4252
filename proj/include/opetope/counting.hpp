#pragma once

#include <cstdint>

#include "opetope/preopetope.hpp"

namespace opetope {

/// Number of faces (cells of every dimension) of an opetope, counted up to
/// identification: #point = 1, #arrow = 3, #corolla Y_p = 2 + #p,
/// #degenerate {{p}} = 2 + #p, and grafting q along an inner edge e
/// contributes #q - #e.  Throws RuleError if p is not an opetope.
std::uint64_t count(const Preopetope& p);

/// Independent face count: translate p to a named derivation, build the
/// representable opetopic set over it, and count the cell classes of the
/// materialized complex.
std::uint64_t count_oracle(const Preopetope& p);

}  // namespace opetope
