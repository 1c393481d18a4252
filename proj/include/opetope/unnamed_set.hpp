#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "opetope/preopetope.hpp"

namespace opetope {

/// A cell of an unnamed opetopic set: a name, a shape, the assignment of a
/// lower cell to every node address of the shape, and (above dimension 0) a
/// target cell.
struct UCell {
    std::string name;
    Preopetope shape = Preopetope::point();
    std::vector<std::pair<Address, std::string>> sources;
    std::string target;  // empty for points

    int dim() const { return shape.dim(); }
};

/// A context of the unnamed opetopic-set calculus: an ordered list of cells
/// with distinct names.
class UContext {
public:
    void add(UCell cell);
    bool has(const std::string& name) const;
    const UCell& cell(const std::string& name) const;
    const std::vector<UCell>& cells() const { return cells_; }
    const std::string& source_at(const UCell& c, const Address& p) const;

private:
    std::vector<UCell> cells_;
};

/// A pasting diagram: either degenerate over a cell, or an assignment of
/// cells to the nodes of an opetope shape.
struct UPastingDiagram {
    bool degenerate = false;
    std::string degen_cell;
    Preopetope shape = Preopetope::point();
    std::vector<std::pair<Address, std::string>> cells;
};

/// Introduce a fresh point.
UContext u_point(UContext ctx, const std::string& name);

/// Form the pasting diagram of the given shape (an opetope in node form)
/// with the given node decoration; checks the shapes and the Inner
/// compatibility of adjacent cells.
UPastingDiagram u_pd(const UContext& ctx, const Preopetope& shape,
                     std::vector<std::pair<Address, std::string>> assignment);

/// The degenerate pasting diagram over a cell.
UPastingDiagram u_degen(const UContext& ctx, const std::string& cell);

/// Fill a pasting diagram with a fresh cell whose target is `target`;
/// checks the globularity conditions.
UContext u_fill(UContext ctx, const UPastingDiagram& pd, const std::string& target,
                const std::string& name);

/// Re-checks all opetopic identities over the whole context; returns the
/// list of violations (empty when the context is a valid opetopic set).
std::vector<std::string> u_verify(const UContext& ctx);

}  // namespace opetope
