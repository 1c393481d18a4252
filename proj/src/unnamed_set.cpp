#include "opetope/unnamed_set.hpp"

#include <algorithm>

#include "opetope/errors.hpp"
#include "opetope/unnamed.hpp"

namespace opetope {

void UContext::add(UCell cell) {
    if (has(cell.name)) throw RuleError("cell " + cell.name + " already exists");
    cells_.push_back(std::move(cell));
}

bool UContext::has(const std::string& name) const {
    for (const UCell& c : cells_)
        if (c.name == name) return true;
    return false;
}

const UCell& UContext::cell(const std::string& name) const {
    for (const UCell& c : cells_)
        if (c.name == name) return c;
    throw RuleError("unknown cell " + name);
}

const std::string& UContext::source_at(const UCell& c, const Address& p) const {
    for (const auto& [q, name] : c.sources)
        if (q == p) return name;
    throw RuleError("cell " + c.name + " has no source at " + p.str());
}

UContext u_point(UContext ctx, const std::string& name) {
    UCell c;
    c.name = name;
    ctx.add(std::move(c));
    return ctx;
}

UPastingDiagram u_pd(const UContext& ctx, const Preopetope& shape,
                     std::vector<std::pair<Address, std::string>> assignment) {
    if (!shape.is_nodes()) throw RuleError("pd: the shape must be in node form");
    derive(shape);  // the shape must be an opetope
    std::sort(assignment.begin(), assignment.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Address> keys;
    for (const auto& [p, name] : assignment) keys.push_back(p);
    if (keys != shape.node_addresses())
        throw RuleError("pd: the decoration does not cover the nodes of " + shape.str());
    for (const auto& [p, name] : assignment) {
        const UCell& c = ctx.cell(name);
        if (c.shape != shape.source(p))
            throw RuleError("pd: cell " + name + " has shape " + c.shape.str() +
                            ", expected " + shape.source(p).str() + " at " + p.str());
    }
    // Inner compatibility: along each inner edge [p[q]], the target of the
    // upper cell is the corresponding source of the lower cell.
    for (const auto& [addr, name] : assignment) {
        if (addr.is_empty()) continue;
        std::vector<Address> es = addr.entries();
        Address q = es.back();
        es.pop_back();
        Address p(addr.dim(), std::move(es));
        const UCell& upper = ctx.cell(name);
        const UCell& lower = ctx.cell(ctx.source_at(ctx.cell(
            [&] {
                for (const auto& [pp, nn] : assignment)
                    if (pp == p) return nn;
                throw RuleError("pd: node " + addr.str() + " does not extend a node");
            }()), q));
        if (upper.target != lower.name)
            throw RuleError("pd: target of " + upper.name + " at " + addr.str() + " is " +
                            upper.target + ", expected " + lower.name);
    }
    UPastingDiagram pd;
    pd.shape = shape;
    pd.cells = std::move(assignment);
    return pd;
}

UPastingDiagram u_degen(const UContext& ctx, const std::string& cell) {
    UPastingDiagram pd;
    pd.degenerate = true;
    pd.degen_cell = cell;
    pd.shape = Preopetope::degenerate(ctx.cell(cell).shape);
    return pd;
}

UContext u_fill(UContext ctx, const UPastingDiagram& pd, const std::string& target,
                const std::string& name) {
    const UCell& x = ctx.cell(target);
    UCell y;
    y.name = name;
    y.shape = pd.shape;
    y.target = target;

    if (pd.degenerate) {
        const UCell& a = ctx.cell(pd.degen_cell);
        if (x.shape != Preopetope::corolla(a.shape))
            throw RuleError("fill: " + target + " has shape " + x.shape.str() +
                            ", expected the corolla over " + a.shape.str());
        if (x.sources.size() != 1 || x.sources.front().second != a.name || x.target != a.name)
            throw RuleError("fill: " + target + " is not globular over " + a.name);
        ctx.add(std::move(y));
        return ctx;
    }

    const int n = pd.shape.dim();
    auto pd_cell = [&](const Address& p) -> const UCell& {
        for (const auto& [q, nm] : pd.cells)
            if (q == p) return ctx.cell(nm);
        throw RuleError("fill: no pasting-diagram cell at " + p.str());
    };
    auto [tshape, wp] = target_of(pd.shape);
    if (x.shape != tshape)
        throw RuleError("fill: " + target + " has shape " + x.shape.str() + ", expected " +
                        tshape.str());
    if (n >= 2) {
        // Glob1: the target of the root cell is the target of x.
        if (pd_cell(Address::empty(n - 1)).target != x.target)
            throw RuleError("fill: target mismatch at the root of the pasting diagram");
        // Glob2: each leaf source of the diagram matches the corresponding
        // source of x under the readdressing.
        for (const auto& [leaf, node] : wp) {
            std::vector<Address> es = leaf.entries();
            Address q = es.back();
            es.pop_back();
            Address p(leaf.dim(), std::move(es));
            if (ctx.source_at(pd_cell(p), q) != ctx.source_at(x, node))
                throw RuleError("fill: source mismatch at leaf " + leaf.str());
        }
    }
    y.sources = pd.cells;
    ctx.add(std::move(y));
    return ctx;
}

std::vector<std::string> u_verify(const UContext& ctx) {
    std::vector<std::string> out;
    for (const UCell& c : ctx.cells()) {
        if (c.dim() < 2) continue;
        try {
            const UCell& t = ctx.cell(c.target);
            if (c.shape.is_degenerate()) {
                if (ctx.source_at(t, Address::empty(c.dim() - 2)) != t.target)
                    out.push_back("Degen identity fails on " + c.name);
                continue;
            }
            for (const auto& [addr, name] : c.sources) {
                if (addr.is_empty()) continue;
                std::vector<Address> es = addr.entries();
                Address q = es.back();
                es.pop_back();
                Address p(addr.dim(), std::move(es));
                if (ctx.cell(name).target !=
                    ctx.source_at(ctx.cell(ctx.source_at(c, p)), q))
                    out.push_back("Inner identity fails on " + c.name + " at " + addr.str());
            }
            if (ctx.cell(ctx.source_at(c, Address::empty(c.dim() - 1))).target != t.target)
                out.push_back("Glob1 identity fails on " + c.name);
            for (const auto& [leaf, node] : target_of(c.shape).second) {
                std::vector<Address> es = leaf.entries();
                Address q = es.back();
                es.pop_back();
                Address p(leaf.dim(), std::move(es));
                if (ctx.source_at(ctx.cell(ctx.source_at(c, p)), q) != ctx.source_at(t, node))
                    out.push_back("Glob2 identity fails on " + c.name + " at " + leaf.str());
            }
        } catch (const RuleError& e) {
            out.push_back(std::string("cell ") + c.name + ": " + e.what());
        }
    }
    return out;
}

}  // namespace opetope
