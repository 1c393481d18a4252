#include <algorithm>

#include "opetope/errors.hpp"
#include "opetope/named.hpp"

namespace opetope {

NamedSequent n_point(const std::string& name) {
    NamedSequent s;
    Variable x(name, 0);
    s.ctx.add(x, NamedType{});
    s.term = NamedTerm::var(x);
    s.type = NamedType{};
    return s;
}

NamedSequent n_degen(const NamedSequent& s) {
    if (!s.term.is_variable())
        throw RuleError("degen expects a sequent whose subject is a variable");
    NamedSequent out = s;
    out.term = NamedTerm::degen(s.term.head());
    out.type.chain.insert(out.type.chain.begin(), s.term);
    return out;
}

NamedSequent n_shift(const NamedSequent& s, const std::string& name) {
    if (s.ctx.find_display(name))
        throw RuleError("shift: the name " + name + " is already in the context");
    NamedSequent out = s;
    Variable x(name, s.dim() + 1);
    NamedType type = s.type;
    type.chain.insert(type.chain.begin(), s.term);
    out.ctx.add(x, type);
    out.term = NamedTerm::var(x);
    out.type = type;
    return out;
}

NamedSequent n_degen_shift(const NamedSequent& s, const std::string& name) {
    return n_shift(n_degen(s), name);
}

NamedSequent n_graft(const NamedSequent& t, const Variable& a, const NamedSequent& x) {
    if (t.term.is_degen()) throw RuleError("graft: the receiving term is degenerate");
    if (!x.term.is_variable())
        throw RuleError("graft: the grafted sequent must have a variable subject");
    const Variable& xv = x.term.head();
    const int n = t.dim();
    if (x.dim() != n)
        throw RuleError("graft: dimension mismatch between " + t.term.str() + " and " +
                        xv.display());
    if (!t.ctx.has(a)) throw RuleError("graft: unknown variable " + a.display());
    if (a.dim != n - 1)
        throw RuleError("graft: " + a.display() + " has dimension " + std::to_string(a.dim) +
                        ", expected " + std::to_string(n - 1));

    EqTheory combined = t.theory;
    combined.merge(x.theory);

    NamedTerm st = source_bar(t.term, t.ctx, t.theory);
    if (!contains_var(term_vars(st), a, combined))
        throw RuleError("graft: " + a.display() + " is not a free source variable of " +
                        t.term.str());

    // Side condition sa = ssx: the cell x fits onto the edge a.
    if (n >= 2) {
        const NamedTerm& sa = t.ctx.source_of(a);
        const NamedTerm& ssx = x.type.chain[1];
        if (!term_equal(sa, ssx, combined))
            throw RuleError("graft: source mismatch, s" + a.display() + " = " + sa.str() +
                            " but ss" + xv.display() + " = " + ssx.str());
    }

    // Compatibility: the two contexts may only share a and the variables of
    // its iterated sources, with matching typings.
    std::vector<Variable> allowed{a};
    for (const NamedTerm& e : t.ctx.type_of(a).chain) collect_deep_vars(e, allowed);
    for (const auto& [v, ty] : x.ctx.items()) {
        auto in_t = t.ctx.find_display(v.display());
        if (!in_t) continue;
        bool ok = false;
        for (const Variable& w : allowed)
            if (combined.equal(w, v) || w == v) ok = true;
        if (!ok)
            throw RuleError("graft: contexts both declare " + v.display() +
                            ", which is not among the sources of " + a.display());
        if (!type_equal(ty, t.ctx.type_of(*in_t), combined))
            throw RuleError("graft: incompatible typings of the shared variable " + v.display());
    }

    NamedSequent out;
    out.theory = combined;
    out.ctx = t.ctx;
    for (const auto& [v, ty] : x.ctx.items())
        if (!out.ctx.has(v)) out.ctx.add(v, ty);

    out.term = graft_notation(t.term, a, xv, out.ctx, out.theory);

    const NamedTerm& sx = x.type.chain[0];
    SubstResult sub = named_substitute(t.type.chain[0], sx, a, out.ctx, out.theory);
    for (const auto& [p, q] : sub.equations) out.theory.add(p, q);
    out.type = t.type;
    out.type.chain[0] = sub.term;
    return out;
}

}  // namespace opetope
