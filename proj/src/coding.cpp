#include "opetope/coding.hpp"

#include <map>

#include "opetope/errors.hpp"
#include "opetope/unnamed.hpp"

namespace opetope {

Preopetope code_cell(const Variable& x, const NamedContext& ctx, const EqTheory& theory) {
    if (x.dim == 0) return Preopetope::point();
    return code_term(ctx.source_of(x), ctx, theory);
}

Preopetope code_term(const NamedTerm& t, const NamedContext& ctx, const EqTheory& theory) {
    const int n = t.dim();
    if (t.is_degen()) return Preopetope::degenerate(code_cell(t.head(), ctx, theory));
    Preopetope out = Preopetope::corolla(code_cell(t.head(), ctx, theory));
    for (const auto& [y, u] : t.args()) {
        Address l(n, {var_address(ctx.source_of(t.head()), y, AddressMode::node, ctx, theory)});
        out = out.proper_graft(l, code_term(u, ctx, theory));
    }
    return out;
}

Preopetope to_preopetope(const NamedSequent& s) {
    if (s.term.is_variable()) return code_cell(s.term.head(), s.ctx, s.theory);
    return code_term(s.term, s.ctx, s.theory);
}

namespace {

struct Namer {
    std::string prefix;
    std::map<int, int> counters;
    std::string fresh(int dim) {
        return prefix + std::to_string(dim) + "_" + std::to_string(counters[dim]++);
    }
};

using Renaming = std::map<Variable, Variable>;

Variable rename_var(const Renaming& sigma, const Variable& v) {
    auto it = sigma.find(v);
    return it == sigma.end() ? v : it->second;
}

NamedTerm rename_term(const Renaming& sigma, const NamedTerm& t) {
    if (t.is_degen()) return NamedTerm::degen(rename_var(sigma, t.head()));
    NamedTerm::Args args;
    for (const auto& [k, v] : t.args())
        args.emplace_back(rename_var(sigma, k), rename_term(sigma, v));
    return NamedTerm::apply(rename_var(sigma, t.head()), std::move(args));
}

NamedSequent rename_sequent(const Renaming& sigma, const NamedSequent& s) {
    NamedSequent out;
    for (const auto& [a, b] : s.theory.generators())
        out.theory.add(rename_var(sigma, a), rename_var(sigma, b));
    for (const auto& [v, ty] : s.ctx.items()) {
        NamedType t;
        for (const NamedTerm& e : ty.chain) t.chain.push_back(rename_term(sigma, e));
        out.ctx.add(rename_var(sigma, v), t);
    }
    out.term = rename_term(sigma, s.term);
    for (const NamedTerm& e : s.type.chain) out.type.chain.push_back(rename_term(sigma, e));
    return out;
}

void bind(Renaming& sigma, const Variable& from, const Variable& to, const EqTheory& to_theory) {
    auto it = sigma.find(from);
    if (it == sigma.end()) {
        sigma.emplace(from, to);
        return;
    }
    if (it->second != to && !to_theory.equal(it->second, to))
        throw RuleError("boundary matching: " + from.display() + " maps to both " +
                        it->second.display() + " and " + to.display());
}

/// Structurally matches the term u (over the grafted sequent's context)
/// against the term v (over the receiving context), pairing arguments
/// through the addresses of their keys, and extends sigma accordingly.
void match_term(const NamedTerm& u, const NamedTerm& v, const NamedSequent& from,
                const NamedSequent& to, Renaming& sigma) {
    if (u.is_degen() != v.is_degen())
        throw RuleError("boundary matching: degeneracy mismatch between " + u.str() + " and " +
                        v.str());
    bind(sigma, u.head(), v.head(), to.theory);
    if (u.is_degen()) return;
    if (u.args().size() != v.args().size())
        throw RuleError("boundary matching: arity mismatch between " + u.str() + " and " +
                        v.str());
    for (const auto& [k, val] : u.args()) {
        Address addr =
            var_address(from.ctx.source_of(u.head()), k, AddressMode::node, from.ctx, from.theory);
        bool matched = false;
        for (const auto& [k2, val2] : v.args()) {
            Address addr2 = var_address(to.ctx.source_of(v.head()), k2, AddressMode::node, to.ctx,
                                         to.theory);
            if (addr == addr2) {
                bind(sigma, k, k2, to.theory);
                match_term(val, val2, from, to, sigma);
                matched = true;
                break;
            }
        }
        if (!matched)
            throw RuleError("boundary matching: no argument of " + v.str() + " at " + addr.str());
    }
}

NamedSequent to_named_impl(const Preopetope& p, Namer& namer) {
    switch (p.kind()) {
        case Preopetope::Kind::point:
            return n_point(namer.fresh(0));
        case Preopetope::Kind::degenerate:
            return n_shift(n_degen(to_named_impl(p.degen_base(), namer)), namer.fresh(p.dim()));
        case Preopetope::Kind::nodes: {
            const int n = p.dim();
            std::vector<std::pair<Address, Preopetope>> peels = decompose(p);
            NamedSequent s = to_named_impl(p.source(Address::empty(n - 1)), namer);
            for (auto it = peels.rbegin(); it != peels.rend(); ++it) {
                const auto& [l, q] = *it;
                // Locate the free source variable of the current term whose
                // leaf address is l.
                NamedTerm st = source_bar(s.term, s.ctx, s.theory);
                Variable a;
                bool found = false;
                for (const Variable& b : term_vars(st)) {
                    if (var_address(s.term, b, AddressMode::leaf, s.ctx, s.theory) == l) {
                        a = b;
                        found = true;
                        break;
                    }
                }
                if (!found)
                    throw RuleError("no free source variable at leaf " + l.str() + " of " +
                                    s.term.str());
                NamedSequent qs = to_named_impl(q, namer);
                // Unify the boundary of the grafted sequent with the
                // receiving context: its iterated sources must literally use
                // the variables of a's type.
                Renaming sigma;
                const NamedType& a_chain = s.ctx.type_of(a);
                NamedType u_chain = qs.type.drop(1);
                if (u_chain.chain.size() != a_chain.chain.size())
                    throw RuleError("boundary matching: type length mismatch at " + a.display());
                for (std::size_t i = 0; i < u_chain.chain.size(); ++i)
                    match_term(u_chain.chain[i], a_chain.chain[i], qs, s, sigma);
                s = n_graft(s, a, rename_sequent(sigma, qs));
            }
            return n_shift(s, namer.fresh(n));
        }
    }
    throw RuleError("internal: unknown preopetope kind");
}

}  // namespace

NamedSequent to_named(const Preopetope& p, const std::string& prefix) {
    Namer namer{prefix, {}};
    return to_named_impl(p, namer);
}

}  // namespace opetope
