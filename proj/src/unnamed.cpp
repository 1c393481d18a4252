#include "opetope/unnamed.hpp"

#include <algorithm>
#include <map>

#include "opetope/errors.hpp"

namespace opetope {

namespace {

void sort_context(LeafNodeBijection& ctx) {
    std::sort(ctx.begin(), ctx.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
}

const Address* context_lookup(const LeafNodeBijection& ctx, const Address& leaf) {
    for (const auto& [l, n] : ctx)
        if (l == leaf) return &n;
    return nullptr;
}

/// Invariants of every derivable sequent: the target is one dimension below
/// the source, and at dimension >= 2 the context is a bijection between the
/// leaves of the source and the nodes of the target.
void assert_invariants(const UnnamedSequent& s) {
    const int n = s.source.dim();
    if (n == 0) {
        if (s.target || !s.context.empty())
            throw RuleError("internal: malformed point sequent");
        return;
    }
    if (!s.target || s.target->dim() != n - 1)
        throw RuleError("internal: target dimension mismatch in sequent for " + s.source.str());
    if (n < 2) {
        if (!s.context.empty())
            throw RuleError("internal: nonempty context below dimension 2");
        return;
    }
    std::vector<Address> leaves = s.source.leaf_addresses();
    std::vector<Address> keys, values;
    for (const auto& [l, t] : s.context) {
        keys.push_back(l);
        values.push_back(t);
    }
    if (keys != leaves)
        throw RuleError("internal: context keys differ from the source leaves of " +
                        s.source.str());
    std::sort(values.begin(), values.end());
    std::vector<Address> nodes = s.target->node_addresses();
    std::sort(nodes.begin(), nodes.end());
    if (values != nodes)
        throw RuleError("internal: context values differ from the target nodes of " +
                        s.source.str());
}

/// The edge decoration e_[at] of the source of s: for at = [p[q]], the
/// preopetope s_[q] s_[p] (source of the source), which any decoration
/// grafted at `at` must have as its target.
const Preopetope& edge_at(const Preopetope& source, const Address& at) {
    if (at.is_empty())
        throw RuleError("grafting at the root address " + at.str());
    std::vector<Address> es = at.entries();
    Address last = es.back();
    es.pop_back();
    Address parent(at.dim(), std::move(es));
    if (!source.has_node(parent))
        throw RuleError("leaf " + at.str() + " does not sit over a node of " + source.str());
    const Preopetope& dec = source.source(parent);
    if (!dec.has_node(last))
        throw RuleError("leaf " + at.str() + " does not name an edge of " + source.str());
    return dec.source(last);
}

}  // namespace

std::string UnnamedSequent::str() const {
    std::string out = "{";
    bool first = true;
    for (const auto& [l, n] : context) {
        if (!first) out += ", ";
        first = false;
        out += l.str() + " / " + n.str();
    }
    out += "} |- " + source.str() + " -> " + (target ? target->str() : "empty");
    return out;
}

UnnamedSequent rule_point() {
    return UnnamedSequent{{}, Preopetope::point(), std::nullopt};
}

UnnamedSequent rule_degen(const UnnamedSequent& s) {
    assert_invariants(s);
    const int n = s.source.dim();
    UnnamedSequent out;
    out.source = Preopetope::degenerate(s.source);
    out.target = Preopetope::corolla(s.source);
    out.context.emplace_back(Address::empty(n + 1), Address::empty(n));
    assert_invariants(out);
    return out;
}

UnnamedSequent rule_shift(const UnnamedSequent& s) {
    assert_invariants(s);
    const int n = s.source.dim();
    UnnamedSequent out;
    out.source = Preopetope::corolla(s.source);
    out.target = s.source;
    for (const Address& a : s.source.node_addresses())
        out.context.emplace_back(Address(n, {a}), a);
    assert_invariants(out);
    return out;
}

UnnamedSequent rule_graft(const UnnamedSequent& s, const Address& at, const UnnamedSequent& q) {
    assert_invariants(s);
    assert_invariants(q);
    const int n = s.source.dim();
    if (n < 2) throw RuleError("grafting applies from dimension 2 upward");
    if (q.source.dim() != n - 1)
        throw RuleError("grafted sequent has dimension " + std::to_string(q.source.dim()) +
                        ", expected " + std::to_string(n - 1));
    const Address* r = context_lookup(s.context, at);
    if (!r)
        throw RuleError(at.str() + " is not a leaf of " + s.source.str());
    const Preopetope& edge = edge_at(s.source, at);
    if (!q.target || *q.target != edge)
        throw RuleError("grafting at " + at.str() + ": decoration target " +
                        (q.target ? q.target->str() : std::string("empty")) +
                        " differs from the edge decoration " + edge.str());

    UnnamedSequent out;
    out.source = s.source.improper_graft(at, q.source);
    out.target = substitute(*s.target, *r, q.source, q.context);
    for (const auto& [a, rr] : s.context) {
        if (a == at) continue;
        if (r->is_prefix_of(rr) && rr.size() > r->size()) {
            // rr = r · [y] · rest; the readdressing pair (x, y) of q's
            // context splices in the leaf x of q.
            const Address& y = rr.entries()[r->size()];
            const auto it = std::find_if(q.context.begin(), q.context.end(),
                                         [&](const auto& p) { return p.second == y; });
            if (it == q.context.end())
                throw RuleError("internal: no readdressing pair for node " + y.str());
            std::vector<Address> es(rr.entries().begin(), rr.entries().begin() + r->size());
            es.insert(es.end(), it->first.entries().begin(), it->first.entries().end());
            es.insert(es.end(), rr.entries().begin() + r->size() + 1, rr.entries().end());
            out.context.emplace_back(a, Address(rr.dim(), std::move(es)));
        } else {
            out.context.emplace_back(a, rr);
        }
    }
    for (const Address& sj : q.source.node_addresses())
        out.context.emplace_back(at.append(sj), r->concat_any(sj));
    sort_context(out.context);
    assert_invariants(out);
    return out;
}

std::vector<std::pair<Address, Preopetope>> decompose(const Preopetope& p) {
    if (!p.is_nodes())
        throw RuleError("decomposition applies to node-form preopetopes");
    std::vector<std::pair<Address, Preopetope>> peels;
    Preopetope work = p;
    while (work.node_count() > 1) {
        // The lexicographically greatest node has no extension below it, so it
        // is a legal last graft.
        std::vector<Address> nodes = work.node_addresses();
        const Address& l = nodes.back();
        if (l.is_empty())
            throw RuleError("internal: root node is lexicographically maximal among several");
        peels.emplace_back(l, work.source(l));
        work = work.without_node(l);
    }
    const Address& root = work.entries().front().first;
    if (!root.is_empty())
        throw RuleError("no node at the root address " + Address::empty(root.dim()).str() +
                        " of " + p.str());
    return peels;
}

namespace {

UnnamedSequent derive_with_peels(const Preopetope& p,
                                 const std::vector<std::pair<Address, Preopetope>>& peels) {
    UnnamedSequent s = rule_shift(derive(p.source(Address::empty(p.dim() - 1))));
    for (auto it = peels.rbegin(); it != peels.rend(); ++it)
        s = rule_graft(s, it->first, derive(it->second));
    if (s.source != p) throw RuleError("internal: derivation does not reproduce " + p.str());
    return s;
}

}  // namespace

UnnamedSequent derive(const Preopetope& p) {
    switch (p.kind()) {
        case Preopetope::Kind::point:
            return rule_point();
        case Preopetope::Kind::degenerate:
            return rule_degen(derive(p.degen_base()));
        case Preopetope::Kind::nodes: {
            if (p.dim() == 1) {
                if (p != Preopetope::arrow())
                    throw RuleError("the only 1-opetope is the arrow, got " + p.str());
                return rule_shift(rule_point());
            }
            return derive_with_peels(p, decompose(p));
        }
    }
    throw RuleError("internal: unknown preopetope kind");
}

UnnamedSequent derive_with_random_order(const Preopetope& p, std::mt19937_64& rng) {
    if (!p.is_nodes() || p.dim() < 2) return derive(p);
    // Peel, at each step, a uniformly random node that no other node extends
    // (any such node is a legal last graft), never the root.
    std::vector<std::pair<Address, Preopetope>> peels;
    Preopetope work = p;
    while (work.node_count() > 1) {
        std::vector<Address> nodes = work.node_addresses();
        std::vector<Address> peelable;
        for (const Address& a : nodes) {
            if (a.is_empty()) continue;
            bool maximal = true;
            for (const Address& b : nodes)
                if (b != a && a.is_prefix_of(b)) maximal = false;
            if (maximal) peelable.push_back(a);
        }
        if (peelable.empty())
            throw RuleError("no peelable node in " + work.str());
        const Address& l = peelable[rng() % peelable.size()];
        peels.emplace_back(l, work.source(l));
        work = work.without_node(l);
    }
    if (!work.entries().front().first.is_empty())
        throw RuleError("no node at the root address of " + p.str());
    return derive_with_peels(p, peels);
}

std::pair<Preopetope, LeafNodeBijection> target_of(const Preopetope& p) {
    if (p.dim() == 0) throw RuleError("the point has no target");
    UnnamedSequent s = derive(p);
    return {*s.target, s.context};
}

bool is_opetope(const Preopetope& p, std::string* why) {
    try {
        derive(p);
        return true;
    } catch (const RuleError& e) {
        if (why) *why = e.what();
        return false;
    }
}

namespace {

/// A random sequent of dimension m whose target is exactly `edge`: start
/// from the corolla over `edge` and graft corollas at leaves (single-node
/// grafts never change the target), or return the degenerate over w when
/// edge is the corolla over w.
UnnamedSequent gen_with_target(int m, const Preopetope& edge, int budget, std::mt19937_64& rng) {
    if (m >= 2 && edge.is_nodes() && edge.node_count() == 1 &&
        edge.entries().front().first.is_empty() && rng() % 5 == 0)
        return rule_degen(derive(edge.entries().front().second));
    UnnamedSequent s = rule_shift(derive(edge));
    int nodes = 1;
    while (m >= 2 && nodes < budget && rng() % 5 < 2) {
        if (s.context.empty()) break;
        const Address& l = s.context[rng() % s.context.size()].first;
        const Preopetope& e = edge_at(s.source, l);
        s = rule_graft(s, l, rule_shift(derive(e)));
        ++nodes;
    }
    return s;
}

UnnamedSequent random_sequent(int n, int budget, std::mt19937_64& rng) {
    if (n == 0) return rule_point();
    if (n == 1) return rule_shift(rule_point());
    if (rng() % 6 == 0)
        return rule_degen(random_sequent(n - 2, std::max(1, budget / 2), rng));
    UnnamedSequent base = random_sequent(n - 1, 1 + static_cast<int>(rng() % std::max(1, budget)),
                                         rng);
    UnnamedSequent s = rule_shift(base);
    int nodes = 1;
    while (nodes < budget && !s.context.empty()) {
        if (rng() % 3 == 0) break;
        const Address& l = s.context[rng() % s.context.size()].first;
        const Preopetope& e = edge_at(s.source, l);
        UnnamedSequent q = gen_with_target(n - 1, e, budget - nodes, rng);
        s = rule_graft(s, l, q);
        ++nodes;
    }
    return s;
}

}  // namespace

UnnamedSequent generate_random_sequent(int dim, int size, std::mt19937_64& rng) {
    if (dim < 0) throw RuleError("dimension must be nonnegative");
    return random_sequent(dim, std::max(1, size), rng);
}

Preopetope generate_random(int dim, int size, std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ull * (dim + 1)) ^ (0x100000001b3ull * size));
    return generate_random_sequent(dim, size, rng).source;
}

bool substitute_associativity_check(const Preopetope& t, const Address& a1, const Preopetope& q1,
                                    const Address& a2, const Preopetope& q2,
                                    const LeafNodeBijection& ctx1, const LeafNodeBijection& ctx2) {
    if (q1.has_node(a2)) {
        // Nested: substitute q2 inside q1 first, or substitute q1 into t and
        // then q2 at the shifted position a1 · a2.
        Preopetope inner = substitute(q1, a2, q2, ctx2);
        LeafNodeBijection inner_ctx = target_of(inner).second;
        // The composite must still have the same target as q1 for the outer
        // substitution to make sense; target_of recomputes its readdressing.
        Preopetope lhs = substitute(t, a1, inner, inner_ctx);
        Preopetope rhs = substitute(substitute(t, a1, q1, ctx1), a1.concat_any(a2), q2, ctx2);
        return lhs == rhs;
    }
    // Disjoint: a1 and a2 are prefix-incomparable nodes of t; neither
    // substitution readdresses the other position.
    if (a1.is_prefix_of(a2) || a2.is_prefix_of(a1))
        throw RuleError("disjoint substitution check expects incomparable addresses");
    Preopetope lhs = substitute(substitute(t, a1, q1, ctx1), a2, q2, ctx2);
    Preopetope rhs = substitute(substitute(t, a2, q2, ctx2), a1, q1, ctx1);
    return lhs == rhs;
}

}  // namespace opetope
