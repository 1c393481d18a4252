#include "opetope/named.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "opetope/errors.hpp"

namespace opetope {

// ---- NamedTerm ----

NamedTerm NamedTerm::var(Variable x) {
    NamedTerm t;
    t.head_ = std::move(x);
    return t;
}

NamedTerm NamedTerm::degen(Variable x) {
    NamedTerm t;
    t.degen_ = true;
    t.head_ = std::move(x);
    return t;
}

NamedTerm NamedTerm::apply(Variable head, Args args) {
    NamedTerm t;
    t.head_ = std::move(head);
    t.args_ = std::move(args);
    std::sort(t.args_.begin(), t.args_.end(),
              [](const Arg& a, const Arg& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < t.args_.size(); ++i)
        if (t.args_[i - 1].first == t.args_[i].first)
            throw RuleError("duplicate grafting onto " + t.args_[i].first.display());
    return t;
}

NamedTerm NamedTerm::with_arg(Variable key, NamedTerm value) const {
    if (degen_) throw RuleError("cannot graft onto a degenerate term");
    Args a = args_;
    a.emplace_back(std::move(key), std::move(value));
    return apply(head_, std::move(a));
}

NamedTerm NamedTerm::without_arg(const Variable& key) const {
    Args a;
    for (const Arg& it : args_)
        if (it.first != key) a.push_back(it);
    if (a.size() == args_.size()) throw RuleError("no grafting onto " + key.display());
    return apply(head_, std::move(a));
}

NamedTerm NamedTerm::replace_arg(const Variable& key, NamedTerm value) const {
    Args a;
    bool found = false;
    for (const Arg& it : args_) {
        if (it.first == key) {
            a.emplace_back(it.first, value);
            found = true;
        } else {
            a.push_back(it);
        }
    }
    if (!found) throw RuleError("no grafting onto " + key.display());
    return apply(head_, std::move(a));
}

bool NamedTerm::operator==(const NamedTerm& o) const {
    return degen_ == o.degen_ && head_ == o.head_ && args_ == o.args_;
}

std::string NamedTerm::str() const {
    if (degen_) return "_" + head_.display();
    std::string out = head_.display();
    if (!args_.empty()) {
        out += "(";
        bool first = true;
        for (const Arg& a : args_) {
            if (!first) out += ", ";
            first = false;
            out += a.first.display() + " <- " + a.second.str();
        }
        out += ")";
    }
    return out;
}

// ---- NamedType ----

NamedType NamedType::drop(std::size_t k) const {
    if (k > chain.size()) throw RuleError("type too short");
    return NamedType{std::vector<NamedTerm>(chain.begin() + static_cast<long>(k), chain.end())};
}

std::string NamedType::str() const {
    std::string out;
    for (const NamedTerm& t : chain) out += t.str() + " ~> ";
    out += "0";
    return out;
}

// ---- EqTheory ----

void EqTheory::add(const Variable& a, const Variable& b) {
    if (a == b) return;
    gens_.emplace_back(a, b);
}

void EqTheory::merge(const EqTheory& other) {
    for (const auto& g : other.gens_) gens_.push_back(g);
}

namespace {

// Collects the equivalence class of `a` by closure over the generators.
std::vector<Variable> eq_class(const std::vector<std::pair<Variable, Variable>>& gens,
                               const Variable& a) {
    std::vector<Variable> cls{a};
    bool changed = true;
    auto in = [&](const Variable& v) {
        return std::find(cls.begin(), cls.end(), v) != cls.end();
    };
    while (changed) {
        changed = false;
        for (const auto& [x, y] : gens) {
            if (in(x) && !in(y)) {
                cls.push_back(y);
                changed = true;
            } else if (in(y) && !in(x)) {
                cls.push_back(x);
                changed = true;
            }
        }
    }
    return cls;
}

}  // namespace

bool EqTheory::equal(const Variable& a, const Variable& b) const {
    if (a == b) return true;
    std::vector<Variable> cls = eq_class(gens_, a);
    return std::find(cls.begin(), cls.end(), b) != cls.end();
}

Variable EqTheory::rep(const Variable& a) const {
    std::vector<Variable> cls = eq_class(gens_, a);
    return *std::min_element(cls.begin(), cls.end());
}

std::string EqTheory::str() const {
    std::string out = "{";
    bool first = true;
    for (const auto& [a, b] : gens_) {
        if (!first) out += ", ";
        first = false;
        out += a.display() + " = " + b.display();
    }
    return out + "}";
}

// ---- NamedContext ----

void NamedContext::add(const Variable& x, const NamedType& type) {
    for (const Item& it : items_) {
        if (it.first == x) {
            if (it.second != type)
                throw RuleError("variable " + x.display() + " already typed differently");
            return;
        }
        if (it.first.display() == x.display())
            throw RuleError("name clash on " + x.display());
    }
    if (static_cast<int>(type.chain.size()) != x.dim)
        throw RuleError("type of " + x.display() + " has length " +
                        std::to_string(type.chain.size()) + ", expected " + std::to_string(x.dim));
    items_.emplace_back(x, type);
}

bool NamedContext::has(const Variable& x) const {
    for (const Item& it : items_)
        if (it.first == x) return true;
    return false;
}

const NamedType& NamedContext::type_of(const Variable& x) const {
    for (const Item& it : items_)
        if (it.first == x) return it.second;
    throw RuleError("variable " + x.display() + " is not in the context");
}

const NamedTerm& NamedContext::source_of(const Variable& x) const {
    const NamedType& t = type_of(x);
    if (t.chain.empty()) throw RuleError("the point " + x.display() + " has no source");
    return t.chain.front();
}

std::optional<Variable> NamedContext::find_display(const std::string& name) const {
    for (const Item& it : items_)
        if (it.first.display() == name) return it.first;
    return std::nullopt;
}

std::string NamedContext::str() const {
    std::string out;
    bool first = true;
    for (const Item& it : items_) {
        if (!first) out += ", ";
        first = false;
        out += it.first.display() + " : " + it.second.str();
    }
    return out;
}

std::string NamedSequent::str() const {
    return theory.str() + " |> " + ctx.str() + " |- " + term.str() + " : " + type.str();
}

// ---- Term operations ----

std::vector<Variable> term_vars(const NamedTerm& t) {
    std::vector<Variable> out;
    if (t.is_degen()) return out;
    out.push_back(t.head());
    for (const auto& [k, v] : t.args()) {
        std::vector<Variable> sub = term_vars(v);
        out.insert(out.end(), sub.begin(), sub.end());
    }
    return out;
}

void collect_deep_vars(const NamedTerm& t, std::vector<Variable>& out) {
    out.push_back(t.head());
    for (const auto& [k, v] : t.args()) {
        out.push_back(k);
        collect_deep_vars(v, out);
    }
}

bool contains_var(const std::vector<Variable>& vars, const Variable& x, const EqTheory& theory) {
    for (const Variable& v : vars)
        if (theory.equal(v, x)) return true;
    return false;
}

bool term_equal(const NamedTerm& a, const NamedTerm& b, const EqTheory& theory) {
    if (a.is_degen() != b.is_degen()) return false;
    if (!theory.equal(a.head(), b.head())) return false;
    if (a.args().size() != b.args().size()) return false;
    std::vector<bool> used(b.args().size(), false);
    for (const auto& [k, v] : a.args()) {
        bool matched = false;
        for (std::size_t i = 0; i < b.args().size(); ++i) {
            if (used[i]) continue;
            if (theory.equal(k, b.args()[i].first) && term_equal(v, b.args()[i].second, theory)) {
                used[i] = true;
                matched = true;
                break;
            }
        }
        if (!matched) return false;
    }
    return true;
}

bool type_equal(const NamedType& a, const NamedType& b, const EqTheory& theory) {
    if (a.chain.size() != b.chain.size()) return false;
    for (std::size_t i = 0; i < a.chain.size(); ++i)
        if (!term_equal(a.chain[i], b.chain[i], theory)) return false;
    return true;
}

NamedTerm source_bar(const NamedTerm& t, const NamedContext& ctx, const EqTheory& theory) {
    if (t.is_degen()) return NamedTerm::var(t.head());
    NamedTerm r = ctx.source_of(t.head());
    for (const auto& [y, u] : t.args())
        r = named_substitute(r, source_bar(u, ctx, theory), y, ctx, theory).term;
    return r;
}

namespace {

bool arg_key_bound(const NamedTerm& t, const Variable& z, const EqTheory& theory) {
    for (const auto& [k, v] : t.args())
        if (theory.equal(k, z)) return true;
    return false;
}

/// Places the grafting z <- v at the unique node of w whose source has z
/// free.
NamedTerm attach_term(const NamedTerm& w, const Variable& z, const NamedTerm& v,
                      const NamedContext& ctx, const EqTheory& theory) {
    if (w.is_degen()) throw RuleError("cannot graft onto a degenerate term");
    const NamedTerm& shead = ctx.source_of(w.head());
    if (contains_var(term_vars(shead), z, theory) && !arg_key_bound(w, z, theory))
        return w.with_arg(z, v);
    for (const auto& [k, u] : w.args())
        if (contains_var(term_vars(source_bar(u, ctx, theory)), z, theory))
            return w.replace_arg(k, attach_term(u, z, v, ctx, theory));
    throw RuleError(z.display() + " is not a free source variable of " + w.str());
}

}  // namespace

NamedTerm graft_notation(const NamedTerm& t, const Variable& a, const Variable& x,
                         const NamedContext& ctx, const EqTheory& theory) {
    return attach_term(t, a, NamedTerm::var(x), ctx, theory);
}

SubstResult named_substitute(const NamedTerm& u, const NamedTerm& w, const Variable& a,
                             const NamedContext& ctx, const EqTheory& theory) {
    if (!w.is_degen()) {
        if (u.is_degen()) return {u, {}};
        if (theory.equal(u.head(), a)) {
            // u = a(zi <- vi): w takes a's place and inherits the graftings.
            NamedTerm res = w;
            for (const auto& [z, v] : u.args()) res = attach_term(res, z, v, ctx, theory);
            return {res, {}};
        }
        NamedTerm::Args args;
        std::vector<std::pair<Variable, Variable>> eqs;
        for (const auto& [k, v] : u.args()) {
            SubstResult r = named_substitute(v, w, a, ctx, theory);
            args.emplace_back(k, r.term);
            eqs.insert(eqs.end(), r.equations.begin(), r.equations.end());
        }
        return {NamedTerm::apply(u.head(), std::move(args)), std::move(eqs)};
    }

    // w = _b: substituting an empty pasting diagram for a.
    const Variable& b = w.head();
    if (u.is_degen()) return {u, {}};
    if (theory.equal(u.head(), a)) {
        if (u.args().empty()) return {w, {}};
        if (u.args().size() == 1) {
            if (!theory.equal(u.args().front().first, b))
                throw RuleError("grafting onto " + u.args().front().first.display() +
                                " under the collapsed cell " + a.display());
            return {u.args().front().second, {}};
        }
        throw RuleError("several graftings under the collapsed cell " + a.display());
    }
    NamedTerm::Args args;
    std::vector<std::pair<Variable, Variable>> eqs;
    for (const auto& [z, v] : u.args()) {
        if (!v.is_degen() && theory.equal(v.head(), a)) {
            if (v.args().empty()) {
                // z <- a disappears; the edges b and z are identified.
                eqs.emplace_back(b, z);
                continue;
            }
            if (v.args().size() == 1) {
                if (!theory.equal(v.args().front().first, b))
                    throw RuleError("grafting onto " + v.args().front().first.display() +
                                    " under the collapsed cell " + a.display());
                eqs.emplace_back(b, z);
                args.emplace_back(z, v.args().front().second);
                continue;
            }
            throw RuleError("several graftings under the collapsed cell " + a.display());
        }
        SubstResult r = named_substitute(v, w, a, ctx, theory);
        args.emplace_back(z, r.term);
        eqs.insert(eqs.end(), r.equations.begin(), r.equations.end());
    }
    if (args.empty()) {
        // All graftings of u vanished; u collapses to its head variable.
        return {NamedTerm::var(u.head()), std::move(eqs)};
    }
    return {NamedTerm::apply(u.head(), std::move(args)), std::move(eqs)};
}

Address var_address(const NamedTerm& t, const Variable& z, AddressMode mode,
                    const NamedContext& ctx, const EqTheory& theory) {
    const int n = t.dim();
    if (t.is_degen()) throw RuleError("degenerate terms have no addressed variables");
    if (mode == AddressMode::node) {
        if (theory.equal(z, t.head())) return Address::empty(n);
        for (const auto& [y, u] : t.args()) {
            if (contains_var(term_vars(u), z, theory)) {
                Address first =
                    var_address(ctx.source_of(t.head()), y, AddressMode::node, ctx, theory);
                return Address(n, {first}).concat_any(var_address(u, z, mode, ctx, theory));
            }
        }
        throw RuleError(z.display() + " does not occur in " + t.str());
    }
    const NamedTerm& shead = ctx.source_of(t.head());
    if (contains_var(term_vars(shead), z, theory) && !arg_key_bound(t, z, theory))
        return Address(n, {var_address(shead, z, AddressMode::node, ctx, theory)});
    for (const auto& [y, u] : t.args()) {
        if (contains_var(term_vars(source_bar(u, ctx, theory)), z, theory)) {
            Address first = var_address(shead, y, AddressMode::node, ctx, theory);
            return Address(n, {first}).concat_any(var_address(u, z, mode, ctx, theory));
        }
    }
    throw RuleError(z.display() + " is not a free source variable of " + t.str());
}

bool sequent_sources_consistent(const NamedSequent& s) {
    NamedTerm u = s.term;
    for (const NamedTerm& expected : s.type.chain) {
        u = source_bar(u, s.ctx, s.theory);
        if (!term_equal(u, expected, s.theory)) return false;
    }
    return true;
}

// ---- Alpha equivalence ----

namespace {

struct Canonicalizer {
    const NamedSequent& s;
    std::map<Variable, int> ids;
    std::vector<Variable> order;

    void visit_var(const Variable& v) {
        if (ids.count(v)) return;
        ids[v] = static_cast<int>(order.size());
        order.push_back(v);
    }

    void visit_term(const NamedTerm& t) {
        visit_var(t.head());
        if (t.is_degen()) return;
        // Order arguments by the (name-independent) address of their key in
        // the head's source.
        std::vector<std::pair<Address, const NamedTerm::Arg*>> ordered;
        for (const auto& arg : t.args())
            ordered.emplace_back(
                var_address(s.ctx.source_of(t.head()), arg.first, AddressMode::node, s.ctx,
                            s.theory),
                &arg);
        std::sort(ordered.begin(), ordered.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (const auto& [addr, arg] : ordered) {
            visit_var(arg->first);
            visit_term(arg->second);
        }
    }

    std::string render_term(const NamedTerm& t) {
        std::string out = t.is_degen() ? "_" : "";
        out += "v" + std::to_string(ids.at(t.head()));
        if (!t.args().empty()) {
            std::vector<std::string> parts;
            for (const auto& [k, v] : t.args())
                parts.push_back("v" + std::to_string(ids.at(k)) + "<-" + render_term(v));
            std::sort(parts.begin(), parts.end());
            out += "(";
            for (const std::string& p : parts) out += p + ",";
            out += ")";
        }
        return out;
    }

    std::string canonical() {
        visit_term(s.term);
        for (const NamedTerm& t : s.type.chain) visit_term(t);
        // Fixpoint: discover variables through the types of those already
        // discovered.
        for (std::size_t i = 0; i < order.size(); ++i) {
            if (!s.ctx.has(order[i])) continue;
            for (const NamedTerm& t : s.ctx.type_of(order[i]).chain) visit_term(t);
        }
        // Anything still undiscovered is unreachable from the subject; order
        // it by dimension then name (interchangeable in practice).
        std::vector<Variable> rest;
        for (const auto& [v, ty] : s.ctx.items())
            if (!ids.count(v)) rest.push_back(v);
        std::sort(rest.begin(), rest.end(), [](const Variable& a, const Variable& b) {
            return a.dim != b.dim ? a.dim < b.dim : a.display() < b.display();
        });
        for (const Variable& v : rest) visit_var(v);

        std::string out = "T:" + render_term(s.term) + ";Y:";
        for (const NamedTerm& t : s.type.chain) out += render_term(t) + "~>";
        out += ";C:";
        std::vector<std::pair<int, std::string>> ctx_items;
        for (const auto& [v, ty] : s.ctx.items()) {
            std::string t = "v" + std::to_string(ids.at(v)) + ":";
            for (const NamedTerm& e : ty.chain) t += render_term(e) + "~>";
            ctx_items.emplace_back(ids.at(v), t);
        }
        std::sort(ctx_items.begin(), ctx_items.end());
        for (const auto& [id, t] : ctx_items) out += t + ";";
        // Theory: render the partition it induces on the context variables.
        std::vector<std::vector<int>> classes;
        std::vector<bool> seen(order.size(), false);
        for (const Variable& v : order) {
            if (seen[static_cast<std::size_t>(ids.at(v))]) continue;
            std::vector<int> cls;
            for (const Variable& w : order)
                if (s.theory.equal(v, w)) {
                    cls.push_back(ids.at(w));
                    seen[static_cast<std::size_t>(ids.at(w))] = true;
                }
            if (cls.size() > 1) {
                std::sort(cls.begin(), cls.end());
                classes.push_back(cls);
            }
        }
        std::sort(classes.begin(), classes.end());
        out += "E:";
        for (const auto& cls : classes) {
            out += "{";
            for (int i : cls) out += std::to_string(i) + ",";
            out += "}";
        }
        return out;
    }
};

}  // namespace

bool alpha_equivalent(const NamedSequent& a, const NamedSequent& b) {
    Canonicalizer ca{a, {}, {}}, cb{b, {}, {}};
    return ca.canonical() == cb.canonical();
}

}  // namespace opetope
