#include "opetope/named_set.hpp"

#include <algorithm>
#include <map>

#include "opetope/coding.hpp"
#include "opetope/errors.hpp"
#include "opetope/unnamed.hpp"

namespace opetope {

std::string OpetopicSet::str() const { return theory.str() + " |> " + ctx.str(); }

namespace {

/// Close the theory under target tagging: a = b implies ta = tb whenever
/// both are cells.
void close_targets(OpetopicSet& o) {
    bool changed = true;
    while (changed) {
        changed = false;
        const auto gens = o.theory.generators();
        for (const auto& [a, b] : gens) {
            Variable ta = a.target(), tb = b.target();
            if (o.ctx.has(ta) && o.ctx.has(tb) && !o.theory.equal(ta, tb)) {
                o.theory.add(ta, tb);
                changed = true;
            }
        }
    }
}

/// Adds ta = b for every grafting b <- a(...) inside the term.
void grafting_equations(const NamedTerm& t, EqTheory& theory) {
    for (const auto& [b, u] : t.args()) {
        if (!u.is_degen()) theory.add(u.head().target(), b);
        grafting_equations(u, theory);
    }
}

}  // namespace

OpetopicSet os_zero() { return OpetopicSet{}; }

OpetopicSet os_repr(const NamedSequent& s) {
    OpetopicSet o;
    o.theory = s.theory;
    o.ctx = s.ctx;
    // Target towers: t^k a typed by the iterated sources of a.
    for (const auto& [a, ty] : s.ctx.items())
        for (int k = 1; k <= a.dim; ++k)
            o.ctx.add(Variable(a.base, a.dim - k, a.tdepth + k), ty.drop(static_cast<std::size_t>(k)));
    // Equations from graftings occurring in the types.
    for (const auto& [a, ty] : s.ctx.items())
        for (const NamedTerm& t : ty.chain) grafting_equations(t, o.theory);
    // Double targets: tta equals the target of the head of sa.
    for (const auto& [a, ty] : o.ctx.items()) {
        if (a.dim < 2) continue;
        const NamedTerm& src = ty.chain.front();
        if (src.is_degen()) {
            // Degeneracies: the double target collapses onto the base cell.
            o.theory.add(a.target().target(), src.head());
        } else {
            o.theory.add(a.target().target(), src.head().target());
        }
    }
    close_targets(o);
    return o;
}

OpetopicSet os_sum(const OpetopicSet& a, const OpetopicSet& b) {
    OpetopicSet o = a;
    for (const auto& [v, ty] : b.ctx.items()) {
        if (a.ctx.find_display(v.display()))
            throw RuleError("sum: both operands declare the cell " + v.display());
        o.ctx.add(v, ty);
    }
    o.theory.merge(b.theory);
    close_targets(o);
    return o;
}

OpetopicSet os_glue(const OpetopicSet& o, const Variable& a, const Variable& b) {
    if (!o.ctx.has(a)) throw RuleError("glue: unknown cell " + a.display());
    if (!o.ctx.has(b)) throw RuleError("glue: unknown cell " + b.display());
    if (a.dim != b.dim)
        throw RuleError("glue: " + a.display() + " and " + b.display() +
                        " have different dimensions");
    if (a.dim >= 1) {
        if (!term_equal(o.ctx.source_of(a), o.ctx.source_of(b), o.theory))
            throw RuleError("glue: " + a.display() + " and " + b.display() +
                            " have different sources");
        if (!o.theory.equal(a.target(), b.target()))
            throw RuleError("glue: " + a.display() + " and " + b.display() +
                            " have different targets");
    }
    OpetopicSet out = o;
    out.theory.add(a, b);
    close_targets(out);
    return out;
}

OpetopicSet os_usum(const std::vector<OpetopicSet>& parts) {
    OpetopicSet o = os_zero();
    for (const OpetopicSet& p : parts) o = os_sum(o, p);
    return o;
}

// ---- Mixed system ----

OpetopicSet m_point(const std::string& name) {
    OpetopicSet o;
    o.ctx.add(Variable(name, 0), NamedType{});
    return o;
}

NamedSequent m_pd(const OpetopicSet& o, const Variable& x) {
    if (!o.ctx.has(x)) throw RuleError("pd: unknown cell " + x.display());
    NamedSequent s;
    s.theory = o.theory;
    s.ctx = o.ctx;
    s.term = NamedTerm::var(x);
    s.type = o.ctx.type_of(x);
    return s;
}

NamedSequent m_degen(const OpetopicSet& o, const Variable& x) {
    return n_degen(m_pd(o, x));
}

NamedSequent m_graft(const NamedSequent& t, const Variable& a, const NamedSequent& x) {
    if (t.term.is_degen()) throw RuleError("graft: the receiving term is degenerate");
    if (!x.term.is_variable())
        throw RuleError("graft: the grafted sequent must have a variable subject");
    const Variable& xv = x.term.head();
    const int n = t.dim();
    if (x.dim() != n) throw RuleError("graft: dimension mismatch");

    EqTheory combined = t.theory;
    combined.merge(x.theory);

    NamedTerm st = source_bar(t.term, t.ctx, t.theory);
    if (!contains_var(term_vars(st), a, combined))
        throw RuleError("graft: " + a.display() + " is not a free source variable of " +
                        t.term.str());
    if (n >= 2 && !term_equal(t.ctx.source_of(a), x.type.chain[1], combined))
        throw RuleError("graft: source mismatch at " + a.display());

    NamedSequent out;
    out.theory = combined;
    out.ctx = t.ctx;
    for (const auto& [v, ty] : x.ctx.items()) {
        if (out.ctx.has(v)) {
            if (!type_equal(ty, out.ctx.type_of(v), combined))
                throw RuleError("graft: incompatible typings of " + v.display());
        } else {
            out.ctx.add(v, ty);
        }
    }
    out.term = graft_notation(t.term, a, xv, out.ctx, out.theory);
    SubstResult sub = named_substitute(t.type.chain[0], x.type.chain[0], a, out.ctx, out.theory);
    for (const auto& [p, q] : sub.equations) out.theory.add(p, q);
    out.type = t.type;
    out.type.chain[0] = sub.term;
    return out;
}

OpetopicSet m_shift(const NamedSequent& s, const std::string& name) {
    if (s.ctx.find_display(name))
        throw RuleError("shift: the name " + name + " is already in the context");
    const int n = s.dim();
    Variable x(name, n + 1);
    NamedType type = s.type;
    type.chain.insert(type.chain.begin(), s.term);

    OpetopicSet o;
    o.theory = s.theory;
    o.ctx = s.ctx;
    o.ctx.add(x, type);
    for (int i = 1; i <= n + 1; ++i)
        o.ctx.add(Variable(x.base, x.dim - i, i), type.drop(static_cast<std::size_t>(i)));

    if (s.term.is_degen()) {
        // Filling a degenerate pasting diagram over a: the target tower of x
        // collapses onto the tower of a.
        Variable a = s.term.head();
        for (int i = 0; i <= n - 1; ++i)
            o.theory.add(Variable(x.base, x.dim - i - 2, i + 2),
                         Variable(a.base, a.dim - i, a.tdepth + i));
    } else {
        if (n >= 1) o.theory.add(x.target().target(), s.term.head().target());
        grafting_equations(s.term, o.theory);
    }
    close_targets(o);
    return o;
}

// ---- Materialization ----

Complex os_materialize(const OpetopicSet& o) {
    Complex out;
    // Group the context into equivalence classes.
    std::vector<std::vector<Variable>> classes;
    std::map<Variable, int> index;
    for (const auto& [v, ty] : o.ctx.items()) {
        bool placed = false;
        for (std::size_t i = 0; i < classes.size(); ++i) {
            if (o.theory.equal(classes[i].front(), v)) {
                classes[i].push_back(v);
                index[v] = static_cast<int>(i);
                placed = true;
                break;
            }
        }
        if (!placed) {
            index[v] = static_cast<int>(classes.size());
            classes.push_back({v});
        }
    }
    // Deterministic cell order: by dimension, then by least member name.
    std::vector<int> order(classes.size());
    for (std::size_t i = 0; i < classes.size(); ++i) order[i] = static_cast<int>(i);
    auto least = [&](int i) {
        std::string m = classes[static_cast<std::size_t>(i)].front().display();
        for (const Variable& v : classes[static_cast<std::size_t>(i)])
            m = std::min(m, v.display());
        return m;
    };
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        int di = classes[static_cast<std::size_t>(i)].front().dim;
        int dj = classes[static_cast<std::size_t>(j)].front().dim;
        return di != dj ? di < dj : least(i) < least(j);
    });
    std::map<int, int> cell_of_class;
    for (std::size_t k = 0; k < order.size(); ++k) cell_of_class[order[k]] = static_cast<int>(k);
    auto cell_index = [&](const Variable& v) -> int {
        auto it = index.find(v);
        if (it == index.end()) return -1;
        return cell_of_class.at(it->second);
    };

    for (std::size_t k = 0; k < order.size(); ++k) {
        const std::vector<Variable>& cls = classes[static_cast<std::size_t>(order[k])];
        MaterializedCell cell;
        cell.members = cls;
        std::sort(cell.members.begin(), cell.members.end(),
                  [](const Variable& a, const Variable& b) { return a.display() < b.display(); });
        const Variable& a = cell.members.front();
        cell.dim = a.dim;
        cell.shape = code_cell(a, o.ctx, o.theory);
        for (const Variable& v : cell.members) {
            if (code_cell(v, o.ctx, o.theory) != cell.shape)
                out.violations.push_back("cells " + a.display() + " and " + v.display() +
                                         " are identified but have different shapes");
        }
        if (cell.dim >= 1) {
            const NamedTerm& sa = o.ctx.source_of(a);
            for (const Address& p : cell.shape.node_addresses()) {
                bool found = false;
                for (const Variable& b : term_vars(sa)) {
                    if (var_address(sa, b, AddressMode::node, o.ctx, o.theory) == p) {
                        cell.sources.emplace_back(p, cell_index(b));
                        found = true;
                        break;
                    }
                }
                if (!found)
                    out.violations.push_back("no source of " + a.display() + " at " + p.str());
            }
            cell.target = cell_index(a.target());
            if (cell.target < 0)
                out.violations.push_back("missing target cell t" + a.display());
        }
        out.cells.push_back(std::move(cell));
    }

    // Opetopic identities on every cell of dimension >= 2.
    auto source_at = [&](int cell, const Address& p) -> int {
        for (const auto& [q, idx] : out.cells[static_cast<std::size_t>(cell)].sources)
            if (q == p) return idx;
        return -1;
    };
    for (std::size_t k = 0; k < out.cells.size(); ++k) {
        const MaterializedCell& c = out.cells[k];
        if (c.dim < 2 || c.target < 0) continue;
        const std::string who = c.members.front().display();
        if (c.shape.is_degenerate()) {
            // Degen: s_[] ta = tta.
            const MaterializedCell& t = out.cells[static_cast<std::size_t>(c.target)];
            int lhs = source_at(c.target, Address::empty(c.dim - 2));
            if (lhs < 0 || lhs != t.target)
                out.violations.push_back("Degen identity fails on " + who);
            continue;
        }
        // Inner: for [p[q]] a node, t s_[p[q]] = s_[q] s_[p].
        for (const auto& [addr, src] : c.sources) {
            if (addr.is_empty()) continue;
            std::vector<Address> es = addr.entries();
            Address q = es.back();
            es.pop_back();
            Address p(addr.dim(), std::move(es));
            int sp = source_at(static_cast<int>(k), p);
            if (src < 0 || sp < 0 ||
                out.cells[static_cast<std::size_t>(src)].target != source_at(sp, q))
                out.violations.push_back("Inner identity fails on " + who + " at " + addr.str());
        }
        // Glob1: t s_[] = tt.
        int root = source_at(static_cast<int>(k), Address::empty(c.dim - 1));
        if (root < 0 ||
            out.cells[static_cast<std::size_t>(root)].target !=
                out.cells[static_cast<std::size_t>(c.target)].target)
            out.violations.push_back("Glob1 identity fails on " + who);
        // Glob2: for leaves, s_[q] s_[p] = s_(readdressing) t.
        try {
            LeafNodeBijection wp = target_of(c.shape).second;
            for (const auto& [leaf, node] : wp) {
                std::vector<Address> es = leaf.entries();
                Address q = es.back();
                es.pop_back();
                Address p(leaf.dim(), std::move(es));
                int sp = source_at(static_cast<int>(k), p);
                if (sp < 0 || source_at(sp, q) != source_at(c.target, node))
                    out.violations.push_back("Glob2 identity fails on " + who + " at " +
                                             leaf.str());
            }
        } catch (const RuleError& e) {
            out.violations.push_back("shape of " + who + " is not an opetope: " + e.what());
        }
    }
    return out;
}

namespace {

bool match_cells(const Complex& a, const Complex& b, std::size_t i, std::vector<int>& map,
                 std::vector<bool>& used) {
    if (i == a.cells.size()) return true;
    const MaterializedCell& ca = a.cells[i];
    for (std::size_t j = 0; j < b.cells.size(); ++j) {
        if (used[j]) continue;
        const MaterializedCell& cb = b.cells[j];
        if (ca.dim != cb.dim || ca.shape != cb.shape) continue;
        if (ca.target >= 0 && map[static_cast<std::size_t>(ca.target)] != cb.target) continue;
        if (ca.target < 0 && cb.target >= 0) continue;
        bool ok = true;
        for (const auto& [p, src] : ca.sources) {
            int mapped = src >= 0 ? map[static_cast<std::size_t>(src)] : -1;
            bool found = false;
            for (const auto& [q, src2] : cb.sources)
                if (q == p) {
                    found = src2 == mapped;
                    break;
                }
            if (!found) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        map[i] = static_cast<int>(j);
        used[j] = true;
        if (match_cells(a, b, i + 1, map, used)) return true;
        used[j] = false;
        map[i] = -1;
    }
    return false;
}

}  // namespace

bool ocmt_isomorphic(const OpetopicSet& a, const OpetopicSet& b) {
    Complex ca = os_materialize(a), cb = os_materialize(b);
    if (ca.cells.size() != cb.cells.size()) return false;
    // Cells are ordered by dimension, so sources and targets of a cell refer
    // to earlier cells and the backtracking map below is always defined.
    std::vector<int> map(ca.cells.size(), -1);
    std::vector<bool> used(cb.cells.size(), false);
    return match_cells(ca, cb, 0, map, used);
}

}  // namespace opetope
