#include "opetope/preopetope.hpp"

#include <algorithm>

#include "opetope/errors.hpp"

namespace opetope {

Preopetope Preopetope::point() { return Preopetope(); }

Preopetope Preopetope::degenerate(Preopetope base) {
    Preopetope p;
    p.dim_ = base.dim() + 2;
    p.kind_ = Kind::degenerate;
    p.base_.push_back(std::move(base));
    return p;
}

Preopetope Preopetope::with_nodes(int dim, Entries entries) {
    if (dim < 1) throw RuleError("a node-form preopetope must have dimension >= 1");
    if (entries.empty()) throw RuleError("a node-form preopetope must have at least one entry");
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto& [addr, src] = entries[i];
        if (addr.dim() != dim - 1)
            throw RuleError("node address " + addr.str() + " has dimension " +
                            std::to_string(addr.dim()) + " inside a preopetope of dimension " +
                            std::to_string(dim));
        if (src.dim() != dim - 1)
            throw RuleError("source at " + addr.str() + " has dimension " +
                            std::to_string(src.dim()) + " inside a preopetope of dimension " +
                            std::to_string(dim));
        if (i > 0 && entries[i - 1].first == addr)
            throw RuleError("duplicate node address " + addr.str());
    }
    Preopetope p;
    p.dim_ = dim;
    p.kind_ = Kind::nodes;
    p.entries_ = std::move(entries);
    return p;
}

Preopetope Preopetope::arrow() {
    Entries e;
    e.emplace_back(Address::star(), point());
    return with_nodes(1, std::move(e));
}

Preopetope Preopetope::corolla(const Preopetope& base) {
    Entries e;
    e.emplace_back(Address::empty(base.dim()), base);
    return with_nodes(base.dim() + 1, std::move(e));
}

Preopetope Preopetope::opetopic_integer(int n) {
    if (n < 0) throw RuleError("opetopic integers are indexed by n >= 0");
    if (n == 0) return degenerate(point());
    Entries e;
    Address a = Address::empty(1);
    for (int i = 0; i < n; ++i) {
        e.emplace_back(a, arrow());
        a = a.append(Address::star());
    }
    return with_nodes(2, std::move(e));
}

const Preopetope& Preopetope::degen_base() const {
    if (kind_ != Kind::degenerate) throw RuleError("degen_base on a non-degenerate preopetope");
    return base_.front();
}

const Preopetope::Entries& Preopetope::entries() const {
    static const Entries empty;
    return kind_ == Kind::nodes ? entries_ : empty;
}

std::vector<Address> Preopetope::node_addresses() const {
    std::vector<Address> out;
    if (kind_ == Kind::nodes)
        for (const Entry& e : entries_) out.push_back(e.first);
    return out;
}

std::vector<Address> Preopetope::leaf_addresses() const {
    if (dim_ < 2)
        throw RuleError("leaf addresses are defined for preopetopes of dimension >= 2");
    if (kind_ == Kind::degenerate) return {Address::empty(dim_ - 1)};
    std::vector<Address> out;
    for (const Entry& e : entries_) {
        for (const Address& q : e.second.node_addresses()) {
            Address l = e.first.append(q);
            if (!has_node(l)) out.push_back(l);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool Preopetope::has_node(const Address& a) const {
    if (kind_ != Kind::nodes) return false;
    for (const Entry& e : entries_)
        if (e.first == a) return true;
    return false;
}

const Preopetope& Preopetope::source(const Address& a) const {
    if (kind_ == Kind::nodes)
        for (const Entry& e : entries_)
            if (e.first == a) return e.second;
    throw RuleError("no source at address " + a.str());
}

Preopetope Preopetope::improper_graft(const Address& leaf, const Preopetope& q) const {
    if (kind_ != Kind::nodes)
        throw RuleError("improper grafting applies to non-degenerate preopetopes");
    if (q.dim() != dim_ - 1)
        throw RuleError("improper grafting expects a decoration of dimension " +
                        std::to_string(dim_ - 1));
    const std::vector<Address> leaves = leaf_addresses();
    if (std::find(leaves.begin(), leaves.end(), leaf) == leaves.end())
        throw RuleError(leaf.str() + " is not a leaf address of " + str());
    Entries e = entries_;
    e.emplace_back(leaf, q);
    return with_nodes(dim_, std::move(e));
}

Preopetope Preopetope::proper_graft(const Address& leaf, const Preopetope& q) const {
    if (q.dim() != dim_)
        throw RuleError("proper grafting expects operands of equal dimension");
    if (!q.is_nodes())
        throw RuleError("proper grafting expects a non-degenerate second operand");
    Preopetope out = *this;
    // Grafting the entries of q in lexicographic (prefix-compatible) order
    // keeps every intermediate step a legal improper graft.
    for (const Entry& e : q.entries_)
        out = out.improper_graft(leaf.concat_any(e.first), e.second);
    return out;
}

Preopetope Preopetope::without_node(const Address& a) const {
    if (!has_node(a)) throw RuleError("no node at address " + a.str());
    if (entries_.size() == 1)
        throw RuleError("removing the last node of a preopetope");
    Entries e;
    for (const Entry& it : entries_)
        if (it.first != a) e.push_back(it);
    return with_nodes(dim_, std::move(e));
}

bool Preopetope::operator==(const Preopetope& o) const {
    if (dim_ != o.dim_ || kind_ != o.kind_) return false;
    switch (kind_) {
        case Kind::point: return true;
        case Kind::degenerate: return base_.front() == o.base_.front();
        case Kind::nodes: return entries_ == o.entries_;
    }
    return false;
}

std::string Preopetope::str() const {
    switch (kind_) {
        case Kind::point: return "point";
        case Kind::degenerate: return "degen{ " + base_.front().str() + " }";
        case Kind::nodes: {
            std::string out = "{ ";
            bool first = true;
            for (const Entry& e : entries_) {
                if (!first) out += "; ";
                first = false;
                out += e.first.str() + " <- " + e.second.str();
            }
            out += " }";
            return out;
        }
    }
    return {};
}

std::size_t Preopetope::hash() const {
    std::size_t h = static_cast<std::size_t>(dim_) * 31 + static_cast<std::size_t>(kind_);
    if (kind_ == Kind::degenerate) h = h * 0x100000001b3ull ^ base_.front().hash();
    for (const Entry& e : entries_)
        h = (h * 0x100000001b3ull ^ e.first.hash()) * 0x100000001b3ull ^ e.second.hash();
    return h;
}

Preopetope substitute(const Preopetope& t, const Address& r, const Preopetope& q,
                      const LeafNodeBijection& ctx) {
    if (!t.is_nodes()) throw RuleError("substitution applies to non-degenerate preopetopes");
    if (q.dim() != t.dim())
        throw RuleError("substitution expects operands of equal dimension");
    if (!t.has_node(r)) throw RuleError("substitution at a non-node address " + r.str());

    if (q.is_degenerate() && t.entries().size() == 1) {
        if (!r.is_empty())
            throw RuleError("single-node substitution of a degenerate expects the root node");
        return q;
    }

    Preopetope::Entries out;
    for (const auto& [key, src] : t.entries()) {
        if (key == r) continue;
        if (r.is_prefix_of(key) && key.size() > r.size()) {
            // key = r · [b] · rest with b a node of q's target; the context
            // pair (a, b) of q's sequent splices the leaf a of q in place.
            const Address& b = key.entries()[r.size()];
            const auto it = std::find_if(ctx.begin(), ctx.end(),
                                         [&](const auto& p) { return p.second == b; });
            if (it == ctx.end())
                throw RuleError("substitution: no context pair for node " + b.str() +
                                " while readdressing " + key.str());
            std::vector<Address> es(key.entries().begin(), key.entries().begin() + r.size());
            es.insert(es.end(), it->first.entries().begin(), it->first.entries().end());
            es.insert(es.end(), key.entries().begin() + r.size() + 1, key.entries().end());
            out.emplace_back(Address(key.dim(), std::move(es)), src);
        } else {
            out.emplace_back(key, src);
        }
    }
    if (q.is_nodes())
        for (const auto& [qk, qv] : q.entries())
            out.emplace_back(r.concat_any(qk), qv);
    return Preopetope::with_nodes(t.dim(), std::move(out));
}

}  // namespace opetope
