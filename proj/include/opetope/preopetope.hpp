#pragma once

#include <string>
#include <utility>
#include <vector>

#include "opetope/address.hpp"

namespace opetope {

/// The leaf/node bijection attached to a derived sequent: pairs
/// (leaf address of the source, node address of the target), kept sorted by
/// the leaf component.
using LeafNodeBijection = std::vector<std::pair<Address, Address>>;

/// A preopetope: either the point (dimension 0), a degenerate preopetope
/// {{p}} (dimension dim p + 2), or a nonempty finite map from distinct
/// (n-1)-addresses to (n-1)-preopetopes (dimension n >= 1).  Entries are kept
/// sorted lexicographically by address, giving a canonical form; equality is
/// structural on that form, which realizes set semantics.
class Preopetope {
public:
    enum class Kind { point, degenerate, nodes };

    using Entry = std::pair<Address, Preopetope>;
    using Entries = std::vector<Entry>;

    static Preopetope point();
    static Preopetope degenerate(Preopetope base);
    static Preopetope with_nodes(int dim, Entries entries);
    /// The unique 1-preopetope { * <- point }.
    static Preopetope arrow();
    /// The corolla Y_base = { [] <- base } of dimension dim base + 1.
    static Preopetope corolla(const Preopetope& base);
    /// The opetopic integer n: the linear 2-preopetope with nodes
    /// [], [*], ..., [*^(n-1)] for n >= 1, and the degenerate {{point}} for 0.
    static Preopetope opetopic_integer(int n);

    Kind kind() const { return kind_; }
    int dim() const { return dim_; }
    bool is_point() const { return kind_ == Kind::point; }
    bool is_degenerate() const { return kind_ == Kind::degenerate; }
    bool is_nodes() const { return kind_ == Kind::nodes; }

    const Preopetope& degen_base() const;
    const Entries& entries() const;
    std::size_t node_count() const { return kind_ == Kind::nodes ? entries_.size() : 0; }

    /// p-bullet: the set of node addresses (empty for the point and for
    /// degenerate preopetopes), in lexicographic order.
    std::vector<Address> node_addresses() const;

    /// p-uparrow: the set of leaf addresses, in lexicographic order.
    /// Defined for dimension >= 2 (a RuleError is raised below that).
    std::vector<Address> leaf_addresses() const;

    bool has_node(const Address& a) const;
    const Preopetope& source(const Address& a) const;

    /// Improper grafting p õ_[r] q: adds the entry [r] <- q at the leaf
    /// address [r] of p.
    Preopetope improper_graft(const Address& leaf, const Preopetope& q) const;

    /// Proper (tree) grafting p o_[l] q of two preopetopes of equal
    /// dimension: glues the non-degenerate tree q at the leaf [l] of p.
    Preopetope proper_graft(const Address& leaf, const Preopetope& q) const;

    /// Copy with the entry at `a` removed (the result keeps Kind::nodes and
    /// may become empty only transiently; removing the last entry is an
    /// error).
    Preopetope without_node(const Address& a) const;

    /// Default-constructs the point.
    Preopetope() = default;

    bool operator==(const Preopetope& o) const;
    bool operator!=(const Preopetope& o) const { return !(*this == o); }

    /// Canonical textual form, e.g. "point", "{ * <- point }",
    /// "degen{ point }", "{ [] <- { * <- point }; [*] <- { * <- point } }".
    std::string str() const;

    std::size_t hash() const;

private:
    int dim_ = 0;
    Kind kind_ = Kind::point;
    std::vector<Preopetope> base_;  // size 1 iff degenerate
    Entries entries_;               // sorted by address iff nodes
};

/// Substitution t ▢_[r] q of q for the node [r] of t, where t and q have the
/// same dimension and `ctx` is the leaf/node bijection of q's sequent
/// (mapping leaves of q to nodes of q's target).
Preopetope substitute(const Preopetope& t, const Address& r, const Preopetope& q,
                      const LeafNodeBijection& ctx);

/// Coherence check for substitution: both evaluation orders of a double
/// substitution agree.  Handles the disjoint case (a1 and a2 are
/// lexicographically incomparable nodes of t) and the nested case (a2 is a
/// node of q1, substituted at position a1 · a2 after the first step).
bool substitute_associativity_check(const Preopetope& t, const Address& a1, const Preopetope& q1,
                                    const Address& a2, const Preopetope& q2,
                                    const LeafNodeBijection& ctx1, const LeafNodeBijection& ctx2);

}  // namespace opetope

template <>
struct std::hash<opetope::Preopetope> {
    std::size_t operator()(const opetope::Preopetope& p) const { return p.hash(); }
};
