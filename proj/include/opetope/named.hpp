#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "opetope/address.hpp"

namespace opetope {

/// A variable of the named calculus.  `tdepth` counts applications of the
/// target tag: the variable t²f is {base "f", tdepth 2}.  Identity ignores
/// the dimension (two variables with the same name always have the same
/// dimension in a well-formed context).
struct Variable {
    std::string base;
    int tdepth = 0;
    int dim = 0;

    Variable() = default;
    Variable(std::string b, int d, int td = 0) : base(std::move(b)), tdepth(td), dim(d) {}

    /// The target-tagged variable ta, one dimension below.
    Variable target() const { return Variable(base, dim - 1, tdepth + 1); }

    /// Display name: the base prefixed by one 't' per tag level.
    std::string display() const { return std::string(static_cast<std::size_t>(tdepth), 't') + base; }

    bool operator==(const Variable& o) const { return base == o.base && tdepth == o.tdepth; }
    bool operator!=(const Variable& o) const { return !(*this == o); }
    bool operator<(const Variable& o) const {
        return base != o.base ? base < o.base : tdepth < o.tdepth;
    }
};

/// An n-term: a variable x, a degenerate term x̲ (written _x, of dimension
/// dim x + 1), or a grafting x(y1 <- u1, ..., yk <- uk) where the yi are
/// distinct source variables of x and the ui are n-terms.  Argument lists
/// are kept sorted by variable name (terms are identified up to argument
/// permutation).
class NamedTerm {
public:
    using Arg = std::pair<Variable, NamedTerm>;
    using Args = std::vector<Arg>;

    static NamedTerm var(Variable x);
    static NamedTerm degen(Variable x);
    static NamedTerm apply(Variable head, Args args);

    bool is_degen() const { return degen_; }
    bool is_variable() const { return !degen_ && args_.empty(); }
    const Variable& head() const { return head_; }
    const Args& args() const { return args_; }
    int dim() const { return degen_ ? head_.dim + 1 : head_.dim; }

    /// Copy with one argument inserted (the key must be fresh).
    NamedTerm with_arg(Variable key, NamedTerm value) const;
    /// Copy with the argument at `key` removed / replaced.
    NamedTerm without_arg(const Variable& key) const;
    NamedTerm replace_arg(const Variable& key, NamedTerm value) const;

    bool operator==(const NamedTerm& o) const;
    bool operator!=(const NamedTerm& o) const { return !(*this == o); }

    std::string str() const;

private:
    bool degen_ = false;
    Variable head_;
    Args args_;
};

/// An n-type s1 ~> s2 ~> ... ~> sn ~> 0; the chain may be empty (the type of
/// a point).
struct NamedType {
    std::vector<NamedTerm> chain;

    bool operator==(const NamedType& o) const { return chain == o.chain; }
    bool operator!=(const NamedType& o) const { return !(*this == o); }
    /// The type with the first `k` entries dropped.
    NamedType drop(std::size_t k) const;
    std::string str() const;
};

/// An equational theory: a finite set of formal equalities between
/// variables, queried through the equivalence relation it generates.
class EqTheory {
public:
    void add(const Variable& a, const Variable& b);
    void merge(const EqTheory& other);
    bool equal(const Variable& a, const Variable& b) const;
    /// Canonical class representative (the least variable of the class).
    Variable rep(const Variable& a) const;
    const std::vector<std::pair<Variable, Variable>>& generators() const { return gens_; }
    bool empty() const { return gens_.empty(); }
    std::string str() const;

private:
    std::vector<std::pair<Variable, Variable>> gens_;
};

/// A context: an ordered list of typings x : T with distinct names.
class NamedContext {
public:
    using Item = std::pair<Variable, NamedType>;

    /// Adds a typing; re-adding an identical typing is a no-op, and a name
    /// clash with a different type is an error.
    void add(const Variable& x, const NamedType& type);
    bool has(const Variable& x) const;
    const NamedType& type_of(const Variable& x) const;
    /// First entry of the type of x (its source term); x must have dim >= 1.
    const NamedTerm& source_of(const Variable& x) const;
    const std::vector<Item>& items() const { return items_; }
    std::optional<Variable> find_display(const std::string& name) const;
    std::string str() const;

private:
    std::vector<Item> items_;
};

/// A sequent E |> Γ ⊢ t : T of the named calculus.
struct NamedSequent {
    EqTheory theory;
    NamedContext ctx;
    NamedTerm term;
    NamedType type;

    int dim() const { return term.dim(); }
    std::string str() const;
};

/// The top-dimensional variables of a term (empty for degenerate terms).
std::vector<Variable> term_vars(const NamedTerm& t);

/// Every variable occurring anywhere in a term (head, argument keys and
/// values, heads of degenerate subterms).
void collect_deep_vars(const NamedTerm& t, std::vector<Variable>& out);

bool contains_var(const std::vector<Variable>& vars, const Variable& x, const EqTheory& theory);

/// Structural equality of terms modulo an equational theory on variables.
bool term_equal(const NamedTerm& a, const NamedTerm& b, const EqTheory& theory);
bool type_equal(const NamedType& a, const NamedType& b, const EqTheory& theory);

/// The source term of t: s̄x is the typed source of the variable x, the
/// source of a degenerate term x̲ is x itself, and the source of a grafting
/// x(yi <- ui) is (sx)[s̄ui / yi].
NamedTerm source_bar(const NamedTerm& t, const NamedContext& ctx, const EqTheory& theory);

/// Result of a substitution: the rewritten term plus the equations the
/// degenerate cases add to the ambient theory.
struct SubstResult {
    NamedTerm term;
    std::vector<std::pair<Variable, Variable>> equations;
};

/// Evaluate u[w/a].
SubstResult named_substitute(const NamedTerm& u, const NamedTerm& w, const Variable& a,
                             const NamedContext& ctx, const EqTheory& theory);

/// The graft notation t(a <- x): the argument a <- x is pushed down to the
/// unique node of t whose source still has a free.
NamedTerm graft_notation(const NamedTerm& t, const Variable& a, const Variable& x,
                         const NamedContext& ctx, const EqTheory& theory);

enum class AddressMode { node, leaf };

/// The address &_t z of a variable in a term: in node mode, z is a
/// top-dimensional variable of t; in leaf mode, z is a free source variable
/// of t (one dimension below).  Either way the result has the dimension
/// of t.
Address var_address(const NamedTerm& t, const Variable& z, AddressMode mode,
                    const NamedContext& ctx, const EqTheory& theory);

/// Checks the sequent against its own iterated sources: the k-th entry of
/// the type equals s̄^k applied to the subject, modulo the theory.
bool sequent_sources_consistent(const NamedSequent& s);

/// Equivalence of sequents up to a bijective renaming of variables.
bool alpha_equivalent(const NamedSequent& a, const NamedSequent& b);

// ---- Inference rules ----

/// |> x : 0 ⊢ x : 0
NamedSequent n_point(const std::string& name);

/// From ⊢ x : T (x a variable) derive ⊢ _x : x ~> T.
NamedSequent n_degen(const NamedSequent& s);

/// From ⊢ t : T derive, for a fresh variable x, ⊢ x : t ~> T.
NamedSequent n_shift(const NamedSequent& s, const std::string& name);

/// From ⊢ x : T (x a variable) derive, for a fresh d, ⊢ d : _x ~> x ~> T.
NamedSequent n_degen_shift(const NamedSequent& s, const std::string& name);

/// From ⊢ t : T and ⊢ x : X (x a variable), graft x onto the free source
/// variable a of t.
NamedSequent n_graft(const NamedSequent& t, const Variable& a, const NamedSequent& x);

}  // namespace opetope
