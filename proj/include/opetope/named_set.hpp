#pragma once

#include <string>
#include <vector>

#include "opetope/named.hpp"
#include "opetope/preopetope.hpp"

namespace opetope {

/// An opetopic context modulo theory (OCMT): the cells of a finite opetopic
/// set, with an equational theory identifying them.  Kept closed under
/// target tagging: whenever a = b holds and both ta and tb are in the
/// context, ta = tb holds too.
struct OpetopicSet {
    EqTheory theory;
    NamedContext ctx;

    std::string str() const;
};

/// The empty OCMT.
OpetopicSet os_zero();

/// The representable opetopic set of a derived opetope: adds the iterated
/// targets t^k a of every cell, along with the equations forced by the
/// grafting structure, the double-target rule, and degeneracies.
OpetopicSet os_repr(const NamedSequent& s);

/// Disjoint union (the cell names must not clash).
OpetopicSet os_sum(const OpetopicSet& a, const OpetopicSet& b);

/// Identify two parallel cells: requires sa = sb and ta = tb modulo the
/// theory.
OpetopicSet os_glue(const OpetopicSet& o, const Variable& a, const Variable& b);

OpetopicSet os_usum(const std::vector<OpetopicSet>& parts);

// ---- The mixed system (sequents over OCMTs) ----

/// An OCMT with a single point.
OpetopicSet m_point(const std::string& name);

/// Read a cell of an OCMT back as a pasting-diagram sequent.
NamedSequent m_pd(const OpetopicSet& o, const Variable& x);

/// The degenerate pasting diagram over a cell of an OCMT.
NamedSequent m_degen(const OpetopicSet& o, const Variable& x);

/// Grafting of pasting diagrams over a common OCMT (as in the named
/// calculus, but the premises may share arbitrary cells).
NamedSequent m_graft(const NamedSequent& t, const Variable& a, const NamedSequent& x);

/// Fill a pasting diagram with a fresh cell and close the OCMT with its
/// target tower and the induced equations.
OpetopicSet m_shift(const NamedSequent& s, const std::string& name);

// ---- Materialization ----

struct MaterializedCell {
    int dim = 0;
    Preopetope shape = Preopetope::point();
    std::vector<Variable> members;                    // the equivalence class
    std::vector<std::pair<Address, int>> sources;     // node address -> cell
    int target = -1;                                  // cell index; -1 below dim 1
};

struct Complex {
    std::vector<MaterializedCell> cells;
    std::vector<std::string> violations;  // failed opetopic identities
    bool ok() const { return violations.empty(); }
};

/// Quotient the context by the theory, compute each class's shape, source
/// map and target, and check the opetopic identities (Inner, Glob1, Glob2,
/// Degen) on every cell of dimension >= 2.
Complex os_materialize(const OpetopicSet& o);

/// Isomorphism of OCMTs: a shape-, source- and target-preserving bijection
/// between the cell classes of the two materializations.
bool ocmt_isomorphic(const OpetopicSet& a, const OpetopicSet& b);

}  // namespace opetope
