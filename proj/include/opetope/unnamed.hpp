#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "opetope/preopetope.hpp"

namespace opetope {

/// A sequent Γ ⊢ p → t of the unnamed calculus for opetopes.  The context Γ
/// is the leaf/node bijection between the leaves of the source and the nodes
/// of the target (empty below dimension 2).  The point sequent ⊢ ♦ → ∅ has no
/// target; that (-1)-dimensional ∅ is represented by an empty optional and is
/// not a preopetope usable elsewhere.
struct UnnamedSequent {
    LeafNodeBijection context;
    Preopetope source;
    std::optional<Preopetope> target;

    bool operator==(const UnnamedSequent& o) const {
        return context == o.context && source == o.source && target == o.target;
    }
    std::string str() const;
};

/// ⊢ ♦ → ∅
UnnamedSequent rule_point();

/// From Γ ⊢ p → t derive ⊢ {{p}} → {[] <- p}.
UnnamedSequent rule_degen(const UnnamedSequent& s);

/// From Γ ⊢ p → t derive {[[a]] / [a] : a ∈ p•} ⊢ {[] <- p} → p.
UnnamedSequent rule_shift(const UnnamedSequent& s);

/// From Γ ⊢ p → t (with the context pair at / [r]) and Υ ⊢ q → u, derive
/// Γ' ⊢ p õ_at q → t ▢_[r] q, provided the inner-edge side condition holds.
UnnamedSequent rule_graft(const UnnamedSequent& s, const Address& at, const UnnamedSequent& q);

/// The peel list of a non-degenerate preopetope: the sequence of
/// (address, decoration) graft instances removed in reverse-lexicographic
/// (deepest-first) order, ending when only the root entry remains.  Folding
/// the reversed list back through improper grafting restores p.
std::vector<std::pair<Address, Preopetope>> decompose(const Preopetope& p);

/// Reconstruct the full derivation of p, validating every rule instance.
/// Throws RuleError with an explanation of the first failing step.
UnnamedSequent derive(const Preopetope& p);

/// Reconstruct the derivation peeling grafts in a random legal order
/// (used to exercise decomposition-order independence).
UnnamedSequent derive_with_random_order(const Preopetope& p, std::mt19937_64& rng);

/// The target and readdressing bijection of an opetope of dimension >= 1.
std::pair<Preopetope, LeafNodeBijection> target_of(const Preopetope& p);

/// Decision procedure for opetope-hood.  On failure, `why` (if non-null)
/// receives the first failing deconstruction step.
bool is_opetope(const Preopetope& p, std::string* why = nullptr);

/// Deterministic random derivable preopetope of the given dimension, with
/// roughly `size` top-dimensional nodes.
Preopetope generate_random(int dim, int size, std::uint64_t seed);
UnnamedSequent generate_random_sequent(int dim, int size, std::mt19937_64& rng);

}  // namespace opetope
