#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace opetope {

/// A higher-dimensional address.
///
/// The set of 0-addresses is the singleton {*}; an (n+1)-address is a finite
/// (possibly empty) list of n-addresses.  Every address carries its dimension
/// explicitly, so the empty list is unambiguous: empty(0) is *, empty(1) is
/// the empty 1-address [], and so on.
class Address {
public:
    /// The unique 0-address *.
    Address() = default;

    /// The empty address of the given dimension (empty(0) == star()).
    static Address empty(int dim);
    static Address star() { return Address(); }

    /// An address of dimension `dim` with the given entries, each of which
    /// must have dimension `dim - 1`.
    Address(int dim, std::vector<Address> entries);

    int dim() const { return dim_; }
    const std::vector<Address>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool is_empty() const { return entries_.empty(); }
    bool is_star() const { return dim_ == 0; }

    /// Concatenation (list append).  Both operands must have the same
    /// dimension, which must be at least 1.
    Address concat(const Address& b) const;

    /// Concatenation that additionally accepts dimension 0, where the only
    /// possible result is * itself.  Internal convenience for substitution
    /// and context bookkeeping at the lowest dimensions.
    Address concat_any(const Address& b) const;

    /// Append a single entry of dimension dim() - 1.
    Address append(const Address& element) const;

    /// Prefix order: a ⊑ b iff b = a · c for some c.  Dimensions must match.
    bool is_prefix_of(const Address& b) const;

    /// Lexicographic total order.  Returns -1, 0 or 1.  All 0-addresses are
    /// equal; at higher dimensions entries are compared left to right and a
    /// strict prefix precedes its extensions.  Dimensions must match.
    static int lex_compare(const Address& a, const Address& b);

    bool operator==(const Address& o) const {
        return dim_ == o.dim_ && entries_ == o.entries_;
    }
    bool operator!=(const Address& o) const { return !(*this == o); }
    bool operator<(const Address& o) const { return lex_compare(*this, o) < 0; }
    bool operator<=(const Address& o) const { return lex_compare(*this, o) <= 0; }

    /// Textual form, e.g. "*", "[[][*]]", "[]:2".  A trailing ":k" dimension
    /// annotation is emitted exactly when no * occurs in the address, since
    /// only then is the dimension not inferable from the nesting.
    std::string str() const;

    std::size_t hash() const;

private:
    int dim_ = 0;
    std::vector<Address> entries_;
};

}  // namespace opetope

template <>
struct std::hash<opetope::Address> {
    std::size_t operator()(const opetope::Address& a) const { return a.hash(); }
};
