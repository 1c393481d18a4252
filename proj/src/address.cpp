#include "opetope/address.hpp"

#include "opetope/errors.hpp"

namespace opetope {

Address Address::empty(int dim) {
    if (dim < 0) throw RuleError("address dimension must be nonnegative");
    Address a;
    a.dim_ = dim;
    return a;
}

Address::Address(int dim, std::vector<Address> entries) : dim_(dim), entries_(std::move(entries)) {
    if (dim < 0) throw RuleError("address dimension must be nonnegative");
    if (dim == 0 && !entries_.empty())
        throw RuleError("the 0-address * has no entries");
    for (const Address& e : entries_)
        if (e.dim() != dim - 1)
            throw RuleError("address entry of dimension " + std::to_string(e.dim()) +
                            " inside an address of dimension " + std::to_string(dim));
}

Address Address::concat(const Address& b) const {
    if (dim_ == 0 || b.dim_ == 0)
        throw RuleError("concatenation is undefined for 0-addresses");
    return concat_any(b);
}

Address Address::concat_any(const Address& b) const {
    if (dim_ != b.dim_)
        throw RuleError("cannot concatenate addresses of dimensions " + std::to_string(dim_) +
                        " and " + std::to_string(b.dim_));
    Address r;
    r.dim_ = dim_;
    r.entries_ = entries_;
    r.entries_.insert(r.entries_.end(), b.entries_.begin(), b.entries_.end());
    return r;
}

Address Address::append(const Address& element) const {
    if (element.dim() != dim_ - 1)
        throw RuleError("cannot append an entry of dimension " + std::to_string(element.dim()) +
                        " to an address of dimension " + std::to_string(dim_));
    Address r = *this;
    r.entries_.push_back(element);
    return r;
}

bool Address::is_prefix_of(const Address& b) const {
    if (dim_ != b.dim_)
        throw RuleError("prefix comparison between addresses of different dimensions");
    if (entries_.size() > b.entries_.size()) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i] != b.entries_[i]) return false;
    return true;
}

int Address::lex_compare(const Address& a, const Address& b) {
    if (a.dim_ != b.dim_)
        throw RuleError("lexicographic comparison between addresses of different dimensions");
    if (a.dim_ == 0) return 0;
    const std::size_t n = std::min(a.entries_.size(), b.entries_.size());
    for (std::size_t i = 0; i < n; ++i) {
        int c = lex_compare(a.entries_[i], b.entries_[i]);
        if (c != 0) return c;
    }
    if (a.entries_.size() < b.entries_.size()) return -1;
    if (a.entries_.size() > b.entries_.size()) return 1;
    return 0;
}

namespace {

bool contains_star(const Address& a) {
    if (a.dim() == 0) return true;
    for (const Address& e : a.entries())
        if (contains_star(e)) return true;
    return false;
}

void render(const Address& a, std::string& out) {
    if (a.dim() == 0) {
        out += '*';
        return;
    }
    out += '[';
    for (const Address& e : a.entries()) render(e, out);
    out += ']';
}

}  // namespace

std::string Address::str() const {
    std::string out;
    render(*this, out);
    if (!contains_star(*this)) {
        out += ':';
        out += std::to_string(dim_);
    }
    return out;
}

std::size_t Address::hash() const {
    std::size_t h = static_cast<std::size_t>(dim_) * 0x9e3779b97f4a7c15ull + 1;
    for (const Address& e : entries_) h = h * 0x100000001b3ull ^ e.hash();
    return h;
}

}  // namespace opetope
