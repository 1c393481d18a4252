#include "opetope/counting.hpp"

#include "opetope/coding.hpp"
#include "opetope/errors.hpp"
#include "opetope/named_set.hpp"
#include "opetope/unnamed.hpp"

namespace opetope {

namespace {

std::uint64_t count_valid(const Preopetope& p) {
    switch (p.kind()) {
        case Preopetope::Kind::point:
            return 1;
        case Preopetope::Kind::degenerate:
            return 2 + count_valid(p.degen_base());
        case Preopetope::Kind::nodes: {
            // 2 (the opetope itself and its target) plus one contribution per
            // node, where each inner edge identifies a face shared between
            // the node above it and the node below it.
            std::uint64_t total = 2;
            for (const auto& [a, src] : p.entries()) {
                total += count_valid(src);
                if (!a.is_empty()) {
                    std::vector<Address> es = a.entries();
                    Address last = es.back();
                    es.pop_back();
                    total -= count_valid(p.source(Address(a.dim(), std::move(es))).source(last));
                }
            }
            return total;
        }
    }
    throw RuleError("internal: unknown preopetope kind");
}

}  // namespace

std::uint64_t count(const Preopetope& p) {
    derive(p);  // validates opetope-hood; throws RuleError otherwise
    return count_valid(p);
}

std::uint64_t count_oracle(const Preopetope& p) {
    OpetopicSet s = os_repr(to_named(p));
    return os_materialize(s).cells.size();
}

}  // namespace opetope
