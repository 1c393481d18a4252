#include <doctest.h>

#include <algorithm>

#include "opetope/errors.hpp"
#include "opetope/preopetope.hpp"
#include "opetope/textio.hpp"

using namespace opetope;
using textio::parse_address;
using textio::parse_preopetope;

TEST_CASE("factories and canonical text") {
    CHECK(Preopetope::point().str() == "point");
    CHECK(Preopetope::arrow().str() == "{ * <- point }");
    CHECK(Preopetope::arrow() == Preopetope::corolla(Preopetope::point()));
    CHECK(Preopetope::opetopic_integer(0) == Preopetope::degenerate(Preopetope::point()));
    CHECK(Preopetope::opetopic_integer(1) == Preopetope::corolla(Preopetope::arrow()));
    CHECK(Preopetope::opetopic_integer(3).node_count() == 3);
    CHECK(Preopetope::degenerate(Preopetope::arrow()).dim() == 3);
    CHECK_THROWS_AS(Preopetope::opetopic_integer(-1), RuleError);
}

TEST_CASE("entries are canonically sorted, realizing set semantics") {
    Preopetope a = parse_preopetope("{ [] <- arrow ; [*] <- arrow }");
    Preopetope b = parse_preopetope("{ [*] <- arrow ; [] <- arrow }");
    CHECK(a == b);
    CHECK(a.hash() == b.hash());
    CHECK(a == Preopetope::opetopic_integer(2));
    CHECK_THROWS_AS(parse_preopetope("{ [] <- arrow ; [] <- arrow }"), RuleError);
}

TEST_CASE("node and leaf addresses of opetopic integers") {
    Preopetope three = Preopetope::opetopic_integer(3);
    auto nodes = three.node_addresses();
    REQUIRE(nodes.size() == 3);
    CHECK(nodes[0] == Address::empty(1));
    CHECK(nodes[1] == parse_address("[*]"));
    CHECK(nodes[2] == parse_address("[**]"));
    auto leaves = three.leaf_addresses();
    REQUIRE(leaves.size() == 1);
    CHECK(leaves[0] == parse_address("[***]"));
}

TEST_CASE("leaf addresses of a degenerate preopetope") {
    Preopetope zero = Preopetope::opetopic_integer(0);
    auto leaves = zero.leaf_addresses();
    REQUIRE(leaves.size() == 1);
    CHECK(leaves[0] == Address::empty(1));
    CHECK(zero.node_addresses().empty());
    CHECK_THROWS_AS(Preopetope::arrow().leaf_addresses(), RuleError);
}

TEST_CASE("leaf addresses of a 3-dimensional tree") {
    // { [] <- 2 ; [[*]] <- 2 }: grafting a 2-integer on the second input.
    Preopetope omega = parse_preopetope(
        "let int2 = { [] <- arrow ; [*] <- arrow }\n"
        "{ [] <- int2 ; [[*]] <- int2 }");
    auto leaves = omega.leaf_addresses();
    REQUIRE(leaves.size() == 3);
    CHECK(leaves[0] == parse_address("[[]]:2"));
    CHECK(leaves[1] == parse_address("[[*][]]"));
    CHECK(leaves[2] == parse_address("[[*][*]]"));
}

TEST_CASE("leaves and nodes are disjoint and leaves hang off nodes") {
    for (const Preopetope& p :
         {Preopetope::opetopic_integer(4),
          parse_preopetope("let i2 = { [] <- arrow ; [*] <- arrow }\n"
                           "{ [] <- i2 ; [[*]] <- i2 }"),
          parse_preopetope("let i2 = { [] <- arrow ; [*] <- arrow }\n"
                           "{ [] <- i2 ; [[*]] <- degen{ point } }")}) {
        auto nodes = p.node_addresses();
        // free inputs = total input slots minus the slots taken by non-root
        // nodes (a degenerate decoration offers no input slot)
        std::size_t expected = 0;
        for (const Address& a : nodes) {
            // every proper prefix obtained by dropping the last entry is a node
            if (!a.is_empty()) {
                Address parent(a.dim(),
                               {a.entries().begin(), a.entries().end() - 1});
                CHECK(p.has_node(parent));
            }
            expected += p.source(a).node_count();
        }
        expected -= nodes.size() - 1;
        auto leaves = p.leaf_addresses();
        CHECK(leaves.size() == expected);
        for (const Address& l : leaves) CHECK(!p.has_node(l));
    }
}

TEST_CASE("improper grafting adds a decoration at a leaf") {
    Preopetope one = Preopetope::opetopic_integer(1);
    Preopetope two = one.improper_graft(parse_address("[*]"), Preopetope::arrow());
    CHECK(two == Preopetope::opetopic_integer(2));
    CHECK_THROWS_AS(one.improper_graft(parse_address("[**]"), Preopetope::arrow()),
                    RuleError);
    CHECK_THROWS_AS(one.improper_graft(Address::empty(1), Preopetope::arrow()),
                    RuleError);  // [] is the root node, not a leaf
}

TEST_CASE("proper grafting glues trees of equal dimension") {
    Preopetope y2 = Preopetope::corolla(Preopetope::opetopic_integer(2));
    Preopetope got = y2.proper_graft(parse_address("[[*]]"),
                                     Preopetope::corolla(Preopetope::opetopic_integer(2)));
    Preopetope expected = parse_preopetope(
        "let int2 = { [] <- arrow ; [*] <- arrow }\n"
        "{ [] <- int2 ; [[*]] <- int2 }");
    CHECK(got == expected);
    CHECK_THROWS_AS(y2.proper_graft(parse_address("[[*]]"), Preopetope::arrow()), RuleError);
    CHECK_THROWS_AS(
        y2.proper_graft(parse_address("[[*]]"),
                        Preopetope::degenerate(Preopetope::opetopic_integer(2))),
        RuleError);
}

TEST_CASE("without_node") {
    Preopetope three = Preopetope::opetopic_integer(3);
    Preopetope trimmed = three.without_node(parse_address("[**]"));
    CHECK(trimmed == Preopetope::opetopic_integer(2));
    CHECK_THROWS_AS(three.without_node(parse_address("[***]")), RuleError);
    CHECK_THROWS_AS(Preopetope::opetopic_integer(1).without_node(Address::empty(1)),
                    RuleError);
}
