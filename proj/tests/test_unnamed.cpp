#include <doctest.h>

#include <random>

#include "opetope/errors.hpp"
#include "opetope/textio.hpp"
#include "opetope/unnamed.hpp"

using namespace opetope;
using textio::parse_address;
using textio::parse_preopetope;

TEST_CASE("point and shift") {
    UnnamedSequent pt = rule_point();
    CHECK(pt.source == Preopetope::point());
    CHECK(!pt.target.has_value());
    CHECK(pt.context.empty());

    UnnamedSequent arrow = rule_shift(pt);
    CHECK(arrow.source == Preopetope::arrow());
    CHECK(arrow.target == Preopetope::point());
    CHECK(arrow.context.empty());  // the point has no node addresses

    UnnamedSequent one = rule_shift(arrow);
    CHECK(one.source == Preopetope::opetopic_integer(1));
    CHECK(one.target == Preopetope::arrow());
    REQUIRE(one.context.size() == 1);
    CHECK(one.context[0].first == parse_address("[*]"));
    CHECK(one.context[0].second == Address::star());
}

TEST_CASE("degen") {
    UnnamedSequent z = rule_degen(rule_point());
    CHECK(z.source == Preopetope::opetopic_integer(0));
    CHECK(z.target == Preopetope::arrow());
    REQUIRE(z.context.size() == 1);
    CHECK(z.context[0].first == Address::empty(1));
    CHECK(z.context[0].second == Address::star());
}

TEST_CASE("graft builds the opetopic integers") {
    UnnamedSequent arrow = rule_shift(rule_point());
    UnnamedSequent s = rule_shift(arrow);
    for (int n = 2; n <= 6; ++n) {
        Address at(1, std::vector<Address>(static_cast<std::size_t>(n - 1), Address::star()));
        s = rule_graft(s, at, arrow);
        CHECK(s.source == Preopetope::opetopic_integer(n));
        CHECK(s.target == Preopetope::arrow());
        CHECK(s.context.size() == s.source.leaf_addresses().size());
    }
}

TEST_CASE("graft rejects a non-leaf position") {
    UnnamedSequent arrow = rule_shift(rule_point());
    UnnamedSequent one = rule_shift(arrow);
    CHECK_THROWS_AS(rule_graft(one, parse_address("[**]"), arrow), RuleError);
    CHECK_THROWS_AS(rule_graft(one, Address::empty(1), arrow), RuleError);
}

TEST_CASE("graft checks the inner-edge side condition") {
    UnnamedSequent arrow = rule_shift(rule_point());
    UnnamedSequent two = rule_graft(rule_shift(arrow), parse_address("[*]"), arrow);
    UnnamedSequent y2 = rule_shift(two);
    UnnamedSequent ok = rule_graft(y2, parse_address("[[*]]"), two);
    CHECK(ok.source == parse_preopetope("let i2 = { [] <- arrow ; [*] <- arrow }\n"
                                        "{ [] <- i2 ; [[*]] <- i2 }"));

    // at dimension 4 the inner edge is a 2-cell, so targets can disagree:
    // the edge of Y_{Y_2} at its unique leaf is the 2-integer 2, while a
    // degenerate 3-cell over the arrow has target 1
    UnnamedSequent y32 = rule_shift(y2);
    Address leaf = Address(3, {Address::empty(2)});
    UnnamedSequent good = rule_graft(y32, leaf, y2);  // target of Y_2 is 2
    CHECK(good.source.node_count() == 2);
    UnnamedSequent degen3 = rule_degen(arrow);
    CHECK_THROWS_AS(rule_graft(y32, leaf, degen3), RuleError);
}

TEST_CASE("derive validates and reproduces the shift/graft tower") {
    for (int n = 0; n <= 5; ++n) {
        Preopetope p = Preopetope::opetopic_integer(n);
        UnnamedSequent s = derive(p);
        CHECK(s.source == p);
        CHECK(s.target == Preopetope::arrow());
    }
    Preopetope omega = parse_preopetope("let i2 = { [] <- arrow ; [*] <- arrow }\n"
                                        "{ [] <- i2 ; [[*]] <- i2 }");
    UnnamedSequent s = derive(omega);
    CHECK(s.target == Preopetope::opetopic_integer(3));
}

TEST_CASE("decompose replay restores the preopetope") {
    for (const Preopetope& p :
         {Preopetope::opetopic_integer(4),
          parse_preopetope("let i2 = { [] <- arrow ; [*] <- arrow }\n"
                           "{ [] <- i2 ; [[*]] <- i2 }"),
          generate_random(3, 6, 11), generate_random(4, 5, 12)}) {
        auto peels = decompose(p);
        Preopetope root = p;
        for (const auto& [addr, dec] : peels) root = root.without_node(addr);
        CHECK(root.node_count() == 1);
        for (auto it = peels.rbegin(); it != peels.rend(); ++it)
            root = root.improper_graft(it->first, it->second);
        CHECK(root == p);
    }
}

TEST_CASE("derivation is independent of the peel order") {
    std::mt19937_64 rng(2024);
    for (const Preopetope& p :
         {Preopetope::opetopic_integer(5), generate_random(3, 7, 21),
          generate_random(4, 6, 22), generate_random(5, 4, 23)}) {
        UnnamedSequent reference = derive(p);
        for (int k = 0; k < 4; ++k) {
            UnnamedSequent other = derive_with_random_order(p, rng);
            CHECK(other == reference);
        }
    }
}

TEST_CASE("target_of computes targets") {
    CHECK(target_of(Preopetope::arrow()).first == Preopetope::point());
    CHECK(target_of(Preopetope::opetopic_integer(7)).first == Preopetope::arrow());
    CHECK(target_of(Preopetope::opetopic_integer(0)).first == Preopetope::arrow());
    Preopetope omega = parse_preopetope("let i2 = { [] <- arrow ; [*] <- arrow }\n"
                                        "{ [] <- i2 ; [[*]] <- degen{ point } }");
    auto [t, ctx] = target_of(omega);
    CHECK(t == Preopetope::opetopic_integer(1));
    CHECK(ctx.size() == t.node_count());
}

TEST_CASE("is_opetope rejects ill-formed trees with an explanation") {
    Preopetope bad1 = parse_preopetope("{ [] <- arrow ; [*****] <- arrow }");
    std::string why;
    CHECK(!is_opetope(bad1, &why));
    CHECK(!why.empty());
    Preopetope bad2 = parse_preopetope(
        "{ [[*]] <- degen{ point } ; [[**][*][*]] <- { [] <- arrow } }");
    CHECK(!is_opetope(bad2));
    CHECK(is_opetope(Preopetope::opetopic_integer(9)));
}

TEST_CASE("generated preopetopes are opetopes") {
    for (int dim = 0; dim <= 5; ++dim)
        for (std::uint64_t seed = 0; seed < 8; ++seed) {
            Preopetope p = generate_random(dim, 5, seed);
            CHECK(p.dim() == dim);
            CHECK(is_opetope(p));
        }
}

TEST_CASE("substitution units") {
    // Y_u with q substituted at its only node is q itself
    UnnamedSequent q = derive(Preopetope::opetopic_integer(3));
    Preopetope yu = Preopetope::corolla(*q.target);
    CHECK(substitute(yu, Address::empty(1), q.source, q.context) == q.source);

    // substituting a corolla for a node leaves the tree unchanged
    Preopetope t = parse_preopetope("let i2 = { [] <- arrow ; [*] <- arrow }\n"
                                    "{ [] <- i2 ; [[*]] <- i2 }");
    for (const Address& r : t.node_addresses()) {
        UnnamedSequent w = rule_shift(derive(t.source(r)));
        CHECK(substitute(t, r, w.source, w.context) == t);
    }
}

TEST_CASE("substitution double-application coherence") {
    // two incomparable nodes hanging off a common root
    Preopetope t = parse_preopetope(
        "let i2 = { [] <- arrow ; [*] <- arrow }\n"
        "{ [] <- i2 ; [[]]:2 <- i2 ; [[*]] <- i2 }");
    Address a1 = parse_address("[[]]:2");
    Address a2 = parse_address("[[*]]");
    // a corolla over the source at a node is always a legal substitution
    UnnamedSequent q1 = rule_shift(derive(t.source(a1)));
    UnnamedSequent q2 = rule_shift(derive(t.source(a2)));

    SUBCASE("disjoint nodes") {
        CHECK(substitute_associativity_check(t, a1, q1.source, a2, q2.source, q1.context,
                                             q2.context));
    }
    SUBCASE("nested nodes") {
        // a2' = [] is the only node of the corolla q1
        Address a2n = Address::empty(2);
        UnnamedSequent q2n = rule_shift(derive(q1.source.source(a2n)));
        CHECK(substitute_associativity_check(t, a1, q1.source, a2n, q2n.source, q1.context,
                                             q2n.context));
    }
}
