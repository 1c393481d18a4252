#include <doctest.h>

#include "opetope/coding.hpp"
#include "opetope/errors.hpp"
#include "opetope/textio.hpp"
#include "opetope/unnamed.hpp"

using namespace opetope;
using textio::parse_preopetope;

namespace {

NamedSequent named_two() {
    NamedSequent f = n_shift(n_point("a"), "f");
    NamedSequent g = n_shift(n_point("b"), "g");
    return n_shift(n_graft(g, Variable("b", 0), f), "n2");
}

}  // namespace

TEST_CASE("coding of variables and terms") {
    CHECK(to_preopetope(n_point("a")) == Preopetope::point());
    CHECK(to_preopetope(n_shift(n_point("a"), "f")) == Preopetope::arrow());
    CHECK(to_preopetope(named_two()) == Preopetope::opetopic_integer(2));
    CHECK(to_preopetope(n_degen_shift(n_point("a"), "n0")) ==
          Preopetope::opetopic_integer(0));

    // a pasting-diagram subject codes one dimension up
    NamedSequent f = n_shift(n_point("a"), "f");
    NamedSequent g = n_shift(n_point("b"), "g");
    NamedSequent pd = n_graft(g, Variable("b", 0), f);
    CHECK(to_preopetope(pd) == Preopetope::opetopic_integer(2));
}

TEST_CASE("coding of the classic 3-cells") {
    NamedSequent f = n_shift(n_point("a"), "f");
    NamedSequent g = n_shift(n_point("b"), "g");
    NamedSequent alpha = n_degen_shift(n_point("a"), "alpha");
    NamedSequent beta = n_shift(n_graft(g, Variable("b", 0), f), "beta");
    NamedSequent d = n_shift(n_graft(beta, Variable("f", 1), alpha), "D");
    CHECK(to_preopetope(d) ==
          parse_preopetope("let i2 = { [] <- arrow ; [*] <- arrow }\n"
                           "{ [] <- i2 ; [[*]] <- degen{ point } }"));
}

TEST_CASE("to_named inverts the coding") {
    std::vector<Preopetope> samples = {Preopetope::point(), Preopetope::arrow()};
    for (int n = 0; n <= 5; ++n) samples.push_back(Preopetope::opetopic_integer(n));
    samples.push_back(parse_preopetope("let i2 = { [] <- arrow ; [*] <- arrow }\n"
                                       "{ [] <- i2 ; [[*]] <- i2 }"));
    samples.push_back(parse_preopetope("let i2 = { [] <- arrow ; [*] <- arrow }\n"
                                       "{ [] <- i2 ; [[*]] <- degen{ point } }"));
    for (int dim = 2; dim <= 4; ++dim)
        for (std::uint64_t seed = 40; seed < 44; ++seed)
            samples.push_back(generate_random(dim, 5, seed));

    for (const Preopetope& p : samples) {
        NamedSequent s = to_named(p);
        CHECK(sequent_sources_consistent(s));
        CHECK(to_preopetope(s) == p);
    }
}

TEST_CASE("to_named is canonical up to renaming") {
    CHECK(alpha_equivalent(to_named(Preopetope::opetopic_integer(2)), named_two()));
    CHECK(alpha_equivalent(to_named(Preopetope::arrow(), "y"),
                           to_named(Preopetope::arrow(), "z")));
}

TEST_CASE("readdressing matches term addresses at the leaves") {
    // for a derived sequent with subject t, the unnamed readdressing sends
    // the leaf address of a free source variable b to the node address of b
    // in the source term
    for (const NamedSequent& s : {named_two(),
                                  to_named(parse_preopetope(
                                      "let i2 = { [] <- arrow ; [*] <- arrow }\n"
                                      "{ [] <- i2 ; [[*]] <- i2 }"))}) {
        NamedTerm t = s.term.is_variable() ? s.ctx.source_of(s.term.head()) : s.term;
        Preopetope p = code_term(t, s.ctx, s.theory);
        UnnamedSequent u = derive(p);
        NamedTerm st = source_bar(t, s.ctx, s.theory);
        for (const Variable& b : term_vars(st)) {
            Address leaf = var_address(t, b, AddressMode::leaf, s.ctx, s.theory);
            Address node = var_address(st, b, AddressMode::node, s.ctx, s.theory);
            bool found = false;
            for (const auto& [l, n] : u.context)
                if (l == leaf) {
                    CHECK(n == node);
                    found = true;
                }
            CHECK(found);
        }
    }
}
