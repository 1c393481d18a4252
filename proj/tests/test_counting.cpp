#include <doctest.h>

#include "opetope/counting.hpp"
#include "opetope/errors.hpp"
#include "opetope/textio.hpp"
#include "opetope/unnamed.hpp"

using namespace opetope;
using textio::parse_preopetope;

TEST_CASE("pinned face counts") {
    CHECK(count(Preopetope::point()) == 1);
    CHECK(count(Preopetope::arrow()) == 3);
    for (int n = 0; n <= 10; ++n)
        CHECK(count(Preopetope::opetopic_integer(n)) == static_cast<std::uint64_t>(2 * n + 3));
    Preopetope with_degen = parse_preopetope(
        "let i2 = { [] <- arrow ; [*] <- arrow }\n"
        "{ [] <- i2 ; [[*]] <- degen{ point } }");
    CHECK(count(with_degen) == 9);
    Preopetope omega = parse_preopetope("let i2 = { [] <- arrow ; [*] <- arrow }\n"
                                        "{ [] <- i2 ; [[*]] <- i2 }");
    CHECK(count(omega) == 13);
}

TEST_CASE("count rejects non-opetopes") {
    CHECK_THROWS_AS(count(parse_preopetope("{ [] <- arrow ; [*****] <- arrow }")), RuleError);
}

TEST_CASE("count agrees with the opetopic-set oracle") {
    CHECK(count_oracle(Preopetope::point()) == 1);
    CHECK(count_oracle(Preopetope::arrow()) == 3);
    for (int n = 0; n <= 5; ++n)
        CHECK(count_oracle(Preopetope::opetopic_integer(n)) ==
              count(Preopetope::opetopic_integer(n)));
    for (int dim = 2; dim <= 4; ++dim)
        for (std::uint64_t seed = 100; seed < 104; ++seed) {
            Preopetope p = generate_random(dim, 4, seed);
            CHECK(count(p) == count_oracle(p));
        }
}
