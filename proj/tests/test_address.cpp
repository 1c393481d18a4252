#include <doctest.h>

#include "opetope/address.hpp"
#include "opetope/errors.hpp"
#include "opetope/textio.hpp"

using namespace opetope;
using textio::parse_address;

TEST_CASE("0-addresses are a singleton") {
    CHECK(Address::star() == Address::empty(0));
    CHECK(Address::star().is_star());
    CHECK(Address::star().str() == "*");
    CHECK(Address::lex_compare(Address::star(), Address::empty(0)) == 0);
}

TEST_CASE("construction checks entry dimensions") {
    Address s = Address::star();
    Address a1(1, {s, s});
    CHECK(a1.dim() == 1);
    CHECK(a1.size() == 2);
    CHECK_THROWS_AS(Address(2, {s}), RuleError);
    CHECK_THROWS_AS(Address(0, {s}), RuleError);
}

TEST_CASE("string form annotates exactly the star-free addresses") {
    CHECK(Address::empty(1).str() == "[]:1");
    CHECK(Address::empty(2).str() == "[]:2");
    Address ss(1, {Address::star(), Address::star()});
    CHECK(ss.str() == "[**]");
    Address a(2, {Address::empty(1)});
    CHECK(a.str() == "[[]]:2");
    Address b(2, {ss});
    CHECK(b.str() == "[[**]]");
}

TEST_CASE("parse/str round trip") {
    for (const char* text : {"*", "[]:1", "[*]", "[**]", "[[]]:2", "[[*]]", "[[][*]]",
                             "[[**][*][*]]", "[]:7"}) {
        Address a = parse_address(text);
        CHECK(a.str() == text);
        CHECK(parse_address(a.str()) == a);
    }
}

TEST_CASE("parsing rejects ambiguous and malformed addresses") {
    CHECK_THROWS_AS(parse_address("[]"), ParseError);       // dimension not inferable
    CHECK_THROWS_AS(parse_address("[[]]"), ParseError);
    CHECK_THROWS_AS(parse_address("[*"), ParseError);
    CHECK_THROWS_AS(parse_address("[*]:2"), ParseError);  // annotation contradicts nesting
    CHECK_THROWS_AS(parse_address("[*] junk"), ParseError);
}

TEST_CASE("concatenation") {
    Address s = Address::star();
    Address a = parse_address("[*]");
    Address b = parse_address("[**]");
    CHECK(a.concat(b) == parse_address("[***]"));
    CHECK(a.concat(Address::empty(1)) == a);
    CHECK(Address::empty(1).concat(a) == a);
    CHECK_THROWS_AS(s.concat(s), RuleError);
    CHECK(s.concat_any(s) == s);  // * . * = *
    CHECK_THROWS_AS(a.concat(parse_address("[[*]]")), RuleError);
}

TEST_CASE("append adds one entry") {
    Address a = parse_address("[*]");
    CHECK(a.append(Address::star()) == parse_address("[**]"));
    Address e2 = Address::empty(2);
    CHECK(e2.append(a) == parse_address("[[*]]"));
    CHECK_THROWS_AS(a.append(a), RuleError);
}

TEST_CASE("prefix order") {
    Address e = Address::empty(1);
    Address a = parse_address("[*]");
    Address aa = parse_address("[**]");
    CHECK(e.is_prefix_of(a));
    CHECK(a.is_prefix_of(aa));
    CHECK(a.is_prefix_of(a));
    CHECK(!aa.is_prefix_of(a));
    CHECK_THROWS_AS(e.is_prefix_of(Address::star()), RuleError);
}

TEST_CASE("lexicographic order: a strict prefix precedes its extensions") {
    Address e = Address::empty(2);
    Address p = parse_address("[[]]:2");
    Address pp = parse_address("[[][]]:2");
    Address q = parse_address("[[*]]");
    CHECK(e < p);
    CHECK(p < pp);
    CHECK(p < q);   // [] < [*] entrywise
    CHECK(pp < q);  // first entries tie, [] prefix of nothing left vs [*]... entry order wins
    CHECK(!(q < p));
    CHECK(Address::lex_compare(p, p) == 0);
}

TEST_CASE("lexicographic order is a strict total order on samples") {
    std::vector<Address> sample = {
        Address::empty(2),          parse_address("[[]]:2"),    parse_address("[[][]]:2"),
        parse_address("[[][*]]"),   parse_address("[[*]]"),     parse_address("[[*][]]"),
        parse_address("[[**]]"),
    };
    for (std::size_t i = 0; i < sample.size(); ++i)
        for (std::size_t j = 0; j < sample.size(); ++j) {
            int c = Address::lex_compare(sample[i], sample[j]);
            CHECK(c == -Address::lex_compare(sample[j], sample[i]));
            CHECK((c == 0) == (i == j));
        }
    // transitivity over the sorted sample
    for (std::size_t i = 0; i + 2 < sample.size(); ++i) {
        CHECK(sample[i] < sample[i + 1]);
        CHECK(sample[i] < sample[i + 2]);
    }
}

TEST_CASE("hash respects equality") {
    CHECK(parse_address("[[*]]").hash() == parse_address("[[*]]").hash());
    CHECK(Address::empty(1).hash() != Address::empty(2).hash());
}
