#include "bagdet/canonical.hpp"
#include "bagdet/parser.hpp"

#include "support/fixtures.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <algorithm>

using namespace bagdet;
using fixtures::st;

TEST_CASE("connected components split on shared elements") {
    SchemaPtr s = parse_schema_text("R/2\nH/0\nC/0\n");
    Structure a = st(s, "R(x, y)\nR(y, z)\nR(u, v)\nH()\nC()\n");
    std::vector<Structure> parts = connected_components(a);
    REQUIRE(parts.size() == 4);
    CHECK(parts[0].domain_size() == 3); // x-y-z chain comes first
    CHECK(parts[1].domain_size() == 2);
    CHECK(parts[2].domain_size() == 0); // each nullary fact on its own
    CHECK(parts[3].domain_size() == 0);
    CHECK(parts[2].has_nullary(1));
    CHECK(parts[3].has_nullary(2));
    CHECK(!is_connected(a));
    CHECK(is_connected(parts[0]));
}

TEST_CASE("isolated elements form their own components") {
    SchemaPtr s = fixtures::one_binary();
    Structure a(s, {"a", "b", "c"}, {Fact{0, {0, 1}}}, true);
    std::vector<Structure> parts = connected_components(a);
    REQUIRE(parts.size() == 2);
    CHECK(parts[1].domain_size() == 1);
    CHECK(parts[1].fact_count() == 0);
}

TEST_CASE("canonical key is invariant under renaming and reordering") {
    SchemaPtr s = fixtures::one_binary();
    Structure a = st(s, "R(a, b)\nR(b, c)\nR(c, a)\n");
    Structure b = st(s, "R(v, u)\nR(w, v)\nR(u, w)\n");
    CHECK(canonical_key(a) == canonical_key(b));
    CHECK(isomorphic(a, b));

    Structure chain = st(s, "R(a, b)\nR(b, c)\n");
    CHECK(canonical_key(a) != canonical_key(chain));
    CHECK(!isomorphic(a, chain));
}

TEST_CASE("canonical key distinguishes direction") {
    SchemaPtr s = fixtures::one_binary();
    Structure out2 = st(s, "R(m, a)\nR(m, b)\n"); // two out-edges
    Structure in2 = st(s, "R(a, m)\nR(b, m)\n");  // two in-edges
    CHECK(canonical_key(out2) != canonical_key(in2));
}

TEST_CASE("isomorphism agrees with the permutation oracle") {
    SchemaPtr s = fixtures::two_binary_one_unary();
    oracles::Rng rng(20240817);
    int iso_seen = 0;
    for (int i = 0; i < 150; ++i) {
        Structure a = oracles::random_structure(rng, s, 4);
        Structure b = oracles::random_structure(rng, s, 4);
        bool expected = oracles::brute_isomorphic(a, b);
        CHECK(isomorphic(a, b) == expected);
        if (expected)
            ++iso_seen;

        // a shuffled renamed copy must always match
        std::vector<std::string> renamed;
        for (int e = 0; e < a.domain_size(); ++e)
            renamed.push_back("n" + std::to_string(e));
        std::shuffle(renamed.begin(), renamed.end(), rng.gen);
        std::vector<Fact> facts = a.facts();
        std::shuffle(facts.begin(), facts.end(), rng.gen);
        Structure copy(s, renamed, facts, a.keeps_isolated());
        CHECK(canonical_key(copy) == canonical_key(a));
    }
    CHECK(iso_seen > 0); // empty/tiny structures collide often enough
}

TEST_CASE("nullary-only structures compare by their fact sets") {
    SchemaPtr s = parse_schema_text("H/0\nC/0\n");
    Structure h = st(s, "H()\n");
    Structure c = st(s, "C()\n");
    Structure hc = st(s, "H()\nC()\n");
    CHECK(canonical_key(h) != canonical_key(c));
    CHECK(canonical_key(hc) != canonical_key(h));
    CHECK(isomorphic(h, h));
}

TEST_CASE("key search respects the candidate budget") {
    SchemaPtr s = fixtures::one_binary();
    // complete digraph on 7 elements: every refinement class stays fused
    std::vector<Fact> facts;
    std::vector<std::string> names;
    for (int i = 0; i < 7; ++i)
        names.push_back("k" + std::to_string(i));
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j)
            facts.push_back(Fact{0, {i, j}});
    Structure k7(s, names, facts);
    Limits tight;
    tight.max_candidates = 10;
    CHECK_THROWS_AS(canonical_key(k7, tight), limit_error);
    CHECK(canonical_key(k7) == canonical_key(k7)); // default budget suffices
}
