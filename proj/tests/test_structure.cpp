#include "bagdet/parser.hpp"
#include "bagdet/query.hpp"
#include "bagdet/schema.hpp"
#include "bagdet/structure.hpp"

#include "support/fixtures.hpp"

#include <doctest.h>

using namespace bagdet;
using fixtures::cq;
using fixtures::st;

TEST_CASE("schema parsing and validation") {
    SchemaPtr s = parse_schema_text("# relations\nR/2\nS/1\nH/0\n");
    CHECK(s->size() == 3);
    CHECK(s->relation(0).name == "R");
    CHECK(s->relation(0).arity == 2);
    CHECK(s->relation(2).arity == 0);
    CHECK(s->index_of("S") == 1);
    CHECK(s->index_of("missing") == -1);
    CHECK_THROWS_AS(s->require("missing"), std::invalid_argument);

    CHECK_THROWS_AS(parse_schema_text("R/2\nR/1\n"), parse_error);
    CHECK_THROWS_AS(parse_schema_text("R/x\n"), parse_error);
    CHECK_THROWS_AS(parse_schema_text("R\n"), parse_error);
}

TEST_CASE("structure construction normalizes facts") {
    SchemaPtr s = fixtures::one_binary();
    Structure a = st(s, "R(b, a)\nR(a, b)\nR(b, a)\n");
    CHECK(a.domain_size() == 2);
    CHECK(a.fact_count() == 2); // duplicate collapses
    CHECK(std::is_sorted(a.facts().begin(), a.facts().end()));
    CHECK(a.element_index("b") == 0); // first appearance order
    CHECK(a.element_index("missing") == -1);
    CHECK(a.has_fact(Fact{0, {0, 1}}));
    CHECK(a.degree(0) == 2);
}

TEST_CASE("unused elements are dropped unless kept") {
    SchemaPtr s = fixtures::one_binary();
    Structure dropped(s, {"a", "b", "c"}, {Fact{0, {0, 1}}});
    CHECK(dropped.domain_size() == 2);
    Structure kept(s, {"a", "b", "c"}, {Fact{0, {0, 1}}}, true);
    CHECK(kept.domain_size() == 3);
    CHECK(kept.degree(2) == 0);
}

TEST_CASE("structure validation") {
    SchemaPtr s = fixtures::one_binary();
    CHECK_THROWS_AS(Structure(s, {"a"}, {Fact{0, {0, 1}}}), std::invalid_argument); // bad index
    CHECK_THROWS_AS(Structure(s, {"a"}, {Fact{1, {0, 0}}}), std::invalid_argument); // bad relation
    CHECK_THROWS_AS(Structure(s, {"a", "a"}, {}), std::invalid_argument);           // dup name
    CHECK_THROWS_AS(Structure(s, {"a"}, {Fact{0, {0}}}), std::invalid_argument);    // bad arity
}

TEST_CASE("structure text round trip") {
    SchemaPtr s = parse_schema_text("R/2\nH/0\n");
    Structure a = st(s, "# db\nR(x1, y-2)\nH()\nR(y-2, x1)\n");
    Structure b = parse_structure_text(s, write_structure_text(a));
    CHECK(a == b);
    CHECK(a.has_nullary(1));
}

TEST_CASE("structure parse errors carry position") {
    SchemaPtr s = fixtures::one_binary();
    CHECK_THROWS_AS(st(s, "R(a b)\n"), parse_error);
    CHECK_THROWS_AS(st(s, "T(a, b)\n"), parse_error);
    CHECK_THROWS_AS(st(s, "R(a)\n"), parse_error);
    try {
        st(s, "R(a, b)\nR(a\n");
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("query parsing, unions and round trip") {
    SchemaPtr s = parse_schema_text("R/2\nH/0\n");
    std::vector<UnionQuery> qs = parse_query_text(
        s, "Q() :- R(x, y) .\nV() :- H() .\nQ() :- R(x, x) .\n# tail comment\n");
    REQUIRE(qs.size() == 2);
    CHECK(qs[0].name() == "Q");
    CHECK(qs[0].disjuncts().size() == 2);
    CHECK(qs[1].name() == "V");
    CHECK(qs[1].is_single());

    std::vector<UnionQuery> back = parse_query_text(s, write_query_text(qs[0]));
    REQUIRE(back.size() == 1);
    CHECK(back[0].disjuncts().size() == 2);
    CHECK(back[0].disjuncts()[1].atoms() == qs[0].disjuncts()[1].atoms());
}

TEST_CASE("query validation") {
    SchemaPtr s = fixtures::one_binary();
    // free variable must occur in the body
    CHECK_THROWS_AS(ConjunctiveQuery(s, "Q", {"x"}, {QueryAtom{0, {"y", "z"}}}),
                    std::invalid_argument);
    // arity mismatch
    CHECK_THROWS_AS(ConjunctiveQuery(s, "Q", {}, {QueryAtom{0, {"x"}}}), std::invalid_argument);
    // duplicate free variables
    CHECK_THROWS_AS(ConjunctiveQuery(s, "Q", {"x", "x"}, {QueryAtom{0, {"x", "x"}}}),
                    std::invalid_argument);
    // union disjuncts must share name and arity
    ConjunctiveQuery a(s, "Q", {}, {QueryAtom{0, {"x", "y"}}});
    ConjunctiveQuery b(s, "V", {}, {QueryAtom{0, {"x", "y"}}});
    CHECK_THROWS_AS(UnionQuery({a, b}), std::invalid_argument);
}

TEST_CASE("empty body and empty structure") {
    SchemaPtr s = fixtures::one_binary();
    ConjunctiveQuery q = cq(s, "Q() :- .");
    CHECK(q.atoms().empty());
    CHECK(q.frozen_body().domain_size() == 0);
    Structure e = parse_structure_text(s, "# nothing\n");
    CHECK(e == empty_structure(s));
    CHECK(write_structure_text(e).empty());
}

TEST_CASE("frozen body freezes variables in first-appearance order") {
    SchemaPtr s = fixtures::one_binary();
    ConjunctiveQuery q = cq(s, "Q() :- R(b, a), R(a, c), R(b, a) .");
    Structure body = q.frozen_body();
    CHECK(body.domain() == std::vector<std::string>{"b", "a", "c"});
    CHECK(body.fact_count() == 2); // duplicate atom collapses
    CHECK(q.variables() == std::vector<std::string>{"b", "a", "c"});
}

TEST_CASE("path words and schema inference") {
    SchemaPtr s = infer_path_schema({"ABCD", "BC"});
    CHECK(s->size() == 4);
    CHECK(s->relation(0).name == "A");
    PathQuery q = parse_path_word(s, "ABCD");
    CHECK(q.length() == 4);
    CHECK(q.word() == "ABCD");
    ConjunctiveQuery chain = q.as_cq("Q");
    CHECK(chain.free_vars() == std::vector<std::string>{"x0", "x4"});
    CHECK(chain.atoms().size() == 4);
    CHECK_THROWS_AS(parse_path_word(s, "ABX"), parse_error);
    CHECK_THROWS_AS(parse_path_word(s, ""), parse_error);

    std::vector<PathQuery> vs = parse_path_words(s, "ABC\nBC\n# note\nBCD\n");
    CHECK(vs.size() == 3);
}

TEST_CASE("path queries need binary letters") {
    SchemaPtr s = parse_schema_text("A/2\nU/1\n");
    CHECK_THROWS_AS(PathQuery(s, {1}), std::invalid_argument);
}
