#include "bagdet/witness.hpp"
#include "bagdet/canonical.hpp"
#include "bagdet/hom.hpp"
#include "bagdet/parser.hpp"

#include "support/fixtures.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <algorithm>

using namespace bagdet;
using fixtures::cq;
using fixtures::st;

TEST_CASE("distinguishers separate non-isomorphic connected structures") {
    SchemaPtr s = fixtures::one_binary();
    Structure edge = st(s, "R(a, b)\n");
    Structure loop = st(s, "R(u, u)\n");
    Structure path2 = st(s, "R(a, b)\nR(b, c)\n");
    for (auto [a, b] : {std::pair{edge, loop}, {edge, path2}, {loop, path2}}) {
        Structure w = find_distinguisher(a, b);
        CHECK(hom_count(a, w) != hom_count(b, w));
    }

    oracles::Rng rng(55);
    SchemaPtr s2 = fixtures::two_binary_one_unary();
    for (int i = 0; i < 40; ++i) {
        Structure a = oracles::random_connected_structure(rng, s2, 3);
        Structure b = oracles::random_connected_structure(rng, s2, 3);
        if (isomorphic(a, b))
            continue;
        Structure w = find_distinguisher(a, b);
        CHECK(hom_count(a, w) != hom_count(b, w));
    }
}

TEST_CASE("good basis has distinct digits and an invertible matrix") {
    fixtures::EdgeLoopPath elp;
    ConjunctiveQuery q = elp.combo("Q", 1, 1, 2);
    auto [basis, vectors] = component_basis({q});
    REQUIRE(basis.size() == 3);
    GoodBasis gb = build_good_basis(basis, q);
    REQUIRE(gb.h.size() == 3);
    CHECK(gb.g == IntVec{6, 1, 3});
    for (size_t i = 0; i < gb.h.size(); ++i)
        for (size_t j = i + 1; j < gb.h.size(); ++j)
            CHECK(gb.h[i] != gb.h[j]);
    CHECK(oracles::laplace_det(gb.eval_matrix) != Rat(0));
    CHECK(gb.eval_matrix.mul(gb.inverse) == RatMat::identity(3));
    // the radix dominates every per-distinguisher digit, which is what makes
    // the weighted sums h pairwise distinct
    for (const Structure& dist : gb.distinguishers)
        for (const Structure& comp : basis.components)
            CHECK(gb.radix > hom_count(dist, comp));
    // first column is the counts on the frozen body itself (merged^0 = one)
    for (int i = 0; i < 3; ++i)
        CHECK(gb.eval_matrix.at(i, 0) == Rat(gb.g[static_cast<size_t>(i)]));
}

TEST_CASE("matrix evaluation equals counting on the materialized union") {
    fixtures::EdgeLoopPath elp;
    ConjunctiveQuery q = elp.combo("Q", 1, 1, 2);
    auto [basis, vectors] = component_basis({q});
    GoodBasis gb = build_good_basis(basis, q);
    oracles::Rng rng(404);
    for (int trial = 0; trial < 10; ++trial) {
        IntVec mult;
        for (int j = 0; j < basis.size(); ++j)
            mult.push_back(1 + rng.below(3));
        std::vector<std::pair<Int, StructExpr>> terms;
        for (size_t j = 0; j < mult.size(); ++j)
            terms.emplace_back(mult[j], gb.structures[j]);
        StructExpr d_expr = StructExpr::sum(std::move(terms));
        auto d = d_expr.materialize();
        REQUIRE(d.has_value());
        CHECK(eval_on_basis(vectors[0], gb, mult) == eval_boolean_cq(q, *d));
        for (int i = 0; i < basis.size(); ++i) {
            IntVec unit(static_cast<size_t>(basis.size()), Int(0));
            unit[static_cast<size_t>(i)] = 1;
            CHECK(eval_on_basis(unit, gb, mult) == hom_count(basis.components[static_cast<size_t>(i)], *d));
        }
    }
}

TEST_CASE("single-component trace doubles and triples the base structure") {
    SchemaPtr s = fixtures::one_binary();
    ConjunctiveQuery q = cq(s, "Q() :- R(x, y), R(y, z) .");
    Verdict verdict = decide({}, q, true);
    CHECK(!verdict.determined);
    REQUIRE(verdict.witness);
    const WitnessPair& wp = *verdict.witness;
    CHECK(wp.mult == IntVec{2});
    CHECK(wp.mult_prime == IntVec{3});
    CHECK(wp.trace.t == make_rat(3, 2));
    CHECK(wp.trace.c == 1);
    CHECK(wp.trace.c_prime == 2);
    CHECK(wp.trace.z == IntVec{1});
    CHECK(wp.report.passed);
    REQUIRE(wp.d.has_value());
    REQUIRE(wp.d_prime.has_value());
    Int g = hom_count(q.frozen_body(), q.frozen_body());
    CHECK(eval_boolean_cq(q, *wp.d) == 2 * g);
    CHECK(eval_boolean_cq(q, *wp.d_prime) == 3 * g);
    CHECK(oracles::brute_hom_count(q.frozen_body(), *wp.d) == 2 * g);
    CHECK(oracles::brute_hom_count(q.frozen_body(), *wp.d_prime) == 3 * g);
}

TEST_CASE("two-component witness verified along all routes") {
    SchemaPtr s = fixtures::one_binary();
    ConjunctiveQuery q = cq(s, "Q() :- R(x, y), R(y, z) .");
    ConjunctiveQuery v = cq(s, "V() :- R(x, y) .");
    Verdict verdict = decide({v}, q, true);
    CHECK(!verdict.determined);
    REQUIRE(verdict.witness);
    const WitnessPair& wp = *verdict.witness;
    CHECK(wp.report.passed);
    CHECK(wp.view_names == std::vector<std::string>{"V"});
    bool direct_seen = false;
    for (const CountCheck& chk : wp.report.checks) {
        CHECK(chk.ok);
        if (chk.route.find("direct") != std::string::npos)
            direct_seen = true;
    }
    CHECK(direct_seen == wp.d.has_value());
    if (wp.d) {
        CHECK(eval_boolean_cq(v, *wp.d) == eval_boolean_cq(v, *wp.d_prime));
        CHECK(eval_boolean_cq(q, *wp.d) != eval_boolean_cq(q, *wp.d_prime));
    }
}

TEST_CASE("witnesses on random undetermined instances always verify") {
    SchemaPtr s = fixtures::one_binary();
    oracles::Rng rng(1234);
    Limits lim;
    lim.max_candidates = 2'000'000;
    int found = 0;
    for (int i = 0; i < 25 && found < 12; ++i) {
        ConjunctiveQuery q = oracles::random_boolean_cq(rng, s, "Q", 3);
        std::vector<ConjunctiveQuery> views;
        int nv = rng.below(3);
        for (int v = 0; v < nv; ++v)
            views.push_back(oracles::random_boolean_cq(rng, s, "V" + std::to_string(v), 2));
        Verdict verdict = decide(views, q, true, lim);
        if (verdict.determined)
            continue;
        REQUIRE(verdict.witness);
        CHECK(verdict.witness->report.passed);
        ++found;
    }
    CHECK(found >= 5);
}

TEST_CASE("no witness is produced for determined instances") {
    fixtures::EdgeLoopPath elp;
    ConjunctiveQuery q = elp.combo("Q", 1, 1, 2);
    ConjunctiveQuery v1 = elp.combo("V1", 2, 1, 3);
    ConjunctiveQuery v2 = elp.combo("V2", 5, 2, 7);
    Verdict verdict = decide({v1, v2}, q, true);
    CHECK(verdict.determined);
    CHECK(verdict.witness == nullptr);
}

TEST_CASE("propositional components cannot be perturbed") {
    SchemaPtr s = parse_schema_text("R/2\nH/0\n");
    ConjunctiveQuery q = cq(s, "Q() :- H() .");
    Verdict verdict = decide({}, q, true);
    CHECK(!verdict.determined);
    CHECK(verdict.witness == nullptr);
    REQUIRE(!verdict.diagnostics.notes.empty());
    bool mentioned = false;
    for (const std::string& note : verdict.diagnostics.notes)
        mentioned = mentioned || note.find("nullary") != std::string::npos;
    CHECK(mentioned);
}

TEST_CASE("verification rejects a doctored pair") {
    SchemaPtr s = fixtures::one_binary();
    ConjunctiveQuery q = cq(s, "Q() :- R(x, y), R(y, z) .");
    Verdict verdict = decide({}, q, true);
    REQUIRE(verdict.witness);
    WitnessPair doctored = *verdict.witness;
    doctored.mult_prime = doctored.mult; // both sides equal now
    doctored.d_prime = doctored.d;
    VerificationReport report = verify_witness({}, q, doctored);
    CHECK(!report.passed);
}
