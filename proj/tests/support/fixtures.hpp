#ifndef BAGDET_TESTS_FIXTURES_HPP
#define BAGDET_TESTS_FIXTURES_HPP

#include "bagdet/parser.hpp"
#include "bagdet/query.hpp"
#include "bagdet/structure.hpp"

#include <string>
#include <vector>

namespace bagdet::fixtures {

inline SchemaPtr one_binary() { return parse_schema_text("R/2\n"); }
inline SchemaPtr two_binary_one_unary() { return parse_schema_text("R/2\nS/2\nU/1\n"); }

inline Structure st(const SchemaPtr& schema, const std::string& text) {
    return parse_structure_text(schema, text);
}

inline ConjunctiveQuery cq(const SchemaPtr& schema, const std::string& text) {
    return parse_single_query_text(schema, text).single();
}

/// Body with `mult[i]` fresh copies of each template's atoms, variables
/// renamed apart per copy.
inline ConjunctiveQuery weighted_cq(const SchemaPtr& schema, const std::string& name,
                                    const std::vector<int>& mult,
                                    const std::vector<ConjunctiveQuery>& templates) {
    std::vector<QueryAtom> atoms;
    for (size_t i = 0; i < templates.size(); ++i)
        for (int c = 0; c < mult[i]; ++c)
            for (QueryAtom atom : templates[i].atoms()) {
                for (std::string& v : atom.vars)
                    v = "m" + std::to_string(i) + "c" + std::to_string(c) + "_" + v;
                atoms.push_back(std::move(atom));
            }
    return ConjunctiveQuery(schema, name, {}, std::move(atoms));
}

/// The worked three-component family: single edge, self-loop, two-step path
/// (all over one binary relation R).
struct EdgeLoopPath {
    SchemaPtr schema = one_binary();
    ConjunctiveQuery edge = cq(schema, "W1() :- R(x, y) .");
    ConjunctiveQuery loop = cq(schema, "W2() :- R(x, x) .");
    ConjunctiveQuery path2 = cq(schema, "W3() :- R(x, y), R(y, z) .");

    ConjunctiveQuery combo(const std::string& name, int e, int l, int p) const {
        return weighted_cq(schema, name, {e, l, p}, {edge, loop, path2});
    }
};

} // namespace bagdet::fixtures

#endif
