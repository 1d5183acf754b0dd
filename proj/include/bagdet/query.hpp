#ifndef BAGDET_QUERY_HPP
#define BAGDET_QUERY_HPP

#include "bagdet/structure.hpp"

#include <string>
#include <vector>

namespace bagdet {

struct QueryAtom {
    int relation = -1;
    std::vector<std::string> vars;

    bool operator==(const QueryAtom&) const = default;
};

/// Conjunctive query: named head with free variables over a body of atoms.
/// Atom order and duplicates are preserved as written; under set semantics
/// duplicates are redundant and collapse in frozen_body().
class ConjunctiveQuery {
public:
    ConjunctiveQuery(SchemaPtr schema, std::string name, std::vector<std::string> free_vars,
                     std::vector<QueryAtom> atoms);

    const SchemaPtr& schema() const { return schema_; }
    const std::string& name() const { return name_; }
    const std::vector<std::string>& free_vars() const { return free_vars_; }
    const std::vector<QueryAtom>& atoms() const { return atoms_; }
    bool is_boolean() const { return free_vars_.empty(); }

    /// All variables in order of first appearance (free first, then body).
    std::vector<std::string> variables() const;

    /// Canonical database of a boolean query: one element per variable, one
    /// fact per distinct atom.
    Structure frozen_body() const;

    bool operator==(const ConjunctiveQuery&) const;

private:
    SchemaPtr schema_;
    std::string name_;
    std::vector<std::string> free_vars_;
    std::vector<QueryAtom> atoms_;
};

/// Union of conjunctive queries sharing one head name and free-variable
/// arity. Answer of a boolean union is the sum of disjunct answers.
class UnionQuery {
public:
    explicit UnionQuery(std::vector<ConjunctiveQuery> disjuncts);

    const std::string& name() const { return disjuncts_.front().name(); }
    const SchemaPtr& schema() const { return disjuncts_.front().schema(); }
    const std::vector<ConjunctiveQuery>& disjuncts() const { return disjuncts_; }
    bool is_boolean() const { return disjuncts_.front().is_boolean(); }
    bool is_single() const { return disjuncts_.size() == 1; }
    const ConjunctiveQuery& single() const;

private:
    std::vector<ConjunctiveQuery> disjuncts_;
};

/// Word over a schema whose relations are all binary; denotes the query
/// selecting endpoint pairs of directed paths spelling the word.
class PathQuery {
public:
    PathQuery(SchemaPtr schema, std::vector<int> letters);

    const SchemaPtr& schema() const { return schema_; }
    const std::vector<int>& letters() const { return letters_; }
    int length() const { return static_cast<int>(letters_.size()); }
    std::string word() const;

    /// The two-free-variable conjunctive query x0 -R1-> x1 -R2-> ... -> xm.
    ConjunctiveQuery as_cq(const std::string& name) const;

    bool operator==(const PathQuery& other) const;

private:
    SchemaPtr schema_;
    std::vector<int> letters_;
};

} // namespace bagdet

#endif
