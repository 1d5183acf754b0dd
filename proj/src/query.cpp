#include "bagdet/query.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace bagdet {

ConjunctiveQuery::ConjunctiveQuery(SchemaPtr schema, std::string name,
                                   std::vector<std::string> free_vars, std::vector<QueryAtom> atoms)
    : schema_(std::move(schema)), name_(std::move(name)), free_vars_(std::move(free_vars)),
      atoms_(std::move(atoms)) {
    if (!schema_)
        throw std::invalid_argument("query without schema");
    if (name_.empty())
        throw std::invalid_argument("query with empty name");
    {
        auto sorted = free_vars_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("repeated free variable in query " + name_);
    }
    std::vector<bool> seen_free(free_vars_.size(), false);
    for (const QueryAtom& atom : atoms_) {
        if (atom.relation < 0 || atom.relation >= schema_->size())
            throw std::invalid_argument("atom with unknown relation index");
        const Relation& rel = schema_->relation(atom.relation);
        if (static_cast<int>(atom.vars.size()) != rel.arity)
            throw std::invalid_argument("arity mismatch in atom over " + rel.name);
        for (const std::string& v : atom.vars) {
            if (v.empty())
                throw std::invalid_argument("empty variable name");
            for (size_t i = 0; i < free_vars_.size(); ++i)
                if (free_vars_[i] == v)
                    seen_free[i] = true;
        }
    }
    for (size_t i = 0; i < free_vars_.size(); ++i)
        if (!seen_free[i])
            throw std::invalid_argument("free variable " + free_vars_[i] +
                                        " not used in body of " + name_);
}

std::vector<std::string> ConjunctiveQuery::variables() const {
    std::vector<std::string> out;
    std::map<std::string, int> seen;
    auto add = [&](const std::string& v) {
        if (seen.emplace(v, 0).second)
            out.push_back(v);
    };
    for (const std::string& v : free_vars_)
        add(v);
    for (const QueryAtom& atom : atoms_)
        for (const std::string& v : atom.vars)
            add(v);
    return out;
}

Structure ConjunctiveQuery::frozen_body() const {
    if (!is_boolean())
        throw std::invalid_argument("frozen_body requires a boolean query");
    std::vector<NamedFact> facts;
    facts.reserve(atoms_.size());
    for (const QueryAtom& atom : atoms_)
        facts.push_back(NamedFact{schema_->relation(atom.relation).name, atom.vars});
    return make_structure(schema_, facts);
}

bool ConjunctiveQuery::operator==(const ConjunctiveQuery& other) const {
    return same_schema(schema_, other.schema_) && name_ == other.name_ &&
           free_vars_ == other.free_vars_ && atoms_ == other.atoms_;
}

UnionQuery::UnionQuery(std::vector<ConjunctiveQuery> disjuncts) : disjuncts_(std::move(disjuncts)) {
    if (disjuncts_.empty())
        throw std::invalid_argument("union query with no disjuncts");
    const auto& first = disjuncts_.front();
    for (const auto& d : disjuncts_) {
        if (d.name() != first.name())
            throw std::invalid_argument("union query with mixed head names");
        if (d.free_vars().size() != first.free_vars().size())
            throw std::invalid_argument("union query with mixed arities");
        if (!same_schema(d.schema(), first.schema()))
            throw std::invalid_argument("union query with mixed schemas");
    }
}

const ConjunctiveQuery& UnionQuery::single() const {
    if (!is_single())
        throw std::invalid_argument("query " + name() + " is a proper union");
    return disjuncts_.front();
}

PathQuery::PathQuery(SchemaPtr schema, std::vector<int> letters)
    : schema_(std::move(schema)), letters_(std::move(letters)) {
    if (!schema_)
        throw std::invalid_argument("path query without schema");
    for (int r : letters_) {
        if (r < 0 || r >= schema_->size())
            throw std::invalid_argument("path letter with unknown relation index");
        if (schema_->relation(r).arity != 2)
            throw std::invalid_argument("path letter " + schema_->relation(r).name +
                                        " is not binary");
    }
}

std::string PathQuery::word() const {
    std::string out;
    for (int r : letters_)
        out += schema_->relation(r).name;
    return out;
}

ConjunctiveQuery PathQuery::as_cq(const std::string& name) const {
    std::vector<QueryAtom> atoms;
    auto var = [](int i) { return "x" + std::to_string(i); };
    for (int i = 0; i < length(); ++i)
        atoms.push_back(QueryAtom{letters_[static_cast<size_t>(i)], {var(i), var(i + 1)}});
    std::vector<std::string> free = {var(0), var(length())};
    if (length() == 0)
        // empty word: both endpoints are the same single variable, but with no
        // atoms there is nothing to bind; disallow instead of guessing
        throw std::invalid_argument("empty path query has no atom form");
    return ConjunctiveQuery(schema_, name, std::move(free), std::move(atoms));
}

bool PathQuery::operator==(const PathQuery& other) const {
    return same_schema(schema_, other.schema_) && letters_ == other.letters_;
}

} // namespace bagdet
