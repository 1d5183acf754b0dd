#ifndef BAGDET_STRUCTURE_HPP
#define BAGDET_STRUCTURE_HPP

#include "bagdet/schema.hpp"

#include <compare>
#include <string>
#include <vector>

namespace bagdet {

/// A tuple in a relation; args index the structure's domain.
struct Fact {
    int relation = -1;
    std::vector<int> args;

    auto operator<=>(const Fact&) const = default;
};

/// A fact with named arguments, used at construction and parsing boundaries.
struct NamedFact {
    std::string relation;
    std::vector<std::string> args;

    bool operator==(const NamedFact&) const = default;
};

/// Finite relational structure: named domain plus a set of facts (set
/// semantics; duplicates collapse). Immutable after construction.
///
/// Unless keep_isolated is set, the domain is restricted to elements that
/// occur in some fact, so structures built from fact lists always carry an
/// active domain.
class Structure {
public:
    Structure(SchemaPtr schema, std::vector<std::string> domain, std::vector<Fact> facts,
              bool keep_isolated = false);

    const SchemaPtr& schema() const { return schema_; }
    int domain_size() const { return static_cast<int>(domain_.size()); }
    const std::vector<std::string>& domain() const { return domain_; }
    const std::string& element_name(int e) const { return domain_.at(static_cast<size_t>(e)); }
    int element_index(const std::string& name) const; // -1 if absent

    /// Sorted by (relation, args), duplicate-free.
    const std::vector<Fact>& facts() const { return facts_; }
    int fact_count() const { return static_cast<int>(facts_.size()); }
    bool has_fact(const Fact& f) const;
    bool has_nullary(int relation) const { return has_fact(Fact{relation, {}}); }

    /// Half-open index range of facts() belonging to one relation.
    std::pair<int, int> relation_range(int relation) const;

    /// Indices into facts() of the facts mentioning element e.
    const std::vector<int>& incident(int e) const { return incident_.at(static_cast<size_t>(e)); }
    int degree(int e) const { return static_cast<int>(incident(e).size()); }

    bool keeps_isolated() const { return keep_isolated_; }

    /// Literal equality: equal schemas, equal domain name sequences, equal
    /// fact sets. Use canonical_key for equality up to isomorphism.
    bool operator==(const Structure& other) const;

private:
    SchemaPtr schema_;
    std::vector<std::string> domain_;
    std::vector<Fact> facts_;
    std::vector<std::vector<int>> incident_;
    std::vector<int> relation_begin_; // size |schema|+1
    bool keep_isolated_ = false;
};

/// Builds a structure from named facts, interning element names in order of
/// first appearance.
Structure make_structure(const SchemaPtr& schema, const std::vector<NamedFact>& facts,
                         bool keep_isolated = false);

/// The structure with empty domain and no facts.
Structure empty_structure(const SchemaPtr& schema);

/// Named facts of a structure, in facts() order.
std::vector<NamedFact> named_facts(const Structure& s);

} // namespace bagdet

#endif
