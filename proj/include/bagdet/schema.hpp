#ifndef BAGDET_SCHEMA_HPP
#define BAGDET_SCHEMA_HPP

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace bagdet {

struct Relation {
    std::string name;
    int arity = 0; // 0 is allowed (propositional relations)

    bool operator==(const Relation&) const = default;
};

/// Immutable relational signature. Structures and queries hold a shared
/// pointer to the schema they are over.
class Schema {
public:
    explicit Schema(std::vector<Relation> relations);

    int size() const { return static_cast<int>(relations_.size()); }
    const Relation& relation(int idx) const { return relations_.at(static_cast<size_t>(idx)); }
    const std::vector<Relation>& relations() const { return relations_; }

    /// Index of a relation by name, or -1 if absent.
    int index_of(std::string_view name) const;
    int require(std::string_view name) const; // throws on unknown name

    bool operator==(const Schema& other) const { return relations_ == other.relations_; }

private:
    std::vector<Relation> relations_;
    std::map<std::string, int, std::less<>> index_;
};

using SchemaPtr = std::shared_ptr<const Schema>;

inline SchemaPtr make_schema(std::vector<Relation> relations) {
    return std::make_shared<const Schema>(std::move(relations));
}

/// True when the two pointers denote equal signatures (pointer equality is
/// the common fast path).
inline bool same_schema(const SchemaPtr& a, const SchemaPtr& b) {
    return a == b || (a && b && *a == *b);
}

} // namespace bagdet

#endif
