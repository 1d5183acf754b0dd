#include "bagdet/structure.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace bagdet {

Structure::Structure(SchemaPtr schema, std::vector<std::string> domain, std::vector<Fact> facts,
                     bool keep_isolated)
    : schema_(std::move(schema)), domain_(std::move(domain)), facts_(std::move(facts)),
      keep_isolated_(keep_isolated) {
    if (!schema_)
        throw std::invalid_argument("structure without schema");
    const int n = static_cast<int>(domain_.size());
    {
        std::map<std::string, int> seen;
        for (int e = 0; e < n; ++e) {
            if (domain_[static_cast<size_t>(e)].empty())
                throw std::invalid_argument("empty element name");
            if (!seen.emplace(domain_[static_cast<size_t>(e)], e).second)
                throw std::invalid_argument("duplicate element name: " + domain_[static_cast<size_t>(e)]);
        }
    }
    for (const Fact& f : facts_) {
        if (f.relation < 0 || f.relation >= schema_->size())
            throw std::invalid_argument("fact with unknown relation index");
        const Relation& rel = schema_->relation(f.relation);
        if (static_cast<int>(f.args.size()) != rel.arity)
            throw std::invalid_argument("arity mismatch for relation " + rel.name);
        for (int a : f.args)
            if (a < 0 || a >= n)
                throw std::invalid_argument("fact argument outside domain");
    }
    std::sort(facts_.begin(), facts_.end());
    facts_.erase(std::unique(facts_.begin(), facts_.end()), facts_.end());

    if (!keep_isolated_) {
        std::vector<bool> used(static_cast<size_t>(n), false);
        for (const Fact& f : facts_)
            for (int a : f.args)
                used[static_cast<size_t>(a)] = true;
        if (std::find(used.begin(), used.end(), false) != used.end()) {
            std::vector<int> remap(static_cast<size_t>(n), -1);
            std::vector<std::string> active;
            for (int e = 0; e < n; ++e)
                if (used[static_cast<size_t>(e)]) {
                    remap[static_cast<size_t>(e)] = static_cast<int>(active.size());
                    active.push_back(std::move(domain_[static_cast<size_t>(e)]));
                }
            domain_ = std::move(active);
            for (Fact& f : facts_)
                for (int& a : f.args)
                    a = remap[static_cast<size_t>(a)];
        }
    }

    incident_.assign(domain_.size(), {});
    for (int i = 0; i < static_cast<int>(facts_.size()); ++i) {
        const Fact& f = facts_[static_cast<size_t>(i)];
        int prev = -1;
        std::vector<int> sorted_args = f.args;
        std::sort(sorted_args.begin(), sorted_args.end());
        for (int a : sorted_args) {
            if (a != prev) // count each fact once per element
                incident_[static_cast<size_t>(a)].push_back(i);
            prev = a;
        }
    }
    relation_begin_.assign(static_cast<size_t>(schema_->size()) + 1, 0);
    for (const Fact& f : facts_)
        ++relation_begin_[static_cast<size_t>(f.relation) + 1];
    for (size_t r = 1; r < relation_begin_.size(); ++r)
        relation_begin_[r] += relation_begin_[r - 1];
}

int Structure::element_index(const std::string& name) const {
    for (int e = 0; e < domain_size(); ++e)
        if (domain_[static_cast<size_t>(e)] == name)
            return e;
    return -1;
}

bool Structure::has_fact(const Fact& f) const {
    return std::binary_search(facts_.begin(), facts_.end(), f);
}

std::pair<int, int> Structure::relation_range(int relation) const {
    if (relation < 0 || relation >= schema_->size())
        throw std::invalid_argument("relation index out of range");
    return {relation_begin_[static_cast<size_t>(relation)],
            relation_begin_[static_cast<size_t>(relation) + 1]};
}

bool Structure::operator==(const Structure& other) const {
    return same_schema(schema_, other.schema_) && domain_ == other.domain_ && facts_ == other.facts_;
}

Structure make_structure(const SchemaPtr& schema, const std::vector<NamedFact>& facts,
                         bool keep_isolated) {
    std::map<std::string, int> ids;
    std::vector<std::string> domain;
    std::vector<Fact> out;
    out.reserve(facts.size());
    for (const NamedFact& nf : facts) {
        Fact f;
        f.relation = schema->require(nf.relation);
        f.args.reserve(nf.args.size());
        for (const std::string& name : nf.args) {
            auto [it, fresh] = ids.emplace(name, static_cast<int>(domain.size()));
            if (fresh)
                domain.push_back(name);
            f.args.push_back(it->second);
        }
        out.push_back(std::move(f));
    }
    return Structure(schema, std::move(domain), std::move(out), keep_isolated);
}

Structure empty_structure(const SchemaPtr& schema) { return Structure(schema, {}, {}); }

std::vector<NamedFact> named_facts(const Structure& s) {
    std::vector<NamedFact> out;
    out.reserve(s.facts().size());
    for (const Fact& f : s.facts()) {
        NamedFact nf;
        nf.relation = s.schema()->relation(f.relation).name;
        for (int a : f.args)
            nf.args.push_back(s.element_name(a));
        out.push_back(std::move(nf));
    }
    return out;
}

} // namespace bagdet
