#include "bagdet/schema.hpp"

#include <stdexcept>

namespace bagdet {

Schema::Schema(std::vector<Relation> relations) : relations_(std::move(relations)) {
    for (int i = 0; i < static_cast<int>(relations_.size()); ++i) {
        const auto& r = relations_[static_cast<size_t>(i)];
        if (r.name.empty())
            throw std::invalid_argument("relation with empty name");
        if (r.arity < 0)
            throw std::invalid_argument("negative arity for relation " + r.name);
        if (!index_.emplace(r.name, i).second)
            throw std::invalid_argument("duplicate relation name: " + r.name);
    }
}

int Schema::index_of(std::string_view name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

int Schema::require(std::string_view name) const {
    int idx = index_of(name);
    if (idx < 0)
        throw std::invalid_argument("unknown relation: " + std::string(name));
    return idx;
}

} // namespace bagdet
