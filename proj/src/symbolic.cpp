#include "bagdet/symbolic.hpp"

#include "bagdet/canonical.hpp"

#include <map>
#include <stdexcept>

namespace bagdet {

struct StructExpr::Node {
    ExprKind kind = ExprKind::leaf;
    SchemaPtr schema;
    std::optional<Structure> leaf;
    std::vector<std::pair<Int, StructExpr>> terms;
    std::vector<StructExpr> factors;
    std::optional<StructExpr> base;
    Int exponent;
};

StructExpr StructExpr::leaf(Structure s) {
    auto node = std::make_shared<Node>();
    node->kind = ExprKind::leaf;
    node->schema = s.schema();
    node->leaf = std::move(s);
    return StructExpr(std::move(node));
}

StructExpr StructExpr::sum(std::vector<std::pair<Int, StructExpr>> terms) {
    if (terms.empty())
        throw std::invalid_argument("StructExpr::sum: no terms");
    auto node = std::make_shared<Node>();
    node->kind = ExprKind::sum;
    node->schema = terms.front().second.schema();
    for (const auto& [c, child] : terms) {
        if (c < 0)
            throw std::invalid_argument("StructExpr::sum: negative coefficient");
        if (!same_schema(child.schema(), node->schema))
            throw std::invalid_argument("StructExpr::sum: mixed schemas");
    }
    node->terms = std::move(terms);
    return StructExpr(std::move(node));
}

StructExpr StructExpr::product(std::vector<StructExpr> factors) {
    if (factors.empty())
        throw std::invalid_argument("StructExpr::product: no factors");
    auto node = std::make_shared<Node>();
    node->kind = ExprKind::product;
    node->schema = factors.front().schema();
    for (const StructExpr& f : factors)
        if (!same_schema(f.schema(), node->schema))
            throw std::invalid_argument("StructExpr::product: mixed schemas");
    node->factors = std::move(factors);
    return StructExpr(std::move(node));
}

StructExpr StructExpr::power(StructExpr base, Int exponent) {
    if (exponent < 0)
        throw std::invalid_argument("StructExpr::power: negative exponent");
    auto node = std::make_shared<Node>();
    node->kind = ExprKind::power;
    node->schema = base.schema();
    node->base = std::move(base);
    node->exponent = std::move(exponent);
    return StructExpr(std::move(node));
}

ExprKind StructExpr::kind() const { return node_->kind; }
const SchemaPtr& StructExpr::schema() const { return node_->schema; }

const Structure& StructExpr::leaf_value() const {
    if (node_->kind != ExprKind::leaf)
        throw std::logic_error("not a leaf");
    return *node_->leaf;
}

const std::vector<std::pair<Int, StructExpr>>& StructExpr::sum_terms() const {
    if (node_->kind != ExprKind::sum)
        throw std::logic_error("not a sum");
    return node_->terms;
}

const std::vector<StructExpr>& StructExpr::product_factors() const {
    if (node_->kind != ExprKind::product)
        throw std::logic_error("not a product");
    return node_->factors;
}

const StructExpr& StructExpr::power_base() const {
    if (node_->kind != ExprKind::power)
        throw std::logic_error("not a power");
    return *node_->base;
}

const Int& StructExpr::power_exponent() const {
    if (node_->kind != ExprKind::power)
        throw std::logic_error("not a power");
    return node_->exponent;
}

Int StructExpr::domain_size_saturated(const Int& cap) const {
    switch (node_->kind) {
    case ExprKind::leaf:
        return Int(node_->leaf->domain_size());
    case ExprKind::sum: {
        Int total = 0;
        for (const auto& [c, child] : node_->terms) {
            Int piece = child.domain_size_saturated(cap);
            if (piece > 0 && c > cap / piece + 1)
                return cap + 1;
            total += c * piece;
            if (total > cap)
                return cap + 1;
        }
        return total;
    }
    case ExprKind::product: {
        Int total = 1;
        for (const StructExpr& f : node_->factors) {
            total *= f.domain_size_saturated(cap);
            if (total > cap)
                return cap + 1;
        }
        return total;
    }
    case ExprKind::power: {
        Int base = node_->base->domain_size_saturated(cap);
        if (node_->exponent == 0)
            return 1;
        if (base <= 1)
            return base;
        if (base > cap)
            return cap + 1;
        Int total = 1;
        for (Int i = 0; i < node_->exponent; ++i) {
            total *= base;
            if (total > cap)
                return cap + 1;
        }
        return total;
    }
    }
    throw std::logic_error("unreachable");
}

bool StructExpr::contains_nullary(int relation) const {
    switch (node_->kind) {
    case ExprKind::leaf:
        return node_->leaf->has_nullary(relation);
    case ExprKind::sum:
        for (const auto& [c, child] : node_->terms)
            if (c > 0 && child.contains_nullary(relation))
                return true;
        return false;
    case ExprKind::product:
        for (const StructExpr& f : node_->factors)
            if (!f.contains_nullary(relation))
                return false;
        return true;
    case ExprKind::power:
        return node_->exponent == 0 || node_->base->contains_nullary(relation);
    }
    throw std::logic_error("unreachable");
}

Int StructExpr::hom_connected(const Structure& pattern, const Limits& limits) const {
    if (pattern.domain_size() == 0)
        throw std::invalid_argument("hom_connected: pattern has empty domain");
    switch (node_->kind) {
    case ExprKind::leaf:
        return hom_count_connected(pattern, *node_->leaf, limits);
    case ExprKind::sum: {
        // valid because the pattern is connected
        Int total = 0;
        for (const auto& [c, child] : node_->terms)
            if (c > 0)
                total += c * child.hom_connected(pattern, limits);
        return total;
    }
    case ExprKind::product: {
        Int total = 1;
        for (const StructExpr& f : node_->factors) {
            total *= f.hom_connected(pattern, limits);
            if (total == 0)
                return 0;
        }
        return total;
    }
    case ExprKind::power: {
        if (node_->exponent == 0)
            return 1; // everything collapses onto the looped point
        Int one = node_->base->hom_connected(pattern, limits);
        if (!node_->exponent.fits_ulong_p())
            throw limit_error("hom_connected: power exponent too large");
        return pow_int(one, node_->exponent.get_ui());
    }
    }
    throw std::logic_error("unreachable");
}

Int StructExpr::count_query(const ConjunctiveQuery& q, const Limits& limits) const {
    Structure body = q.frozen_body();
    for (const Fact& f : body.facts())
        if (f.args.empty() && !contains_nullary(f.relation))
            return 0;
    std::map<std::string, std::pair<Structure, unsigned long>> types;
    for (Structure& comp : connected_components(body)) {
        if (comp.domain_size() == 0)
            continue;
        std::string key = canonical_key(comp, limits);
        auto it = types.find(key);
        if (it == types.end())
            types.emplace(std::move(key), std::make_pair(std::move(comp), 1ul));
        else
            ++it->second.second;
    }
    Int total = 1;
    for (auto& [key, entry] : types) {
        Int one = hom_connected(entry.first, limits);
        if (one == 0)
            return 0;
        total *= pow_int(one, entry.second);
    }
    return total;
}

Int StructExpr::count_query(const UnionQuery& q, const Limits& limits) const {
    Int total = 0;
    for (const ConjunctiveQuery& cq : q.disjuncts())
        total += count_query(cq, limits);
    return total;
}

std::optional<Structure> StructExpr::materialize(const Limits& limits) const {
    if (domain_size_saturated(Int(limits.max_materialized_size)) > limits.max_materialized_size)
        return std::nullopt;
    Limits build = limits;
    build.max_domain_size = limits.max_materialized_size;
    switch (node_->kind) {
    case ExprKind::leaf:
        return *node_->leaf;
    case ExprKind::sum: {
        std::vector<Int> coeffs;
        std::vector<Structure> parts;
        for (const auto& [c, child] : node_->terms) {
            if (c == 0)
                continue; // zero terms may be unmaterializable yet contribute nothing
            auto part = child.materialize(limits);
            if (!part)
                return std::nullopt;
            coeffs.push_back(c);
            parts.push_back(std::move(*part));
        }
        if (parts.empty())
            return empty_structure(node_->schema);
        return structure_combine(coeffs, parts, build);
    }
    case ExprKind::product: {
        std::optional<Structure> acc;
        for (const StructExpr& f : node_->factors) {
            auto part = f.materialize(limits);
            if (!part)
                return std::nullopt;
            if (!acc)
                acc = std::move(part);
            else
                acc = structure_product(*acc, *part, build);
        }
        return acc;
    }
    case ExprKind::power: {
        auto base = node_->base->materialize(limits);
        if (!base)
            return std::nullopt;
        try {
            return structure_power(*base, node_->exponent, build);
        } catch (const limit_error&) {
            return std::nullopt;
        }
    }
    }
    throw std::logic_error("unreachable");
}

} // namespace bagdet
