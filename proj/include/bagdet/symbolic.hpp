#ifndef BAGDET_SYMBOLIC_HPP
#define BAGDET_SYMBOLIC_HPP

#include "bagdet/algebra.hpp"
#include "bagdet/hom.hpp"
#include "bagdet/limits.hpp"
#include "bagdet/query.hpp"
#include "bagdet/structure.hpp"

#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace bagdet {

enum class ExprKind { leaf, sum, product, power };

/// Symbolic combination of structures under disjoint union with natural
/// coefficients, categorical product and power. Query answers are computed
/// compositionally, so expressions whose materialization would be
/// astronomically large can still be evaluated exactly.
class StructExpr {
public:
    static StructExpr leaf(Structure s);
    static StructExpr sum(std::vector<std::pair<Int, StructExpr>> terms);
    static StructExpr product(std::vector<StructExpr> factors);
    static StructExpr power(StructExpr base, Int exponent);

    ExprKind kind() const;
    const SchemaPtr& schema() const;
    const Structure& leaf_value() const;
    const std::vector<std::pair<Int, StructExpr>>& sum_terms() const;
    const std::vector<StructExpr>& product_factors() const;
    const StructExpr& power_base() const;
    const Int& power_exponent() const;

    /// Exact element count, saturated at cap+1 to keep intermediates small.
    Int domain_size_saturated(const Int& cap) const;

    bool contains_nullary(int relation) const;

    /// Hom count of a connected pattern with nonempty domain.
    Int hom_connected(const Structure& pattern, const Limits& limits = {}) const;

    /// Bag answer of a boolean query against the denoted structure.
    Int count_query(const ConjunctiveQuery& q, const Limits& limits = {}) const;
    Int count_query(const UnionQuery& q, const Limits& limits = {}) const;

    /// Builds the denoted structure when it fits max_materialized_size.
    std::optional<Structure> materialize(const Limits& limits = {}) const;

private:
    struct Node;
    explicit StructExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

} // namespace bagdet

#endif
