#ifndef BAGDET_ALGEBRA_HPP
#define BAGDET_ALGEBRA_HPP

#include "bagdet/limits.hpp"
#include "bagdet/rational.hpp"
#include "bagdet/structure.hpp"

#include <utility>
#include <vector>

namespace bagdet {

/// Disjoint union of coefficient-many fresh copies of each part,
/// sum_i coeffs[i] * parts[i]. Coefficients must be nonnegative.
Structure structure_combine(const std::vector<Int>& coeffs, const std::vector<Structure>& parts,
                            const Limits& limits = {});

/// Categorical product: elements are pairs, a fact holds iff it holds
/// componentwise in both factors.
Structure structure_product(const Structure& a, const Structure& b, const Limits& limits = {});

/// t-fold categorical power; the 0th power is the one-element structure with
/// every relation looped on that element (all nullary facts included).
Structure structure_power(const Structure& a, const Int& t, const Limits& limits = {});

/// The neutral element of the product: a single element carrying a loop for
/// every relation of the schema.
Structure loop_singleton(const SchemaPtr& schema);

} // namespace bagdet

#endif
