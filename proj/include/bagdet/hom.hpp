#ifndef BAGDET_HOM_HPP
#define BAGDET_HOM_HPP

#include "bagdet/limits.hpp"
#include "bagdet/query.hpp"
#include "bagdet/rational.hpp"
#include "bagdet/structure.hpp"

#include <functional>

namespace bagdet {

/// Number of homomorphisms pattern -> target. The pattern is decomposed into
/// connected components whose counts multiply; a nullary fact contributes a
/// 0/1 membership factor.
Int hom_count(const Structure& pattern, const Structure& target, const Limits& limits = {});

/// Count for a pattern that is a single connected component (or one nullary
/// fact, or one isolated element).
Int hom_count_connected(const Structure& pattern, const Structure& target,
                        const Limits& limits = {});

bool hom_exists(const Structure& pattern, const Structure& target, const Limits& limits = {});

/// Enumerates complete maps dom(pattern) -> dom(target) that preserve all
/// facts. Callback gets the assignment (indexed by pattern element); return
/// false to stop early. Nullary pattern facts must be present in the target
/// for any map to be reported.
void for_each_hom(const Structure& pattern, const Structure& target,
                  const std::function<bool(const std::vector<int>&)>& fn,
                  const Limits& limits = {});

/// Bag answer of a boolean conjunctive query: hom count of its frozen body.
Int eval_boolean_cq(const ConjunctiveQuery& q, const Structure& d, const Limits& limits = {});

/// Bag answer of a boolean union query: sum over disjuncts.
Int eval_ucq(const UnionQuery& q, const Structure& d, const Limits& limits = {});

} // namespace bagdet

#endif
