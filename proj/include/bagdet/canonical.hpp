#ifndef BAGDET_CANONICAL_HPP
#define BAGDET_CANONICAL_HPP

#include "bagdet/limits.hpp"
#include "bagdet/structure.hpp"

#include <string>
#include <vector>

namespace bagdet {

/// Connected components as standalone structures, in order of first
/// appearance (element components first, then each nullary fact as its own
/// component). Two elements are connected when some fact mentions both.
std::vector<Structure> connected_components(const Structure& s);

/// True iff the structure has exactly one connected component.
bool is_connected(const Structure& s);

/// Isomorphism-invariant key: equal keys iff isomorphic (over equal
/// schemas). Computed per component via color refinement plus minimal
/// labeling search; component keys are sorted and joined.
std::string canonical_key(const Structure& s, const Limits& limits = {});

bool isomorphic(const Structure& a, const Structure& b, const Limits& limits = {});

} // namespace bagdet

#endif
