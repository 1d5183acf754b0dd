#ifndef BAGDET_DETBOOL_HPP
#define BAGDET_DETBOOL_HPP

#include "bagdet/limits.hpp"
#include "bagdet/linalg.hpp"
#include "bagdet/query.hpp"
#include "bagdet/structure.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace bagdet {

class WitnessPair;

/// Pairwise non-isomorphic connected structures spanning the components of a
/// family of frozen query bodies, in order of first appearance.
struct Basis {
    std::vector<Structure> components;
    std::vector<std::string> keys; // canonical key per component

    int size() const { return static_cast<int>(components.size()); }
    int find(const std::string& key) const;
};

struct Diagnostics {
    std::vector<std::string> notes;
};

struct Verdict {
    bool determined = false;
    std::vector<std::string> relevant_views; // names, input order after dedup
    int basis_size = 0;
    std::optional<RatVec> coefficients;            // one per relevant view, when determined
    std::shared_ptr<const WitnessPair> witness;    // when synthesized
    Diagnostics diagnostics;
};

/// Views whose frozen body maps homomorphically into the frozen body of q.
/// Only these can ever return a nonzero answer where q does.
std::vector<ConjunctiveQuery> relevant_views(const std::vector<ConjunctiveQuery>& views,
                                             const ConjunctiveQuery& q, const Limits& limits = {});

/// Shared component basis of the given queries plus each query's
/// multiplicity vector over it (aligned with the input order).
std::pair<Basis, std::vector<IntVec>> component_basis(const std::vector<ConjunctiveQuery>& queries,
                                                      const Limits& limits = {});

/// Decides whether the views determine q under bag semantics. When they do
/// not and synthesize is set, builds and verifies a counterexample pair.
Verdict decide(const std::vector<ConjunctiveQuery>& views, const ConjunctiveQuery& q,
               bool synthesize = false, const Limits& limits = {});

struct ExplainReport {
    int case_id = 0; // 1: some view answer is zero, 2: all positive
    bool holds = false;
    Int q_count;
    std::vector<std::pair<std::string, Int>> view_counts;
    std::string detail;
};

/// Demonstrates on a concrete database how the view answers pin down q's
/// answer under the span coefficients: either some view vanishes and q
/// vanishes too, or q(d)^c equals the coefficient-weighted product of view
/// answers (c clearing the coefficient denominators).
ExplainReport explain_determined(const RatVec& coefficients,
                                 const std::vector<ConjunctiveQuery>& views,
                                 const ConjunctiveQuery& q, const Structure& d,
                                 const Limits& limits = {});

} // namespace bagdet

#endif
