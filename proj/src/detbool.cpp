#include "bagdet/detbool.hpp"

#include "bagdet/canonical.hpp"
#include "bagdet/hom.hpp"
#include "bagdet/witness.hpp"

#include <algorithm>
#include <stdexcept>

namespace bagdet {

int Basis::find(const std::string& key) const {
    auto it = std::find(keys.begin(), keys.end(), key);
    return it == keys.end() ? -1 : static_cast<int>(it - keys.begin());
}

std::vector<ConjunctiveQuery> relevant_views(const std::vector<ConjunctiveQuery>& views,
                                             const ConjunctiveQuery& q, const Limits& limits) {
    Structure body = q.frozen_body();
    std::vector<ConjunctiveQuery> out;
    for (const ConjunctiveQuery& v : views)
        if (hom_exists(v.frozen_body(), body, limits))
            out.push_back(v);
    return out;
}

std::pair<Basis, std::vector<IntVec>> component_basis(const std::vector<ConjunctiveQuery>& queries,
                                                      const Limits& limits) {
    Basis basis;
    std::vector<IntVec> vectors;
    for (const ConjunctiveQuery& query : queries) {
        IntVec vec(static_cast<size_t>(basis.size()), Int(0));
        for (Structure& comp : connected_components(query.frozen_body())) {
            std::string key = canonical_key(comp, limits);
            int idx = basis.find(key);
            if (idx < 0) {
                idx = basis.size();
                basis.components.push_back(std::move(comp));
                basis.keys.push_back(std::move(key));
            }
            if (idx >= static_cast<int>(vec.size()))
                vec.resize(static_cast<size_t>(basis.size()), Int(0));
            ++vec[static_cast<size_t>(idx)];
        }
        vectors.push_back(std::move(vec));
    }
    for (IntVec& vec : vectors)
        vec.resize(static_cast<size_t>(basis.size()), Int(0));
    return {std::move(basis), std::move(vectors)};
}

namespace {

void require_boolean_over(const ConjunctiveQuery& q, const SchemaPtr& schema,
                          const std::string& role) {
    if (!q.is_boolean())
        throw std::invalid_argument(role + " " + q.name() + " is not boolean");
    if (!same_schema(q.schema(), schema))
        throw std::invalid_argument(role + " " + q.name() + " is over a different schema");
}

} // namespace

Verdict decide(const std::vector<ConjunctiveQuery>& views, const ConjunctiveQuery& q,
               bool synthesize, const Limits& limits) {
    require_boolean_over(q, q.schema(), "query");
    for (const ConjunctiveQuery& v : views)
        require_boolean_over(v, q.schema(), "view");

    Verdict verdict;

    // drop views whose frozen bodies repeat an earlier one
    std::vector<ConjunctiveQuery> deduped;
    {
        std::vector<std::string> seen;
        for (const ConjunctiveQuery& v : views) {
            std::string key = canonical_key(v.frozen_body(), limits);
            auto it = std::find(seen.begin(), seen.end(), key);
            if (it == seen.end()) {
                seen.push_back(std::move(key));
                deduped.push_back(v);
            } else {
                verdict.diagnostics.notes.push_back(
                    "view " + v.name() + " duplicates " +
                    deduped[static_cast<size_t>(it - seen.begin())].name() + "; dropped");
            }
        }
    }

    std::vector<ConjunctiveQuery> relevant = relevant_views(deduped, q, limits);
    for (const ConjunctiveQuery& v : relevant)
        verdict.relevant_views.push_back(v.name());
    if (relevant.size() < deduped.size())
        verdict.diagnostics.notes.push_back(
            std::to_string(deduped.size() - relevant.size()) +
            " view(s) have no homomorphism into the query body and cannot help");

    std::vector<ConjunctiveQuery> all;
    all.push_back(q);
    all.insert(all.end(), relevant.begin(), relevant.end());
    auto [basis, vectors] = component_basis(all, limits);
    verdict.basis_size = basis.size();

    IntVec q_vector = vectors.front();
    std::vector<IntVec> view_vectors(vectors.begin() + 1, vectors.end());
    std::vector<RatVec> view_rat;
    view_rat.reserve(view_vectors.size());
    for (const IntVec& v : view_vectors)
        view_rat.push_back(to_rat_vec(v));

    auto coeffs = span_membership(view_rat, to_rat_vec(q_vector));
    if (coeffs) {
        verdict.determined = true;
        verdict.coefficients = std::move(*coeffs);
        return verdict;
    }

    verdict.determined = false;
    if (!synthesize)
        return verdict;

    try {
        GoodBasis gb = build_good_basis(basis, q, limits);
        std::vector<std::string> names;
        for (const ConjunctiveQuery& v : relevant)
            names.push_back(v.name());
        WitnessPair wp =
            build_counterexample(gb, basis, names, view_vectors, q_vector, q, limits);
        wp.report = verify_witness(deduped, q, wp, limits);
        if (!wp.report.passed)
            verdict.diagnostics.notes.push_back("witness verification FAILED");
        else if (!wp.d)
            verdict.diagnostics.notes.push_back(
                "witness too large to materialize; verified symbolically");
        verdict.witness = std::make_shared<const WitnessPair>(std::move(wp));
    } catch (const synthesis_error& e) {
        verdict.diagnostics.notes.push_back(std::string("witness synthesis failed: ") + e.what());
    } catch (const limit_error& e) {
        verdict.diagnostics.notes.push_back(std::string("witness synthesis hit a limit: ") +
                                            e.what());
    }
    return verdict;
}

ExplainReport explain_determined(const RatVec& coefficients,
                                 const std::vector<ConjunctiveQuery>& views,
                                 const ConjunctiveQuery& q, const Structure& d,
                                 const Limits& limits) {
    if (coefficients.size() != views.size())
        throw std::invalid_argument("explain_determined: one coefficient per view required");
    ExplainReport report;
    report.q_count = eval_boolean_cq(q, d, limits);
    bool some_zero = false;
    for (const ConjunctiveQuery& v : views) {
        Int count = eval_boolean_cq(v, d, limits);
        some_zero = some_zero || count == 0;
        report.view_counts.emplace_back(v.name(), std::move(count));
    }
    if (some_zero) {
        // a relevant view vanishing forces the query to vanish
        report.case_id = 1;
        report.holds = report.q_count == 0;
        report.detail = "some view answer is 0, so the query answer must be 0";
        return report;
    }
    report.case_id = 2;
    Int c = 1;
    for (const Rat& a : coefficients)
        c = lcm_int(c, a.get_den());
    if (!c.fits_ulong_p())
        throw limit_error("explain_determined: coefficient denominators too large");
    // q(d)^c * prod_{a<0} v(d)^{-a c} == prod_{a>0} v(d)^{a c}
    Int lhs = pow_int(report.q_count, c.get_ui());
    Int rhs = 1;
    for (size_t i = 0; i < coefficients.size(); ++i) {
        Rat e = coefficients[i] * Rat(c);
        Int exp = e.get_num(); // integral by construction of c
        if (!exp.fits_slong_p())
            throw limit_error("explain_determined: coefficient too large");
        const Int& count = report.view_counts[i].second;
        if (exp > 0)
            rhs *= pow_int(count, exp.get_ui());
        else if (exp < 0)
            lhs *= pow_int(count, Int(-exp).get_ui());
    }
    report.holds = lhs == rhs;
    report.detail = "q(d)^" + c.get_str() +
                    " times the negative-power view answers equals the positive-power ones (" +
                    lhs.get_str() + " = " + rhs.get_str() + ")";
    return report;
}

} // namespace bagdet
