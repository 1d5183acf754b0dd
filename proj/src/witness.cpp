#include "bagdet/witness.hpp"

#include "bagdet/canonical.hpp"
#include "bagdet/hom.hpp"

#include <algorithm>
#include <stdexcept>

namespace bagdet {

namespace {

// All facts over n elements for the non-nullary relations (nullary facts in
// a target never change hom counts of patterns with nonempty domain).
std::vector<Fact> fact_universe(const SchemaPtr& schema, int n) {
    std::vector<Fact> out;
    for (int r = 0; r < schema->size(); ++r) {
        int arity = schema->relation(r).arity;
        if (arity == 0)
            continue;
        std::vector<int> args(static_cast<size_t>(arity), 0);
        while (true) {
            out.push_back(Fact{r, args});
            int k = arity - 1;
            while (k >= 0 && ++args[static_cast<size_t>(k)] == n) {
                args[static_cast<size_t>(k)] = 0;
                --k;
            }
            if (k < 0)
                break;
        }
    }
    return out;
}

} // namespace

Structure find_distinguisher(const Structure& a, const Structure& b, const Limits& limits) {
    if (!same_schema(a.schema(), b.schema()))
        throw std::invalid_argument("find_distinguisher: mixed schemas");
    if (a.domain_size() == 0 || b.domain_size() == 0)
        throw std::invalid_argument("find_distinguisher: empty-domain input");

    long tried = 0;
    auto separates = [&](const Structure& cand) {
        if (++tried > limits.max_candidates)
            throw limit_error("distinguisher candidate budget exceeded");
        return hom_count_connected(a, cand, limits) != hom_count_connected(b, cand, limits);
    };

    if (separates(a))
        return a;
    if (separates(b))
        return b;

    // substructures: subsets of each input's facts
    constexpr long stage2_cap = 4096;
    for (const Structure* s : {&a, &b}) {
        const auto& facts = s->facts();
        const int f = static_cast<int>(facts.size());
        if (f == 0 || f > 62)
            continue;
        long subsets = f < 12 ? (1l << f) : stage2_cap;
        for (long mask = 1; mask < subsets; ++mask) {
            std::vector<Fact> chosen;
            for (int i = 0; i < f; ++i)
                if (mask & (1l << i))
                    chosen.push_back(facts[static_cast<size_t>(i)]);
            Structure cand(s->schema(), s->domain(), std::move(chosen));
            if (separates(cand))
                return cand;
        }
    }

    // exhaustive enumeration by domain size
    const int bound = std::max(a.domain_size(), b.domain_size());
    for (int n = 1; n <= bound; ++n) {
        std::vector<Fact> universe = fact_universe(a.schema(), n);
        const int f = static_cast<int>(universe.size());
        if (f > 62)
            throw limit_error("distinguisher fact universe too large");
        for (long mask = 1; mask < (1l << f); ++mask) {
            // skip structures whose active domain is smaller: already covered
            std::vector<bool> used(static_cast<size_t>(n), false);
            std::vector<Fact> chosen;
            for (int i = 0; i < f; ++i)
                if (mask & (1l << i)) {
                    chosen.push_back(universe[static_cast<size_t>(i)]);
                    for (int arg : chosen.back().args)
                        used[static_cast<size_t>(arg)] = true;
                }
            if (std::find(used.begin(), used.end(), false) != used.end())
                continue;
            std::vector<std::string> domain;
            for (int e = 0; e < n; ++e)
                domain.push_back("d" + std::to_string(e));
            Structure cand(a.schema(), std::move(domain), std::move(chosen));
            if (separates(cand))
                return cand;
        }
    }
    throw limit_error("no distinguisher found within the enumeration bound");
}

GoodBasis build_good_basis(const Basis& w, const ConjunctiveQuery& q, const Limits& limits) {
    const int k = w.size();
    if (k == 0)
        throw synthesis_error("empty component basis");
    for (const Structure& comp : w.components)
        if (comp.domain_size() == 0)
            throw synthesis_error(
                "basis contains a propositional (nullary) component; counterexample "
                "synthesis is not supported over such components");

    GoodBasis gb;
    Structure qbody = q.frozen_body();

    std::vector<std::string> seen_keys;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            Structure s = find_distinguisher(w.components[static_cast<size_t>(i)],
                                             w.components[static_cast<size_t>(j)], limits);
            std::string key = canonical_key(s, limits);
            if (std::find(seen_keys.begin(), seen_keys.end(), key) == seen_keys.end()) {
                seen_keys.push_back(std::move(key));
                gb.distinguishers.push_back(std::move(s));
            }
        }

    Int max_digit = 0;
    for (const Structure& comp : w.components)
        for (const Structure& s : gb.distinguishers)
            max_digit = std::max(max_digit, Int(hom_count_connected(comp, s, limits)));
    gb.radix = max_digit + 1;

    if (gb.distinguishers.empty()) {
        gb.merged = StructExpr::leaf(empty_structure(q.schema()));
    } else {
        // one radix-T digit per distinguisher, least significant first
        std::vector<std::pair<Int, StructExpr>> terms;
        Int weight = gb.radix;
        for (const Structure& s : gb.distinguishers) {
            terms.emplace_back(weight, StructExpr::leaf(s));
            weight *= gb.radix;
        }
        gb.merged = StructExpr::sum(std::move(terms));
    }

    for (const Structure& comp : w.components) {
        gb.h.push_back(gb.merged->hom_connected(comp, limits));
        gb.g.push_back(hom_count_connected(comp, qbody, limits));
    }
    for (int i = 0; i < k; ++i) {
        if (gb.g[static_cast<size_t>(i)] < 1)
            throw synthesis_error("basis component without homomorphism into the query body");
        for (int j = i + 1; j < k; ++j)
            if (gb.h[static_cast<size_t>(i)] == gb.h[static_cast<size_t>(j)])
                throw synthesis_error("distinguisher digits failed to separate two components");
    }

    for (int j = 0; j < k; ++j)
        gb.structures.push_back(StructExpr::product(
            {StructExpr::power(*gb.merged, Int(j)), StructExpr::leaf(qbody)}));

    gb.eval_matrix = RatMat(k, k);
    for (int i = 0; i < k; ++i) {
        Rat cell(gb.g[static_cast<size_t>(i)]);
        for (int j = 0; j < k; ++j) {
            gb.eval_matrix.at(i, j) = cell;
            cell *= Rat(gb.h[static_cast<size_t>(i)]);
        }
    }
    if (determinant(gb.eval_matrix) == 0)
        throw synthesis_error("evaluation matrix unexpectedly singular");
    gb.inverse = *invert(gb.eval_matrix);
    return gb;
}

namespace {

// Perturbation magnitudes approaching 1: harmonic pairs (n+1)/n, n/(n+1)
// first, then a geometric tail 1 +- 2^-j that reaches any feasibility window
// around 1 in logarithmically many steps.
Rat t_candidate(int step, const Limits& limits) {
    const int harmonic = 2 * limits.t_schedule_cap;
    if (step < harmonic) {
        long n = step / 2 + 2;
        return step % 2 == 0 ? make_rat(n + 1, n) : make_rat(n, n + 1);
    }
    int g = step - harmonic;
    unsigned long j = static_cast<unsigned long>(g / 2 + 1);
    Int den = pow_int(Int(2), j);
    return g % 2 == 0 ? make_rat(den + 1, den) : make_rat(den - 1, den);
}

} // namespace

WitnessPair build_counterexample(const GoodBasis& gb, const Basis& w,
                                 const std::vector<std::string>& view_names,
                                 const std::vector<IntVec>& view_vectors, const IntVec& q_vector,
                                 const ConjunctiveQuery& q, const Limits& limits) {
    const int k = w.size();
    if (static_cast<int>(q_vector.size()) != k)
        throw std::invalid_argument("build_counterexample: query vector length mismatch");
    if (!same_schema(q.schema(), w.components.empty() ? q.schema() : w.components.front().schema()))
        throw std::invalid_argument("build_counterexample: schema mismatch");

    WitnessPair wp;
    wp.good_basis = std::make_shared<const GoodBasis>(gb);
    wp.components = w;
    wp.view_names = view_names;
    wp.view_vectors = view_vectors;
    wp.q_vector = q_vector;

    std::vector<RatVec> span;
    span.reserve(view_vectors.size());
    for (const IntVec& v : view_vectors)
        span.push_back(to_rat_vec(v));
    RatVec z_rat;
    try {
        z_rat = orthogonal_witness(span, to_rat_vec(q_vector));
    } catch (const std::invalid_argument&) {
        throw synthesis_error("query vector lies in the view span; nothing to refute");
    }
    wp.trace.z = integer_scale(z_rat).second;

    RatVec ones(static_cast<size_t>(k), Rat(1));
    wp.trace.p = gb.eval_matrix.mul(ones);
    {
        RatVec back = gb.inverse.mul(wp.trace.p);
        if (back != ones)
            throw synthesis_error("inverse check failed on the ones vector");
    }

    constexpr int hard_cap = 20000;
    RatVec alpha_prime;
    bool found = false;
    for (int step = 0; step < hard_cap; ++step) {
        Rat t = t_candidate(step, limits);
        RatVec p_prime = hadamard(pow_elementwise(t, wp.trace.z), wp.trace.p);
        auto x = nonneg_preimage(gb.inverse, p_prime);
        if (x) {
            wp.trace.t = t;
            wp.trace.p_prime = std::move(p_prime);
            wp.trace.schedule_steps = step + 1;
            alpha_prime = std::move(*x);
            found = true;
            break;
        }
    }
    if (!found)
        throw synthesis_error("no feasible perturbation within the schedule cap");

    wp.trace.c = 1; // alpha is the all-ones vector
    wp.trace.c_prime = integer_scale(alpha_prime).first;
    Int scale = wp.trace.c * wp.trace.c_prime;
    for (int j = 0; j < k; ++j) {
        wp.mult.push_back(scale);
        Rat scaled = alpha_prime[static_cast<size_t>(j)] * Rat(scale);
        wp.mult_prime.push_back(scaled.get_num());
    }

    std::vector<std::pair<Int, StructExpr>> d_terms, dp_terms;
    for (int j = 0; j < k; ++j) {
        d_terms.emplace_back(wp.mult[static_cast<size_t>(j)], gb.structures[static_cast<size_t>(j)]);
        dp_terms.emplace_back(wp.mult_prime[static_cast<size_t>(j)],
                              gb.structures[static_cast<size_t>(j)]);
    }
    wp.d_expr = StructExpr::sum(std::move(d_terms));
    wp.dp_expr = StructExpr::sum(std::move(dp_terms));
    wp.d = wp.d_expr->materialize(limits);
    wp.d_prime = wp.dp_expr->materialize(limits);

    if (eval_on_basis(q_vector, gb, wp.mult) == eval_on_basis(q_vector, gb, wp.mult_prime))
        throw synthesis_error("perturbation failed to change the query answer");
    return wp;
}

Int eval_on_basis(const IntVec& query_vector, const GoodBasis& gb, const IntVec& mult) {
    RatVec values = gb.eval_matrix.mul(to_rat_vec(mult));
    Rat out = vecpow(values, query_vector);
    if (out.get_den() != 1)
        throw std::logic_error("eval_on_basis produced a non-integer");
    return out.get_num();
}

VerificationReport verify_witness(const std::vector<ConjunctiveQuery>& views,
                                  const ConjunctiveQuery& q, const WitnessPair& wp,
                                  const Limits& limits) {
    VerificationReport report;
    report.passed = true;
    if (!wp.d_expr || !wp.dp_expr || !wp.good_basis) {
        report.passed = false;
        report.notes.push_back("witness is incomplete");
        return report;
    }
    const GoodBasis& gb = *wp.good_basis;

    auto vector_for = [&](const std::string& name, bool is_q) -> const IntVec* {
        if (is_q)
            return &wp.q_vector;
        for (size_t i = 0; i < wp.view_names.size(); ++i)
            if (wp.view_names[i] == name)
                return &wp.view_vectors[i];
        return nullptr;
    };

    auto check_query = [&](const ConjunctiveQuery& query, bool is_q) {
        const IntVec* vec = vector_for(query.name(), is_q);
        Int left_sym = wp.d_expr->count_query(query, limits);
        Int right_sym = wp.dp_expr->count_query(query, limits);

        CountCheck check;
        check.query = query.name();
        check.must_differ = is_q;
        if (vec) {
            Int left_basis = eval_on_basis(*vec, gb, wp.mult);
            Int right_basis = eval_on_basis(*vec, gb, wp.mult_prime);
            if (left_basis != left_sym || right_basis != right_sym) {
                report.passed = false;
                report.notes.push_back("route disagreement on " + query.name() +
                                       ": matrix vs compositional evaluation");
            }
            check.route = "basis";
            check.left = std::move(left_basis);
            check.right = std::move(right_basis);
        } else {
            check.route = "symbolic";
            check.left = left_sym;
            check.right = right_sym;
        }
        if (wp.d && wp.d_prime) {
            try {
                Int left_direct = eval_boolean_cq(query, *wp.d, limits);
                Int right_direct = eval_boolean_cq(query, *wp.d_prime, limits);
                if (left_direct != check.left || right_direct != check.right) {
                    report.passed = false;
                    report.notes.push_back("route disagreement on " + query.name() +
                                           ": direct count vs evaluated count");
                } else {
                    check.route += "+direct";
                }
            } catch (const limit_error&) {
                report.notes.push_back("direct recount of " + query.name() +
                                       " skipped: search budget");
            }
        }
        check.ok = check.must_differ ? check.left != check.right : check.left == check.right;
        if (!check.ok)
            report.passed = false;
        report.checks.push_back(std::move(check));
    };

    check_query(q, true);
    for (const ConjunctiveQuery& v : views)
        check_query(v, false);
    return report;
}

} // namespace bagdet
