#include "support/oracles.hpp"

#include "bagdet/canonical.hpp"

#include <algorithm>
#include <numeric>

namespace bagdet::oracles {

namespace {

bool map_preserves_facts(const Structure& pattern, const Structure& target,
                         const std::vector<int>& image) {
    for (const Fact& f : pattern.facts()) {
        Fact mapped{f.relation, {}};
        mapped.args.reserve(f.args.size());
        for (int a : f.args)
            mapped.args.push_back(image[static_cast<size_t>(a)]);
        if (!target.has_fact(mapped))
            return false;
    }
    return true;
}

} // namespace

Int brute_hom_count(const Structure& pattern, const Structure& target) {
    const int k = pattern.domain_size();
    const int n = target.domain_size();
    if (k == 0)
        return map_preserves_facts(pattern, target, {}) ? 1 : 0;
    if (n == 0)
        return 0;
    Int total = 0;
    std::vector<int> image(static_cast<size_t>(k), 0);
    while (true) {
        if (map_preserves_facts(pattern, target, image))
            total += 1;
        int pos = k - 1;
        while (pos >= 0 && image[static_cast<size_t>(pos)] == n - 1)
            image[static_cast<size_t>(pos--)] = 0;
        if (pos < 0)
            break;
        ++image[static_cast<size_t>(pos)];
    }
    return total;
}

bool brute_isomorphic(const Structure& a, const Structure& b) {
    if (!same_schema(a.schema(), b.schema()))
        return false;
    if (a.domain_size() != b.domain_size() || a.fact_count() != b.fact_count())
        return false;
    std::vector<int> perm(static_cast<size_t>(a.domain_size()));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        // a bijection maps distinct facts to distinct facts, so with equal
        // fact counts a fact-preserving permutation is already onto
        if (map_preserves_facts(a, b, perm))
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

Rat laplace_det(const RatMat& m) {
    const int n = m.rows();
    if (n == 0)
        return Rat(1);
    if (n == 1)
        return m.at(0, 0);
    Rat det(0);
    int sign = 1;
    for (int j = 0; j < n; ++j) {
        RatMat minor(n - 1, n - 1);
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j)
                    continue;
                minor.at(r - 1, cc++) = m.at(r, c);
            }
        }
        Rat term = m.at(0, j) * laplace_det(minor);
        det += sign > 0 ? term : -term;
        sign = -sign;
    }
    return det;
}

std::map<std::pair<std::string, std::string>, Int> brute_path_pairs(const PathQuery& q,
                                                                    const Structure& d) {
    std::map<std::pair<std::string, std::string>, Int> out;
    const int n = d.domain_size();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out[{d.element_name(i), d.element_name(j)}] = 0;
    const int m = q.length();
    std::vector<int> chain(static_cast<size_t>(m) + 1, 0);
    if (n == 0)
        return out;
    while (true) {
        bool ok = true;
        for (int s = 0; s < m && ok; ++s)
            ok = d.has_fact(Fact{q.letters()[static_cast<size_t>(s)],
                                 {chain[static_cast<size_t>(s)], chain[static_cast<size_t>(s) + 1]}});
        if (ok)
            out[{d.element_name(chain.front()), d.element_name(chain.back())}] += 1;
        int pos = m;
        while (pos >= 0 && chain[static_cast<size_t>(pos)] == n - 1)
            chain[static_cast<size_t>(pos--)] = 0;
        if (pos < 0)
            break;
        ++chain[static_cast<size_t>(pos)];
    }
    return out;
}

Structure random_structure(Rng& rng, const SchemaPtr& schema, int max_elems, int num, int den) {
    const int n = rng.below(max_elems + 1);
    std::vector<std::string> domain;
    for (int i = 0; i < n; ++i)
        domain.push_back("e" + std::to_string(i));
    std::vector<Fact> facts;
    for (int r = 0; r < schema->size(); ++r) {
        const int arity = schema->relation(r).arity;
        if (arity == 0) {
            if (rng.coin(num, den))
                facts.push_back(Fact{r, {}});
            continue;
        }
        std::vector<int> tuple(static_cast<size_t>(arity), 0);
        if (n == 0)
            continue;
        while (true) {
            if (rng.coin(num, den))
                facts.push_back(Fact{r, tuple});
            int pos = arity - 1;
            while (pos >= 0 && tuple[static_cast<size_t>(pos)] == n - 1)
                tuple[static_cast<size_t>(pos--)] = 0;
            if (pos < 0)
                break;
            ++tuple[static_cast<size_t>(pos)];
        }
    }
    return Structure(schema, std::move(domain), std::move(facts));
}

Structure random_connected_structure(Rng& rng, const SchemaPtr& schema, int max_elems) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Structure s = random_structure(rng, schema, max_elems);
        std::vector<Structure> parts = connected_components(s);
        std::vector<const Structure*> candidates;
        for (const Structure& p : parts)
            if (p.domain_size() > 0)
                candidates.push_back(&p);
        if (!candidates.empty())
            return *candidates[static_cast<size_t>(rng.below(static_cast<int>(candidates.size())))];
    }
    throw std::runtime_error("no connected structure found");
}

ConjunctiveQuery random_boolean_cq(Rng& rng, const SchemaPtr& schema, const std::string& name,
                                   int max_atoms) {
    const int atoms_n = 1 + rng.below(max_atoms);
    const int pool = std::max(2, atoms_n + 1);
    std::vector<QueryAtom> atoms;
    for (int i = 0; i < atoms_n; ++i) {
        int r = rng.below(schema->size());
        QueryAtom atom{r, {}};
        for (int a = 0; a < schema->relation(r).arity; ++a)
            atom.vars.push_back("x" + std::to_string(rng.below(pool)));
        atoms.push_back(std::move(atom));
    }
    return ConjunctiveQuery(schema, name, {}, std::move(atoms));
}

ConjunctiveQuery random_connected_cq(Rng& rng, const SchemaPtr& schema, const std::string& name,
                                     int max_atoms) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        ConjunctiveQuery q = random_boolean_cq(rng, schema, name, max_atoms);
        Structure body = q.frozen_body();
        if (body.domain_size() > 0 && is_connected(body))
            return q;
    }
    throw std::runtime_error("no connected query found");
}

} // namespace bagdet::oracles
