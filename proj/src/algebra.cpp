#include "bagdet/algebra.hpp"

#include <stdexcept>
#include <string>

namespace bagdet {

Structure structure_combine(const std::vector<Int>& coeffs, const std::vector<Structure>& parts,
                            const Limits& limits) {
    if (coeffs.size() != parts.size())
        throw std::invalid_argument("structure_combine: coefficient/part count mismatch");
    if (parts.empty())
        throw std::invalid_argument("structure_combine: no parts");
    const SchemaPtr& schema = parts.front().schema();
    Int total = 0;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (!same_schema(parts[i].schema(), schema))
            throw std::invalid_argument("structure_combine: mixed schemas");
        if (coeffs[i] < 0)
            throw std::invalid_argument("structure_combine: negative coefficient");
        total += coeffs[i] * parts[i].domain_size();
    }
    if (total > limits.max_domain_size)
        throw limit_error("structure_combine: domain would have " + total.get_str() +
                          " elements (limit " + std::to_string(limits.max_domain_size) + ")");
    std::vector<std::string> domain;
    std::vector<Fact> facts;
    bool keep_isolated = false;
    for (size_t i = 0; i < parts.size(); ++i) {
        const Structure& part = parts[i];
        keep_isolated = keep_isolated || part.keeps_isolated();
        long copies = coeffs[i].get_si();
        for (long c = 0; c < copies; ++c) {
            int base = static_cast<int>(domain.size());
            std::string prefix = "t" + std::to_string(i) + "c" + std::to_string(c) + "_";
            for (const std::string& name : part.domain())
                domain.push_back(prefix + name);
            for (const Fact& f : part.facts()) {
                Fact g;
                g.relation = f.relation;
                g.args.reserve(f.args.size());
                for (int a : f.args)
                    g.args.push_back(base + a);
                facts.push_back(std::move(g));
            }
        }
    }
    return Structure(schema, std::move(domain), std::move(facts), keep_isolated);
}

Structure structure_product(const Structure& a, const Structure& b, const Limits& limits) {
    if (!same_schema(a.schema(), b.schema()))
        throw std::invalid_argument("structure_product: mixed schemas");
    Int total = Int(a.domain_size()) * b.domain_size();
    if (total > limits.max_domain_size)
        throw limit_error("structure_product: domain would have " + total.get_str() + " elements");
    const int nb = b.domain_size();
    std::vector<std::string> domain;
    domain.reserve(static_cast<size_t>(a.domain_size()) * static_cast<size_t>(nb));
    for (int i = 0; i < a.domain_size(); ++i)
        for (int j = 0; j < nb; ++j)
            domain.push_back("p" + std::to_string(i) + "_" + std::to_string(j));
    std::vector<Fact> facts;
    for (const Fact& f : a.facts()) {
        auto [lo, hi] = b.relation_range(f.relation);
        for (int gi = lo; gi < hi; ++gi) {
            const Fact& g = b.facts()[static_cast<size_t>(gi)];
            Fact h;
            h.relation = f.relation;
            h.args.reserve(f.args.size());
            for (size_t k = 0; k < f.args.size(); ++k)
                h.args.push_back(f.args[k] * nb + g.args[k]);
            facts.push_back(std::move(h));
        }
    }
    // full Cartesian domain: pairs that end up in no fact are still elements
    return Structure(a.schema(), std::move(domain), std::move(facts), /*keep_isolated=*/true);
}

Structure structure_power(const Structure& a, const Int& t, const Limits& limits) {
    if (t < 0)
        throw std::invalid_argument("structure_power: negative exponent");
    if (t == 0)
        return loop_singleton(a.schema());
    if (!t.fits_slong_p())
        throw limit_error("structure_power: exponent too large to materialize");
    const long e = t.get_si();
    const int n = a.domain_size();
    Int dom_size = pow_int(Int(n), static_cast<unsigned long>(e));
    if (dom_size > limits.max_domain_size)
        throw limit_error("structure_power: domain would have " + dom_size.get_str() + " elements");
    Int fact_budget = Int(limits.max_domain_size) * 10;
    for (int r = 0; r < a.schema()->size(); ++r) {
        auto [lo, hi] = a.relation_range(r);
        if (hi > lo && Int(pow_int(Int(hi - lo), static_cast<unsigned long>(e))) > fact_budget)
            throw limit_error("structure_power: relation " + a.schema()->relation(r).name +
                              " would blow up");
    }

    const long total = dom_size.get_si();
    std::vector<std::string> domain;
    domain.reserve(static_cast<size_t>(total));
    for (long id = 0; id < total; ++id) {
        // decode mixed-radix tuple, most significant first
        std::string name = "p";
        long rest = id;
        std::vector<int> tuple(static_cast<size_t>(e));
        for (long k = e - 1; k >= 0; --k) {
            tuple[static_cast<size_t>(k)] = static_cast<int>(rest % n);
            rest /= n;
        }
        for (long k = 0; k < e; ++k) {
            if (k)
                name += "_";
            name += std::to_string(tuple[static_cast<size_t>(k)]);
        }
        domain.push_back(std::move(name));
    }

    std::vector<Fact> facts;
    for (int r = 0; r < a.schema()->size(); ++r) {
        auto [lo, hi] = a.relation_range(r);
        if (lo == hi)
            continue;
        const int arity = a.schema()->relation(r).arity;
        const long m = hi - lo;
        // odometer over e-tuples of facts of this relation
        std::vector<long> pick(static_cast<size_t>(e), 0);
        while (true) {
            Fact h;
            h.relation = r;
            h.args.reserve(static_cast<size_t>(arity));
            for (int k = 0; k < arity; ++k) {
                long id = 0;
                for (long j = 0; j < e; ++j) {
                    const Fact& f = a.facts()[static_cast<size_t>(lo + pick[static_cast<size_t>(j)])];
                    id = id * n + f.args[static_cast<size_t>(k)];
                }
                h.args.push_back(static_cast<int>(id));
            }
            facts.push_back(std::move(h));
            long j = e - 1;
            while (j >= 0 && ++pick[static_cast<size_t>(j)] == m) {
                pick[static_cast<size_t>(j)] = 0;
                --j;
            }
            if (j < 0)
                break;
        }
    }
    return Structure(a.schema(), std::move(domain), std::move(facts), /*keep_isolated=*/true);
}

Structure loop_singleton(const SchemaPtr& schema) {
    std::vector<Fact> facts;
    for (int r = 0; r < schema->size(); ++r) {
        Fact f;
        f.relation = r;
        f.args.assign(static_cast<size_t>(schema->relation(r).arity), 0);
        facts.push_back(std::move(f));
    }
    return Structure(schema, {"u0"}, std::move(facts), /*keep_isolated=*/true);
}

} // namespace bagdet
