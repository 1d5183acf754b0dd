#include "bagdet/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace bagdet {

namespace {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }

    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b)
            parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
    }
};

// Encoding of facts under a relabeling; "" labels use schema names so keys
// survive schema object copies.
std::string encode_facts(const Structure& s, const std::vector<int>& new_index) {
    std::vector<std::string> lines;
    lines.reserve(s.facts().size());
    for (const Fact& f : s.facts()) {
        std::string line = s.schema()->relation(f.relation).name + "(";
        for (size_t k = 0; k < f.args.size(); ++k) {
            if (k)
                line += ",";
            line += std::to_string(new_index[static_cast<size_t>(f.args[k])]);
        }
        line += ")";
        lines.push_back(std::move(line));
    }
    std::sort(lines.begin(), lines.end());
    std::string out;
    for (const std::string& line : lines) {
        out += line;
        out += ";";
    }
    return out;
}

// Color refinement: returns per-element color ranks, isomorphism-invariant.
std::vector<int> refine_colors(const Structure& s) {
    const int n = s.domain_size();
    std::vector<int> color(static_cast<size_t>(n), 0);
    int classes = n > 0 ? 1 : 0;
    for (int round = 0; round < n; ++round) {
        std::vector<std::string> sig(static_cast<size_t>(n));
        for (int e = 0; e < n; ++e) {
            std::vector<std::string> parts;
            for (int fi : s.incident(e)) {
                const Fact& f = s.facts()[static_cast<size_t>(fi)];
                std::string part = s.schema()->relation(f.relation).name + ":";
                for (int a : f.args) {
                    part += (a == e) ? "*" : std::to_string(color[static_cast<size_t>(a)]);
                    part += ",";
                }
                parts.push_back(std::move(part));
            }
            std::sort(parts.begin(), parts.end());
            std::string joined = std::to_string(color[static_cast<size_t>(e)]) + "#";
            for (const std::string& part : parts)
                joined += part + "|";
            sig[static_cast<size_t>(e)] = std::move(joined);
        }
        std::vector<std::string> distinct = sig;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        for (int e = 0; e < n; ++e)
            color[static_cast<size_t>(e)] = static_cast<int>(
                std::lower_bound(distinct.begin(), distinct.end(), sig[static_cast<size_t>(e)]) -
                distinct.begin());
        int now = static_cast<int>(distinct.size());
        if (now == classes)
            break;
        classes = now;
    }
    return color;
}

// Canonical key of one connected component (or any structure treated as a
// single block): minimal fact encoding over refinement-respecting labelings.
std::string component_key(const Structure& s, const Limits& limits) {
    const int n = s.domain_size();
    if (n == 0) {
        std::string out = "0|";
        for (const Fact& f : s.facts())
            out += s.schema()->relation(f.relation).name + "();";
        return out;
    }
    std::vector<int> color = refine_colors(s);
    std::vector<std::vector<int>> classes;
    {
        std::map<int, std::vector<int>> by_color;
        for (int e = 0; e < n; ++e)
            by_color[color[static_cast<size_t>(e)]].push_back(e);
        for (auto& [c, members] : by_color)
            classes.push_back(std::move(members));
    }
    // new_index[e] = position of e in the concatenation of permuted classes
    std::vector<int> new_index(static_cast<size_t>(n));
    std::vector<std::vector<int>> perm(classes.size());
    for (size_t c = 0; c < classes.size(); ++c)
        perm[c] = classes[c];
    long long tried = 0;
    std::string best;
    while (true) {
        int next = 0;
        for (size_t c = 0; c < classes.size(); ++c)
            for (int e : perm[c])
                new_index[static_cast<size_t>(e)] = next++;
        if (++tried > limits.max_candidates)
            throw limit_error("canonical labeling budget exceeded");
        std::string enc = encode_facts(s, new_index);
        if (best.empty() || enc < best)
            best = std::move(enc);
        // odometer over per-class permutations
        size_t c = 0;
        while (c < classes.size() && !std::next_permutation(perm[c].begin(), perm[c].end())) {
            perm[c] = classes[c];
            ++c;
        }
        if (c == classes.size())
            break;
    }
    return std::to_string(n) + "|" + best;
}

} // namespace

std::vector<Structure> connected_components(const Structure& s) {
    const int n = s.domain_size();
    UnionFind uf(n);
    for (const Fact& f : s.facts())
        for (size_t k = 1; k < f.args.size(); ++k)
            uf.unite(f.args[0], f.args[static_cast<size_t>(k)]);

    std::vector<int> roots;
    std::vector<int> root_order(static_cast<size_t>(n), -1);
    for (int e = 0; e < n; ++e) {
        int r = uf.find(e);
        if (root_order[static_cast<size_t>(r)] < 0) {
            root_order[static_cast<size_t>(r)] = static_cast<int>(roots.size());
            roots.push_back(r);
        }
    }

    std::vector<std::vector<std::string>> domains(roots.size());
    std::vector<int> local_index(static_cast<size_t>(n), -1);
    for (int e = 0; e < n; ++e) {
        int c = root_order[static_cast<size_t>(uf.find(e))];
        local_index[static_cast<size_t>(e)] = static_cast<int>(domains[static_cast<size_t>(c)].size());
        domains[static_cast<size_t>(c)].push_back(s.element_name(e));
    }
    std::vector<std::vector<Fact>> facts(roots.size());
    std::vector<Structure> out;
    for (const Fact& f : s.facts()) {
        if (f.args.empty())
            continue; // nullary facts become their own components below
        int c = root_order[static_cast<size_t>(uf.find(f.args[0]))];
        Fact g;
        g.relation = f.relation;
        for (int a : f.args)
            g.args.push_back(local_index[static_cast<size_t>(a)]);
        facts[static_cast<size_t>(c)].push_back(std::move(g));
    }
    out.reserve(roots.size());
    for (size_t c = 0; c < roots.size(); ++c)
        out.emplace_back(s.schema(), std::move(domains[c]), std::move(facts[c]),
                         /*keep_isolated=*/true);
    for (const Fact& f : s.facts())
        if (f.args.empty())
            out.emplace_back(s.schema(), std::vector<std::string>{}, std::vector<Fact>{f});
    return out;
}

bool is_connected(const Structure& s) {
    return connected_components(s).size() == 1;
}

std::string canonical_key(const Structure& s, const Limits& limits) {
    auto comps = connected_components(s);
    if (comps.size() == 1)
        return component_key(comps.front(), limits);
    std::vector<std::string> keys;
    keys.reserve(comps.size());
    for (const Structure& c : comps)
        keys.push_back(component_key(c, limits));
    std::sort(keys.begin(), keys.end());
    std::string out;
    for (const std::string& k : keys)
        out += k + "&";
    return out;
}

bool isomorphic(const Structure& a, const Structure& b, const Limits& limits) {
    if (!same_schema(a.schema(), b.schema()))
        return false;
    if (a.domain_size() != b.domain_size() || a.fact_count() != b.fact_count())
        return false;
    return canonical_key(a, limits) == canonical_key(b, limits);
}

} // namespace bagdet
