#include "bagdet/pathdet.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace bagdet::path {

namespace {

void require_same_schema(const PathQuery& q, const std::vector<PathQuery>& views) {
    for (const PathQuery& v : views)
        if (!same_schema(v.schema(), q.schema()))
            throw std::invalid_argument("view word over a different schema");
}

// Reachability classes of prefix nodes; class ids are representative nodes.
std::vector<int> reach_classes(const PrefixGraph& g) {
    std::vector<int> cls(static_cast<size_t>(g.prefix_count), -1);
    for (int start = 0; start < g.prefix_count; ++start) {
        if (cls[static_cast<size_t>(start)] >= 0)
            continue;
        std::deque<int> queue{start};
        cls[static_cast<size_t>(start)] = start;
        while (!queue.empty()) {
            int a = queue.front();
            queue.pop_front();
            for (auto [b, view] : g.adj[static_cast<size_t>(a)])
                if (cls[static_cast<size_t>(b)] < 0) {
                    cls[static_cast<size_t>(b)] = start;
                    queue.push_back(b);
                }
        }
    }
    return cls;
}

} // namespace

PrefixGraph build_prefix_graph(const PathQuery& q, const std::vector<PathQuery>& views) {
    require_same_schema(q, views);
    PrefixGraph g;
    g.prefix_count = q.length() + 1;
    g.adj.assign(static_cast<size_t>(g.prefix_count), {});
    for (int a = 0; a < g.prefix_count; ++a) {
        for (size_t vi = 0; vi < views.size(); ++vi) {
            const auto& letters = views[vi].letters();
            int b = a + static_cast<int>(letters.size());
            if (b >= g.prefix_count)
                continue;
            bool match = true;
            for (size_t k = 0; k < letters.size(); ++k)
                if (q.letters()[static_cast<size_t>(a) + k] != letters[k]) {
                    match = false;
                    break;
                }
            if (match) {
                g.adj[static_cast<size_t>(a)].emplace_back(b, static_cast<int>(vi));
                g.adj[static_cast<size_t>(b)].emplace_back(a, static_cast<int>(vi));
            }
        }
    }
    return g;
}

bool decide_path(const PathQuery& q, const std::vector<PathQuery>& views) {
    return reach_path(q, views).has_value();
}

std::optional<std::vector<int>> reach_path(const PathQuery& q, const std::vector<PathQuery>& views) {
    PrefixGraph g = build_prefix_graph(q, views);
    const int target = q.length();
    std::vector<int> parent(static_cast<size_t>(g.prefix_count), -2);
    parent[0] = -1;
    std::deque<int> queue{0};
    while (!queue.empty()) {
        int a = queue.front();
        queue.pop_front();
        if (a == target)
            break;
        for (auto [b, view] : g.adj[static_cast<size_t>(a)])
            if (parent[static_cast<size_t>(b)] == -2) {
                parent[static_cast<size_t>(b)] = a;
                queue.push_back(b);
            }
    }
    if (parent[static_cast<size_t>(target)] == -2)
        return std::nullopt;
    std::vector<int> nodes;
    for (int a = target; a != -1; a = parent[static_cast<size_t>(a)])
        nodes.push_back(a);
    std::reverse(nodes.begin(), nodes.end());
    return nodes;
}

Walk walk_from_path(const PathQuery& q, const std::vector<PathQuery>& views,
                    const std::vector<int>& nodes) {
    require_same_schema(q, views);
    if (nodes.empty() || nodes.front() != 0 || nodes.back() != q.length())
        throw std::invalid_argument("node path must run from the empty to the full prefix");
    Walk walk;
    for (size_t step = 0; step + 1 < nodes.size(); ++step) {
        int a = nodes[step], b = nodes[step + 1];
        int lo = std::min(a, b), hi = std::max(a, b);
        if (lo < 0 || hi > q.length() || lo == hi)
            throw std::invalid_argument("invalid prefix move");
        // moving up spells q[lo..hi); moving down spells it reversed, inverted
        if (b > a) {
            for (int h = lo; h < hi; ++h)
                walk.letters.push_back({q.letters()[static_cast<size_t>(h)], +1});
        } else {
            for (int h = hi - 1; h >= lo; --h)
                walk.letters.push_back({q.letters()[static_cast<size_t>(h)], -1});
        }
    }
    return walk;
}

bool is_q_walk(const PathQuery& q, const Walk& walk) {
    int h = 0;
    const int m = q.length();
    for (const WalkLetter& letter : walk.letters) {
        if (letter.sign > 0) {
            if (h >= m || q.letters()[static_cast<size_t>(h)] != letter.relation)
                return false;
            ++h;
        } else {
            if (h <= 0 || q.letters()[static_cast<size_t>(h - 1)] != letter.relation)
                return false;
            --h;
        }
    }
    return h == m;
}

Walk reduce_walk(const PathQuery& q, const Walk& walk, ReductionSystem system) {
    if (!is_q_walk(q, walk))
        throw std::invalid_argument("reduce_walk: not a valid walk for this word");
    const int first_sign = system == ReductionSystem::forward_backward ? +1 : -1;
    std::vector<WalkLetter> letters = walk.letters;
    size_t i = 0;
    while (i + 1 < letters.size()) {
        if (letters[i].sign == first_sign && letters[i + 1].sign == -first_sign &&
            letters[i].relation == letters[i + 1].relation) {
            letters.erase(letters.begin() + static_cast<long>(i),
                          letters.begin() + static_cast<long>(i) + 2);
            i = i > 0 ? i - 1 : 0;
        } else {
            ++i;
        }
    }
    return Walk{std::move(letters)};
}

PairBag eval_path_query(const PathQuery& w, const Structure& d, const Limits& limits) {
    if (!same_schema(w.schema(), d.schema()))
        throw std::invalid_argument("eval_path_query: schema mismatch");
    const int n = d.domain_size();
    if (Int(n) * n > limits.max_domain_size * 10)
        throw limit_error("eval_path_query: incidence matrix too large");
    PairBag bag;
    bag.domain = d.domain();
    auto incidence = [&](int rel) {
        std::vector<Int> m(static_cast<size_t>(n) * static_cast<size_t>(n), Int(0));
        auto [lo, hi] = d.relation_range(rel);
        for (int fi = lo; fi < hi; ++fi) {
            const Fact& f = d.facts()[static_cast<size_t>(fi)];
            m[static_cast<size_t>(f.args[0]) * n + static_cast<size_t>(f.args[1])] = 1;
        }
        return m;
    };
    std::vector<Int> acc = incidence(w.letters().front());
    for (size_t k = 1; k < w.letters().size(); ++k) {
        std::vector<Int> next = incidence(w.letters()[k]);
        std::vector<Int> out(static_cast<size_t>(n) * static_cast<size_t>(n), Int(0));
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) {
                const Int& a = acc[static_cast<size_t>(i) * n + static_cast<size_t>(l)];
                if (a == 0)
                    continue;
                for (int j = 0; j < n; ++j) {
                    const Int& b = next[static_cast<size_t>(l) * n + static_cast<size_t>(j)];
                    if (b != 0)
                        out[static_cast<size_t>(i) * n + static_cast<size_t>(j)] += a * b;
                }
            }
        acc = std::move(out);
    }
    bag.counts = std::move(acc);
    return bag;
}

bool equal_bags(const PairBag& a, const PairBag& b) {
    if (a.domain.size() != b.domain.size())
        return false;
    std::map<std::string, int> where;
    for (int i = 0; i < static_cast<int>(b.domain.size()); ++i)
        where[b.domain[static_cast<size_t>(i)]] = i;
    const int n = static_cast<int>(a.domain.size());
    std::vector<int> to_b(static_cast<size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        auto it = where.find(a.domain[static_cast<size_t>(i)]);
        if (it == where.end())
            return false;
        to_b[static_cast<size_t>(i)] = it->second;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (a.count(i, j) != b.count(to_b[static_cast<size_t>(i)], to_b[static_cast<size_t>(j)]))
                return false;
    return true;
}

PathWitness build_path_witness(const PathQuery& q, const std::vector<PathQuery>& views,
                               const Limits& limits) {
    PrefixGraph g = build_prefix_graph(q, views);
    std::vector<int> cls = reach_classes(g);
    const int m = q.length();
    if (cls[0] == cls[static_cast<size_t>(m)])
        throw std::invalid_argument("views determine the word; no counterexample exists");

    std::vector<int> side;
    side.reserve(cls.size());
    for (int h = 0; h <= m; ++h)
        side.push_back(cls[static_cast<size_t>(h)] == cls[static_cast<size_t>(m)] ? 1 : 0);

    auto node = [&](int copy, int h) {
        return "c" + std::to_string(copy) + "_" + std::to_string(h);
    };
    std::vector<NamedFact> straight, twisted;
    for (int h = 0; h < m; ++h) {
        const std::string& rel = q.schema()->relation(q.letters()[static_cast<size_t>(h)]).name;
        bool cross = side[static_cast<size_t>(h)] != side[static_cast<size_t>(h + 1)];
        for (int copy = 1; copy <= 2; ++copy) {
            straight.push_back(NamedFact{rel, {node(copy, h), node(copy, h + 1)}});
            int to = cross ? 3 - copy : copy;
            twisted.push_back(NamedFact{rel, {node(copy, h), node(to, h + 1)}});
        }
    }
    PathWitness witness{make_structure(q.schema(), straight), make_structure(q.schema(), twisted),
                        std::move(side), true, {}};
    for (const PathQuery& v : views) {
        bool same = equal_bags(eval_path_query(v, witness.d, limits),
                               eval_path_query(v, witness.d_prime, limits));
        if (!same) {
            witness.verified = false;
            witness.notes.push_back("view " + v.word() + " differs on the pair");
        }
    }
    PairBag qd = eval_path_query(q, witness.d, limits);
    PairBag qdp = eval_path_query(q, witness.d_prime, limits);
    if (equal_bags(qd, qdp)) {
        witness.verified = false;
        witness.notes.push_back("query has equal bags on the pair");
    }
    // the straight pair (c1_0, c1_m) occurs once on d and never on d_prime
    int from = witness.d.element_index(node(1, 0));
    int to = witness.d.element_index(node(1, m));
    int from_p = witness.d_prime.element_index(node(1, 0));
    int to_p = witness.d_prime.element_index(node(1, m));
    if (from < 0 || to < 0 || qd.count(from, to) != 1) {
        witness.verified = false;
        witness.notes.push_back("expected multiplicity 1 for the straight endpoint pair on d");
    }
    if (from_p < 0 || to_p < 0 || qdp.count(from_p, to_p) != 0) {
        witness.verified = false;
        witness.notes.push_back("expected multiplicity 0 for the straight endpoint pair on d_prime");
    }
    return witness;
}

} // namespace bagdet::path
