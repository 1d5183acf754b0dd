#include "bagdet/hom.hpp"

#include "bagdet/canonical.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace bagdet {

namespace {

constexpr int partial_scan_cap = 256; // skip partial-match pruning on larger relations

class Search {
public:
    enum class Mode { count, exists, enumerate };

    Search(const Structure& pattern, const Structure& target, const Limits& limits, Mode mode,
           const std::function<bool(const std::vector<int>&)>* callback)
        : p_(pattern), t_(target), limits_(limits), mode_(mode), callback_(callback),
          assign_(static_cast<size_t>(pattern.domain_size()), -1) {}

    Int run() {
        if (!same_schema(p_.schema(), t_.schema()))
            throw std::invalid_argument("hom search across different schemas");
        for (const Fact& f : p_.facts())
            if (f.args.empty() && !t_.has_fact(f))
                return 0;
        rec();
        return count_;
    }

private:
    void rec() {
        if (stop_)
            return;
        if (unassigned_() == 0) {
            ++count_;
            if (mode_ == Mode::exists)
                stop_ = true;
            else if (mode_ == Mode::enumerate && !(*callback_)(assign_))
                stop_ = true;
            return;
        }
        int v = pick_var();
        int driver = driver_fact(v);
        std::vector<int> candidates;
        if (driver >= 0) {
            collect_from_fact(v, driver, candidates);
        } else {
            candidates.resize(static_cast<size_t>(t_.domain_size()));
            for (int c = 0; c < t_.domain_size(); ++c)
                candidates[static_cast<size_t>(c)] = c;
        }
        for (int c : candidates) {
            if (stop_)
                return;
            if (++nodes_ > limits_.max_search_nodes)
                throw limit_error("hom search node budget exceeded");
            if (!consistent(v, c))
                continue;
            assign_[static_cast<size_t>(v)] = c;
            ++assigned_;
            rec();
            assign_[static_cast<size_t>(v)] = -1;
            --assigned_;
        }
    }

    int unassigned_() const { return p_.domain_size() - assigned_; }

    // Prefer a variable some incident fact already pins down; otherwise the
    // highest-degree unassigned one.
    int pick_var() const {
        int best = -1, best_range = -1;
        for (int v = 0; v < p_.domain_size(); ++v) {
            if (assign_[static_cast<size_t>(v)] >= 0)
                continue;
            int d = driver_fact(v);
            if (d >= 0) {
                auto [lo, hi] = t_.relation_range(p_.facts()[static_cast<size_t>(d)].relation);
                int range = hi - lo;
                if (best_range < 0 || range < best_range) {
                    best = v;
                    best_range = range;
                }
            }
        }
        if (best >= 0)
            return best;
        for (int v = 0; v < p_.domain_size(); ++v) {
            if (assign_[static_cast<size_t>(v)] >= 0)
                continue;
            if (best < 0 || p_.degree(v) > p_.degree(best))
                best = v;
        }
        return best;
    }

    // A fact incident to v whose other arguments are all assigned; -1 if none.
    int driver_fact(int v) const {
        int best = -1, best_range = -1;
        for (int fi : p_.incident(v)) {
            const Fact& f = p_.facts()[static_cast<size_t>(fi)];
            bool pinned = true;
            for (int a : f.args)
                if (a != v && assign_[static_cast<size_t>(a)] < 0) {
                    pinned = false;
                    break;
                }
            if (!pinned)
                continue;
            auto [lo, hi] = t_.relation_range(f.relation);
            if (best_range < 0 || hi - lo < best_range) {
                best = fi;
                best_range = hi - lo;
            }
        }
        return best;
    }

    // Values for v proposed by target facts compatible with the driver fact.
    void collect_from_fact(int v, int fi, std::vector<int>& out) const {
        const Fact& f = p_.facts()[static_cast<size_t>(fi)];
        auto [lo, hi] = t_.relation_range(f.relation);
        for (int gi = lo; gi < hi; ++gi) {
            const Fact& g = t_.facts()[static_cast<size_t>(gi)];
            int value = -1;
            bool ok = true;
            for (size_t k = 0; k < f.args.size(); ++k) {
                int pa = f.args[k];
                int ga = g.args[k];
                if (pa == v) {
                    if (value < 0)
                        value = ga;
                    else if (value != ga)
                        ok = false;
                } else if (assign_[static_cast<size_t>(pa)] != ga) {
                    ok = false;
                }
                if (!ok)
                    break;
            }
            if (ok && value >= 0)
                out.push_back(value);
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
    }

    // Check facts incident to v after assigning v=c: fully assigned facts by
    // membership, partially assigned ones by a bounded compatibility scan.
    bool consistent(int v, int c) {
        assign_[static_cast<size_t>(v)] = c;
        bool ok = true;
        for (int fi : p_.incident(v)) {
            const Fact& f = p_.facts()[static_cast<size_t>(fi)];
            bool full = true;
            for (int a : f.args)
                if (assign_[static_cast<size_t>(a)] < 0) {
                    full = false;
                    break;
                }
            if (full) {
                Fact image;
                image.relation = f.relation;
                image.args.reserve(f.args.size());
                for (int a : f.args)
                    image.args.push_back(assign_[static_cast<size_t>(a)]);
                if (!t_.has_fact(image)) {
                    ok = false;
                    break;
                }
            } else {
                auto [lo, hi] = t_.relation_range(f.relation);
                if (hi - lo > partial_scan_cap)
                    continue;
                bool possible = false;
                for (int gi = lo; gi < hi && !possible; ++gi) {
                    const Fact& g = t_.facts()[static_cast<size_t>(gi)];
                    possible = true;
                    for (size_t k = 0; k < f.args.size(); ++k) {
                        int pa = assign_[static_cast<size_t>(f.args[k])];
                        if (pa >= 0 && pa != g.args[k]) {
                            possible = false;
                            break;
                        }
                    }
                }
                if (!possible) {
                    ok = false;
                    break;
                }
            }
        }
        assign_[static_cast<size_t>(v)] = -1;
        return ok;
    }

    const Structure& p_;
    const Structure& t_;
    const Limits& limits_;
    Mode mode_;
    const std::function<bool(const std::vector<int>&)>* callback_;
    std::vector<int> assign_;
    int assigned_ = 0;
    long long nodes_ = 0;
    Int count_ = 0;
    bool stop_ = false;
};

} // namespace

Int hom_count(const Structure& pattern, const Structure& target, const Limits& limits) {
    if (!same_schema(pattern.schema(), target.schema()))
        throw std::invalid_argument("hom_count across different schemas");
    for (const Fact& f : pattern.facts())
        if (f.args.empty() && !target.has_fact(f))
            return 0;
    // group components by isomorphism type so each type is searched once
    std::map<std::string, std::pair<Structure, unsigned long>> types;
    for (Structure& comp : connected_components(pattern)) {
        if (comp.domain_size() == 0)
            continue; // nullary fact, handled above
        std::string key = canonical_key(comp, limits);
        auto it = types.find(key);
        if (it == types.end())
            types.emplace(std::move(key), std::make_pair(std::move(comp), 1ul));
        else
            ++it->second.second;
    }
    Int total = 1;
    for (auto& [key, entry] : types) {
        Int one = Search(entry.first, target, limits, Search::Mode::count, nullptr).run();
        if (one == 0)
            return 0;
        total *= pow_int(one, entry.second);
    }
    return total;
}

Int hom_count_connected(const Structure& pattern, const Structure& target, const Limits& limits) {
    return Search(pattern, target, limits, Search::Mode::count, nullptr).run();
}

bool hom_exists(const Structure& pattern, const Structure& target, const Limits& limits) {
    if (!same_schema(pattern.schema(), target.schema()))
        throw std::invalid_argument("hom_exists across different schemas");
    for (const Fact& f : pattern.facts())
        if (f.args.empty() && !target.has_fact(f))
            return false;
    for (const Structure& comp : connected_components(pattern)) {
        if (comp.domain_size() == 0)
            continue;
        Int one = Search(comp, target, limits, Search::Mode::exists, nullptr).run();
        if (one == 0)
            return false;
    }
    return true;
}

void for_each_hom(const Structure& pattern, const Structure& target,
                  const std::function<bool(const std::vector<int>&)>& fn, const Limits& limits) {
    Search(pattern, target, limits, Search::Mode::enumerate, &fn).run();
}

Int eval_boolean_cq(const ConjunctiveQuery& q, const Structure& d, const Limits& limits) {
    return hom_count(q.frozen_body(), d, limits);
}

Int eval_ucq(const UnionQuery& q, const Structure& d, const Limits& limits) {
    if (!q.is_boolean())
        throw std::invalid_argument("eval_ucq requires a boolean query");
    Int total = 0;
    for (const ConjunctiveQuery& cq : q.disjuncts())
        total += eval_boolean_cq(cq, d, limits);
    return total;
}

} // namespace bagdet
