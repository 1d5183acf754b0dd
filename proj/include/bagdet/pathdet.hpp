#ifndef BAGDET_PATHDET_HPP
#define BAGDET_PATHDET_HPP

#include "bagdet/limits.hpp"
#include "bagdet/query.hpp"
#include "bagdet/rational.hpp"
#include "bagdet/structure.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bagdet::path {

/// Node i stands for the length-i prefix of q. An edge joins w and wv when
/// both are prefixes of q and v is a view word; edges are traversed in both
/// directions.
struct PrefixGraph {
    int prefix_count = 0;                                  // |q| + 1 nodes
    std::vector<std::vector<std::pair<int, int>>> adj;     // node -> (neighbor, view index)
};

PrefixGraph build_prefix_graph(const PathQuery& q, const std::vector<PathQuery>& views);

/// The views determine q iff the full prefix is reachable from the empty one.
bool decide_path(const PathQuery& q, const std::vector<PathQuery>& views);

/// Breadth-first node path from prefix 0 to prefix |q|, or nullopt.
std::optional<std::vector<int>> reach_path(const PathQuery& q, const std::vector<PathQuery>& views);

struct WalkLetter {
    int relation = -1;
    int sign = 1; // +1 forward, -1 inverse
    bool operator==(const WalkLetter&) const = default;
};

struct Walk {
    std::vector<WalkLetter> letters;
    bool operator==(const Walk&) const = default;
};

/// Spells the prefix path as a walk: forward moves append the view word,
/// backward moves append it reversed with inverse letters.
Walk walk_from_path(const PathQuery& q, const std::vector<PathQuery>& views,
                    const std::vector<int>& nodes);

/// Height conditions: heights stay within [0,|q|], end at |q|, an ascending
/// letter at height h is q's (h+1)-th letter and a descending letter at
/// height h is q's h-th letter.
bool is_q_walk(const PathQuery& q, const Walk& walk);

enum class ReductionSystem {
    forward_backward, // delete adjacent X X^-1
    backward_forward, // delete adjacent X^-1 X
};

/// Exhaustively deletes the system's redex pairs, leftmost first. Any walk
/// satisfying is_q_walk reduces to the plain word q under either system.
Walk reduce_walk(const PathQuery& q, const Walk& walk, ReductionSystem system);

/// Bag answer of a path query: counts[i*n+j] is the number of paths from
/// element i to element j spelling the word, computed as a product of 0/1
/// incidence matrices.
struct PairBag {
    std::vector<std::string> domain;
    std::vector<Int> counts;

    const Int& count(int from, int to) const {
        return counts[static_cast<size_t>(from) * domain.size() + static_cast<size_t>(to)];
    }
};

PairBag eval_path_query(const PathQuery& w, const Structure& d, const Limits& limits = {});

/// Equality as bags of named pairs (domains may be ordered differently).
bool equal_bags(const PairBag& a, const PairBag& b);

/// Two databases on the doubled prefix chain: d is two straight copies of
/// the q-path; d_prime re-wires each letter across the copies whenever its
/// endpoints lie in different reachability classes of the prefix graph.
/// Every view answers identically on both, q does not.
struct PathWitness {
    Structure d;
    Structure d_prime;
    std::vector<int> side;   // per prefix: 1 if connected to the full prefix
    bool verified = false;
    std::vector<std::string> notes;
};

/// Requires the instance to be undetermined (throws std::invalid_argument
/// otherwise); the returned pair is verified with eval_path_query.
PathWitness build_path_witness(const PathQuery& q, const std::vector<PathQuery>& views,
                               const Limits& limits = {});

} // namespace bagdet::path

#endif
