#ifndef BAGDET_LIMITS_HPP
#define BAGDET_LIMITS_HPP

#include <stdexcept>
#include <string>

namespace bagdet {

/// Resource budgets. Exceeding a budget raises limit_error; results are never
/// approximated to stay inside a budget.
struct Limits {
    long max_search_nodes = 1'000'000;    // backtracking nodes per hom search
    long max_domain_size = 100'000;       // elements in any materialized structure
    long max_materialized_size = 100'000; // witness materialization threshold
    long max_candidates = 200'000;        // distinguisher enumeration budget
    int t_schedule_cap = 64;              // harmonic steps before geometric refinement
};

class limit_error : public std::runtime_error {
public:
    explicit limit_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace bagdet

#endif
