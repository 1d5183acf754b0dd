#ifndef BAGDET_H10_HPP
#define BAGDET_H10_HPP

#include "bagdet/limits.hpp"
#include "bagdet/query.hpp"
#include "bagdet/rational.hpp"
#include "bagdet/structure.hpp"

#include <string>
#include <utility>
#include <vector>

namespace bagdet::h10 {

/// coefficient * prod x_i^deg_i; powers hold (1-based variable, degree >= 1)
/// sorted by variable.
struct Monomial {
    Int coefficient;
    std::vector<std::pair<int, int>> powers;

    bool operator==(const Monomial&) const = default;
};

/// A polynomial equation sum of monomials = 0, asking for a solution in
/// natural numbers.
struct H10Instance {
    std::vector<Monomial> monomials;
    int var_count = 0;
};

/// One monomial per line: coefficient followed by optional factors `x<i>` or
/// `x<i>^<d>`, e.g. "-3 x1^2 x4". `#` starts a comment.
H10Instance parse_instance_text(const std::string& text);
std::string write_instance_text(const H10Instance& instance);

Int monomial_value(const Monomial& m, const IntVec& point);

/// Sum of |coefficient| * prod x^deg over the monomials of one sign.
Int side_value(const H10Instance& instance, bool positive, const IntVec& point);

bool is_solution(const H10Instance& instance, const IntVec& point);

/// Reduction to view determinacy: schema H/0, C/0, X1/1..Xn/1; the query
/// asks for H; the marker view returns H or C; one view per variable counts
/// X_i; the instance view joins each monomial's counting body with H or C
/// according to its sign, duplicated |coefficient| times. The views
/// determine the query iff the equation has no natural solution.
struct Encoding {
    SchemaPtr schema;
    UnionQuery query;                // Q() :- H().
    std::vector<UnionQuery> views;   // VMARK, VX1..VXn, VEQ
};

Encoding encode(const H10Instance& instance);

/// The answer of a monomial's counting body on d is the monomial evaluated
/// (without its coefficient) at the X-relation sizes of d.
struct PhiCheck {
    Int direct;
    Int expected;
    bool ok = false;
};

PhiCheck phi_count_identity_check(const Monomial& m, const Encoding& encoding, const Structure& d,
                                  const Limits& limits = {});

/// Counterexample pair from a solution: d holds H and x_i-many X_i facts,
/// d_prime replaces H by C. All views agree on the pair, the query answers
/// 1 versus 0.
struct H10Witness {
    Structure d;
    Structure d_prime;
    bool verified = false;
    std::vector<std::string> notes;
    std::vector<std::pair<std::string, std::pair<Int, Int>>> counts; // view -> (on d, on d')
};

H10Witness witness_from_solution(const H10Instance& instance, const IntVec& solution,
                                 const Limits& limits = {});

} // namespace bagdet::h10

#endif
