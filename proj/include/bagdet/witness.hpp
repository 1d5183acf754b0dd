#ifndef BAGDET_WITNESS_HPP
#define BAGDET_WITNESS_HPP

#include "bagdet/detbool.hpp"
#include "bagdet/limits.hpp"
#include "bagdet/linalg.hpp"
#include "bagdet/symbolic.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace bagdet {

/// Raised when counterexample construction cannot proceed (no witness is
/// fabricated in that case).
class synthesis_error : public std::runtime_error {
public:
    explicit synthesis_error(const std::string& what) : std::runtime_error(what) {}
};

/// Family of structures S whose evaluation matrix against the component
/// basis is invertible: s_j = merged^j x q for j = 0..k-1, where merged
/// packs one distinguisher per basis pair into radix-T digits so that the
/// counts h_i = hom(w_i, merged) are pairwise distinct.
struct GoodBasis {
    std::vector<Structure> distinguishers; // one per separated pair, deduped
    Int radix;                             // strictly above every digit
    std::optional<StructExpr> merged;      // s2; empty-structure leaf when k = 1
    std::vector<StructExpr> structures;    // s_0 .. s_{k-1}
    IntVec h;                              // hom(w_i, merged)
    IntVec g;                              // hom(w_i, frozen q), all >= 1
    RatMat eval_matrix = RatMat(0, 0);     // M(i,j) = h_i^j * g_i
    RatMat inverse = RatMat(0, 0);
};

struct CountCheck {
    std::string query;
    std::string route; // "basis", "symbolic" or "direct"
    Int left, right;   // answers on d and d_prime
    bool must_differ = false;
    bool ok = false;
};

struct VerificationReport {
    bool passed = false;
    std::vector<CountCheck> checks;
    std::vector<std::string> notes;
};

struct SynthesisTrace {
    IntVec z;          // integer-scaled vector orthogonal to the view span
    RatVec p;          // eval_matrix * ones
    Rat t = Rat(1);    // accepted perturbation
    RatVec p_prime;    // t^z (componentwise) hadamard p
    Int c = 1, c_prime = 1;
    int schedule_steps = 0;
};

/// Counterexample pair D, D_prime: every view agrees on them, q does not.
/// Multiplicity vectors over the good basis define both sides; materialized
/// structures are attached when they fit the limits.
struct WitnessPair {
    std::shared_ptr<const GoodBasis> good_basis;
    Basis components;
    std::vector<std::string> view_names; // relevant views
    std::vector<IntVec> view_vectors;
    IntVec q_vector;
    SynthesisTrace trace;
    IntVec mult, mult_prime; // D = sum mult[j]*s_j, likewise D'
    std::optional<StructExpr> d_expr, dp_expr;
    std::optional<Structure> d, d_prime;
    VerificationReport report;
};

/// A structure on which the two (connected, non-isomorphic) inputs have
/// different hom counts. Tries the inputs themselves, then substructures of
/// both, then enumerates all structures of growing domain size.
Structure find_distinguisher(const Structure& a, const Structure& b, const Limits& limits = {});

GoodBasis build_good_basis(const Basis& w, const ConjunctiveQuery& q, const Limits& limits = {});

/// Runs the perturbation search: scales the ones-preimage of p along a
/// direction orthogonal to the view vectors until the preimage of the
/// perturbed value vector is still nonnegative, then clears denominators.
WitnessPair build_counterexample(const GoodBasis& gb, const Basis& w,
                                 const std::vector<std::string>& view_names,
                                 const std::vector<IntVec>& view_vectors, const IntVec& q_vector,
                                 const ConjunctiveQuery& q, const Limits& limits = {});

/// Answer of the query with the given basis vector on sum_j mult[j]*s_j,
/// evaluated through the matrix: vecpow(eval_matrix*mult, vector).
Int eval_on_basis(const IntVec& query_vector, const GoodBasis& gb, const IntVec& mult);

/// Recomputes every count on both sides along independent routes (matrix
/// evaluation, compositional symbolic evaluation, and direct counting on the
/// materialized pair when present) and checks agreement, view equality and
/// the q difference.
VerificationReport verify_witness(const std::vector<ConjunctiveQuery>& views,
                                  const ConjunctiveQuery& q, const WitnessPair& wp,
                                  const Limits& limits = {});

} // namespace bagdet

#endif
