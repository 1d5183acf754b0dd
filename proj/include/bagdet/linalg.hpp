#ifndef BAGDET_LINALG_HPP
#define BAGDET_LINALG_HPP

#include "bagdet/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace bagdet {

using RatVec = std::vector<Rat>;

class RatMat {
public:
    RatMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
    static RatMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    RatVec mul(const RatVec& x) const;
    RatMat mul(const RatMat& other) const;

    bool operator==(const RatMat& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && a_ == other.a_;
    }

private:
    int rows_;
    int cols_;
    std::vector<Rat> a_;
};

Rat dot(const RatVec& a, const RatVec& b);

/// Coefficients expressing target as a linear combination of the basis
/// vectors, or nullopt when target is outside their span. Exact Gaussian
/// elimination; free coefficients are fixed to zero, so the result is
/// deterministic.
std::optional<RatVec> span_membership(const std::vector<RatVec>& basis, const RatVec& target);

std::optional<RatMat> invert(const RatMat& m);

Rat determinant(const RatMat& m);

/// A vector orthogonal to every basis vector with nonzero inner product
/// against target. Requires target outside span(basis) (Gram-Schmidt
/// residual); throws std::invalid_argument otherwise.
RatVec orthogonal_witness(const std::vector<RatVec>& basis, const RatVec& target);

/// Least positive integer d such that d*v is integral, together with d*v.
std::pair<Int, IntVec> integer_scale(const RatVec& v);

/// inv*u when that image is componentwise nonnegative, else nullopt.
std::optional<RatVec> nonneg_preimage(const RatMat& inv, const RatVec& u);

/// prod_i base[i]^exp[i] with 0^0 = 1; exponents must be nonnegative.
Rat vecpow(const RatVec& base, const IntVec& exp);

RatVec hadamard(const RatVec& a, const RatVec& b);

/// (t^z[0], ..., t^z[k-1]); z may be negative, so t must be nonzero.
RatVec pow_elementwise(const Rat& t, const IntVec& z);

RatVec to_rat_vec(const IntVec& v);

} // namespace bagdet

#endif
