#include "bagdet/linalg.hpp"

#include <stdexcept>

namespace bagdet {

RatMat RatMat::identity(int n) {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

RatVec RatMat::mul(const RatVec& x) const {
    if (static_cast<int>(x.size()) != cols_)
        throw std::invalid_argument("matrix-vector size mismatch");
    RatVec out(static_cast<size_t>(rows_));
    for (int i = 0; i < rows_; ++i) {
        Rat acc = 0;
        for (int j = 0; j < cols_; ++j)
            acc += at(i, j) * x[static_cast<size_t>(j)];
        out[static_cast<size_t>(i)] = std::move(acc);
    }
    return out;
}

RatMat RatMat::mul(const RatMat& other) const {
    if (cols_ != other.rows_)
        throw std::invalid_argument("matrix-matrix size mismatch");
    RatMat out(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            if (at(i, k) == 0)
                continue;
            for (int j = 0; j < other.cols_; ++j)
                out.at(i, j) += at(i, k) * other.at(k, j);
        }
    return out;
}

Rat dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("dot: size mismatch");
    Rat acc = 0;
    for (size_t i = 0; i < a.size(); ++i)
        acc += a[i] * b[i];
    return acc;
}

std::optional<RatVec> span_membership(const std::vector<RatVec>& basis, const RatVec& target) {
    const int dim = static_cast<int>(target.size());
    const int n = static_cast<int>(basis.size());
    for (const RatVec& b : basis)
        if (static_cast<int>(b.size()) != dim)
            throw std::invalid_argument("span_membership: vector length mismatch");
    // augmented [B | target] with basis vectors as columns
    RatMat aug(dim, n + 1);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < dim; ++i)
            aug.at(i, j) = basis[static_cast<size_t>(j)][static_cast<size_t>(i)];
    for (int i = 0; i < dim; ++i)
        aug.at(i, n) = target[static_cast<size_t>(i)];

    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < n && row < dim; ++col) {
        int pr = -1;
        for (int r = row; r < dim; ++r)
            if (aug.at(r, col) != 0) {
                pr = r;
                break;
            }
        if (pr < 0)
            continue;
        if (pr != row)
            for (int j = col; j <= n; ++j)
                std::swap(aug.at(pr, j), aug.at(row, j));
        Rat inv_pivot = Rat(1) / aug.at(row, col);
        for (int j = col; j <= n; ++j)
            aug.at(row, j) *= inv_pivot;
        for (int r = 0; r < dim; ++r) {
            if (r == row || aug.at(r, col) == 0)
                continue;
            Rat factor = aug.at(r, col);
            for (int j = col; j <= n; ++j)
                aug.at(r, j) -= factor * aug.at(row, j);
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (int r = row; r < dim; ++r)
        if (aug.at(r, n) != 0)
            return std::nullopt;
    RatVec coeffs(static_cast<size_t>(n), Rat(0));
    for (int i = 0; i < row; ++i)
        coeffs[static_cast<size_t>(pivot_col[static_cast<size_t>(i)])] = aug.at(i, n);
    return coeffs;
}

std::optional<RatMat> invert(const RatMat& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("invert: matrix not square");
    const int n = m.rows();
    RatMat a = m;
    RatMat inv = RatMat::identity(n);
    for (int col = 0; col < n; ++col) {
        int pr = -1;
        for (int r = col; r < n; ++r)
            if (a.at(r, col) != 0) {
                pr = r;
                break;
            }
        if (pr < 0)
            return std::nullopt;
        if (pr != col)
            for (int j = 0; j < n; ++j) {
                std::swap(a.at(pr, j), a.at(col, j));
                std::swap(inv.at(pr, j), inv.at(col, j));
            }
        Rat inv_pivot = Rat(1) / a.at(col, col);
        for (int j = 0; j < n; ++j) {
            a.at(col, j) *= inv_pivot;
            inv.at(col, j) *= inv_pivot;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a.at(r, col) == 0)
                continue;
            Rat factor = a.at(r, col);
            for (int j = 0; j < n; ++j) {
                a.at(r, j) -= factor * a.at(col, j);
                inv.at(r, j) -= factor * inv.at(col, j);
            }
        }
    }
    return inv;
}

Rat determinant(const RatMat& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant: matrix not square");
    const int n = m.rows();
    RatMat a = m;
    Rat det = 1;
    for (int col = 0; col < n; ++col) {
        int pr = -1;
        for (int r = col; r < n; ++r)
            if (a.at(r, col) != 0) {
                pr = r;
                break;
            }
        if (pr < 0)
            return Rat(0);
        if (pr != col) {
            for (int j = 0; j < n; ++j)
                std::swap(a.at(pr, j), a.at(col, j));
            det = -det;
        }
        det *= a.at(col, col);
        Rat inv_pivot = Rat(1) / a.at(col, col);
        for (int r = col + 1; r < n; ++r) {
            if (a.at(r, col) == 0)
                continue;
            Rat factor = a.at(r, col) * inv_pivot;
            for (int j = col; j < n; ++j)
                a.at(r, j) -= factor * a.at(col, j);
        }
    }
    return det;
}

RatVec orthogonal_witness(const std::vector<RatVec>& basis, const RatVec& target) {
    // Gram-Schmidt residual of target against the span
    std::vector<RatVec> ortho;
    for (const RatVec& b : basis) {
        RatVec u = b;
        for (const RatVec& prev : ortho) {
            Rat coeff = dot(u, prev) / dot(prev, prev);
            for (size_t i = 0; i < u.size(); ++i)
                u[i] -= coeff * prev[i];
        }
        bool zero = true;
        for (const Rat& x : u)
            if (x != 0) {
                zero = false;
                break;
            }
        if (!zero)
            ortho.push_back(std::move(u));
    }
    RatVec z = target;
    for (const RatVec& prev : ortho) {
        Rat coeff = dot(z, prev) / dot(prev, prev);
        for (size_t i = 0; i < z.size(); ++i)
            z[i] -= coeff * prev[i];
    }
    bool zero = true;
    for (const Rat& x : z)
        if (x != 0) {
            zero = false;
            break;
        }
    if (zero)
        throw std::invalid_argument("orthogonal_witness: target lies in the span");
    return z;
}

std::pair<Int, IntVec> integer_scale(const RatVec& v) {
    Int d = 1;
    for (const Rat& x : v)
        d = lcm_int(d, x.get_den());
    IntVec out;
    out.reserve(v.size());
    for (const Rat& x : v) {
        Rat scaled = x * Rat(d);
        out.push_back(scaled.get_num()); // denominator is 1 by construction
    }
    return {d, out};
}

std::optional<RatVec> nonneg_preimage(const RatMat& inv, const RatVec& u) {
    RatVec x = inv.mul(u);
    for (const Rat& xi : x)
        if (xi < 0)
            return std::nullopt;
    return x;
}

Rat vecpow(const RatVec& base, const IntVec& exp) {
    if (base.size() != exp.size())
        throw std::invalid_argument("vecpow: size mismatch");
    Rat acc = 1;
    for (size_t i = 0; i < base.size(); ++i)
        acc *= pow_rat(base[i], exp[i]);
    return acc;
}

RatVec hadamard(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("hadamard: size mismatch");
    RatVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] * b[i];
    return out;
}

RatVec pow_elementwise(const Rat& t, const IntVec& z) {
    RatVec out;
    out.reserve(z.size());
    for (const Int& e : z)
        out.push_back(pow_rat_signed(t, e));
    return out;
}

RatVec to_rat_vec(const IntVec& v) {
    RatVec out;
    out.reserve(v.size());
    for (const Int& x : v)
        out.push_back(Rat(x));
    return out;
}

} // namespace bagdet
