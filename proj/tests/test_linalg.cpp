#include "bagdet/linalg.hpp"

#include "support/oracles.hpp"

#include <doctest.h>

using namespace bagdet;

namespace {

RatMat mat2(long a, long b, long c, long d) {
    RatMat m(2, 2);
    m.at(0, 0) = a;
    m.at(0, 1) = b;
    m.at(1, 0) = c;
    m.at(1, 1) = d;
    return m;
}

RatVec rv(std::vector<long> xs) {
    RatVec out;
    for (long x : xs)
        out.emplace_back(x);
    return out;
}

RatMat random_mat(oracles::Rng& rng, int n) {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.at(i, j) = make_rat(rng.below(19) - 9, 1 + rng.below(4));
    return m;
}

} // namespace

TEST_CASE("inverse accepts and rejects the worked 2x2 examples") {
    auto inv = invert(mat2(1, 4, 1, 2));
    REQUIRE(inv.has_value());
    CHECK(inv->at(0, 0) == Rat(-1));
    CHECK(inv->at(0, 1) == Rat(2));
    CHECK(inv->at(1, 0) == make_rat(1, 2));
    CHECK(inv->at(1, 1) == make_rat(-1, 2));
    CHECK(mat2(1, 4, 1, 2).mul(*inv) == RatMat::identity(2));

    CHECK(!invert(mat2(2, 4, 1, 2)).has_value());
    CHECK(determinant(mat2(2, 4, 1, 2)) == Rat(0));
    CHECK(determinant(mat2(1, 4, 1, 2)) == Rat(-2));
}

TEST_CASE("determinant matches cofactor expansion") {
    oracles::Rng rng(6174);
    for (int i = 0; i < 80; ++i) {
        int n = 1 + rng.below(5);
        RatMat m = random_mat(rng, n);
        CHECK(determinant(m) == oracles::laplace_det(m));
    }
}

TEST_CASE("inverse round trips when the determinant is nonzero") {
    oracles::Rng rng(35);
    for (int i = 0; i < 60; ++i) {
        int n = 1 + rng.below(4);
        RatMat m = random_mat(rng, n);
        auto inv = invert(m);
        CHECK(inv.has_value() == (determinant(m) != 0));
        if (inv)
            CHECK(m.mul(*inv) == RatMat::identity(n));
    }
}

TEST_CASE("span membership finds exact coefficients") {
    auto coeffs = span_membership({rv({2, 1, 3}), rv({5, 2, 7})}, rv({1, 1, 2}));
    REQUIRE(coeffs.has_value());
    CHECK(*coeffs == rv({3, -1}));

    CHECK(!span_membership({rv({2, 1, 3}), rv({4, 2, 6})}, rv({1, 1, 2})).has_value());
    CHECK(!span_membership({}, rv({1, 0})).has_value());
    auto zero = span_membership({}, rv({0, 0}));
    REQUIRE(zero.has_value());
    CHECK(zero->empty());
}

TEST_CASE("span membership is exact on random consistent systems") {
    oracles::Rng rng(112);
    for (int i = 0; i < 60; ++i) {
        int dim = 2 + rng.below(3);
        int k = 1 + rng.below(3);
        std::vector<RatVec> basis;
        for (int v = 0; v < k; ++v) {
            RatVec b;
            for (int d = 0; d < dim; ++d)
                b.emplace_back(rng.below(7) - 3);
            basis.push_back(b);
        }
        RatVec target(static_cast<size_t>(dim), Rat(0));
        for (int v = 0; v < k; ++v) {
            Rat w = make_rat(rng.below(9) - 4, 1 + rng.below(3));
            for (int d = 0; d < dim; ++d)
                target[static_cast<size_t>(d)] += w * basis[static_cast<size_t>(v)][static_cast<size_t>(d)];
        }
        auto coeffs = span_membership(basis, target);
        REQUIRE(coeffs.has_value());
        RatVec rebuilt(static_cast<size_t>(dim), Rat(0));
        for (int v = 0; v < k; ++v)
            for (int d = 0; d < dim; ++d)
                rebuilt[static_cast<size_t>(d)] +=
                    (*coeffs)[static_cast<size_t>(v)] * basis[static_cast<size_t>(v)][static_cast<size_t>(d)];
        CHECK(rebuilt == target);
    }
}

TEST_CASE("orthogonal witness separates a vector from a span") {
    RatVec z = orthogonal_witness({rv({2, 1, 3})}, rv({1, 1, 2}));
    auto [d, zi] = integer_scale(z);
    CHECK(zi == IntVec{-4, 5, 1});
    CHECK(dot(z, rv({2, 1, 3})) == Rat(0));
    CHECK(dot(z, rv({1, 1, 2})) != Rat(0));

    CHECK_THROWS_AS(orthogonal_witness({rv({1, 0}), rv({0, 1})}, rv({2, 3})),
                    std::invalid_argument);

    oracles::Rng rng(77);
    for (int i = 0; i < 40; ++i) {
        int dim = 3 + rng.below(2);
        std::vector<RatVec> basis;
        for (int v = 0; v < 2; ++v) {
            RatVec b;
            for (int d = 0; d < dim; ++d)
                b.emplace_back(rng.below(5));
            basis.push_back(b);
        }
        RatVec target;
        for (int d = 0; d < dim; ++d)
            target.emplace_back(rng.below(5) + 1);
        if (span_membership(basis, target).has_value())
            continue;
        RatVec w = orthogonal_witness(basis, target);
        for (const RatVec& b : basis)
            CHECK(dot(w, b) == Rat(0));
        CHECK(dot(w, target) != Rat(0));
    }
}

TEST_CASE("integer scaling clears denominators minimally") {
    auto [d, v] = integer_scale({Rat(0), make_rat(5, 4), make_rat(-7, 6)});
    CHECK(d == 12);
    CHECK(v == IntVec{0, 15, -14});
    auto [d2, v2] = integer_scale({Rat(2), Rat(-3)});
    CHECK(d2 == 1);
    CHECK(v2 == IntVec{2, -3});
}

TEST_CASE("nonnegative preimage through an inverse") {
    RatMat m = mat2(1, 4, 1, 2);
    RatMat inv = *invert(m);
    auto alpha = nonneg_preimage(inv, rv({3, 2}));
    REQUIRE(alpha.has_value());
    CHECK(*alpha == RatVec{Rat(1), make_rat(1, 2)});
    CHECK(m.mul(*alpha) == rv({3, 2}));
    CHECK(!nonneg_preimage(inv, rv({3, 1})).has_value()); // alpha would dip negative
}

TEST_CASE("vector powers and elementwise powers") {
    CHECK(vecpow(rv({2, 3}), {2, 1}) == Rat(12));
    CHECK(vecpow(rv({0}), {0}) == Rat(1));
    CHECK(vecpow(rv({0}), {2}) == Rat(0));
    CHECK(vecpow({}, {}) == Rat(1));

    RatVec p = pow_elementwise(make_rat(3, 2), {1, -1, 0});
    CHECK(p == RatVec{make_rat(3, 2), make_rat(2, 3), Rat(1)});
    CHECK(hadamard(rv({2, 3}), rv({5, 7})) == rv({10, 21}));
}
