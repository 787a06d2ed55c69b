#include <doctest.h>

#include "typea/derived.hpp"

using namespace typea;

namespace {
const Algebra A2 = Algebra::linear(2);
const Algebra A3 = Algebra::linear(3);

const Interval P1{0, 1};
const Interval P2{0, 2};
const Interval S2{1, 2};
} // namespace

TEST_CASE("interval realizations have the expected dimensions") {
    CHECK(realize(A2, P1).total_dim() == 1);
    CHECK(realize(A2, P2).total_dim() == 2);
    CHECK(realize(A2, S2).total_dim() == 1);
    for (int n = 1; n <= 4; ++n) {
        Algebra a = Algebra::linear(n);
        for (Interval iv : a.intervals())
            CHECK(realize(a, iv).total_dim() == iv.k - iv.l);
    }
}

TEST_CASE("Hom dimensions via the oracle") {
    CHECK(hom_dim(A2, P1, P2) == 1);
    CHECK(hom_dim(A2, P1, S2) == 0);
    for (Interval x : A3.intervals()) CHECK(hom_dim(A3, x, x) == 1);

    // Hom(P_l, P_k) is nonzero exactly when l <= k
    for (int l = 1; l <= 3; ++l)
        for (int k = 1; k <= 3; ++k)
            CHECK(hom_dim(A3, projective(l), projective(k)) == (l <= k ? 1 : 0));
}

TEST_CASE("Ext^1 dimensions via the resolution cokernel") {
    CHECK(ext1_dim(A2, S2, P1) == 1);
    CHECK(ext1_dim(A2, S2, S2) == 0);
    for (Interval y : A3.intervals()) {
        CHECK(ext1_dim(A3, projective(1), y) == 0);
        CHECK(ext1_dim(A3, projective(2), y) == 0);
        CHECK(ext1_dim(A3, projective(3), y) == 0);
    }
    // thinness
    for (Interval x : A3.intervals())
        for (Interval y : A3.intervals()) {
            int e = ext1_dim(A3, x, y);
            CHECK(e >= 0);
            CHECK(e <= 1);
        }
}

TEST_CASE("kernels and cokernels of module maps") {
    Representation x = realize(A2, P2);
    ModuleMap id{x, x, {Matrix::identity(1), Matrix::identity(1)}};
    auto [k0, c0] = kernel_coker(id);
    CHECK(k0.total_dim() == 0);
    CHECK(c0.total_dim() == 0);

    Representation y = realize(A2, S2);
    ModuleMap zero{x, y, {Matrix::zero(0, 1), Matrix::zero(1, 1)}};
    auto [k1, c1] = kernel_coker(zero);
    CHECK(k1.dims == x.dims);
    CHECK(c1.dims == y.dims);

    ModuleMap f = canonical_map(A2, P2, S2);
    auto [k2, c2] = kernel_coker(f);
    CHECK(c2.total_dim() == 0);
    auto parts = decompose(A2, k2);
    REQUIRE(parts.size() == 1);
    CHECK(parts.begin()->first == P1);

    // kernels and cokernels of canonical maps always decompose into intervals
    for (Interval a : A3.intervals())
        for (Interval b : A3.intervals()) {
            if (hom_dim(A3, a, b) != 1) continue;
            auto [kk, cc] = kernel_coker(canonical_map(A3, a, b));
            CHECK_NOTHROW(decompose(A3, kk));
            CHECK_NOTHROW(decompose(A3, cc));
        }
}

TEST_CASE("pushout extensions") {
    Representation e = pushout_extension(A2, S2, P1);
    auto parts = decompose(A2, e);
    REQUIRE(parts.size() == 1);
    CHECK(parts.begin()->first == P2);

    Representation e2 = pushout_extension(A3, simple(3), simple(2));
    auto parts2 = decompose(A3, e2);
    REQUIRE(parts2.size() == 1);
    CHECK(parts2.begin()->first == Interval{1, 3});

    CHECK_THROWS_AS(pushout_extension(A2, P1, S2), std::invalid_argument);

    // the middle term has the sum of the dimension vectors
    for (Interval x : A3.intervals())
        for (Interval y : A3.intervals()) {
            if (ext1_dim(A3, x, y) == 0) continue;
            Representation mid = pushout_extension(A3, x, y);
            CHECK(mid.total_dim() == (x.k - x.l) + (y.k - y.l));
        }
}

TEST_CASE("decompose recovers direct sums") {
    auto single = decompose(A2, realize(A2, P2));
    REQUIRE(single.size() == 1);
    CHECK(single.at(P2) == 1);

    auto sum = decompose(A2, direct_sum(realize(A2, P1), realize(A2, S2)));
    CHECK(sum.size() == 2);
    CHECK(sum.at(P1) == 1);
    CHECK(sum.at(S2) == 1);

    CHECK(decompose(A2, Representation::zero(A2)).empty());
}

TEST_CASE("the oracle agrees with the closed forms (gate, n <= 4)") {
    for (int n = 1; n <= 4; ++n) {
        Algebra a = Algebra::linear(n);
        for (Interval x : a.intervals())
            for (Interval y : a.intervals()) {
                CHECK(hom_dim(a, x, y) == hom_formula(a, x, y));
                CHECK(ext1_dim(a, x, y) == ext1_formula(a, x, y));
            }
    }
}

TEST_CASE("quotient algebras: blocks, intervals and gates") {
    Algebra q{2, {{0, 1}, {1, 1}}}; // vertex 2 of A_3 removed
    CHECK(q.intervals().size() == 2);
    CHECK(hom_dim(q, {0, 1}, {1, 2}) == 0);
    CHECK(ext1_dim(q, {1, 2}, {0, 1}) == 0); // the cross-block class vanishes
    CHECK_FALSE(q.valid_interval(0, 2));
}
