#include <doctest.h>

#include "typea/recollement.hpp"

using namespace typea;

namespace {
const Algebra A2 = Algebra::linear(2);
const Algebra A3 = Algebra::linear(3);

const IndecObject P1{0, 1, 0};
const IndecObject P2{0, 2, 0};
const IndecObject S2{1, 2, 0};

Aisle with_extras(const Algebra& a, int tail, std::vector<IndecObject> extras) {
    Aisle s = Aisle::standard(a, tail);
    s.extras = std::move(extras);
    return canonicalize(a, s);
}

Aisle generated_by(const Algebra& a, std::vector<IndecObject> gens) {
    Aisle s = Aisle::zero(a);
    s.extras = std::move(gens);
    return canonicalize(a, s);
}
} // namespace

TEST_CASE("idempotent recollements") {
    Recollement r1 = make_idempotent_recollement(A2, 1);
    CHECK(r1.ker_jstar == std::vector<Interval>{{1, 2}});
    Recollement r2 = make_idempotent_recollement(A2, 2);
    CHECK(r2.ker_jstar == std::vector<Interval>{{0, 1}});

    Recollement r = make_idempotent_recollement(A3, 2);
    REQUIRE(r.quotient);
    CHECK(r.quotient->algebra.blocks ==
          std::vector<Block>{{0, 1}, {1, 1}});
}

TEST_CASE("exceptional recollements") {
    // the projective generator reproduces the idempotent data
    Recollement viaP = make_exceptional_recollement(A2, P1);
    CHECK(viaP.idempotent);
    CHECK(viaP.r == 1);

    // the perpendicular of S_2 consists of the shifts of P_2
    Recollement viaS = make_exceptional_recollement(A2, S2);
    CHECK_FALSE(viaS.idempotent);
    CHECK(viaS.ker_jstar == std::vector<Interval>{{0, 2}});

    // shifted generators are fine
    CHECK_NOTHROW(make_exceptional_recollement(A3, IndecObject{1, 3, -2}));
}

TEST_CASE("j_! j^*") {
    Recollement r1 = make_idempotent_recollement(A2, 1);
    Recollement r2 = make_idempotent_recollement(A2, 2);
    CHECK(j_bang_j_star(r1, DObject::of(P2)) == DObject::of(P1));
    CHECK(j_bang_j_star(r2, DObject::of(P1)) == DObject{});
    CHECK(j_bang_j_star(r1, DObject{}) == DObject{});

    // closed idempotent form == generic evaluation on every object, n <= 4
    for (int n = 2; n <= 4; ++n) {
        Algebra a = Algebra::linear(n);
        for (int r = 1; r <= n; ++r) {
            Recollement rec = make_idempotent_recollement(a, r);
            for (Interval iv : a.intervals())
                for (int d = -1; d <= 1; ++d) {
                    DObject z = DObject::of({iv.l, iv.k, d});
                    DObject expect =
                        (iv.l < r && r <= iv.k)
                            ? DObject::of({0, r, d})
                            : DObject{};
                    CHECK(j_bang_j_star(rec, z) == expect);
                }
        }
    }
}

TEST_CASE("i^* in quotient coordinates") {
    Recollement r1 = make_idempotent_recollement(A2, 1);
    Recollement r2 = make_idempotent_recollement(A2, 2);

    // objects of Im i_* come back unchanged (in quotient coordinates)
    CHECK(i_upper_star(r2, DObject::of(P1)) == DObject::of(P1));
    // A_2, r=2: i^* S_2 = P_1[1]
    CHECK(i_upper_star(r2, DObject::of(S2)) == DObject::of(shift(P1, 1)));
    // z in Im j_!: i^* vanishes
    CHECK(i_upper_star(r1, DObject::of(P1)) == DObject{});
}

TEST_CASE("i^! by adjoint search") {
    Recollement r2 = make_idempotent_recollement(A2, 2);
    CHECK(i_shriek(r2, DObject::of(P1)) == DObject::of(P1)); // full embedding
    CHECK(i_shriek(r2, DObject::of(S2)) == DObject{});       // S_2 = j_* K here

    // i^! j_* = 0: probe with the coinduced objects I_r[m]
    for (int n = 2; n <= 3; ++n) {
        Algebra a = Algebra::linear(n);
        for (int r = 1; r <= n; ++r) {
            Recollement rec = make_idempotent_recollement(a, r);
            Interval ir = injective_at(a, r);
            for (int m = -1; m <= 1; ++m)
                CHECK(i_shriek(rec, DObject::of(shifted(ir, m))) == DObject{});
        }
    }

    // cross-check against the canonical triangle: i_* i^! z = cone(z -> j_* j^* z)[-1]
    for (int r = 1; r <= 2; ++r) {
        Recollement rec = make_idempotent_recollement(A2, r);
        for (Interval iv : A2.intervals()) {
            DObject z = DObject::of(shifted(iv, 0));
            DObject w = i_shriek(rec, z);
            DObject expect;
            if (iv.l < r && r <= iv.k) {
                // z -> I_r: kernel (l, r-1) survives shifted, cokernel (k, n) drops
                if (iv.k < A2.n) expect = expect.plus(DObject::of({iv.k, A2.n, -1}));
                if (iv.l < r - 1) expect = expect.plus(DObject::of({iv.l, r - 1, 0}));
            } else {
                expect = z;
            }
            CHECK(w == expect);
        }
    }
}

TEST_CASE("compatibility of aisles with recollements") {
    Recollement r1 = make_idempotent_recollement(A2, 1);
    Recollement r2 = make_idempotent_recollement(A2, 2);

    for (int t = -1; t <= 1; ++t) {
        TStructure std_t{Aisle::standard(A2, t)};
        CHECK(is_compatible(r1, std_t));
        CHECK(is_compatible(r2, std_t));
    }

    TStructure type4{generated_by(A2, {S2})};
    CHECK(is_compatible(r1, type4));
    CHECK_FALSE(is_compatible(r2, type4));

    TStructure type5{generated_by(A2, {P2})};
    CHECK_FALSE(is_compatible(r1, type5));
    CHECK(is_compatible(r2, type5));

    TStructure type8{with_extras(A2, -1, {P2, S2})};
    CHECK_FALSE(is_compatible(r1, type8));
    CHECK(is_compatible(r2, type8));

    TStructure type7{with_extras(A2, -1, {S2})};
    CHECK(is_compatible(r1, type7));
    CHECK_FALSE(is_compatible(r2, type7));
}

TEST_CASE("induction formulas on A_2") {
    Recollement r1 = make_idempotent_recollement(A2, 1);
    Algebra q = r1.quotient->algebra;

    // (1; 0, 0): the standard aisle
    TStructure std0 = induce(r1, {ExtInt::fin(0), Aisle::standard(q, 0)});
    CHECK(std0.aisle == Aisle::standard(A2, 0));

    // (1; 0, -inf): only shifts of P_1
    TStructure p1only = induce(r1, {ExtInt::fin(0), Aisle::zero(q)});
    CHECK(p1only.aisle == generated_by(A2, {P1}));

    // (1; -inf, 0): only shifts of S_2
    TStructure s2only = induce(r1, {ExtInt::neg_inf(), Aisle::standard(q, 0)});
    CHECK(s2only.aisle == generated_by(A2, {S2}));

    // unrepresentable: every shift of P_1 at once
    CHECK_THROWS_AS(induce(r1, {ExtInt::pos_inf(), Aisle::zero(q)}), WindowError);
}

TEST_CASE("restriction of the standard t-structure") {
    for (int n = 2; n <= 3; ++n) {
        Algebra a = Algebra::linear(n);
        for (int r = 1; r <= n; ++r) {
            Recollement rec = make_idempotent_recollement(a, r);
            FactorTStructure f = restrict_t(rec, TStructure{Aisle::standard(a, 0)});
            CHECK(f.corner == ExtInt::fin(0));
            CHECK(f.quotient == Aisle::standard(rec.quotient->algebra, 0));
        }
    }
    Recollement r1 = make_idempotent_recollement(A2, 1);
    CHECK_THROWS_AS(restrict_t(r1, TStructure{generated_by(A2, {P2})}), CheckError);
}

TEST_CASE("the three-case idempotent choice") {
    // S empty: any vertex works, n is returned
    auto c0 = find_compatible_idempotent(A2, TStructure{Aisle::standard(A2, 4)});
    CHECK(c0.r == 2);
    CHECK(c0.case_tag == "0");

    // S = {S_2}: case (1), second branch
    auto c1 = find_compatible_idempotent(A2, TStructure{with_extras(A2, -1, {S2})});
    CHECK(c1.r == 1);
    CHECK(c1.case_tag == "1b");

    // S = {P_2, S_2}: case (2) with no violating slice
    auto c2 =
        find_compatible_idempotent(A2, TStructure{with_extras(A2, -1, {P2, S2})});
    CHECK(c2.r == 2);
    CHECK(c2.case_tag == "2a");

    // a case (3) instance on A_3: S = {P_1, S_3} has m_0 = 3, m_1 = 0 and
    // P_3 missing, so r = p_0 + 1 = 2
    Aisle a3 = with_extras(A3, -1, {{0, 1, 0}, {2, 3, 0}});
    REQUIRE(validate_tstructure(A3, TStructure{a3}, {-2, 2}).ok);
    auto c3 = find_compatible_idempotent(A3, TStructure{a3});
    CHECK(c3.case_tag == "3");
    CHECK(c3.r == 2);
    CHECK(is_compatible(make_idempotent_recollement(A3, c3.r), TStructure{a3}));
}

TEST_CASE("twisting recollements") {
    Recollement r1 = make_idempotent_recollement(A2, 1);
    Recollement same = twist_recollement(A2, {0, 0}, r1);
    CHECK(same.idempotent);
    CHECK(same.r == 1);

    Recollement moved = twist_recollement(A2, {0, 1}, r1);
    CHECK(moved.generator == shift(P1, 1));

    // tau carries the S_2-generated recollement to R_1
    Recollement viaS = make_exceptional_recollement(A2, S2);
    Recollement tw = twist_recollement(A2, {1, 0}, viaS);
    CHECK(tw.idempotent);
    CHECK(tw.r == 1);
}

TEST_CASE("simples of an induced heart") {
    // standard factors reassemble the standard simples
    for (int n = 2; n <= 3; ++n) {
        Algebra a = Algebra::linear(n);
        for (int r = 1; r <= n; ++r) {
            Recollement rec = make_idempotent_recollement(a, r);
            std::vector<IndecObject> simples = simples_of_induced_heart(
                rec, {ExtInt::fin(0), Aisle::standard(rec.quotient->algebra, 0)});
            std::vector<IndecObject> expect;
            for (int i = 1; i <= n; ++i) expect.push_back(shifted(simple(i), 0));
            CHECK(simples == expect);
        }
    }

    // A_2, R_1, quotient shifted one step up: simples are S_2[1] and the
    // intermediate extension of the degree-zero corner simple
    Recollement r1 = make_idempotent_recollement(A2, 1);
    Algebra q = r1.quotient->algebra;
    std::vector<IndecObject> s =
        simples_of_induced_heart(r1, {ExtInt::fin(0), aisle_shift(q, Aisle::standard(q, 0), 1)});
    REQUIRE(s.size() == 2);
    CHECK(s[1] == shift(S2, 1));
    CHECK(s[0].d == 0);
}

TEST_CASE("pivots") {
    CHECK(smc_pivot(A2, {P1, S2}) == 0);
    CHECK(smc_pivot(A2, {P1, shift(S2, 1)}) == 0);
    CHECK(smc_pivot(Algebra::linear(1), {IndecObject{0, 1, 0}}) == 0);

    CHECK(pivot_to_projective(A2, P2) == std::pair<int, int>{0, 2});
    CHECK(pivot_to_projective(A2, S2) == std::pair<int, int>{1, 1});
    for (Interval iv : A3.intervals()) {
        auto [s, r] = pivot_to_projective(A3, shifted(iv, 0));
        IndecObject moved = apply_autoeq(A3, {s, 0}, shifted(iv, 0));
        CHECK(moved.l == 0);
        CHECK(moved.k == r);
    }

    // the pivot member and iterated tau give a compatible idempotent
    for (const Smc& smc : enumerate_smc(A2, {-1, 0})) {
        int p = smc_pivot(A2, smc);
        auto [steps, r] = pivot_to_projective(A2, smc[p]);
        TStructure t = aisle_from_smc(A2, smc);
        Aisle moved = t.aisle;
        for (int i = 0; i < steps; ++i) moved = aisle_tau(A2, moved);
        CHECK(is_compatible(make_idempotent_recollement(A2, r), TStructure{moved}));
    }
}
