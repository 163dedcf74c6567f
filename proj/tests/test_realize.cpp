// Realization constructions and their classified outcomes.

#include <doctest.h>

#include "wildaut/realize.hpp"

using namespace wildaut;

namespace {
UP<FDom> poly_of(const Field* K, std::initializer_list<std::pair<i64, i64>> terms) {
    UP<FDom> f = up_zero(FDom{K});
    for (auto& [k, c] : terms) up_add_term(f, k, K->from_int(c));
    return f;
}
}  // namespace

TEST_SUITE_BEGIN("realize");

TEST_CASE("linearized family basics") {
    const Field* F3 = Field::get(3, 1);
    Realization r = realize_linearized(3, 1, {F3->zero()});
    CHECK(r.f == poly_of(F3, {{4, 1}}));
    CHECK(r.expected_ad == poly_of(F3, {{9, 1}, {1, 1}}));
    CoverAnalysis A = analyze(r.f);
    CHECK(A.ad == r.expected_ad);
    CHECK(A.group.order() == 27);
    CHECK(A.prof.label.text == "extraspecial(27, I) [E(27)]");

    const Field* F2 = Field::get(2, 1);
    Realization q8 = realize_linearized(2, 1, {F2->zero()});
    CHECK(q8.f == poly_of(F2, {{3, 1}}));
    Realization r22 = realize_linearized(2, 2, {F2->zero(), F2->zero()});
    CHECK(r22.f == poly_of(F2, {{5, 1}}));
    CoverAnalysis A22 = analyze(r22.f);
    CHECK(A22.group.order() == 32);
    CHECK(A22.prof.label.text == "extraspecial(32, III.b)");
    // 2^{2n} - 2^n elements of order <= 2
    u64 low = 0;
    for (auto& [o, c] : A22.prof.order_stats)
        if (o <= 2) low += c;
    CHECK(low == (1u << 4) - (1u << 2));

    CHECK_THROWS_AS((void)realize_linearized(2, 1, {F2->one()}), Error);
}

TEST_CASE("linearized family with nonzero parameters matches the closed form") {
    const Field* F3 = Field::get(3, 1);
    Realization r = realize_linearized(3, 2, {F3->one(), F3->from_int(2)});
    CoverAnalysis A = analyze(r.f);
    CHECK(A.ad == r.expected_ad);
    CHECK(A.group.order() == 3uL * 3 * 3 * 3 * 3);
    CHECK(A.prof.label.kind == GKind::extraspecial);
    CHECK(A.prof.label.es_type == EsType::I);
    const Field* F4 = Field::get(2, 2);
    Realization r2 = realize_linearized(2, 2, {F4->zero(), F4->gen()});
    CoverAnalysis A2 = analyze(r2.f);
    CHECK(A2.ad == r2.expected_ad);
    CHECK(A2.prof.label.es_type == EsType::IIIb);
}

TEST_CASE("Witt cocycle for p=3") {
    BP<FDom> c = witt_cocycle(3);
    const Field* F3 = Field::get(3, 1);
    CHECK(c.coeff_x(1) == poly_of(F3, {{2, 1}}));
    CHECK(c.coeff_x(2) == poly_of(F3, {{1, 1}}));
    CHECK(c.t.size() == 2);
    CHECK_THROWS_AS((void)witt_cocycle(2), Error);
}

TEST_CASE("p^2-cyclic realization") {
    Realization r3 = realize_cyclic_p2(3);
    const Field* F3 = Field::get(3, 1);
    CHECK(r3.f == poly_of(F3, {{5, 1}, {7, 2}}));
    CoverAnalysis A = analyze(r3.f);
    CHECK(A.ad == poly_of(F3, {{3, 1}, {1, 2}}));
    CHECK(A.prof.label.text == "abelian_p2(rank 1) [Z/9]");
    CHECK(A.prof.exponent == 9);
    // sigma_y^p = rho^y on F_3
    CHECK(power_constant_op(A, A.big->one()) == 1);
    CHECK(power_constant_op(A, A.big->from_int(2)) == 2);

    Realization r5 = realize_cyclic_p2(5);
    const Field* F5 = Field::get(5, 1);
    CHECK(r5.f == poly_of(F5, {{9, 1}, {13, 3}, {17, 2}, {21, 4}}));
    CoverAnalysis A5 = analyze(r5.f);
    CHECK(A5.ad == poly_of(F5, {{5, 1}, {1, 4}}));
    CHECK(A5.prof.label.text == "abelian_p2(rank 1) [Z/25]");
}

TEST_CASE("type II realization at (3,1)") {
    Realization r = realize_type_II(3, 1);
    CHECK(r.field->e == 4);
    CoverAnalysis A = analyze(r.f);
    CHECK(A.m == 19);
    CHECK(A.genus == 18);
    CHECK(A.group.order() == 27);
    CHECK(A.prof.exponent == 9);
    CHECK(A.prof.center_order == 3);
    CHECK(A.prof.label.text == "extraspecial(27, II) [M(27)]");
    // ratio |G|/g = 2p/(p-1)^2 exactly
    CHECK(A.group.order() * (3 - 1) * (3 - 1) == 2uL * 3 * A.genus);
}

TEST_CASE("type II S-identity also holds at (5,1)") {
    Realization r = realize_type_II(5, 1);  // construction asserts S^p - S identity
    CHECK(r.field->e == 4);
    CHECK(r.f.deg() == 9 * 5 * 5 - 9 * 5 + 9);  // deg f_1(S) = (p^2-p+1) q
}

TEST_CASE("type II family (Remark construction) at (3,1)") {
    const Field* F3 = Field::get(3, 1);
    Realization r = realize_type_II_family(3, 1, {F3->one()});
    CoverAnalysis A = analyze(r.f);
    CHECK(A.group.order() == 27);
    CHECK(A.prof.exponent == 9);
    CHECK(A.prof.center_order == 3);
}

TEST_CASE("saturated realization for p=3: a line inside E(27)") {
    // S_F = product of (Y - v) over a 1-dim subspace of Z(Y^9 + Y)
    const Field* F3 = Field::get(3, 1);
    UP<FDom> full = poly_of(F3, {{9, 1}, {1, 1}});
    RootSpace rs = root_basis(full);
    REQUIRE(rs.r == 2);
    const Field* K = rs.big;
    FElem w = rs.basis[0];
    UP<FDom> sf = up_mono(FDom{K}, 0, K->one());
    for (fp_t c = 0; c < 3; ++c) {
        UP<FDom> lin = up_zero(FDom{K});
        up_add_term(lin, 1, K->one());
        up_add_term(lin, 0, K->neg(K->mul(w, K->from_int(c))));
        sf = up_mul(sf, lin);
    }
    auto sat = realize_saturated(3, 1, sf, SaturatedBase::type_I);
    CHECK(sat.analysis.ad == up_embed(sf, sat.analysis.base));
    CHECK(sat.analysis.group.order() == 9);
    CHECK(sat.analysis.prof.label.kind == GKind::elementary_abelian);
    CHECK(sat.analysis.prof.label.rank == 2);
}

TEST_CASE("saturated realization rejects the full space") {
    const Field* F2 = Field::get(2, 1);
    UP<FDom> full = poly_of(F2, {{16, 1}, {1, 1}});
    CHECK_THROWS_AS((void)realize_saturated(2, 2, full, SaturatedBase::type_IIIb), Error);
}

TEST_CASE("conductor-25 family hits all four groups") {
    struct Expect {
        D8Case c;
        const char* label;
    } cases[] = {
        {D8Case::case1, "abelian_p2(rank 2) [Z/2 x Z/4]"},
        {D8Case::case2i, "elementary_abelian(rank 3) [(Z/2)^3]"},
        {D8Case::case2ii, "extraspecial(8, III.a) [D8]"},
        {D8Case::case2iii, "extraspecial(8, III.b) [Q8]"},
    };
    for (auto& [c, label] : cases) {
        Realization r = realize_D8_family(c);
        CoverAnalysis A = analyze(r.f);
        CHECK(A.m == 25);
        CHECK(A.genus == 12);
        CHECK(A.ad == r.expected_ad);
        CHECK(A.prof.label.text == label);
    }
}

TEST_CASE("classic reduced D8 example") {
    Realization r = classic_D8_example();
    CHECK(r.f.deg() == 41);
    CHECK(artin_schreier_reduce(r.f).red == r.f);
}

TEST_SUITE_END();
