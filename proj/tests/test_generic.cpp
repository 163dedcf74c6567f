// Universal-family computations over F_p[t_*].

#include <doctest.h>

#include "wildaut/generic.hpp"
#include "wildaut/rootspace.hpp"

using namespace wildaut;

TEST_SUITE_BEGIN("generic");

namespace {
UP<PDom> ppoly(const ParamRing* A, std::initializer_list<std::pair<i64, PElem>> terms) {
    UP<PDom> f = up_zero(PDom{A});
    for (auto& [k, c] : terms) up_add_term(f, k, c);
    return f;
}
}  // namespace

TEST_CASE("universal family (2,3)") {
    UniversalFamily U = universal_family(2, 3);
    REQUIRE(U.param_exps == std::vector<i64>{1});
    CHECK(U.dec.big_f.t.size() == 1);
    auto a2 = U.dec.big_f.coeff_x(2);
    CHECK(a2 == ppoly(U.A, {{1, pr_const(U.A, 1)}, {4, pr_const(U.A, 1)}}));
    GenericAd ad = generic_additive_polynomial(U);
    CHECK(ad.monic);
    CHECK(ad.ad == a2);
}

TEST_CASE("universal family (3,4): Ad = Y^9 + 2 t2^3 Y^3 + Y") {
    UniversalFamily U = universal_family(3, 4);
    REQUIRE(U.param_exps == (std::vector<i64>{1, 2}));
    PElem t2 = pr_var(U.A, 1);
    UP<PDom> expect = ppoly(U.A, {{9, pr_const(U.A, 1)},
                                  {3, pr_scale(pr_pow_p(t2, 1), 2)},
                                  {1, pr_const(U.A, 1)}});
    CHECK(U.dec.big_f.coeff_x(3) == expect);
    GenericAd ad = generic_additive_polynomial(U);
    CHECK(ad.monic);
    CHECK(ad.ad == expect);
}

TEST_CASE("universal family (2,5): the Y^2 coefficient is t3^2") {
    UniversalFamily U = universal_family(2, 5);
    REQUIRE(U.param_exps == (std::vector<i64>{1, 3}));
    PElem t3 = pr_var(U.A, 1);
    GenericAd ad = generic_additive_polynomial(U);
    CHECK(ad.monic);
    UP<PDom> expect = ppoly(U.A, {{16, pr_const(U.A, 1)},
                                  {8, pr_pow_p(t3, 2)},
                                  {2, pr_pow_p(t3, 1)},
                                  {1, pr_const(U.A, 1)}});
    CHECK(ad.ad == expect);
}

TEST_CASE("(2,5) oracle arbitration at a discriminating specialization") {
    UniversalFamily U = universal_family(2, 5);
    GenericAd ad = generic_additive_polynomial(U);
    const Field* F4 = Field::get(2, 2);
    FElem w = F4->gen();
    // t1 = 0, t3 = w: the candidates Y^16+w^4Y^8+cY^2+Y differ at c = w vs w^2
    SpecializeResult sp = specialize(U, ad, {F4->zero(), w});
    CHECK(sp.equal);
    // brute-force root sweep across the splitting field distinguishes them
    const Field* B = sp.analysis.big;
    UP<FDom> cand_sq = up_zero(FDom{B});
    up_add_term(cand_sq, 16, B->one());
    up_add_term(cand_sq, 8, embed(F4->pow(w, 4), B));
    up_add_term(cand_sq, 2, embed(F4->mul(w, w), B));
    up_add_term(cand_sq, 1, B->one());
    UP<FDom> cand_lin = up_zero(FDom{B});
    up_add_term(cand_lin, 16, B->one());
    up_add_term(cand_lin, 8, embed(F4->pow(w, 4), B));
    up_add_term(cand_lin, 2, embed(w, B));
    up_add_term(cand_lin, 1, B->one());
    UP<FDom> phif = up_zero(FDom{B});
    up_add_term(phif, 3, embed(w, B));
    up_add_term(phif, 5, B->one());
    u64 sq_ok = 0, lin_ok = 0, members = 0;
    for (u64 i = 0; i < B->size_fits(); ++i) {
        FElem y = B->element_at(i);
        bool oracle = root_oracle(phif, y);
        if (oracle) ++members;
        if (oracle == up_eval(cand_sq, y).is_zero()) ++sq_ok;
        if (oracle == up_eval(cand_lin, y).is_zero()) ++lin_ok;
    }
    CHECK(members == 16);
    CHECK(sq_ok == B->size_fits());   // the t3^2 candidate matches the oracle everywhere
    CHECK(lin_ok < B->size_fits());   // the printed t3 variant does not
}

TEST_CASE("generic Ad collapses to Y outside the exceptional conductors") {
    for (auto [p, m] : std::vector<std::pair<fp_t, i64>>{{2, 7}, {3, 7}, {5, 6}}) {
        UniversalFamily U = universal_family(p, m);
        GenericAd ad = generic_additive_polynomial(U);
        CHECK(ad.monic);
        CHECK(ad.ad.deg() == 1);
        CHECK(ad.ad == ppoly(U.A, {{1, pr_const(U.A, 1)}}));
    }
}

TEST_CASE("lemma checks fire for (3,7)") {
    UniversalFamily U = universal_family(3, 7);
    bool saw = false;
    for (auto& c : U.checks) saw = saw || c.find("a_{j0}") != std::string::npos;
    CHECK(saw);
    // a_{j0} with j0 = 1+(l-1)p^s for m-1 = 2*3: leading term 2 Y^3
    auto aj0 = U.dec.big_f.coeff_x(4);
    CHECK(aj0.deg() == 3);
    CHECK(aj0.lc() == pr_const(U.A, 2));
    // tail: + 2 t_{j0+1} Y
    CHECK(aj0.coeff(1) == pr_scale(pr_var(U.A, 3), 2));  // t5 is the 4th parameter (1,2,4,5)
}

TEST_CASE("specializations: equality and flagged degeneration") {
    const Field* F3 = Field::get(3, 1);
    UniversalFamily U34 = universal_family(3, 4);
    GenericAd ad34 = generic_additive_polynomial(U34);
    SpecializeResult sp = specialize(U34, ad34, {F3->zero(), F3->zero()});
    CHECK(sp.equal);
    CHECK(!sp.degenerated);
    UP<FDom> expect = up_zero(FDom{F3});
    up_add_term(expect, 9, F3->one());
    up_add_term(expect, 1, F3->one());
    CHECK(sp.analysis.ad == expect);

    // (2,9) at the zero specialization degenerates: X^9 has Ad = Y + Y^64
    const Field* F2 = Field::get(2, 1);
    UniversalFamily U29 = universal_family(2, 9);
    GenericAd ad29 = generic_additive_polynomial(U29);
    CHECK(ad29.ad.deg() == 1);
    std::vector<FElem> zeros(U29.param_exps.size(), F2->zero());
    SpecializeResult sp29 = specialize(U29, ad29, zeros);
    CHECK(!sp29.equal);
    CHECK(sp29.degenerated);
    CHECK(sp29.analysis.ad.deg() == 64);
}

TEST_CASE("symbolic linearized family matches its closed form") {
    for (auto [p, n] : std::vector<std::pair<fp_t, unsigned>>{{3, 1}, {3, 2}, {2, 3}, {5, 1}}) {
        LinearizedSymbolic ls = linearized_family_symbolic(p, n);
        CHECK(ls.computed == ls.closed_form);
    }
}

TEST_SUITE_END();
