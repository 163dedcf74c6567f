// Splitting fields, kernel bases and the decomposition-independent oracle.

#include <doctest.h>

#include <set>

#include "wildaut/rootspace.hpp"

using namespace wildaut;

namespace {
UP<FDom> poly_of(const Field* K, std::initializer_list<std::pair<i64, i64>> terms) {
    UP<FDom> f = up_zero(FDom{K});
    for (auto& [k, c] : terms) up_add_term(f, k, K->from_int(c));
    return f;
}
}  // namespace

TEST_SUITE_BEGIN("rootspace");

TEST_CASE("splitting extension degrees") {
    const Field* F2 = Field::get(2, 1);
    CHECK(splitting_extension(poly_of(F2, {{1, 1}})) == 1);
    CHECK(splitting_extension(poly_of(F2, {{4, 1}, {1, 1}})) == 2);

    // Y^4 + a Y^2 + b Y over F_16 with a = b^4, b a primitive 15th root of 1
    const Field* F16 = Field::get(2, 4);
    FElem b = F16->zero();
    for (u64 i = 2; i < 16; ++i) {
        FElem cand = F16->element_at(i);
        FElem p5 = F16->pow(cand, 5);
        FElem p3 = F16->pow(cand, 3);
        if (p5 != F16->one() && p3 != F16->one() && F16->pow(cand, 15) == F16->one()) {
            b = cand;
            break;
        }
    }
    REQUIRE(!b.is_zero());
    FElem a = F16->pow(b, 4);
    UP<FDom> sf = up_zero(FDom{F16});
    up_add_term(sf, 4, F16->one());
    up_add_term(sf, 2, a);
    up_add_term(sf, 1, b);
    CHECK(splitting_extension(sf) == 1);
}

TEST_CASE("root basis of Y^4+Y over F_2 is F_4") {
    const Field* F2 = Field::get(2, 1);
    RootSpace rs = root_basis(poly_of(F2, {{4, 1}, {1, 1}}));
    CHECK(rs.M == 2);
    CHECK(rs.r == 2);
    CHECK(rs.count() == 4);
    // the roots exhaust F_4 and are closed under addition
    std::set<std::vector<fp_t>> roots;
    for (auto& y : rs.roots) roots.insert(y.c);
    CHECK(roots.size() == 4);
    for (auto& y : rs.roots)
        for (auto& z : rs.roots) CHECK(roots.count(rs.big->add(y, z).c) == 1);
}

TEST_CASE("root basis of Y over F_p is trivial") {
    const Field* F5 = Field::get(5, 1);
    RootSpace rs = root_basis(poly_of(F5, {{1, 1}}));
    CHECK(rs.r == 0);
    CHECK(rs.count() == 1);
    CHECK(rs.roots[0].is_zero());
}

TEST_CASE("root basis of Y^16+Y^8+Y^2+Y over F_2 attains dimension 4") {
    const Field* F2 = Field::get(2, 1);
    auto ad = poly_of(F2, {{16, 1}, {8, 1}, {2, 1}, {1, 1}});
    RootSpace rs = root_basis(ad);
    CHECK(rs.r == 4);  // |G| = 2 * 16 = p(m-1)^2 for m = 5
    // cross-check by exhaustive search in the splitting field
    const Field* K = rs.big;
    UP<FDom> adK = up_embed(ad, K);
    u64 found = 0;
    for (u64 i = 0; i < K->size_fits(); ++i) {
        FElem y = K->element_at(i);
        if (up_eval(adK, y).is_zero()) {
            ++found;
            CHECK(rs.contains(y));
        }
    }
    CHECK(found == 16);
}

TEST_CASE("oracle membership for X^3 over F_2") {
    const Field* F2 = Field::get(2, 1);
    auto f = poly_of(F2, {{3, 1}});
    CHECK(root_oracle(f, F2->zero()));
    const Field* F4 = Field::get(2, 2);
    CHECK(root_oracle(f, F4->gen()));
    CHECK(root_oracle(f, F4->one()));
    // F_8 holds no roots beyond the prime field: Z(Y^4+Y) = F_4 and F_8 cap F_4 = F_2
    const Field* F8 = Field::get(2, 3);
    CHECK(root_oracle(f, F8->one()));
    for (u64 i = 2; i < 8; ++i) {
        FElem y = F8->element_at(i);
        CHECK(!root_oracle(f, y));
    }
}

TEST_SUITE_END();
