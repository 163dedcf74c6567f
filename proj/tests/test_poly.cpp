// Sparse polynomial arithmetic: substitution, gcd, distinct-degree profiles.

#include <doctest.h>

#include <numeric>

#include "wildaut/poly.hpp"

using namespace wildaut;

namespace {
UP<FDom> poly_of(const Field* K, std::initializer_list<std::pair<i64, i64>> terms) {
    UP<FDom> f = up_zero(FDom{K});
    for (auto& [k, c] : terms) up_add_term(f, k, K->from_int(c));
    return f;
}
}  // namespace

TEST_SUITE_BEGIN("poly");

TEST_CASE("binomials mod p follow Lucas") {
    CHECK(binom_mod_p(5, 1, 2) == 1);
    CHECK(binom_mod_p(5, 2, 2) == 0);
    CHECK(binom_mod_p(5, 4, 2) == 1);
    CHECK(binom_mod_p(4, 2, 3) == 0);
    CHECK(binom_mod_p(7, 3, 2) == 1);
}

TEST_CASE("substitution X -> X+Y") {
    const Field* F2 = Field::get(2, 1);
    auto f3 = poly_of(F2, {{3, 1}});
    BP<FDom> s = bp_subst_x_plus_y(f3);
    // X^3 + X^2 Y + X Y^2 + Y^3
    CHECK(s.coeff_x(3) == poly_of(F2, {{0, 1}}));
    CHECK(s.coeff_x(2) == poly_of(F2, {{1, 1}}));
    CHECK(s.coeff_x(1) == poly_of(F2, {{2, 1}}));
    CHECK(s.coeff_x(0) == poly_of(F2, {{3, 1}}));

    auto f5 = poly_of(F2, {{5, 1}});
    BP<FDom> s5 = bp_subst_x_plus_y(f5);
    CHECK(s5.coeff_x(4) == poly_of(F2, {{1, 1}}));
    CHECK(s5.coeff_x(3).is_zero());
    CHECK(s5.coeff_x(2).is_zero());
    CHECK(s5.coeff_x(1) == poly_of(F2, {{4, 1}}));
}

TEST_CASE("composition") {
    const Field* F2 = Field::get(2, 1);
    auto s = poly_of(F2, {{1, 1}, {2, 1}});
    auto f = poly_of(F2, {{3, 1}});
    CHECK(up_compose(f, s) == up_pow(s, 3));
}

TEST_CASE("gcd over F_2 reproduces the reference computation") {
    const Field* F2 = Field::get(2, 1);
    auto a = poly_of(F2, {{4, 1}, {1, 1}});
    auto b = poly_of(F2, {{3, 1}, {2, 1}, {1, 1}});
    CHECK(up_gcd(a, b) == b);
    // gcd with zero is the monic normalization
    const Field* F3 = Field::get(3, 1);
    auto c = poly_of(F3, {{2, 2}, {0, 1}});
    CHECK(up_gcd(c, up_zero(FDom{F3})) == up_monic(c));
}

TEST_CASE("distinct-degree profile of Y^4+Y over F_2") {
    const Field* F2 = Field::get(2, 1);
    auto u = poly_of(F2, {{4, 1}, {1, 1}});
    auto parts = distinct_degree_profile(u);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0] == std::pair<i64, i64>{1, 2});
    CHECK(parts[1] == std::pair<i64, i64>{2, 2});
}

TEST_CASE("profile of an irreducible quadratic") {
    const Field* F2 = Field::get(2, 1);
    auto u = poly_of(F2, {{2, 1}, {1, 1}, {0, 1}});
    auto parts = distinct_degree_profile(u);
    REQUIRE(parts.size() == 1);
    CHECK(parts[0] == std::pair<i64, i64>{2, 2});
}

TEST_CASE("factor degrees of Y^10+Y^5+1 over F_2 divide 4") {
    const Field* F2 = Field::get(2, 1);
    auto u = poly_of(F2, {{10, 1}, {5, 1}, {0, 1}});
    auto parts = distinct_degree_profile(u);
    i64 total = 0;
    for (auto& [d, t] : parts) {
        CHECK(4 % d == 0);
        total += t;
    }
    CHECK(total == 10);
}

TEST_CASE("profile rejects non-squarefree input") {
    const Field* F2 = Field::get(2, 1);
    auto u = poly_of(F2, {{2, 1}});  // Y^2
    CHECK_THROWS_AS((void)distinct_degree_profile(u), Error);
}

TEST_CASE("divrem over an extension field") {
    const Field* F4 = Field::get(2, 2);
    FDom D{F4};
    UP<FDom> a = up_zero(D);
    up_add_term(a, 3, F4->gen());
    up_add_term(a, 1, F4->one());
    UP<FDom> b = up_zero(D);
    up_add_term(b, 1, F4->gen());
    auto [q, r] = up_divrem(a, b);
    CHECK(up_add(up_mul(q, b), r) == a);
    CHECK(r.deg() < b.deg());
}

TEST_CASE("printing canonical text") {
    const Field* F3 = Field::get(3, 1);
    auto f = poly_of(F3, {{7, 2}, {5, 1}});
    CHECK(up_print(f, "X") == "2*X^7+X^5");
    const Field* F4 = Field::get(2, 2);
    UP<FDom> g = up_zero(FDom{F4});
    up_add_term(g, 3, F4->gen());
    up_add_term(g, 5, F4->one());
    CHECK(up_print(g, "X") == "X^5+(w)*X^3");
}

TEST_SUITE_END();
