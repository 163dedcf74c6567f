// Parameter-ring arithmetic: multivariate gcd, exact division, specialization.

#include <doctest.h>

#include "wildaut/poly.hpp"

using namespace wildaut;

TEST_SUITE_BEGIN("param");

TEST_CASE("basic ring operations") {
    const ParamRing* R = ParamRing::get(3, {"t"});
    PElem t = pr_var(R, 0);
    PElem two = pr_const(R, 2);
    PElem s = pr_add(pr_mul(t, t), pr_mul(two, t));  // t^2 + 2t
    CHECK(pr_print(s) == "t^2+2*t");
    CHECK(pr_sub(s, s).is_zero());
    PElem cube = pr_pow_p(t, 1);
    CHECK(pr_print(cube) == "t^3");
}

TEST_CASE("p-th root") {
    const ParamRing* R = ParamRing::get(2, {"a", "b"});
    PElem sq = pr_mul(pr_mul(pr_var(R, 0), pr_var(R, 0)),
                      pr_mul(pr_mul(pr_var(R, 1), pr_var(R, 1)),
                             pr_mul(pr_var(R, 1), pr_var(R, 1))));  // a^2 b^4
    auto r = pr_p_root(sq);
    REQUIRE(r.has_value());
    CHECK(pr_print(*r) == "a*b^2");
    CHECK(!pr_p_root(pr_var(R, 0)).has_value());
}

TEST_CASE("multivariate gcd with content extraction") {
    const ParamRing* R = ParamRing::get(3, {"t", "u"});
    PElem t = pr_var(R, 0), u = pr_var(R, 1);
    PElem common = pr_add(pr_mul(t, u), pr_const(R, 1));  // tu + 1
    PElem a = pr_mul(common, pr_mul(t, t));
    PElem b = pr_mul(common, pr_add(u, pr_const(R, 2)));
    PElem g = pr_gcd(a, b);
    CHECK(g == common);
    CHECK(pr_divexact(a, g) == pr_mul(t, t));
}

TEST_CASE("gcd(tY^2+Y, t^2 Y^3) over F_3[t] is Y") {
    const ParamRing* R = ParamRing::get(3, {"t"});
    PDom D{R};
    PElem t = pr_var(R, 0);
    UP<PDom> a = up_zero(D);
    up_add_term(a, 2, t);
    up_add_term(a, 1, pr_const(R, 1));
    UP<PDom> b = up_mono(D, 3, pr_mul(t, t));
    UP<PDom> g = up_gcd_param(a, b);
    UP<PDom> y = up_mono(D, 1, pr_const(R, 1));
    CHECK(g == y);

    // cross-check by specialization at three points with the field gcd
    const Field* F3 = Field::get(3, 1);
    for (fp_t c = 0; c < 3; ++c) {
        std::vector<FElem> vals{F3->from_int(c)};
        UP<FDom> fa = up_specialize(a, vals, F3);
        UP<FDom> fb = up_specialize(b, vals, F3);
        if (fa.deg() != a.deg() || fb.deg() != b.deg()) continue;  // degenerate specialization
        CHECK(up_gcd(fa, fb) == up_specialize(g, vals, F3));
    }
}

TEST_CASE("remainder of Y^16+Y by Y^4+aY^2+bY over F_2[a,b]") {
    const ParamRing* R = ParamRing::get(2, {"a", "b"});
    PDom D{R};
    PElem a = pr_var(R, 0), b = pr_var(R, 1);
    UP<PDom> divisor = up_zero(D);
    up_add_term(divisor, 4, pr_const(R, 1));
    up_add_term(divisor, 2, a);
    up_add_term(divisor, 1, b);
    UP<PDom> num = up_zero(D);
    up_add_term(num, 16, pr_const(R, 1));
    up_add_term(num, 1, pr_const(R, 1));
    UP<PDom> rem = up_divrem(num, divisor).second;

    auto pw = [&](const PElem& x, unsigned n) {
        PElem r = pr_const(R, 1);
        for (unsigned i = 0; i < n; ++i) r = pr_mul(r, x);
        return r;
    };
    // (1 + b^5 + b a^6) Y + (b^2 a^4 + a b^4 + a^7) Y^2
    PElem cy = pr_add(pr_add(pr_const(R, 1), pw(b, 5)), pr_mul(b, pw(a, 6)));
    PElem cy2 = pr_add(pr_add(pr_mul(pw(b, 2), pw(a, 4)), pr_mul(a, pw(b, 4))), pw(a, 7));
    UP<PDom> expect = up_zero(D);
    up_add_term(expect, 1, cy);
    up_add_term(expect, 2, cy2);
    CHECK(rem == expect);
}

TEST_CASE("divexact on random-shaped products") {
    const ParamRing* R = ParamRing::get(5, {"x", "y", "z"});
    Rng rng(99);
    for (int iter = 0; iter < 10; ++iter) {
        auto rnd = [&]() {
            PElem s = pr_zero(R);
            for (int i = 0; i < 4; ++i) {
                std::vector<unsigned> ev{static_cast<unsigned>(rng.below(3)),
                                         static_cast<unsigned>(rng.below(2)),
                                         static_cast<unsigned>(rng.below(2))};
                PElem mono{R, {}};
                mono.t[ev] = static_cast<fp_t>(1 + rng.below(4));
                s = pr_add(s, mono);
            }
            return s;
        };
        PElem f = rnd(), g = rnd();
        if (f.is_zero() || g.is_zero()) continue;
        CHECK(pr_divexact(pr_mul(f, g), g) == f);
    }
}

TEST_SUITE_END();
